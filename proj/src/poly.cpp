#include "fset/poly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "fset/error.hpp"

namespace fset {

namespace {

void require_same_field(const Polynomial& a, const Polynomial& b) {
    if (!(a.field() == b.field()))
        throw Error(Errc::FieldMismatch,
                    "F_" + std::to_string(a.field().p()) + " vs F_" + std::to_string(b.field().p()));
}

struct Term {
    std::size_t index;
    std::uint64_t coeff;
};

std::vector<Term> nonzero_below_leading(const Polynomial& b) {
    std::vector<Term> terms;
    auto c = b.coeffs();
    for (std::size_t j = 0; j + 1 < c.size(); ++j)
        if (c[j] != 0) terms.push_back({j, c[j]});
    return terms;
}

// Reduces `work` in place modulo b (b nonzero); fills `quot` if provided.
void reduce_in_place(std::vector<std::uint64_t>& work, const Polynomial& b, std::vector<std::uint64_t>* quot) {
    const FieldSpec& F = b.field();
    const std::size_t db = static_cast<std::size_t>(b.degree());
    if (work.size() <= db) return;
    const std::uint64_t lead_inv = F.inv(b.leading());
    const auto terms = nonzero_below_leading(b);
    if (quot) quot->assign(work.size() - db, 0);
    for (std::size_t i = work.size(); i-- > db;) {
        std::uint64_t c = work[i];
        if (c == 0) continue;
        std::uint64_t q = F.mul(c, lead_inv);
        work[i] = 0;
        if (quot) (*quot)[i - db] = q;
        const std::size_t shift = i - db;
        for (const Term& t : terms) {
            std::uint64_t& slot = work[shift + t.index];
            slot = F.sub(slot, F.mul(q, t.coeff));
        }
    }
    work.resize(db);
}

}  // namespace

Polynomial::Polynomial(const FieldSpec& F, std::vector<std::uint64_t> coeffs) : field_(F), coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_)
        if (c >= F.p()) c %= F.p();
    normalize();
}

Polynomial::Polynomial(const FieldSpec& F, std::initializer_list<std::int64_t> coeffs) : field_(F) {
    coeffs_.reserve(coeffs.size());
    for (std::int64_t c : coeffs) coeffs_.push_back(F.element(c).value);
    normalize();
}

Polynomial Polynomial::constant(const FieldSpec& F, std::uint64_t c) { return Polynomial(F, std::vector<std::uint64_t>{c}); }

Polynomial Polynomial::monomial(const FieldSpec& F, std::size_t k, std::uint64_t c) {
    std::vector<std::uint64_t> v(k + 1, 0);
    v[k] = c;
    return Polynomial(F, std::move(v));
}

std::size_t Polynomial::nonzero_terms() const noexcept {
    return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](auto c) { return c != 0; }));
}

void Polynomial::normalize() noexcept {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool CanonicalLess::operator()(const Polynomial& a, const Polynomial& b) const noexcept {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    auto ca = a.coeffs(), cb = b.coeffs();
    return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    require_same_field(a, b);
    const FieldSpec& F = a.field();
    std::vector<std::uint64_t> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.add(a[i], b[i]);
    return Polynomial(F, std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    require_same_field(a, b);
    const FieldSpec& F = a.field();
    std::vector<std::uint64_t> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.sub(a[i], b[i]);
    return Polynomial(F, std::move(out));
}

Polynomial operator-(const Polynomial& a) { return Polynomial::zero(a.field()) - a; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_field(a, b);
    const FieldSpec& F = a.field();
    if (a.is_zero() || b.is_zero()) return Polynomial::zero(F);
    // Iterate the sparser operand in the outer loop; tower members are
    // trinomials, so this keeps their products linear in the dense side.
    const bool a_outer = a.nonzero_terms() <= b.nonzero_terms();
    const auto outer = a_outer ? a.coeffs() : b.coeffs();
    const auto inner = a_outer ? b.coeffs() : a.coeffs();
    std::vector<std::uint64_t> out(outer.size() + inner.size() - 1, 0);
    for (std::size_t i = 0; i < outer.size(); ++i) {
        const std::uint64_t c = outer[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j < inner.size(); ++j)
            if (inner[j] != 0) out[i + j] = F.add(out[i + j], F.mul(c, inner[j]));
    }
    return Polynomial(F, std::move(out));
}

Polynomial scale(const Polynomial& a, std::uint64_t c) {
    const FieldSpec& F = a.field();
    c %= F.p();
    std::vector<std::uint64_t> out(a.coeffs().begin(), a.coeffs().end());
    for (auto& v : out) v = F.mul(v, c);
    return Polynomial(F, std::move(out));
}

DivRem divrem(const Polynomial& a, const Polynomial& b) {
    require_same_field(a, b);
    if (b.is_zero()) throw Error(Errc::DivisionByZeroPoly, "division by the zero polynomial");
    const FieldSpec& F = a.field();
    std::vector<std::uint64_t> work(a.coeffs().begin(), a.coeffs().end());
    std::vector<std::uint64_t> quot;
    reduce_in_place(work, b, &quot);
    return {Polynomial(F, std::move(quot)), Polynomial(F, std::move(work))};
}

Polynomial rem(const Polynomial& a, const Polynomial& b) {
    require_same_field(a, b);
    if (b.is_zero()) throw Error(Errc::DivisionByZeroPoly, "division by the zero polynomial");
    std::vector<std::uint64_t> work(a.coeffs().begin(), a.coeffs().end());
    reduce_in_place(work, b, nullptr);
    return Polynomial(a.field(), std::move(work));
}

bool divides(const Polynomial& d, const Polynomial& a) { return rem(a, d).is_zero(); }

Polynomial monic(const Polynomial& a) {
    if (a.is_zero()) throw Error(Errc::InvalidArgument, "zero polynomial has no monic associate");
    if (a.is_monic()) return a;
    return scale(a, a.field().inv(a.leading()));
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    require_same_field(a, b);
    if (a.is_zero() && b.is_zero()) throw Error(Errc::BothZero, "gcd(0, 0) is undefined");
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = rem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return monic(x);
}

Polynomial derivative(const Polynomial& a) {
    const FieldSpec& F = a.field();
    auto c = a.coeffs();
    if (c.size() <= 1) return Polynomial::zero(F);
    std::vector<std::uint64_t> out(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) out[i - 1] = F.mul(c[i], i % F.p());
    return Polynomial(F, std::move(out));
}

Polynomial mulmod(const Polynomial& a, const Polynomial& b, const Polynomial& modulus) { return rem(a * b, modulus); }

Polynomial powmod(const Polynomial& base, const BigInt& exp, const Polynomial& modulus) {
    require_same_field(base, modulus);
    if (modulus.degree() < 1) throw Error(Errc::ConstantModulus, "modulus must be nonconstant");
    if (exp < 0) throw Error(Errc::InvalidArgument, "negative exponent");
    Polynomial result = Polynomial::one(base.field());
    if (exp == 0) return result;
    Polynomial b = rem(base, modulus);
    const std::size_t bits = boost::multiprecision::msb(exp) + 1;
    for (std::size_t i = bits; i-- > 0;) {
        result = mulmod(result, result, modulus);
        if (boost::multiprecision::bit_test(exp, static_cast<unsigned>(i))) result = mulmod(result, b, modulus);
    }
    return result;
}

Polynomial frobenius(const Polynomial& h, const Polynomial& modulus) {
    require_same_field(h, modulus);
    if (modulus.degree() < 1) throw Error(Errc::ConstantModulus, "modulus must be nonconstant");
    const std::uint64_t p = h.field().p();
    const double n = static_cast<double>(modulus.degree());
    const double w = static_cast<double>(modulus.nonzero_terms());
    const double substitution_cost = static_cast<double>(p) * n * w;
    const double squaring_cost = 2.0 * std::bit_width(p) * (n * n + n * w);
    if (substitution_cost <= squaring_cost) {
        Polynomial r = rem(h, modulus);
        return rem(substitute_power(r, p), modulus);
    }
    return powmod(h, BigInt(p), modulus);
}

Polynomial substitute_power(const Polynomial& f, std::size_t t) {
    if (t == 0) throw Error(Errc::InvalidArgument, "substitute_power requires t >= 1");
    if (f.is_constant() || t == 1) return f;
    auto c = f.coeffs();
    std::vector<std::uint64_t> out((c.size() - 1) * t + 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i) out[i * t] = c[i];
    return Polynomial(f.field(), std::move(out));
}

FieldElement constant_term(const Polynomial& f) noexcept { return {f[0]}; }

// ---- text form ----

namespace {

constexpr std::size_t kMaxParsedDegree = 1u << 24;

class Parser {
public:
    Parser(std::string_view text, const FieldSpec& F) : text_(text), F_(F) {}

    Polynomial parse() {
        skip_ws();
        if (text_.substr(pos_).starts_with("coeffs:")) {
            pos_ += 7;
            return parse_coeff_list();
        }
        std::vector<std::uint64_t> acc;
        bool first = true;
        while (true) {
            skip_ws();
            bool negative = false;
            if (at('+') || at('-')) {
                negative = at('-');
                ++pos_;
                skip_ws();
            } else if (!first) {
                if (pos_ >= text_.size()) break;
                fail("expected '+' or '-'");
            } else if (pos_ >= text_.size()) {
                fail("empty polynomial");
            }
            parse_term(acc, negative);
            first = false;
            skip_ws();
            if (pos_ >= text_.size()) break;
        }
        return Polynomial(F_, std::move(acc));
    }

private:
    bool at(char c) const { return pos_ < text_.size() && text_[pos_] == c; }
    bool at_digit() const { return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

    // Decimal integer reduced mod p while reading.
    std::uint64_t parse_residue() {
        if (!at_digit()) fail("expected digit");
        std::uint64_t v = 0;
        while (at_digit()) {
            v = F_.add(F_.mul(v, 10 % F_.p()), static_cast<std::uint64_t>(text_[pos_] - '0') % F_.p());
            ++pos_;
        }
        return v;
    }

    std::size_t parse_exponent() {
        if (!at_digit()) fail("expected exponent");
        std::size_t v = 0;
        while (at_digit()) {
            v = v * 10 + static_cast<std::size_t>(text_[pos_] - '0');
            if (v > kMaxParsedDegree) fail("exponent too large");
            ++pos_;
        }
        return v;
    }

    void parse_term(std::vector<std::uint64_t>& acc, bool negative) {
        std::uint64_t coeff = 1;
        bool have_coeff = false;
        if (at_digit()) {
            coeff = parse_residue();
            have_coeff = true;
            skip_ws();
            if (at('*')) {
                ++pos_;
                skip_ws();
                if (!at('x')) fail("expected 'x' after '*'");
            }
        }
        std::size_t exponent = 0;
        if (at('x')) {
            ++pos_;
            exponent = 1;
            skip_ws();
            if (at('^')) {
                ++pos_;
                skip_ws();
                exponent = parse_exponent();
            }
        } else if (!have_coeff) {
            fail("expected term");
        }
        if (negative) coeff = F_.neg(coeff);
        if (acc.size() <= exponent) acc.resize(exponent + 1, 0);
        acc[exponent] = F_.add(acc[exponent], coeff);
    }

    Polynomial parse_coeff_list() {
        std::vector<std::uint64_t> acc;
        while (true) {
            skip_ws();
            bool negative = false;
            if (at('-') || at('+')) {
                negative = at('-');
                ++pos_;
            }
            std::uint64_t v = parse_residue();
            acc.push_back(negative ? F_.neg(v) : v);
            skip_ws();
            if (pos_ >= text_.size()) break;
            if (!at(',')) fail("expected ','");
            ++pos_;
        }
        return Polynomial(F_, std::move(acc));
    }

    std::string_view text_;
    const FieldSpec& F_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view text, const FieldSpec& F) { return Parser(text, F).parse(); }

std::string format_poly(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    auto c = f.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(c[i]);
            continue;
        }
        if (c[i] != 1) out += std::to_string(c[i]);
        out += 'x';
        if (i > 1) out += '^' + std::to_string(i);
    }
    return out;
}

}  // namespace fset
