#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fset/field.hpp"

namespace fset {

/// Dense univariate polynomial over F_p. Coefficients are stored in ascending
/// degree order, reduced, with trailing zeros stripped; the zero polynomial has
/// no coefficients.
class Polynomial {
public:
    static constexpr long kZeroDegree = -1;

    explicit Polynomial(const FieldSpec& F) : field_(F) {}
    /// Reduces every coefficient mod p and strips trailing zeros.
    Polynomial(const FieldSpec& F, std::vector<std::uint64_t> coeffs);
    Polynomial(const FieldSpec& F, std::initializer_list<std::int64_t> coeffs);

    static Polynomial zero(const FieldSpec& F) { return Polynomial(F); }
    static Polynomial one(const FieldSpec& F) { return constant(F, 1); }
    static Polynomial constant(const FieldSpec& F, std::uint64_t c);
    /// c * x^k
    static Polynomial monomial(const FieldSpec& F, std::size_t k, std::uint64_t c = 1);

    const FieldSpec& field() const noexcept { return field_; }
    std::span<const std::uint64_t> coeffs() const noexcept { return coeffs_; }

    /// kZeroDegree for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }

    std::uint64_t operator[](std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
    std::uint64_t leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
    std::size_t nonzero_terms() const noexcept;

    friend bool operator==(const Polynomial& a, const Polynomial& b) noexcept {
        return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
    }

private:
    void normalize() noexcept;

    FieldSpec field_;
    std::vector<std::uint64_t> coeffs_;
};

/// Canonical order: degree first, then lexicographic on the ascending
/// coefficient sequence.
struct CanonicalLess {
    bool operator()(const Polynomial& a, const Polynomial& b) const noexcept;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial scale(const Polynomial& a, std::uint64_t c);

struct DivRem {
    Polynomial quotient;
    Polynomial remainder;
};

/// a = q*b + r with deg r < deg b. Throws DivisionByZeroPoly.
DivRem divrem(const Polynomial& a, const Polynomial& b);
Polynomial rem(const Polynomial& a, const Polynomial& b);
bool divides(const Polynomial& d, const Polynomial& a);

/// Monic gcd. Throws BothZero when both inputs are zero.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Scales by the inverse of the leading coefficient. Throws on zero.
Polynomial monic(const Polynomial& a);
Polynomial derivative(const Polynomial& a);

/// base^exp mod modulus by square-and-multiply. Throws ConstantModulus.
Polynomial powmod(const Polynomial& base, const BigInt& exp, const Polynomial& modulus);
Polynomial mulmod(const Polynomial& a, const Polynomial& b, const Polynomial& modulus);

/// h^p mod modulus. Uses h^p = h(x^p) over F_p when the modulus is sparse
/// enough for that to beat repeated squaring.
Polynomial frobenius(const Polynomial& h, const Polynomial& modulus);

/// f(x^t) for t >= 1.
Polynomial substitute_power(const Polynomial& f, std::size_t t);

FieldElement constant_term(const Polynomial& f) noexcept;

/// Accepts sums of c, x, x^k, c*x^k, cx^k with optional signs, or
/// "coeffs:" followed by an ascending comma-separated list.
Polynomial parse_poly(std::string_view text, const FieldSpec& F);
/// Descending-degree human form, e.g. "x^2+4x+1".
std::string format_poly(const Polynomial& f);

}  // namespace fset
