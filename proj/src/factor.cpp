#include "fset/factor.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "fset/error.hpp"

namespace fset {

namespace {

std::vector<std::size_t> prime_divisors(std::size_t n) {
    std::vector<std::size_t> out;
    for (std::size_t r = 2; r * r <= n; ++r) {
        if (n % r != 0) continue;
        out.push_back(r);
        while (n % r == 0) n /= r;
    }
    if (n > 1) out.push_back(n);
    return out;
}

Polynomial x_poly(const FieldSpec& F) { return Polynomial::monomial(F, 1); }

// Exact division; callers guarantee d | a.
Polynomial exact_quotient(const Polynomial& a, const Polynomial& d) { return divrem(a, d).quotient; }

using PowerList = std::vector<std::pair<Polynomial, unsigned>>;

// Square-free decomposition of a monic polynomial: f = prod(g_i^i), each g_i
// square-free and pairwise coprime. Handles the p-th power part recursively.
void square_free(const Polynomial& f, unsigned outer, PowerList& out) {
    const FieldSpec& F = f.field();
    if (f.degree() < 1) return;
    const Polynomial df = derivative(f);
    Polynomial c = df.is_zero() ? f : gcd(f, df);
    Polynomial w = exact_quotient(f, c);
    unsigned i = 1;
    while (!w.is_one()) {
        Polynomial y = gcd(w, c);
        Polynomial z = exact_quotient(w, y);
        if (z.degree() >= 1) out.emplace_back(std::move(z), i * outer);
        ++i;
        c = exact_quotient(c, y);
        w = std::move(y);
    }
    if (c.degree() >= 1) {
        // c is a polynomial in x^p; its p-th root keeps every p-th coefficient
        // since a^p = a in F_p.
        const std::size_t p = static_cast<std::size_t>(F.p());
        auto cc = c.coeffs();
        std::vector<std::uint64_t> root((cc.size() - 1) / p + 1, 0);
        for (std::size_t k = 0; k < root.size(); ++k) root[k] = cc[k * p];
        square_free(Polynomial(F, std::move(root)), outer * static_cast<unsigned>(p), out);
    }
}

// Distinct-degree split of a square-free monic polynomial into products of
// irreducibles sharing a degree.
std::vector<std::pair<Polynomial, std::size_t>> distinct_degree(Polynomial h) {
    const FieldSpec& F = h.field();
    const Polynomial x = x_poly(F);
    std::vector<std::pair<Polynomial, std::size_t>> out;
    Polynomial xp = rem(x, h);
    std::size_t d = 0;
    while (h.degree() >= 2 * static_cast<long>(d + 1)) {
        ++d;
        xp = frobenius(xp, h);
        Polynomial g = gcd(h, xp - x);
        if (!g.is_one()) {
            h = exact_quotient(h, g);
            out.emplace_back(std::move(g), d);
            xp = rem(xp, h);
        }
    }
    if (h.degree() >= 1) {
        const auto deg = static_cast<std::size_t>(h.degree());
        out.emplace_back(std::move(h), deg);
    }
    return out;
}

Polynomial random_below(const FieldSpec& F, std::size_t n, std::mt19937_64& rng) {
    std::vector<std::uint64_t> c(n);
    for (auto& v : c) v = rng() % F.p();
    return Polynomial(F, std::move(c));
}

// One splitting attempt; returns a (possibly trivial) divisor of g.
Polynomial split_candidate(const Polynomial& g, std::size_t d, std::mt19937_64& rng) {
    const FieldSpec& F = g.field();
    const auto n = static_cast<std::size_t>(g.degree());
    Polynomial a = random_below(F, n, rng);
    if (a.degree() < 1) return Polynomial::one(F);
    if (F.p() == 2) {
        // Trace map a + a^2 + ... + a^(2^(d-1)) lands in F_2 on each factor.
        Polynomial cur = a, trace = a;
        for (std::size_t j = 1; j < d; ++j) {
            cur = mulmod(cur, cur, g);
            trace = trace + cur;
        }
        return trace.is_zero() ? Polynomial::one(F) : gcd(trace, g);
    }
    Polynomial shared = gcd(a, g);
    if (!shared.is_one()) return shared;
    // a^((p^d-1)/2) = (prod_{j<d} a^(p^j))^((p-1)/2)
    Polynomial cur = a, norm = a;
    for (std::size_t j = 1; j < d; ++j) {
        cur = frobenius(cur, g);
        norm = mulmod(norm, cur, g);
    }
    Polynomial b = powmod(norm, BigInt((F.p() - 1) / 2), g) - Polynomial::one(F);
    return b.is_zero() ? Polynomial::one(F) : gcd(b, g);
}

void equal_degree(const Polynomial& g, std::size_t d, std::mt19937_64& rng, std::vector<Polynomial>& out) {
    if (static_cast<std::size_t>(g.degree()) == d) {
        out.push_back(g);
        return;
    }
    while (true) {
        Polynomial h = split_candidate(g, d, rng);
        if (h.degree() >= 1 && h.degree() < g.degree()) {
            Polynomial rest = exact_quotient(g, h);
            equal_degree(h, d, rng, out);
            equal_degree(rest, d, rng, out);
            return;
        }
    }
}

}  // namespace

Polynomial FactorizationResult::expand(const FieldSpec& F) const {
    Polynomial acc = Polynomial::constant(F, unit.value);
    for (const auto& fp : factors)
        for (unsigned k = 0; k < fp.multiplicity; ++k) acc = acc * fp.poly;
    return acc;
}

bool is_irreducible(const Polynomial& f) {
    if (f.degree() < 1) throw Error(Errc::ConstantInput, "irreducibility needs degree >= 1");
    if (f.degree() == 1) return true;
    const Polynomial g = monic(f);
    if (g[0] == 0) return false;
    const auto n = static_cast<std::size_t>(g.degree());
    const Polynomial x = x_poly(g.field());
    const auto primes = prime_divisors(n);

    std::map<std::size_t, Polynomial> checkpoints;
    for (std::size_t r : primes) checkpoints.emplace(n / r, Polynomial::zero(g.field()));

    // h = x^(p^k) mod g
    Polynomial h = x;
    for (std::size_t k = 1; k <= n; ++k) {
        h = frobenius(h, g);
        if (k < n && h == x) return false;  // g | x^(p^k) - x, so every factor has degree dividing k
        if (auto it = checkpoints.find(k); it != checkpoints.end()) it->second = h;
    }
    if (!(h == x)) return false;
    for (const auto& [k, hk] : checkpoints)
        if (!gcd(hk - x, g).is_one()) return false;
    return true;
}

FactorizationResult factorize(const Polynomial& f, const FactorOptions& options) {
    if (f.degree() < 1) throw Error(Errc::ConstantInput, "factorization needs degree >= 1");
    FactorizationResult result{FieldElement{f.leading()}, {}};
    std::mt19937_64 rng(options.edf_seed);

    PowerList square_free_parts;
    square_free(monic(f), 1, square_free_parts);

    std::map<Polynomial, unsigned, CanonicalLess> collected;
    for (const auto& [part, mult] : square_free_parts) {
        for (const auto& [block, d] : distinct_degree(part)) {
            std::vector<Polynomial> irreducibles;
            equal_degree(block, d, rng, irreducibles);
            for (auto& q : irreducibles) collected[q] += mult;
        }
    }
    for (auto& [poly, mult] : collected) result.factors.push_back({poly, mult});
    return result;
}

OrderResult poly_order(const Polynomial& f, const FactorBudget& budget) {
    if (f.degree() < 1) throw Error(Errc::ConstantInput, "order needs degree >= 1");
    if (f[0] == 0) throw Error(Errc::ZeroConstantTerm, "order is only computed for f(0) != 0");
    if (!is_irreducible(f)) throw Error(Errc::NotIrreducible, format_poly(f) + " is reducible");
    const Polynomial g = monic(f);
    const FieldSpec& F = g.field();
    const auto m = static_cast<std::size_t>(g.degree());
    const BigInt group_order = boost::multiprecision::pow(BigInt(F.p()), static_cast<unsigned>(m)) - 1;

    std::vector<IntFactor> primes;
    try {
        primes = int_factorize(group_order, budget);
    } catch (const Error& err) {
        if (err.code() != Errc::FactorizationTimeout) throw;
        throw Error(Errc::OrderBudgetExceeded, "cannot factor p^" + std::to_string(m) + "-1: " + err.what());
    }

    const Polynomial x = x_poly(F);
    BigInt e = group_order;
    for (const auto& [r, k] : primes) {
        for (unsigned j = 0; j < k; ++j) {
            if (!powmod(x, e / r, g).is_one()) break;
            e /= r;
        }
    }
    return {e, m};
}

std::string format_factorization(const FactorizationResult& r) {
    std::string out;
    if (r.unit.value != 1) out = std::to_string(r.unit.value);
    for (const auto& [poly, mult] : r.factors) {
        if (!out.empty()) out += " * ";
        std::string s = format_poly(poly);
        if (poly.nonzero_terms() > 1) s = "(" + s + ")";
        if (mult > 1) s += "^" + std::to_string(mult);
        out += s;
    }
    return out;
}

}  // namespace fset
