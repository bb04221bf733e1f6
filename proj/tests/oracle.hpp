#pragma once

// Brute-force reference routines used to check the factorizer, the Rabin test
// and the order computation. They only use ring arithmetic and long division.

#include <map>
#include <random>
#include <vector>

#include "fset/poly.hpp"

namespace fset::oracle {

inline std::vector<Polynomial> monic_of_degree(const FieldSpec& F, std::size_t d) {
    std::vector<Polynomial> out;
    std::vector<std::uint64_t> digits(d, 0);
    while (true) {
        std::vector<std::uint64_t> c(digits);
        c.push_back(1);
        out.emplace_back(F, std::move(c));
        std::size_t i = 0;
        while (i < d && ++digits[i] == F.p()) digits[i++] = 0;
        if (i == d) break;
    }
    return out;
}

/// Every polynomial of exact degree d (any nonzero leading coefficient).
inline std::vector<Polynomial> all_of_degree(const FieldSpec& F, std::size_t d) {
    std::vector<Polynomial> out;
    for (const auto& m : monic_of_degree(F, d))
        for (std::uint64_t c = 1; c < F.p(); ++c) out.push_back(scale(m, c));
    return out;
}

/// Monic irreducibles of degree <= max_degree, by sieving: a monic polynomial
/// is irreducible iff no irreducible of degree <= d/2 divides it.
inline std::vector<Polynomial> irreducibles_up_to(const FieldSpec& F, std::size_t max_degree) {
    std::vector<Polynomial> irr;
    for (std::size_t d = 1; d <= max_degree; ++d) {
        for (auto& cand : monic_of_degree(F, d)) {
            bool prime = true;
            for (const auto& q : irr) {
                if (2 * static_cast<std::size_t>(q.degree()) > d) break;
                if (divrem(cand, q).remainder.is_zero()) {
                    prime = false;
                    break;
                }
            }
            if (prime) irr.push_back(std::move(cand));
        }
    }
    return irr;
}

struct TrialFactorization {
    std::uint64_t unit = 0;
    std::map<Polynomial, unsigned, CanonicalLess> factors;
};

inline TrialFactorization trial_factor(const Polynomial& f, const std::vector<Polynomial>& irreducibles) {
    TrialFactorization out;
    out.unit = f.leading();
    Polynomial rest = scale(f, f.field().inv(f.leading()));
    for (const auto& q : irreducibles) {
        if (rest.degree() < 1) break;
        while (rest.degree() >= q.degree()) {
            auto [quot, r] = divrem(rest, q);
            if (!r.is_zero()) break;
            ++out.factors[q];
            rest = quot;
        }
    }
    if (rest.degree() >= 1) ++out.factors[rest];  // leftover beyond the table is itself irreducible
    return out;
}

/// Least e >= 1 with x^e = 1 mod f, by stepping through powers of x.
inline std::uint64_t brute_order(const Polynomial& f, std::uint64_t limit) {
    const FieldSpec& F = f.field();
    const Polynomial x = Polynomial::monomial(F, 1);
    Polynomial h = divrem(x, f).remainder;
    for (std::uint64_t e = 1; e <= limit; ++e) {
        if (h.is_one()) return e;
        h = divrem(h * x, f).remainder;
    }
    return 0;
}

inline Polynomial random_poly(const FieldSpec& F, std::size_t max_degree, std::mt19937_64& rng) {
    std::vector<std::uint64_t> c(rng() % (max_degree + 1) + 1);
    for (auto& v : c) v = rng() % F.p();
    return Polynomial(F, std::move(c));
}

inline Polynomial random_monic(const FieldSpec& F, std::size_t degree, std::mt19937_64& rng) {
    std::vector<std::uint64_t> c(degree + 1);
    for (auto& v : c) v = rng() % F.p();
    c.back() = 1;
    return Polynomial(F, std::move(c));
}

}  // namespace fset::oracle
