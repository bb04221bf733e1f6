#pragma once

#include <cstdint>
#include <vector>

#include "fset/field.hpp"
#include "fset/poly.hpp"

namespace fset {

/// Seed for the equal-degree splitter when none is configured.
inline constexpr std::uint64_t kDefaultEdfSeed = 0x5eed'f5e7'2013'0901ULL;

struct FactorOptions {
    std::uint64_t edf_seed = kDefaultEdfSeed;
};

struct FactorPower {
    Polynomial poly;
    unsigned multiplicity = 0;

    friend bool operator==(const FactorPower&, const FactorPower&) = default;
};

/// unit * prod(poly^multiplicity) == input, factors monic irreducible in
/// canonical order.
struct FactorizationResult {
    FieldElement unit;
    std::vector<FactorPower> factors;

    Polynomial expand(const FieldSpec& F) const;
};

struct OrderResult {
    BigInt e;
    std::size_t m = 0;
};

/// Rabin's criterion. Throws ConstantInput for deg f < 1.
bool is_irreducible(const Polynomial& f);

/// Square-free, distinct-degree, then equal-degree splitting (trace map in
/// characteristic 2). Deterministic for a fixed seed.
FactorizationResult factorize(const Polynomial& f, const FactorOptions& options = {});

/// Least e >= 1 with f | x^e - 1. Requires f irreducible with f(0) != 0;
/// throws OrderBudgetExceeded when p^m - 1 cannot be factored within budget.
OrderResult poly_order(const Polynomial& f, const FactorBudget& budget = {});

/// "x^3 * (x+1) * (x^2+x+1)"; a non-unit leading coefficient is printed first.
std::string format_factorization(const FactorizationResult& r);

}  // namespace fset
