#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fset/construct.hpp"
#include "fset/factor.hpp"
#include "fset/poly.hpp"

namespace fset {

using PolySet = std::set<Polynomial, CanonicalLess>;

enum class ClosureStatus { Saturated, TruncatedByDegree, TruncatedByIterations };

std::string_view to_string(ClosureStatus status) noexcept;

/// A parent P and a monic irreducible Q dividing P - P(0).
struct Edge {
    Polynomial parent;
    Polynomial child;

    friend bool operator==(const Edge&, const Edge&) = default;
};

struct EdgeLess {
    bool operator()(const Edge& a, const Edge& b) const noexcept;
};

struct ClosureState {
    FieldSpec field;
    PolySet members;
    std::set<Edge, EdgeLess> edges;
    ClosureStatus status = ClosureStatus::Saturated;
    std::size_t iterations = 0;
};

struct ClosureOptions {
    /// Members of larger degree are kept but not expanded.
    std::size_t degree_cap = 0;  // 0 selects default_degree_cap
    std::size_t iter_cap = 100'000;
    /// When set, the worklist is drained in a seeded random order instead of
    /// lowest degree first.
    std::optional<std::uint64_t> shuffle_seed;
    FactorOptions factor;
};

/// Least superset of `seeds` closed under taking monic irreducible factors of
/// P - P(0). Throws SeedNotMonic / SeedNotIrreducible.
ClosureState closure(const std::vector<Polynomial>& seeds, const FieldSpec& F, const ClosureOptions& options = {});

struct Violation {
    Polynomial parent;
    Polynomial missing;
};

struct FSetVerdict {
    bool closed = false;
    std::vector<Violation> violations;
    std::optional<Polynomial> nontrivial_witness;
    /// Set only when the candidate is a truncation of the f/g tower family,
    /// whose infinitude is established by the tower argument, not computed.
    bool infinite_certificate = false;
    bool trivial_empty = false;
};

/// Checks the F-set condition on a finite candidate of monic irreducibles.
FSetVerdict check_closed(const std::vector<Polynomial>& candidate, const FieldSpec& F, const FactorOptions& options = {});

/// First monic irreducible absent from `set`, scanning by degree in canonical
/// order until the enumeration budget runs out.
std::optional<Polynomial> first_absent_irreducible(const PolySet& set, const FieldSpec& F);

/// {f_l, g_l : l <= L} together with x-1, x, x+1.
std::vector<Polynomial> paper_family(const FieldSpec& F, unsigned max_level, std::size_t degree_cap = 0);

struct PaperFSet {
    ClosureState state;
    FSetVerdict verdict;
};

/// Materializes the tower family through level L and verifies it is closed.
/// Throws GateFailed, or ClosednessFailure if the check does not hold.
PaperFSet paper_fset(const FieldSpec& F, unsigned max_level, const FactorOptions& options = {},
                     std::size_t degree_cap = 0);

enum class LevelOutcome { Certified, IrreducibleUncertified, Reducible };

std::string_view to_string(LevelOutcome outcome) noexcept;

struct ProbeLevel {
    unsigned ell = 0;
    std::uint64_t t_power = 1;
    Polynomial poly;
    bool irreducible = false;
    std::optional<Thm335Report> thm335{};
    LevelOutcome outcome = LevelOutcome::Reducible;
    std::optional<FactorizationResult> factorization{};  // of a reducible member
    std::vector<Polynomial> new_factors{};  // factors of member - alpha outside earlier members and linears
    std::size_t closure_size = 0;
    bool tower_shaped = false;
};

struct ProbeReport {
    FieldSpec field;
    Polynomial base;
    std::uint64_t t = 0;
    unsigned max_level = 0;
    std::vector<ProbeLevel> levels;
    bool self_sustaining = false;
};

struct ProbeOptions {
    std::size_t degree_cap = 0;
    FactorBudget budget;
    FactorOptions factor;
};

/// Builds base(x^(t^l)) for l <= L and tracks whether the accumulated closure
/// of the levels plus the linear seeds only ever contains polynomials of
/// degree 1 or deg(base) * t^k.
ProbeReport tower_probe(const Polynomial& base, std::uint64_t t, unsigned max_level, const ProbeOptions& options = {});

/// Digraph with one node per member and an edge P -> Q per recorded edge.
std::string to_dot(const ClosureState& state);

}  // namespace fset
