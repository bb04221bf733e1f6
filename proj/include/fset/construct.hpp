#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fset/factor.hpp"
#include "fset/field.hpp"
#include "fset/poly.hpp"

namespace fset {

enum class FamilyKind { FTower, GTower, Linear };

std::string_view to_string(FamilyKind kind) noexcept;

/// f_l = (x^2+x+1)(x^(3^l)), g_l = (x^2-x+1)(x^(3^l)), or a linear seed x - n.
struct FamilyMember {
    FamilyKind kind;
    long index;
    Polynomial poly;
};

/// Largest tower degree admitted by default: 2*3^7 over F_2, 2*3^5 otherwise.
std::size_t default_degree_cap(const FieldSpec& F) noexcept;

/// p = 2 or 5 (mod 9).
bool residue_gate(const FieldSpec& F) noexcept;

Polynomial f_base(const FieldSpec& F);
Polynomial g_base(const FieldSpec& F);

std::uint64_t pow3(unsigned ell);

/// Throws GateFailed for tower kinds when the gate rejects p, and
/// DegreeCapExceeded when 2*3^index exceeds degree_cap. With certify set, a
/// tower member that fails Rabin raises NotIrreducible.
FamilyMember make_member(FamilyKind kind, long index, const FieldSpec& F, std::size_t degree_cap, bool certify = false);

enum class Thm335Failure { TPrimeNotDivE, TPrimeDividesCofactor, Mod4Clause };

std::string_view to_string(Thm335Failure tag) noexcept;

/// Outcome of checking the hypotheses under which f(x^t) is irreducible for
/// irreducible f of degree m and order e: every prime of t divides e, none
/// divides (p^m-1)/e, and p^m = 1 (mod 4) whenever 4 | t.
struct Thm335Report {
    std::size_t m = 0;
    BigInt e;
    std::uint64_t t = 0;
    std::vector<std::uint64_t> t_primes;
    BigInt cofactor;
    bool passed = false;
    std::vector<Thm335Failure> failure_reasons;
};

/// Throws NotIrreducible, ZeroConstantTerm or OrderBudgetExceeded as
/// poly_order does.
Thm335Report thm335_check(const Polynomial& f, std::uint64_t t, const FactorBudget& budget = {});

/// Builds x^(3^l) (x+1) g_0 ... g_{l-1} (F kind) or x^(3^l) (x-1) f_0 ... f_{l-1}
/// (G kind) by multiplication and compares it with member - 1.
bool lemma_factorization_identity(FamilyKind kind, unsigned ell, const FieldSpec& F, std::size_t degree_cap);

/// x^3+x+1 over F_2, x+2 otherwise; certified irreducible and outside the
/// family. Throws GateFailed.
Polynomial nontriviality_witness(const FieldSpec& F);

/// True if poly equals some tower member of its degree or a linear seed.
bool in_paper_family(const Polynomial& poly);

struct TowerLevel {
    unsigned ell = 0;
    FamilyKind kind = FamilyKind::FTower;
    Polynomial poly;
    bool monic = false;
    bool irreducible = false;
    Thm335Report thm335;
    bool lemma_identity = false;

    bool passed() const noexcept { return monic && irreducible && thm335.passed && lemma_identity; }
};

struct TowerReport {
    FieldSpec field;
    unsigned max_level = 0;
    std::vector<TowerLevel> levels;  // by ell, F before G
    bool passed = false;
};

struct TowerOptions {
    std::size_t degree_cap = 0;  // 0 selects default_degree_cap
    FactorBudget budget;
};

/// Certifies both towers through level L by Rabin and by the order-based
/// criterion, and checks both factorization identities. Throws GateFailed.
TowerReport verify_tower(const FieldSpec& F, unsigned max_level, const TowerOptions& options = {});

}  // namespace fset
