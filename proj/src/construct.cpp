#include "fset/construct.hpp"

#include <algorithm>

#include "fset/error.hpp"

namespace fset {

namespace {

void require_gate(const FieldSpec& F) {
    if (!residue_gate(F))
        throw Error(Errc::GateFailed,
                    "p = " + std::to_string(F.p()) + " is " + std::to_string(F.residue9()) + " mod 9, need 2 or 5");
}

std::uint64_t tower_degree(long ell) {
    if (ell < 0 || ell > 39) return std::numeric_limits<std::uint64_t>::max();
    return 2 * pow3(static_cast<unsigned>(ell));
}

Polynomial tower_member(FamilyKind kind, unsigned ell, const FieldSpec& F) {
    return substitute_power(kind == FamilyKind::FTower ? f_base(F) : g_base(F), pow3(ell));
}

}  // namespace

std::string_view to_string(FamilyKind kind) noexcept {
    switch (kind) {
        case FamilyKind::FTower: return "f";
        case FamilyKind::GTower: return "g";
        case FamilyKind::Linear: return "linear";
    }
    return "?";
}

std::string_view to_string(Thm335Failure tag) noexcept {
    switch (tag) {
        case Thm335Failure::TPrimeNotDivE: return "T_PRIME_NOT_DIV_E";
        case Thm335Failure::TPrimeDividesCofactor: return "T_PRIME_DIVIDES_COFACTOR";
        case Thm335Failure::Mod4Clause: return "MOD4_CLAUSE";
    }
    return "?";
}

std::size_t default_degree_cap(const FieldSpec& F) noexcept { return F.p() == 2 ? 2 * 2187 : 2 * 243; }

bool residue_gate(const FieldSpec& F) noexcept { return F.residue9() == 2 || F.residue9() == 5; }

Polynomial f_base(const FieldSpec& F) { return Polynomial(F, {1, 1, 1}); }
Polynomial g_base(const FieldSpec& F) { return Polynomial(F, {1, -1, 1}); }

std::uint64_t pow3(unsigned ell) {
    if (ell > 40) throw Error(Errc::DegreeCapExceeded, "3^" + std::to_string(ell) + " overflows");
    std::uint64_t v = 1;
    for (unsigned i = 0; i < ell; ++i) v *= 3;
    return v;
}

FamilyMember make_member(FamilyKind kind, long index, const FieldSpec& F, std::size_t degree_cap, bool certify) {
    if (kind == FamilyKind::Linear) {
        if (index < -1 || index > 1) throw Error(Errc::InvalidArgument, "linear seed index must be -1, 0 or 1");
        return {kind, index, Polynomial(F, {-index, 1})};
    }
    require_gate(F);
    if (index < 0) throw Error(Errc::InvalidArgument, "tower index must be >= 0");
    if (tower_degree(index) > degree_cap)
        throw Error(Errc::DegreeCapExceeded, "level " + std::to_string(index) + " exceeds degree cap " +
                                                 std::to_string(degree_cap));
    FamilyMember member{kind, index, tower_member(kind, static_cast<unsigned>(index), F)};
    if (certify && !is_irreducible(member.poly))
        throw Error(Errc::NotIrreducible, format_poly(member.poly) + " failed the Rabin test");
    return member;
}

Thm335Report thm335_check(const Polynomial& f, std::uint64_t t, const FactorBudget& budget) {
    if (t == 0) throw Error(Errc::InvalidArgument, "t must be positive");
    const OrderResult order = poly_order(f, budget);
    const FieldSpec& F = f.field();
    const BigInt group_order = boost::multiprecision::pow(BigInt(F.p()), static_cast<unsigned>(order.m)) - 1;
    if (group_order % order.e != 0)
        throw Error(Errc::InvalidArgument, "order does not divide p^m - 1");

    Thm335Report report;
    report.m = order.m;
    report.e = order.e;
    report.t = t;
    report.cofactor = group_order / order.e;
    for (const auto& pf : int_factorize(BigInt(t))) report.t_primes.push_back(static_cast<std::uint64_t>(pf.prime));

    auto flag = [&](Thm335Failure tag) {
        if (std::find(report.failure_reasons.begin(), report.failure_reasons.end(), tag) == report.failure_reasons.end())
            report.failure_reasons.push_back(tag);
    };
    for (std::uint64_t r : report.t_primes) {
        if (report.e % r != 0) flag(Thm335Failure::TPrimeNotDivE);
        if (report.cofactor % r == 0) flag(Thm335Failure::TPrimeDividesCofactor);
    }
    if (t % 4 == 0 && (group_order + 1) % 4 != 1) flag(Thm335Failure::Mod4Clause);
    std::sort(report.failure_reasons.begin(), report.failure_reasons.end());
    report.passed = report.failure_reasons.empty();
    return report;
}

bool lemma_factorization_identity(FamilyKind kind, unsigned ell, const FieldSpec& F, std::size_t degree_cap) {
    if (kind == FamilyKind::Linear) throw Error(Errc::InvalidArgument, "identity is defined for the towers only");
    if (tower_degree(ell) > degree_cap)
        throw Error(Errc::DegreeCapExceeded, "level " + std::to_string(ell) + " exceeds degree cap");
    const bool f_kind = kind == FamilyKind::FTower;
    const FamilyKind companion = f_kind ? FamilyKind::GTower : FamilyKind::FTower;

    Polynomial rhs = Polynomial::monomial(F, pow3(ell)) * Polynomial(F, {f_kind ? 1 : -1, 1});
    for (unsigned k = 0; k < ell; ++k) rhs = rhs * tower_member(companion, k, F);

    const Polynomial lhs = tower_member(kind, ell, F) - Polynomial::one(F);
    return lhs == rhs;
}

Polynomial nontriviality_witness(const FieldSpec& F) {
    require_gate(F);
    Polynomial w = F.p() == 2 ? Polynomial(F, {1, 1, 0, 1}) : Polynomial(F, {2, 1});
    if (!is_irreducible(w)) throw Error(Errc::ClosednessFailure, format_poly(w) + " failed the Rabin test");
    if (in_paper_family(w)) throw Error(Errc::ClosednessFailure, format_poly(w) + " lies in the family");
    return w;
}

bool in_paper_family(const Polynomial& poly) {
    const FieldSpec& F = poly.field();
    if (poly.degree() == 1) {
        for (long n = -1; n <= 1; ++n)
            if (poly == Polynomial(F, {-n, 1})) return true;
        return false;
    }
    for (unsigned ell = 0; ell <= 39; ++ell) {
        const auto deg = static_cast<long>(2 * pow3(ell));
        if (deg > poly.degree()) break;
        if (deg < poly.degree()) continue;
        return poly == tower_member(FamilyKind::FTower, ell, F) || poly == tower_member(FamilyKind::GTower, ell, F);
    }
    return false;
}

TowerReport verify_tower(const FieldSpec& F, unsigned max_level, const TowerOptions& options) {
    require_gate(F);
    const std::size_t cap = options.degree_cap == 0 ? default_degree_cap(F) : options.degree_cap;
    if (tower_degree(max_level) > cap)
        throw Error(Errc::DegreeCapExceeded, "level " + std::to_string(max_level) + " exceeds degree cap " +
                                                 std::to_string(cap));
    TowerReport report{F, max_level, {}, true};
    for (unsigned ell = 0; ell <= max_level; ++ell) {
        for (FamilyKind kind : {FamilyKind::FTower, FamilyKind::GTower}) {
            const Polynomial base = kind == FamilyKind::FTower ? f_base(F) : g_base(F);
            Polynomial poly = make_member(kind, ell, F, cap).poly;
            TowerLevel level{
                .ell = ell,
                .kind = kind,
                .poly = poly,
                .monic = poly.is_monic(),
                .irreducible = is_irreducible(poly),
                .thm335 = thm335_check(base, pow3(ell), options.budget),
                .lemma_identity = lemma_factorization_identity(kind, ell, F, cap),
            };
            report.passed = report.passed && level.passed();
            report.levels.push_back(std::move(level));
        }
    }
    return report;
}

}  // namespace fset
