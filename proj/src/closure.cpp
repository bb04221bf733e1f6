#include "fset/closure.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "fset/error.hpp"

namespace fset {

namespace {

constexpr std::uint64_t kEnumerationBudget = 100'000;

void validate_member(const Polynomial& P) {
    if (!P.is_monic()) throw Error(Errc::SeedNotMonic, format_poly(P) + " is not monic");
    if (P.degree() < 1 || !is_irreducible(P)) throw Error(Errc::SeedNotIrreducible, format_poly(P) + " is not irreducible");
}

void require_field(const Polynomial& P, const FieldSpec& F) {
    if (!(P.field() == F)) throw Error(Errc::FieldMismatch, format_poly(P) + " is not over F_" + std::to_string(F.p()));
}

// P - P(0); always divisible by x.
Polynomial shifted_difference(const Polynomial& P) {
    return P - Polynomial::constant(P.field(), constant_term(P).value);
}

// Distinct monic irreducible factors of D, canonical order. Powers of x and
// members of `known` are stripped by division before anything is handed to the
// general factorizer, so closed families never reach it.
std::vector<Polynomial> factors_against(Polynomial D, const PolySet& known, const FactorOptions& options) {
    const FieldSpec& F = D.field();
    PolySet found;
    auto c = D.coeffs();
    std::size_t zeros = 0;
    while (zeros < c.size() && c[zeros] == 0) ++zeros;
    if (zeros > 0) {
        found.insert(Polynomial::monomial(F, 1));
        D = Polynomial(F, std::vector<std::uint64_t>(c.begin() + static_cast<long>(zeros), c.end()));
    }
    for (const Polynomial& Q : known) {
        if (D.degree() < Q.degree()) break;
        if (Q.degree() == 1 && Q[0] == 0) continue;
        while (D.degree() >= Q.degree()) {
            auto [q, r] = divrem(D, Q);
            if (!r.is_zero()) break;
            found.insert(Q);
            D = std::move(q);
        }
    }
    if (D.degree() >= 1)
        for (auto& fp : factorize(D, options).factors) found.insert(fp.poly);
    return {found.begin(), found.end()};
}

ClosureState closure_impl(const PolySet& seeds, const FieldSpec& F, const ClosureOptions& options) {
    const std::size_t cap = options.degree_cap == 0 ? default_degree_cap(F) : options.degree_cap;
    ClosureState state{F, seeds, {}, ClosureStatus::Saturated, 0};
    PolySet pending(seeds);
    std::vector<Polynomial> shuffled(seeds.begin(), seeds.end());
    std::mt19937_64 rng(options.shuffle_seed.value_or(0));
    const bool shuffle = options.shuffle_seed.has_value();
    bool degree_truncated = false;

    auto take_next = [&]() -> Polynomial {
        if (shuffle) {
            std::size_t i = rng() % shuffled.size();
            std::swap(shuffled[i], shuffled.back());
            Polynomial P = std::move(shuffled.back());
            shuffled.pop_back();
            return P;
        }
        Polynomial P = *pending.begin();
        pending.erase(pending.begin());
        return P;
    };
    auto has_pending = [&] { return shuffle ? !shuffled.empty() : !pending.empty(); };

    while (has_pending()) {
        if (state.iterations >= options.iter_cap) {
            state.status = ClosureStatus::TruncatedByIterations;
            return state;
        }
        Polynomial P = take_next();
        ++state.iterations;
        if (static_cast<std::size_t>(P.degree()) > cap) {
            degree_truncated = true;
            continue;
        }
        for (Polynomial& Q : factors_against(shifted_difference(P), state.members, options.factor)) {
            state.edges.insert({P, Q});
            if (state.members.insert(Q).second) {
                if (shuffle)
                    shuffled.push_back(Q);
                else
                    pending.insert(Q);
            }
        }
    }
    if (degree_truncated) state.status = ClosureStatus::TruncatedByDegree;
    return state;
}

FSetVerdict check_closed_impl(const PolySet& S, const FieldSpec& F, const FactorOptions& options) {
    FSetVerdict verdict;
    for (const Polynomial& P : S)
        for (Polynomial& Q : factors_against(shifted_difference(P), S, options))
            if (!S.contains(Q)) verdict.violations.push_back({P, std::move(Q)});
    verdict.closed = verdict.violations.empty();
    verdict.trivial_empty = S.empty();
    verdict.nontrivial_witness = first_absent_irreducible(S, F);
    return verdict;
}

PolySet validated_set(const std::vector<Polynomial>& polys, const FieldSpec& F) {
    PolySet out;
    for (const Polynomial& P : polys) {
        require_field(P, F);
        if (out.contains(P)) continue;
        validate_member(P);
        out.insert(P);
    }
    return out;
}

PolySet linear_seeds(const FieldSpec& F) {
    PolySet out;
    for (long n = -1; n <= 1; ++n) out.insert(make_member(FamilyKind::Linear, n, F, 1).poly);
    return out;
}

}  // namespace

std::string_view to_string(ClosureStatus status) noexcept {
    switch (status) {
        case ClosureStatus::Saturated: return "SATURATED";
        case ClosureStatus::TruncatedByDegree: return "TRUNCATED_BY_DEGREE";
        case ClosureStatus::TruncatedByIterations: return "TRUNCATED_BY_ITERATIONS";
    }
    return "?";
}

std::string_view to_string(LevelOutcome outcome) noexcept {
    switch (outcome) {
        case LevelOutcome::Certified: return "CERTIFIED";
        case LevelOutcome::IrreducibleUncertified: return "IRREDUCIBLE_UNCERTIFIED";
        case LevelOutcome::Reducible: return "REDUCIBLE";
    }
    return "?";
}

bool EdgeLess::operator()(const Edge& a, const Edge& b) const noexcept {
    CanonicalLess less;
    if (less(a.parent, b.parent)) return true;
    if (less(b.parent, a.parent)) return false;
    return less(a.child, b.child);
}

ClosureState closure(const std::vector<Polynomial>& seeds, const FieldSpec& F, const ClosureOptions& options) {
    return closure_impl(validated_set(seeds, F), F, options);
}

FSetVerdict check_closed(const std::vector<Polynomial>& candidate, const FieldSpec& F, const FactorOptions& options) {
    return check_closed_impl(validated_set(candidate, F), F, options);
}

std::optional<Polynomial> first_absent_irreducible(const PolySet& set, const FieldSpec& F) {
    const std::uint64_t p = F.p();
    std::uint64_t count = 1;
    for (std::size_t d = 1;; ++d) {
        if (count > kEnumerationBudget / p && d > 2) return std::nullopt;
        count *= p;
        // Canonical order within a degree: c_0 is the most significant digit.
        std::vector<std::uint64_t> digits(d, 0);
        while (true) {
            std::vector<std::uint64_t> coeffs(digits);
            coeffs.push_back(1);
            Polynomial candidate(F, std::move(coeffs));
            if (!set.contains(candidate) && is_irreducible(candidate)) return candidate;
            std::size_t i = d;
            while (i > 0 && ++digits[i - 1] == p) digits[--i] = 0;
            if (i == 0) break;
        }
    }
}

std::vector<Polynomial> paper_family(const FieldSpec& F, unsigned max_level, std::size_t degree_cap) {
    const std::size_t cap = degree_cap == 0 ? default_degree_cap(F) : degree_cap;
    PolySet family = linear_seeds(F);
    for (unsigned ell = 0; ell <= max_level; ++ell)
        for (FamilyKind kind : {FamilyKind::FTower, FamilyKind::GTower})
            family.insert(make_member(kind, ell, F, cap).poly);
    return {family.begin(), family.end()};
}

PaperFSet paper_fset(const FieldSpec& F, unsigned max_level, const FactorOptions& options, std::size_t degree_cap) {
    const std::vector<Polynomial> family = paper_family(F, max_level, degree_cap);
    const PolySet expected(family.begin(), family.end());
    ClosureOptions copts;
    copts.factor = options;
    copts.degree_cap = degree_cap;
    ClosureState state = closure(family, F, copts);
    FSetVerdict verdict = check_closed_impl(state.members, F, options);
    if (state.status != ClosureStatus::Saturated || state.members != expected || !verdict.closed)
        throw Error(Errc::ClosednessFailure, "tower family over F_" + std::to_string(F.p()) + " through level " +
                                                 std::to_string(max_level) + " is not closed");
    verdict.nontrivial_witness = nontriviality_witness(F);
    verdict.infinite_certificate = true;
    return {std::move(state), std::move(verdict)};
}

ProbeReport tower_probe(const Polynomial& base, std::uint64_t t, unsigned max_level, const ProbeOptions& options) {
    const FieldSpec& F = base.field();
    if (t < 2) throw Error(Errc::InvalidArgument, "tower exponent t must be >= 2");
    if (!base.is_monic()) throw Error(Errc::SeedNotMonic, format_poly(base) + " is not monic");
    if (base.degree() < 1 || !is_irreducible(base))
        throw Error(Errc::NotIrreducible, format_poly(base) + " is not irreducible");
    const std::size_t cap = options.degree_cap == 0 ? default_degree_cap(F) : options.degree_cap;

    std::vector<std::uint64_t> powers{1};
    for (unsigned ell = 1; ell <= max_level; ++ell) {
        if (powers.back() > cap / t) throw Error(Errc::DegreeCapExceeded, "t^L exceeds the degree cap");
        powers.push_back(powers.back() * t);
    }
    const auto base_degree = static_cast<std::size_t>(base.degree());
    if (base_degree * powers.back() > cap)
        throw Error(Errc::DegreeCapExceeded, "level " + std::to_string(max_level) + " exceeds degree cap " +
                                                 std::to_string(cap));

    ProbeReport report{F, base, t, max_level, {}, true};
    PolySet earlier = linear_seeds(F);
    PolySet accumulated = earlier;
    ClosureOptions copts;
    copts.degree_cap = cap;
    copts.factor = options.factor;

    for (unsigned ell = 0; ell <= max_level; ++ell) {
        Polynomial poly = substitute_power(base, powers[ell]);
        ProbeLevel level{.ell = ell, .t_power = powers[ell], .poly = poly};
        level.irreducible = is_irreducible(poly);
        level.thm335 = thm335_check(base, powers[ell], options.budget);
        if (!level.irreducible) {
            level.outcome = LevelOutcome::Reducible;
            level.factorization = factorize(poly, options.factor);
            report.self_sustaining = false;
            report.levels.push_back(std::move(level));
            continue;
        }
        level.outcome = level.thm335->passed ? LevelOutcome::Certified : LevelOutcome::IrreducibleUncertified;
        for (Polynomial& Q : factors_against(shifted_difference(poly), earlier, options.factor))
            if (!earlier.contains(Q)) level.new_factors.push_back(std::move(Q));

        accumulated.insert(poly);
        ClosureState state = closure_impl(accumulated, F, copts);
        accumulated = state.members;
        level.closure_size = accumulated.size();
        level.tower_shaped = state.status == ClosureStatus::Saturated &&
                             std::all_of(accumulated.begin(), accumulated.end(), [&](const Polynomial& Q) {
                                 const auto d = static_cast<std::size_t>(Q.degree());
                                 if (d == 1) return true;
                                 for (unsigned k = 0; k <= ell; ++k)
                                     if (d == base_degree * powers[k]) return true;
                                 return false;
                             });
        report.self_sustaining = report.self_sustaining && level.tower_shaped;
        earlier.insert(poly);
        report.levels.push_back(std::move(level));
    }
    return report;
}

std::string to_dot(const ClosureState& state) {
    std::map<Polynomial, std::size_t, CanonicalLess> ids;
    std::ostringstream out;
    out << "digraph fset {\n";
    out << "  label=\"F_" << state.field.p() << " closure, " << to_string(state.status) << "\";\n";
    for (const Polynomial& P : state.members) {
        const std::size_t id = ids.size();
        ids.emplace(P, id);
        out << "  n" << id << " [label=\"" << format_poly(P) << "\"];\n";
    }
    for (const Edge& e : state.edges) out << "  n" << ids.at(e.parent) << " -> n" << ids.at(e.child) << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace fset
