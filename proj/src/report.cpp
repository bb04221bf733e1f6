#include "fset/report.hpp"

#include <sstream>

namespace fset {

namespace {

std::string dec(const BigInt& v) { return v.str(); }

Json poly_list(const PolySet& set) {
    Json out = Json::array();
    for (const auto& P : set) out.push_back(format_poly(P));
    return out;
}

}  // namespace

Json RunConfig::to_json(const FieldSpec& F) const {
    return Json{
        {"p", F.p()},
        {"degree_cap", degree_cap == 0 ? default_degree_cap(F) : degree_cap},
        {"iter_cap", iter_cap},
        {"edf_seed", edf_seed},
        {"rho_iterations", budget.rho_iterations},
        {"max_cofactor_bits", budget.max_cofactor_bits},
    };
}

VerifyResult run_verify(const FieldSpec& F, unsigned max_level, const RunConfig& config) {
    TowerOptions topts{config.degree_cap, config.budget};
    TowerReport tower = verify_tower(F, max_level, topts);
    PaperFSet fset = paper_fset(F, max_level, config.factor_options(), config.degree_cap);
    Polynomial witness = nontriviality_witness(F);
    const bool in_family = fset.state.members.contains(witness);
    const bool passed = tower.passed && fset.verdict.closed && !in_family;
    return {std::move(tower), std::move(fset), std::move(witness), in_family, passed};
}

Json to_json(const Thm335Report& r) {
    Json reasons = Json::array();
    for (auto tag : r.failure_reasons) reasons.push_back(std::string(to_string(tag)));
    return Json{
        {"m", r.m},
        {"e", dec(r.e)},
        {"t", r.t},
        {"t_primes", r.t_primes},
        {"cofactor", dec(r.cofactor)},
        {"passed", r.passed},
        {"failure_reasons", reasons},
    };
}

Json to_json(const FactorizationResult& r) {
    Json factors = Json::array();
    for (const auto& [poly, mult] : r.factors)
        factors.push_back(Json{{"poly", format_poly(poly)}, {"multiplicity", mult}});
    return Json{{"unit", r.unit.value}, {"factors", factors}};
}

Json to_json(const ClosureState& s) {
    Json edges = Json::array();
    for (const auto& e : s.edges) edges.push_back(Json{{"parent", format_poly(e.parent)}, {"child", format_poly(e.child)}});
    return Json{
        {"p", s.field.p()},
        {"status", std::string(to_string(s.status))},
        {"iterations", s.iterations},
        {"member_count", s.members.size()},
        {"members", poly_list(s.members)},
        {"edges", edges},
    };
}

Json to_json(const FSetVerdict& v) {
    Json violations = Json::array();
    for (const auto& [parent, missing] : v.violations)
        violations.push_back(Json{{"parent", format_poly(parent)}, {"missing", format_poly(missing)}});
    return Json{
        {"closed", v.closed},
        {"violations", violations},
        {"nontrivial_witness", v.nontrivial_witness ? Json(format_poly(*v.nontrivial_witness)) : Json(nullptr)},
        {"infinite_certificate", v.infinite_certificate ? Json("PAPER_TOWER") : Json(nullptr)},
        {"trivial_empty", v.trivial_empty},
    };
}

Json to_json(const ProbeReport& r) {
    Json levels = Json::array();
    for (const auto& L : r.levels) {
        Json new_factors = Json::array();
        for (const auto& q : L.new_factors) new_factors.push_back(format_poly(q));
        levels.push_back(Json{
            {"ell", L.ell},
            {"t_power", L.t_power},
            {"degree", L.poly.degree()},
            {"poly", format_poly(L.poly)},
            {"irreducible", L.irreducible},
            {"thm335", L.thm335 ? to_json(*L.thm335) : Json(nullptr)},
            {"outcome", std::string(to_string(L.outcome))},
            {"factorization", L.factorization ? to_json(*L.factorization) : Json(nullptr)},
            {"new_factors", new_factors},
            {"closure_size", L.closure_size},
            {"tower_shaped", L.tower_shaped},
        });
    }
    return Json{
        {"p", r.field.p()},
        {"base", format_poly(r.base)},
        {"t", r.t},
        {"max_level", r.max_level},
        {"levels", levels},
        {"verdict", r.self_sustaining ? "SELF-SUSTAINING" : "NOT-SELF-SUSTAINING"},
    };
}

Json verify_json(const VerifyResult& r, const RunConfig& config) {
    const FieldSpec& F = r.tower.field;
    Json levels = Json::array();
    for (const auto& L : r.tower.levels) {
        levels.push_back(Json{
            {"ell", L.ell},
            {"kind", std::string(to_string(L.kind))},
            {"degree", L.poly.degree()},
            {"monic", L.monic},
            {"irreducible", L.irreducible},
            {"constant_term", constant_term(L.poly).value},
            {"thm335", to_json(L.thm335)},
            {"lemma_identity", L.lemma_identity},
        });
    }
    Json fset = to_json(r.fset.verdict);
    fset["member_count"] = r.fset.state.members.size();
    fset["edge_count"] = r.fset.state.edges.size();
    return Json{
        {"schema", "fset.verify/1"},
        {"config", config.to_json(F)},
        {"p", F.p()},
        {"gate", residue_gate(F)},
        {"max_level", r.tower.max_level},
        {"levels", levels},
        {"fset", fset},
        {"witness", Json{{"poly", format_poly(r.witness)}, {"irreducible", true}, {"in_family", r.witness_in_family}}},
        {"passed", r.passed},
    };
}

std::string verify_text(const VerifyResult& r) {
    std::ostringstream out;
    out << "p = " << r.tower.field.p() << " (p mod 9 = " << r.tower.field.residue9() << "), levels 0.."
        << r.tower.max_level << "\n";
    for (const auto& L : r.tower.levels) {
        out << "  " << to_string(L.kind) << "_" << L.ell << "  deg " << L.poly.degree()
            << "  irreducible=" << (L.irreducible ? "yes" : "no")
            << "  order-criterion=" << (L.thm335.passed ? "pass" : "fail")
            << "  identity=" << (L.lemma_identity ? "holds" : "FAILS") << "\n";
    }
    out << "  family of " << r.fset.state.members.size() << " members: "
        << (r.fset.verdict.closed ? "closed" : "NOT closed") << "\n";
    out << "  witness " << format_poly(r.witness) << " irreducible, "
        << (r.witness_in_family ? "IN family" : "not in family") << "\n";
    out << (r.passed ? "PASS" : "FAIL") << "\n";
    return out.str();
}

std::string probe_text(const ProbeReport& r) {
    std::ostringstream out;
    out << "base " << format_poly(r.base) << " over F_" << r.field.p() << ", t = " << r.t << "\n";
    for (const auto& L : r.levels) {
        out << "  level " << L.ell << "  deg " << L.poly.degree() << "  " << to_string(L.outcome);
        if (L.thm335 && !L.thm335->passed) {
            out << " [";
            for (std::size_t i = 0; i < L.thm335->failure_reasons.size(); ++i)
                out << (i ? "," : "") << to_string(L.thm335->failure_reasons[i]);
            out << "]";
        }
        if (L.factorization) out << "  = " << format_factorization(*L.factorization);
        if (L.irreducible) {
            out << "  closure " << L.closure_size << (L.tower_shaped ? " tower-shaped" : " ESCAPES");
            if (!L.new_factors.empty()) {
                out << "  new:";
                for (const auto& q : L.new_factors) out << " " << format_poly(q);
            }
        }
        out << "\n";
    }
    out << (r.self_sustaining ? "SELF-SUSTAINING" : "NOT SELF-SUSTAINING") << "\n";
    return out.str();
}

std::string closure_text(const ClosureState& s) {
    std::ostringstream out;
    out << s.members.size() << " members, " << to_string(s.status) << "\n";
    for (const auto& P : s.members) out << "  " << format_poly(P) << "\n";
    out << "edges:\n";
    for (const auto& e : s.edges) out << "  " << format_poly(e.parent) << " -> " << format_poly(e.child) << "\n";
    return out.str();
}

}  // namespace fset
