// fsets: command-line front end for tower generation, certification,
// factorization, order, closure and tower probing over F_p.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fset/closure.hpp"
#include "fset/construct.hpp"
#include "fset/error.hpp"
#include "fset/factor.hpp"
#include "fset/report.hpp"

namespace {

using namespace fset;

// Stable exit codes.
enum Exit : int {
    kOk = 0,
    kCheckFailed = 1,
    kGate = 2,
    kDegreeCap = 3,
    kParse = 4,
    kBudget = 5,
    kBadSeed = 6,
};

int exit_code_for(Errc code) {
    switch (code) {
        case Errc::GateFailed: return kGate;
        case Errc::DegreeCapExceeded: return kDegreeCap;
        case Errc::OrderBudgetExceeded:
        case Errc::FactorizationTimeout: return kBudget;
        case Errc::SeedNotIrreducible:
        case Errc::SeedNotMonic: return kBadSeed;
        case Errc::NotIrreducible:
        case Errc::ZeroConstantTerm:
        case Errc::ClosednessFailure: return kCheckFailed;
        default: return kParse;
    }
}

struct Options {
    std::uint64_t p = 2;
    std::string format = "text";
    RunConfig config;
};

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("-p,--prime", opt.p, "Prime characteristic")->required();
    cmd->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "dot"}))
        ->capture_default_str();
    cmd->add_option("--degree-cap", opt.config.degree_cap, "Largest degree expanded (0: field default)")
        ->envname("FSET_DEGREE_CAP")
        ->capture_default_str();
    cmd->add_option("--iter-cap", opt.config.iter_cap, "Closure worklist iterations")
        ->envname("FSET_ITER_CAP")
        ->capture_default_str();
    cmd->add_option("--seed", opt.config.edf_seed, "Seed for equal-degree splitting")
        ->envname("FSET_EDF_SEED")
        ->capture_default_str();
    cmd->add_option("--rho-budget", opt.config.budget.rho_iterations, "Pollard-Brent iteration budget")
        ->envname("FSET_RHO_BUDGET")
        ->capture_default_str();
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

// Appends the fields of `body` after the envelope keys.
void merge(Json& j, Json body) {
    for (auto& [k, v] : body.items()) j[k] = std::move(v);
}

Json envelope(std::string_view schema, const Options& opt, const FieldSpec& F) {
    return Json{{"schema", schema}, {"config", opt.config.to_json(F)}};
}

FamilyKind parse_kind(const std::string& s) {
    if (s == "f") return FamilyKind::FTower;
    if (s == "g") return FamilyKind::GTower;
    return FamilyKind::Linear;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"F-set towers of irreducible polynomials over F_p"};
    app.require_subcommand(1);
    Options opt;

    std::string kind = "f";
    long ell = 0;
    auto* gen = app.add_subcommand("gen", "Print a tower member or linear seed");
    add_common(gen, opt);
    gen->add_option("--kind", kind, "f, g or linear")->check(CLI::IsMember({"f", "g", "linear"}))->capture_default_str();
    gen->add_option("--ell", ell, "Tower level, or n for the linear seed x-n")->capture_default_str();

    unsigned levels = 3;
    auto* verify = app.add_subcommand("verify", "Certify both towers and the truncated family");
    add_common(verify, opt);
    verify->add_option("-L,--levels", levels, "Highest tower level")->capture_default_str();

    std::string poly_text;
    auto* factor = app.add_subcommand("factor", "Factor a polynomial");
    auto* order = app.add_subcommand("order", "Order of an irreducible polynomial");
    auto* irred = app.add_subcommand("irred", "Rabin irreducibility test");
    for (auto* cmd : {factor, order, irred}) {
        add_common(cmd, opt);
        cmd->add_option("poly", poly_text, "Polynomial, e.g. \"x^2+x+1\" or \"coeffs:1,1,1\"")->required();
    }

    std::vector<std::string> seed_texts;
    std::string dot_path;
    auto* clos = app.add_subcommand("closure", "Close a seed set under the factor condition");
    add_common(clos, opt);
    clos->add_option("seeds", seed_texts, "Monic irreducible seeds")->required();
    clos->add_option("--dot", dot_path, "Also write the factor graph as DOT");

    std::string base_text;
    std::uint64_t t = 3;
    auto* probe = app.add_subcommand("probe", "Explore the tower base(x^(t^l))");
    add_common(probe, opt);
    probe->add_option("--base", base_text, "Monic irreducible base")->required();
    probe->add_option("-t", t, "Substitution exponent")->capture_default_str();
    probe->add_option("-L,--levels", levels, "Highest level")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kParse;
    }

    try {
        const FieldSpec F(opt.p);
        const bool json = opt.format == "json";

        if (gen->parsed()) {
            const std::size_t cap = opt.config.degree_cap == 0 ? default_degree_cap(F) : opt.config.degree_cap;
            const FamilyMember m = make_member(parse_kind(kind), ell, F, cap);
            if (json) {
                Json j = envelope("fset.gen/1", opt, F);
                j["kind"] = std::string(to_string(m.kind));
                j["index"] = m.index;
                j["degree"] = m.poly.degree();
                j["poly"] = format_poly(m.poly);
                emit(j);
            } else {
                std::cout << format_poly(m.poly) << "\n";
            }
            return kOk;
        }

        if (verify->parsed()) {
            if (!residue_gate(F)) {
                if (json) {
                    Json j = envelope("fset.verify/1", opt, F);
                    j["p"] = F.p();
                    j["gate"] = false;
                    j["passed"] = false;
                    emit(j);
                } else {
                    std::cerr << "GateFailed: p = " << F.p() << " is " << F.residue9() << " mod 9, need 2 or 5\n";
                }
                return kGate;
            }
            const VerifyResult r = run_verify(F, levels, opt.config);
            if (json)
                emit(verify_json(r, opt.config));
            else
                std::cout << verify_text(r);
            return r.passed ? kOk : kCheckFailed;
        }

        if (factor->parsed() || order->parsed() || irred->parsed()) {
            const Polynomial f = parse_poly(poly_text, F);
            Json j = envelope(factor->parsed() ? "fset.factor/1" : order->parsed() ? "fset.order/1" : "fset.irred/1",
                              opt, F);
            j["input"] = format_poly(f);
            if (factor->parsed()) {
                const FactorizationResult r = factorize(f, opt.config.factor_options());
                if (!json) {
                    std::cout << format_factorization(r) << "\n";
                    return kOk;
                }
                merge(j, to_json(r));
            } else if (order->parsed()) {
                const OrderResult r = poly_order(f, opt.config.budget);
                if (!json) {
                    std::cout << r.e.str() << "\n";
                    return kOk;
                }
                j["m"] = r.m;
                j["e"] = r.e.str();
            } else {
                const bool result = is_irreducible(f);
                if (!json) {
                    std::cout << (result ? "true" : "false") << "\n";
                    return kOk;
                }
                j["irreducible"] = result;
            }
            emit(j);
            return kOk;
        }

        if (clos->parsed()) {
            std::vector<Polynomial> seeds;
            for (const auto& s : seed_texts) seeds.push_back(parse_poly(s, F));
            ClosureOptions copts;
            copts.degree_cap = opt.config.degree_cap;
            copts.iter_cap = opt.config.iter_cap;
            copts.factor = opt.config.factor_options();
            const ClosureState state = closure(seeds, F, copts);
            if (!dot_path.empty()) {
                std::ofstream out(dot_path);
                if (!out) throw Error(Errc::InvalidArgument, "cannot write " + dot_path);
                out << to_dot(state);
            }
            if (opt.format == "dot") {
                std::cout << to_dot(state);
            } else if (json) {
                Json j = envelope("fset.closure/1", opt, F);
                merge(j, to_json(state));
                emit(j);
            } else {
                std::cout << closure_text(state);
            }
            return kOk;
        }

        if (probe->parsed()) {
            ProbeOptions popts;
            popts.degree_cap = opt.config.degree_cap;
            popts.budget = opt.config.budget;
            popts.factor = opt.config.factor_options();
            const ProbeReport r = tower_probe(parse_poly(base_text, F), t, levels, popts);
            if (json) {
                Json j = envelope("fset.probe/1", opt, F);
                merge(j, to_json(r));
                emit(j);
            } else {
                std::cout << probe_text(r);
            }
            return kOk;
        }
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return exit_code_for(e.code());
    }
    return kOk;
}
