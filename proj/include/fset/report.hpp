#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "fset/closure.hpp"
#include "fset/construct.hpp"
#include "fset/factor.hpp"

namespace fset {

using Json = nlohmann::ordered_json;

/// Effective settings shared by every pipeline; echoed into JSON reports.
struct RunConfig {
    std::size_t degree_cap = 0;  // 0: default for the field
    std::size_t iter_cap = 100'000;
    std::uint64_t edf_seed = kDefaultEdfSeed;
    FactorBudget budget;

    FactorOptions factor_options() const { return {edf_seed}; }
    Json to_json(const FieldSpec& F) const;
};

struct VerifyResult {
    TowerReport tower;
    PaperFSet fset;
    Polynomial witness;
    bool witness_in_family = true;
    bool passed = false;
};

/// Tower certification, identities, closedness of the truncated family, and
/// the nontriviality witness. Throws GateFailed.
VerifyResult run_verify(const FieldSpec& F, unsigned max_level, const RunConfig& config);

Json to_json(const Thm335Report& r);
Json to_json(const FactorizationResult& r);
Json to_json(const ClosureState& s);
Json to_json(const FSetVerdict& v);
Json to_json(const ProbeReport& r);
Json verify_json(const VerifyResult& r, const RunConfig& config);

std::string verify_text(const VerifyResult& r);
std::string probe_text(const ProbeReport& r);
std::string closure_text(const ClosureState& s);

}  // namespace fset
