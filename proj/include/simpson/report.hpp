#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

#include "simpson/cross_comparison.hpp"
#include "simpson/decision.hpp"
#include "simpson/paradox_lab.hpp"
#include "simpson/size_adjustment.hpp"
#include "simpson/table.hpp"

namespace simpson {

using Json = nlohmann::ordered_json;

// Structured run reports: { command, table_digest, results, exact }. Every
// rounded decimal in `results` has an exact "num/den" counterpart under
// `exact`, and the output carries no timestamps, so one input and flag set
// always renders byte-identically.
namespace reports {

Json detect(const PreferenceTable& table);
Json rank(const PreferenceTable& table);
Json compare_pairwise(const PreferenceTable& table);
Json compare_permutations(const PreferenceTable& table);
Json decide(const PreferenceTable& table, DecisionRule rule);
Json adjust(const PreferenceTable& table, const AdjustmentPolicy& policy);
Json monte_carlo(const ParadoxEstimate& estimate, unsigned workers);
Json split(const PreferenceTable& table, int k, std::int64_t min_trials,
           const std::optional<SplitWitness>& witness);

std::string render(const Json& report);

}  // namespace reports
}  // namespace simpson
