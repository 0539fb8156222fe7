#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "simpson/table.hpp"

namespace simpson {

struct ParadoxEstimate {
  std::uint64_t samples = 0;
  std::uint64_t hits = 0;
  double estimate = 0.0;   // hits / samples
  double std_error = 0.0;  // sqrt(estimate * (1 - estimate) / samples)
  std::uint64_t seed = 0;
};

// A k-group partition of two alternatives' aggregate counts in which every
// group strictly prefers the pooled loser.
struct SplitGroup {
  CohortCount alt1;
  CohortCount alt2;
};

struct SplitWitness {
  std::vector<SplitGroup> groups;
};

class SearchCapExceeded : public std::runtime_error {
 public:
  SearchCapExceeded()
      : std::runtime_error("split search: candidate cap exceeded") {}
};

// Cell mass layout for a 2-alternative, 2-outcome, 2-group point:
// index = alternative * 4 + outcome * 2 + group, outcome 0 = success.
inline constexpr std::size_t kParadoxCells = 8;

/// Strict two-level reversal predicate on nonnegative cell masses (scale
/// invariant, so raw counts work as well as probabilities): true iff both
/// groups' conditional success rates strictly favor one alternative while
/// the pooled rates strictly favor the other, in either direction. A zero
/// (alternative, group) margin makes the point undefined: not a hit.
bool is_paradox_point(const std::array<double, kParadoxCells>& cells);

// --- Monte Carlo sampling contract -----------------------------------------
//
// Sample i draws its 8 cell masses from a counter-based substream so the hit
// count is reproducible for a fixed seed regardless of worker count:
//
//   bits(seed, c)  = splitmix64 output at counter c, i.e. mix(seed + (c+1)*g)
//                    with gamma g = 0x9E3779B97F4A7C15 and the standard
//                    30/27/31-shift finalizer
//   u              = (bits >> 11) * 2^-53            in [0, 1)
//   mass           = -log1p(-u)                      unit exponential
//   cell j of sample i uses counter i*8 + j
//
// Normalized unit exponentials are uniform on the simplex; the predicate is
// scale invariant, so the masses are consumed unnormalized.

std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t counter);

std::array<double, kParadoxCells> sample_cells(std::uint64_t seed,
                                               std::uint64_t index);

/// Fraction of `samples` uniform random 2x2x2 tables exhibiting the strict
/// two-level reversal, with its binomial standard error. Deterministic for a
/// fixed seed; the worker count only partitions the index range.
ParadoxEstimate estimate_paradox_probability(std::uint64_t samples,
                                             std::uint64_t seed,
                                             unsigned workers = 1);

/// Exhaustive search for the lexicographically smallest k-group split of the
/// given totals in which every group strictly prefers the pooled loser.
/// Witness ordering: by group, then alt1 successes, alt1 trials, alt2
/// successes, alt2 trials. Every returned witness is re-verified through
/// detect_reversal before being returned. Throws SearchCapExceeded past 1e8
/// candidate assignments, std::invalid_argument when the pooled rates tie or
/// the bounds are infeasible.
std::optional<SplitWitness> find_reversing_split(const CohortCount& totals_alt1,
                                                 const CohortCount& totals_alt2,
                                                 int k,
                                                 std::int64_t min_trials = 1);

}  // namespace simpson
