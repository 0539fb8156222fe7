#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "simpson/table.hpp"

namespace simpson {

// Outcome of cross-comparing one unordered pair of groups: alternative 1 in
// group a against alternative 2 in group b, and vice versa. Exactly two
// comparisons, so the tallies sum to 2.
struct PairSwitchResult {
  std::string group_a;
  std::string group_b;
  int wins_alt1 = 0;
  int wins_alt2 = 0;
  int ties = 0;
};

struct SwitchedPairSummary {
  std::vector<PairSwitchResult> pairs;  // one per unordered group pair
  std::int64_t wins_alt1 = 0;
  std::int64_t wins_alt2 = 0;
  std::int64_t ties = 0;
};

// Tallies over all n * n! comparisons of alternative 1's rate vector against
// every permutation of alternative 2's.
struct PermutationScore {
  std::uint64_t wins_alt2 = 0;
  std::uint64_t ties = 0;
  std::uint64_t losses_alt2 = 0;
  std::uint64_t total = 0;

  friend bool operator==(const PermutationScore&, const PermutationScore&) =
      default;
};

/// Cross comparison of one group pair. Requires two alternatives and two
/// distinct groups.
PairSwitchResult switched_pair(const PreferenceTable& table,
                               std::string_view group_a,
                               std::string_view group_b);

/// All n(n-1)/2 unordered pair comparisons plus summed tallies. Requires two
/// alternatives and at least two groups.
SwitchedPairSummary all_switched_pairs(const PreferenceTable& table);

/// Explicit walk over every permutation of group assignments. Exact; caps at
/// 8 groups (40320 permutations) and serves as the oracle for the closed
/// form below.
PermutationScore permutation_score(const PreferenceTable& table);

/// Same tallies via the closed form: each ordered (i, j) pairing occurs in
/// exactly (n-1)! permutations, so pairwise counts scale by (n-1)!. O(n^2)
/// comparisons; n above 19 would overflow the 64-bit tallies and throws.
PermutationScore permutation_score_fast(const PreferenceTable& table);

}  // namespace simpson
