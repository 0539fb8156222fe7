#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "simpson/table.hpp"

namespace fixtures {

using simpson::CohortCount;
using simpson::PreferenceTable;

// Three agents, two treatments; every agent prefers Treatment 2 while the
// pooled data prefers Treatment 1.
inline PreferenceTable three_agents() {
  return PreferenceTable(
      {"Treatment 1", "Treatment 2"}, {"Agent 1", "Agent 2", "Agent 3"},
      {{CohortCount(0, 1), CohortCount(3, 4), CohortCount(3, 5)},
       {CohortCount(1, 5), CohortCount(1, 1), CohortCount(3, 4)}});
}

// Six agents, same reversal shape with larger cohorts.
inline PreferenceTable six_agents() {
  return PreferenceTable(
      {"Treatment 1", "Treatment 2"},
      {"Agent 1", "Agent 2", "Agent 3", "Agent 4", "Agent 5", "Agent 6"},
      {{CohortCount(5, 8), CohortCount(23, 27), CohortCount(15, 24),
        CohortCount(68, 81), CohortCount(55, 80), CohortCount(234, 270)},
       {CohortCount(19, 26), CohortCount(8, 9), CohortCount(57, 78),
        CohortCount(23, 27), CohortCount(192, 263), CohortCount(81, 87)}});
}

// Three alternatives, two groups; per-group order C > B > A, pooled A > B > C.
inline PreferenceTable three_alternatives() {
  return PreferenceTable(
      {"A", "B", "C"}, {"Group 1", "Group 2"},
      {{CohortCount(1, 10), CohortCount(69, 90)},
       {CohortCount(10, 50), CohortCount(40, 50)},
       {CohortCount(22, 80), CohortCount(18, 20)}});
}

// Random table with the given shape; trials in [1, max_trials].
inline PreferenceTable random_table(std::mt19937_64& rng, std::size_t m,
                                    std::size_t n,
                                    std::int64_t max_trials = 20) {
  std::uniform_int_distribution<std::int64_t> trials_dist(1, max_trials);
  std::vector<std::string> alternatives;
  std::vector<std::string> groups;
  for (std::size_t a = 0; a < m; ++a)
    alternatives.push_back("A" + std::to_string(a + 1));
  for (std::size_t g = 0; g < n; ++g)
    groups.push_back("G" + std::to_string(g + 1));
  std::vector<std::vector<CohortCount>> cells;
  for (std::size_t a = 0; a < m; ++a) {
    std::vector<CohortCount> row;
    for (std::size_t g = 0; g < n; ++g) {
      const std::int64_t trials = trials_dist(rng);
      std::uniform_int_distribution<std::int64_t> success_dist(0, trials);
      row.emplace_back(success_dist(rng), trials);
    }
    cells.push_back(std::move(row));
  }
  return PreferenceTable(std::move(alternatives), std::move(groups),
                         std::move(cells));
}

}  // namespace fixtures
