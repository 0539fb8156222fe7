#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "simpson/rational.hpp"

namespace simpson {

// One alternative's outcome counts within one group: successes out of trials.
// Counts are kept exactly as given (6/10 is not collapsed to 3/5); only the
// derived rate is reduced.
struct CohortCount {
  std::int64_t successes;
  std::int64_t trials;

  CohortCount(std::int64_t successes, std::int64_t trials);

  friend bool operator==(const CohortCount&, const CohortCount&) = default;
};

/// successes/trials as an exact reduced rational in [0, 1].
Rational rate(const CohortCount& cell);

// Mean and population variance (divide by count) of cohort sizes within one
// comparison column.
struct SizeStats {
  Rational mean;
  Rational variance;
};

// Alternatives x groups matrix of cohort counts. Labels are unique within
// each axis; at least two alternatives and one group. Immutable after
// construction, so concurrent reads are safe.
class PreferenceTable {
 public:
  PreferenceTable(std::vector<std::string> alternatives,
                  std::vector<std::string> groups,
                  std::vector<std::vector<CohortCount>> cells);

  std::size_t alternative_count() const { return alternatives_.size(); }
  std::size_t group_count() const { return groups_.size(); }
  const std::vector<std::string>& alternatives() const { return alternatives_; }
  const std::vector<std::string>& groups() const { return groups_; }

  const CohortCount& cell(std::size_t alternative, std::size_t group) const;

  // Throw std::out_of_range for unknown labels.
  std::size_t alternative_index(std::string_view label) const;
  std::size_t group_index(std::string_view label) const;

  friend bool operator==(const PreferenceTable&, const PreferenceTable&) =
      default;

 private:
  std::vector<std::string> alternatives_;
  std::vector<std::string> groups_;
  std::vector<std::vector<CohortCount>> cells_;  // [alternative][group]
};

/// Total successes over total trials across the alternative's row.
Rational pooled_rate(const PreferenceTable& table, std::size_t alternative);
Rational pooled_rate(const PreferenceTable& table, std::string_view alternative);

/// Sum of the alternative's per-group rates; ranges over [0, group_count].
Rational rate_sum(const PreferenceTable& table, std::size_t alternative);
Rational rate_sum(const PreferenceTable& table, std::string_view alternative);

/// Mean and population variance of the cohort sizes in one group's column.
SizeStats column_size_stats(const PreferenceTable& table, std::size_t group);
SizeStats column_size_stats(const PreferenceTable& table,
                            std::string_view group);

}  // namespace simpson
