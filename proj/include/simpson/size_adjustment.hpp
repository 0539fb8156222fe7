#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "simpson/decision.hpp"
#include "simpson/table.hpp"

namespace simpson {

// Penalty parameters for the recomputation function
//   multiplier = exp(-delta * (size - mean)^2 / variance)   when size < mean
// with the weight left unchanged at or above the mean. k scales the
// penalized weight.
struct AdjustmentPolicy {
  Rational delta{1, 2};
  Rational k{1};

  AdjustmentPolicy() = default;
  AdjustmentPolicy(Rational delta, Rational k);
};

struct AdjustedCell {
  Rational original_rate;
  double multiplier = 1.0;
  double adjusted_weight = 0.0;
  bool penalized = false;
};

struct AdjustedTable {
  std::vector<std::string> alternatives;
  std::vector<std::string> groups;
  std::vector<std::vector<AdjustedCell>> cells;  // [alternative][group]
  std::vector<SizeStats> column_stats;           // one per group
};

enum class AdjustedRule { majority, weight_sum };

std::string_view to_string(AdjustedRule rule);

struct AdjustedDecision {
  Winner winner;
  AdjustedRule rule;
  double margin = 0.0;
  std::vector<std::int64_t> group_wins;  // per alternative; majority rule only
};

// Penalized weights leave exact arithmetic, so comparisons between adjusted
// cells use this relative tolerance; two unpenalized cells still compare
// exactly through their rates.
inline constexpr double kAdjustedRelTol = 1e-12;

/// exp(-v^2 / 2): the multiplier for a cohort v standard deviations below
/// the mean under the default policy.
double deviation_multiplier(double v);

/// Recompute one weight given its column's size statistics. Sizes at or
/// above the mean (and zero-variance columns) pass through unchanged.
AdjustedCell adjust_value(const Rational& rate, std::int64_t size,
                          const SizeStats& stats,
                          const AdjustmentPolicy& policy = {});

/// Apply adjust_value cell-by-cell, with statistics computed per column.
AdjustedTable adjust_table(const PreferenceTable& table,
                           const AdjustmentPolicy& policy = {});

/// Three-way comparison of adjusted weights: exact when both cells are
/// unpenalized, tolerance-based otherwise. Returns -1, 0, or +1.
int compare_adjusted(const AdjustedCell& a, const AdjustedCell& b);

/// Alternative with the strictly greatest adjusted weight in one column.
Winner adjusted_group_winner(const AdjustedTable& adjusted, std::size_t group);

/// Decision over adjusted weights instead of raw rates. The majority rule
/// requires exactly two alternatives.
AdjustedDecision adjusted_decision(const PreferenceTable& table,
                                   const AdjustmentPolicy& policy,
                                   AdjustedRule rule);

}  // namespace simpson
