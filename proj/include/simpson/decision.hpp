#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "simpson/table.hpp"

namespace simpson {

// Winning alternative label, or nullopt for a tie. Ties are first-class
// outcomes and are never broken arbitrarily.
using Winner = std::optional<std::string>;

enum class DecisionRule { pooled, rate_sum, majority };

std::string_view to_string(DecisionRule rule);

struct Decision {
  Winner winner;
  DecisionRule rule;
  Rational margin;  // winner score minus runner-up score; 0 for a tie
};

struct ReversalReport {
  std::vector<std::pair<std::string, Winner>> per_group_winners;
  Winner pooled_winner;
  bool reversed = false;
  std::vector<Rational> margins;  // alt2 rate minus alt1 rate, per group
};

// Ordering of alternatives by descending rate; alternatives with equal rates
// share one level (in table order).
using Ranking = std::vector<std::vector<std::string>>;

struct RankingReport {
  std::vector<std::pair<std::string, Ranking>> per_group_rankings;
  Ranking pooled_ranking;
  bool fully_reversed = false;
};

/// Alternative with the strictly greatest rate in the group's column.
Winner group_winner(const PreferenceTable& table, std::size_t group);
Winner group_winner(const PreferenceTable& table, std::string_view group);

/// Per-group rate differences, alternative 2 minus alternative 1 (signed).
/// Requires exactly two alternatives.
std::vector<Rational> margin_vector(const PreferenceTable& table);

Decision pooled_decision(const PreferenceTable& table);
Decision rate_sum_decision(const PreferenceTable& table);

/// Majority over per-group winners; ties count for neither side. Requires
/// exactly two alternatives.
Decision majority_decision(const PreferenceTable& table);

/// Strict two-level reversal check: reversed iff every group strictly prefers
/// one alternative and the pooled data strictly prefers the other. Requires
/// exactly two alternatives.
ReversalReport detect_reversal(const PreferenceTable& table);

/// Per-group and pooled rankings; fully_reversed iff every per-group ranking
/// is strict and identical and the pooled ranking is its exact reverse.
RankingReport rank_report(const PreferenceTable& table);

}  // namespace simpson
