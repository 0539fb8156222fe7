#include "simpson/decision.hpp"

#include <algorithm>
#include <stdexcept>

namespace simpson {

std::string_view to_string(DecisionRule rule) {
  switch (rule) {
    case DecisionRule::pooled:
      return "pooled";
    case DecisionRule::rate_sum:
      return "rate-sum";
    case DecisionRule::majority:
      return "majority";
  }
  throw std::logic_error("unknown decision rule");
}

namespace {

void require_two_alternatives(const PreferenceTable& table,
                              const char* operation) {
  if (table.alternative_count() != 2)
    throw std::invalid_argument(std::string(operation) +
                                ": exactly two alternatives required");
}

// Winner among per-alternative scores, with the margin to the runner-up.
Decision score_decision(const PreferenceTable& table, DecisionRule rule,
                        const std::vector<Rational>& scores) {
  std::size_t best = 0;
  for (std::size_t a = 1; a < scores.size(); ++a)
    if (scores[a] > scores[best]) best = a;

  Rational runner_up;
  bool tied = false;
  bool have_runner_up = false;
  for (std::size_t a = 0; a < scores.size(); ++a) {
    if (a == best) continue;
    if (scores[a] == scores[best]) tied = true;
    if (!have_runner_up || scores[a] > runner_up) {
      runner_up = scores[a];
      have_runner_up = true;
    }
  }
  if (tied) return Decision{std::nullopt, rule, Rational(0)};
  return Decision{table.alternatives()[best], rule,
                  scores[best] - runner_up};
}

// Index of the strict column maximum, or nullopt on a shared maximum.
std::optional<std::size_t> column_winner_index(const PreferenceTable& table,
                                               std::size_t group) {
  std::size_t best = 0;
  bool tied = false;
  Rational best_rate = rate(table.cell(0, group));
  for (std::size_t a = 1; a < table.alternative_count(); ++a) {
    const Rational r = rate(table.cell(a, group));
    if (r > best_rate) {
      best = a;
      best_rate = r;
      tied = false;
    } else if (r == best_rate) {
      tied = true;
    }
  }
  if (tied) return std::nullopt;
  return best;
}

Ranking column_ranking(const PreferenceTable& table,
                       const std::vector<Rational>& scores) {
  std::vector<std::size_t> order(scores.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return scores[a] > scores[b];
                   });
  Ranking ranking;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i == 0 || scores[order[i]] != scores[order[i - 1]])
      ranking.emplace_back();
    ranking.back().push_back(table.alternatives()[order[i]]);
  }
  return ranking;
}

bool is_strict(const Ranking& ranking) {
  return std::all_of(ranking.begin(), ranking.end(),
                     [](const auto& level) { return level.size() == 1; });
}

}  // namespace

Winner group_winner(const PreferenceTable& table, std::size_t group) {
  if (group >= table.group_count())
    throw std::out_of_range("group_winner: group index out of range");
  const auto idx = column_winner_index(table, group);
  if (!idx) return std::nullopt;
  return table.alternatives()[*idx];
}

Winner group_winner(const PreferenceTable& table, std::string_view group) {
  return group_winner(table, table.group_index(group));
}

std::vector<Rational> margin_vector(const PreferenceTable& table) {
  require_two_alternatives(table, "margin_vector");
  std::vector<Rational> margins;
  margins.reserve(table.group_count());
  for (std::size_t g = 0; g < table.group_count(); ++g)
    margins.push_back(rate(table.cell(1, g)) - rate(table.cell(0, g)));
  return margins;
}

Decision pooled_decision(const PreferenceTable& table) {
  std::vector<Rational> scores;
  scores.reserve(table.alternative_count());
  for (std::size_t a = 0; a < table.alternative_count(); ++a)
    scores.push_back(pooled_rate(table, a));
  return score_decision(table, DecisionRule::pooled, scores);
}

Decision rate_sum_decision(const PreferenceTable& table) {
  std::vector<Rational> scores;
  scores.reserve(table.alternative_count());
  for (std::size_t a = 0; a < table.alternative_count(); ++a)
    scores.push_back(rate_sum(table, a));
  return score_decision(table, DecisionRule::rate_sum, scores);
}

Decision majority_decision(const PreferenceTable& table) {
  require_two_alternatives(table, "majority_decision");
  std::int64_t wins0 = 0;
  std::int64_t wins1 = 0;
  for (std::size_t g = 0; g < table.group_count(); ++g) {
    const auto idx = column_winner_index(table, g);
    if (!idx) continue;  // tied groups count for neither
    (*idx == 0 ? wins0 : wins1)++;
  }
  if (wins0 == wins1)
    return Decision{std::nullopt, DecisionRule::majority, Rational(0)};
  const std::size_t best = wins0 > wins1 ? 0 : 1;
  return Decision{table.alternatives()[best], DecisionRule::majority,
                  Rational(std::max(wins0, wins1) - std::min(wins0, wins1))};
}

ReversalReport detect_reversal(const PreferenceTable& table) {
  require_two_alternatives(table, "detect_reversal");
  ReversalReport report;
  report.margins = margin_vector(table);

  std::optional<std::size_t> uniform_winner;
  bool uniform = true;
  for (std::size_t g = 0; g < table.group_count(); ++g) {
    const auto idx = column_winner_index(table, g);
    report.per_group_winners.emplace_back(
        table.groups()[g],
        idx ? Winner(table.alternatives()[*idx]) : std::nullopt);
    if (!idx) {
      uniform = false;
    } else if (!uniform_winner) {
      uniform_winner = idx;
    } else if (*uniform_winner != *idx) {
      uniform = false;
    }
  }

  const Decision pooled = pooled_decision(table);
  report.pooled_winner = pooled.winner;
  report.reversed = uniform && uniform_winner.has_value() &&
                    pooled.winner.has_value() &&
                    *pooled.winner !=
                        table.alternatives()[*uniform_winner];
  return report;
}

RankingReport rank_report(const PreferenceTable& table) {
  RankingReport report;
  for (std::size_t g = 0; g < table.group_count(); ++g) {
    std::vector<Rational> rates;
    rates.reserve(table.alternative_count());
    for (std::size_t a = 0; a < table.alternative_count(); ++a)
      rates.push_back(rate(table.cell(a, g)));
    report.per_group_rankings.emplace_back(table.groups()[g],
                                           column_ranking(table, rates));
  }

  std::vector<Rational> pooled;
  pooled.reserve(table.alternative_count());
  for (std::size_t a = 0; a < table.alternative_count(); ++a)
    pooled.push_back(pooled_rate(table, a));
  report.pooled_ranking = column_ranking(table, pooled);

  const Ranking& first = report.per_group_rankings.front().second;
  bool identical_strict = is_strict(first);
  for (const auto& [_, ranking] : report.per_group_rankings)
    identical_strict = identical_strict && ranking == first;

  Ranking reversed_pooled(report.pooled_ranking.rbegin(),
                          report.pooled_ranking.rend());
  report.fully_reversed = identical_strict &&
                          is_strict(report.pooled_ranking) &&
                          reversed_pooled == first;
  return report;
}

}  // namespace simpson
