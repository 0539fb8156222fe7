#include "simpson/report.hpp"

#include <cstdio>

#include "simpson/table_io.hpp"

namespace simpson::reports {

namespace {

Json winner_json(const Winner& winner) {
  if (!winner) return nullptr;
  return *winner;
}

std::string full_precision(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string fixed2(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", value);
  return buf;
}

Json skeleton(const char* command, const PreferenceTable& table) {
  Json report;
  report["command"] = command;
  report["table_digest"] = table_digest(table);
  return report;
}

// Per-alternative exact rate vectors, keyed by alternative label.
Json exact_rates(const PreferenceTable& table) {
  Json rates;
  for (std::size_t a = 0; a < table.alternative_count(); ++a) {
    Json row = Json::array();
    for (std::size_t g = 0; g < table.group_count(); ++g)
      row.push_back(rate(table.cell(a, g)).fraction_str());
    rates[table.alternatives()[a]] = std::move(row);
  }
  return rates;
}

Json ranking_json(const Ranking& ranking) {
  Json out = Json::array();
  for (const auto& level : ranking) out.push_back(level);
  return out;
}

}  // namespace

Json detect(const PreferenceTable& table) {
  const ReversalReport reversal = detect_reversal(table);
  const Decision pooled = pooled_decision(table);

  Json report = skeleton("detect", table);
  Json& results = report["results"];
  results["per_group_winners"] = Json::array();
  for (const auto& [group, winner] : reversal.per_group_winners)
    results["per_group_winners"].push_back(
        {{"group", group}, {"winner", winner_json(winner)}});
  results["pooled_winner"] = winner_json(reversal.pooled_winner);
  results["reversed"] = reversal.reversed;
  Json margins = Json::array();
  Json exact_margins = Json::array();
  for (const Rational& m : reversal.margins) {
    margins.push_back(m.decimal_str());
    exact_margins.push_back(m.fraction_str());
  }
  results["margins"] = std::move(margins);
  results["pooled_margin"] = pooled.margin.decimal_str();

  Json& exact = report["exact"];
  exact["margins"] = std::move(exact_margins);
  exact["pooled_margin"] = pooled.margin.fraction_str();
  Json pooled_rates;
  for (std::size_t a = 0; a < table.alternative_count(); ++a)
    pooled_rates[table.alternatives()[a]] =
        pooled_rate(table, a).fraction_str();
  exact["pooled_rates"] = std::move(pooled_rates);
  exact["rates"] = exact_rates(table);
  return report;
}

Json rank(const PreferenceTable& table) {
  const RankingReport ranking = rank_report(table);

  Json report = skeleton("rank", table);
  Json& results = report["results"];
  results["per_group_rankings"] = Json::array();
  for (const auto& [group, order] : ranking.per_group_rankings)
    results["per_group_rankings"].push_back(
        {{"group", group}, {"ranking", ranking_json(order)}});
  results["pooled_ranking"] = ranking_json(ranking.pooled_ranking);
  results["fully_reversed"] = ranking.fully_reversed;

  Json& exact = report["exact"];
  Json pooled_rates;
  for (std::size_t a = 0; a < table.alternative_count(); ++a)
    pooled_rates[table.alternatives()[a]] =
        pooled_rate(table, a).fraction_str();
  exact["pooled_rates"] = std::move(pooled_rates);
  exact["rates"] = exact_rates(table);
  return report;
}

Json compare_pairwise(const PreferenceTable& table) {
  const SwitchedPairSummary summary = all_switched_pairs(table);

  Json report = skeleton("compare", table);
  Json& results = report["results"];
  results["mode"] = "pairwise";
  results["pairs"] = Json::array();
  for (const PairSwitchResult& pair : summary.pairs)
    results["pairs"].push_back({{"group_a", pair.group_a},
                                {"group_b", pair.group_b},
                                {"wins_alt1", pair.wins_alt1},
                                {"wins_alt2", pair.wins_alt2},
                                {"ties", pair.ties}});
  results["totals"] = {{"wins_alt1", summary.wins_alt1},
                       {"wins_alt2", summary.wins_alt2},
                       {"ties", summary.ties}};
  report["exact"]["rates"] = exact_rates(table);
  return report;
}

Json compare_permutations(const PreferenceTable& table) {
  const PermutationScore score = table.group_count() <= 8
                                     ? permutation_score(table)
                                     : permutation_score_fast(table);

  Json report = skeleton("compare", table);
  Json& results = report["results"];
  results["mode"] = "permutations";
  results["wins_alt2"] = score.wins_alt2;
  results["ties"] = score.ties;
  results["losses_alt2"] = score.losses_alt2;
  results["total"] = score.total;
  results["score_alt2"] = std::to_string(score.wins_alt2) + "/" +
                          std::to_string(score.total);
  results["share_alt2"] =
      Rational(std::int64_t(score.wins_alt2), std::int64_t(score.total))
          .decimal_str();

  Json& exact = report["exact"];
  exact["share_alt2"] =
      Rational(std::int64_t(score.wins_alt2), std::int64_t(score.total))
          .fraction_str();
  exact["rates"] = exact_rates(table);
  return report;
}

Json decide(const PreferenceTable& table, DecisionRule rule) {
  Decision decision{};
  std::vector<Rational> scores;
  switch (rule) {
    case DecisionRule::pooled:
      decision = pooled_decision(table);
      for (std::size_t a = 0; a < table.alternative_count(); ++a)
        scores.push_back(pooled_rate(table, a));
      break;
    case DecisionRule::rate_sum:
      decision = rate_sum_decision(table);
      for (std::size_t a = 0; a < table.alternative_count(); ++a)
        scores.push_back(rate_sum(table, a));
      break;
    case DecisionRule::majority: {
      decision = majority_decision(table);
      std::vector<std::int64_t> wins(table.alternative_count(), 0);
      for (std::size_t g = 0; g < table.group_count(); ++g) {
        const Winner w = group_winner(table, g);
        if (w) ++wins[table.alternative_index(*w)];
      }
      for (const std::int64_t w : wins) scores.push_back(Rational(w));
      break;
    }
  }

  Json report = skeleton("decide", table);
  Json& results = report["results"];
  results["rule"] = std::string(to_string(rule));
  results["winner"] = winner_json(decision.winner);
  results["margin"] = decision.margin.decimal_str();
  Json rounded_scores;
  Json exact_scores;
  for (std::size_t a = 0; a < table.alternative_count(); ++a) {
    rounded_scores[table.alternatives()[a]] = scores[a].decimal_str();
    exact_scores[table.alternatives()[a]] = scores[a].fraction_str();
  }
  results["scores"] = std::move(rounded_scores);

  Json& exact = report["exact"];
  exact["margin"] = decision.margin.fraction_str();
  exact["scores"] = std::move(exact_scores);
  exact["rates"] = exact_rates(table);
  return report;
}

Json adjust(const PreferenceTable& table, const AdjustmentPolicy& policy) {
  const AdjustedTable adjusted = adjust_table(table, policy);
  const AdjustedDecision sums =
      adjusted_decision(table, policy, AdjustedRule::weight_sum);

  Json report = skeleton("adjust", table);
  Json& results = report["results"];
  results["policy"] = {{"delta", policy.delta.decimal_str()},
                       {"k", policy.k.decimal_str()}};
  results["adjusted_table"] = Json::array();
  for (std::size_t a = 0; a < table.alternative_count(); ++a) {
    Json weights = Json::array();
    Json penalized = Json::array();
    for (std::size_t g = 0; g < table.group_count(); ++g) {
      weights.push_back(fixed2(adjusted.cells[a][g].adjusted_weight));
      penalized.push_back(adjusted.cells[a][g].penalized);
    }
    results["adjusted_table"].push_back(
        {{"alternative", table.alternatives()[a]},
         {"weights", std::move(weights)},
         {"penalized", std::move(penalized)}});
  }
  results["group_winners"] = Json::array();
  for (std::size_t g = 0; g < table.group_count(); ++g)
    results["group_winners"].push_back(
        {{"group", table.groups()[g]},
         {"winner", winner_json(adjusted_group_winner(adjusted, g))}});
  if (table.alternative_count() == 2) {
    const AdjustedDecision majority =
        adjusted_decision(table, policy, AdjustedRule::majority);
    results["majority"] = {{"winner", winner_json(majority.winner)},
                           {"group_wins", majority.group_wins}};
  }
  results["weight_sum"] = {{"winner", winner_json(sums.winner)},
                           {"margin", fixed2(sums.margin)}};

  Json& exact = report["exact"];
  exact["policy"] = {{"delta", policy.delta.fraction_str()},
                     {"k", policy.k.fraction_str()}};
  exact["column_stats"] = Json::array();
  for (const SizeStats& stats : adjusted.column_stats)
    exact["column_stats"].push_back(
        {{"mean", stats.mean.fraction_str()},
         {"variance", stats.variance.fraction_str()}});
  exact["adjusted_weights"] = Json::array();
  exact["multipliers"] = Json::array();
  for (std::size_t a = 0; a < table.alternative_count(); ++a) {
    Json weights = Json::array();
    Json multipliers = Json::array();
    for (std::size_t g = 0; g < table.group_count(); ++g) {
      weights.push_back(full_precision(adjusted.cells[a][g].adjusted_weight));
      multipliers.push_back(full_precision(adjusted.cells[a][g].multiplier));
    }
    exact["adjusted_weights"].push_back(std::move(weights));
    exact["multipliers"].push_back(std::move(multipliers));
  }
  exact["rates"] = exact_rates(table);
  return report;
}

Json monte_carlo(const ParadoxEstimate& estimate, unsigned workers) {
  Json report;
  report["command"] = "mc";
  Json& results = report["results"];
  results["samples"] = estimate.samples;
  results["seed"] = estimate.seed;
  results["workers"] = workers;
  results["hits"] = estimate.hits;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", estimate.estimate);
  results["estimate"] = buf;
  std::snprintf(buf, sizeof buf, "%.6e", estimate.std_error);
  results["std_error"] = buf;

  report["exact"]["estimate"] =
      Rational(std::int64_t(estimate.hits), std::int64_t(estimate.samples))
          .fraction_str();
  return report;
}

Json split(const PreferenceTable& table, int k, std::int64_t min_trials,
           const std::optional<SplitWitness>& witness) {
  Json report = skeleton("split", table);
  Json& results = report["results"];
  results["groups"] = k;
  results["min_trials"] = min_trials;
  Json totals;
  for (std::size_t a = 0; a < table.alternative_count(); ++a) {
    std::int64_t successes = 0;
    std::int64_t trials = 0;
    for (std::size_t g = 0; g < table.group_count(); ++g) {
      successes += table.cell(a, g).successes;
      trials += table.cell(a, g).trials;
    }
    totals[table.alternatives()[a]] = std::to_string(successes) + "/" +
                                      std::to_string(trials);
  }
  results["totals"] = std::move(totals);
  if (witness) {
    results["witness"] = Json::array();
    Json exact_rates_json = Json::array();
    for (std::size_t g = 0; g < witness->groups.size(); ++g) {
      const SplitGroup& group = witness->groups[g];
      results["witness"].push_back(
          {{"group", "G" + std::to_string(g + 1)},
           {"alt1",
            {{"successes", group.alt1.successes},
             {"trials", group.alt1.trials}}},
           {"alt2",
            {{"successes", group.alt2.successes},
             {"trials", group.alt2.trials}}}});
      exact_rates_json.push_back({{"alt1", rate(group.alt1).fraction_str()},
                                  {"alt2", rate(group.alt2).fraction_str()}});
    }
    results["verified"] = true;  // returned witnesses are re-checked
    report["exact"]["witness_rates"] = std::move(exact_rates_json);
  } else {
    results["witness"] = nullptr;
    results["verified"] = false;
  }
  Json pooled_rates;
  for (std::size_t a = 0; a < table.alternative_count(); ++a)
    pooled_rates[table.alternatives()[a]] =
        pooled_rate(table, a).fraction_str();
  report["exact"]["pooled_rates"] = std::move(pooled_rates);
  return report;
}

std::string render(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace simpson::reports
