#include "simpson/size_adjustment.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace simpson {

AdjustmentPolicy::AdjustmentPolicy(Rational delta, Rational k)
    : delta(delta), k(k) {
  if (delta <= 0) throw std::invalid_argument("policy: delta must be positive");
  if (k <= 0) throw std::invalid_argument("policy: k must be positive");
}

std::string_view to_string(AdjustedRule rule) {
  switch (rule) {
    case AdjustedRule::majority:
      return "majority";
    case AdjustedRule::weight_sum:
      return "weight-sum";
  }
  throw std::logic_error("unknown adjusted rule");
}

double deviation_multiplier(double v) { return std::exp(-v * v / 2.0); }

AdjustedCell adjust_value(const Rational& rate, std::int64_t size,
                          const SizeStats& stats,
                          const AdjustmentPolicy& policy) {
  if (size < 1) throw std::invalid_argument("adjust_value: size must be >= 1");
  AdjustedCell cell;
  cell.original_rate = rate;
  // Zero variance means every size equals the mean, so the penalized branch
  // is unreachable; guard it anyway.
  if (Rational(size) >= stats.mean || stats.variance == Rational(0)) {
    cell.multiplier = 1.0;
    cell.adjusted_weight = rate.to_double();
    cell.penalized = false;
    return cell;
  }
  const Rational dev = Rational(size) - stats.mean;
  const Rational w = policy.delta * dev * dev / stats.variance;
  cell.multiplier = std::exp(-w.to_double());
  cell.adjusted_weight =
      policy.k.to_double() * rate.to_double() * cell.multiplier;
  cell.penalized = true;
  return cell;
}

AdjustedTable adjust_table(const PreferenceTable& table,
                           const AdjustmentPolicy& policy) {
  AdjustedTable adjusted;
  adjusted.alternatives = table.alternatives();
  adjusted.groups = table.groups();
  adjusted.column_stats.reserve(table.group_count());
  for (std::size_t g = 0; g < table.group_count(); ++g)
    adjusted.column_stats.push_back(column_size_stats(table, g));

  adjusted.cells.resize(table.alternative_count());
  for (std::size_t a = 0; a < table.alternative_count(); ++a) {
    adjusted.cells[a].reserve(table.group_count());
    for (std::size_t g = 0; g < table.group_count(); ++g) {
      const CohortCount& c = table.cell(a, g);
      adjusted.cells[a].push_back(
          adjust_value(rate(c), c.trials, adjusted.column_stats[g], policy));
    }
  }
  return adjusted;
}

namespace {

int compare_with_tolerance(double x, double y) {
  const double scale = std::max(std::abs(x), std::abs(y));
  if (std::abs(x - y) <= kAdjustedRelTol * scale) return 0;
  return x < y ? -1 : 1;
}

}  // namespace

int compare_adjusted(const AdjustedCell& a, const AdjustedCell& b) {
  if (!a.penalized && !b.penalized) {
    const auto cmp = a.original_rate <=> b.original_rate;
    return cmp < 0 ? -1 : cmp > 0 ? 1 : 0;
  }
  return compare_with_tolerance(a.adjusted_weight, b.adjusted_weight);
}

Winner adjusted_group_winner(const AdjustedTable& adjusted,
                             std::size_t group) {
  if (group >= adjusted.groups.size())
    throw std::out_of_range("adjusted_group_winner: group index out of range");
  std::size_t best = 0;
  bool tied = false;
  for (std::size_t a = 1; a < adjusted.cells.size(); ++a) {
    const int cmp =
        compare_adjusted(adjusted.cells[a][group], adjusted.cells[best][group]);
    if (cmp > 0) {
      best = a;
      tied = false;
    } else if (cmp == 0) {
      tied = true;
    }
  }
  if (tied) return std::nullopt;
  return adjusted.alternatives[best];
}

AdjustedDecision adjusted_decision(const PreferenceTable& table,
                                   const AdjustmentPolicy& policy,
                                   AdjustedRule rule) {
  const AdjustedTable adjusted = adjust_table(table, policy);

  if (rule == AdjustedRule::majority) {
    if (table.alternative_count() != 2)
      throw std::invalid_argument(
          "adjusted_decision: majority requires exactly two alternatives");
    AdjustedDecision decision{std::nullopt, rule, 0.0, {0, 0}};
    for (std::size_t g = 0; g < table.group_count(); ++g) {
      const Winner w = adjusted_group_winner(adjusted, g);
      if (!w) continue;
      ++decision.group_wins[*w == table.alternatives()[0] ? 0 : 1];
    }
    const auto [w0, w1] = std::pair(decision.group_wins[0],
                                    decision.group_wins[1]);
    if (w0 != w1) {
      decision.winner = table.alternatives()[w0 > w1 ? 0 : 1];
      decision.margin = double(std::abs(w0 - w1));
    }
    return decision;
  }

  // weight-sum rule
  std::vector<double> sums(table.alternative_count(), 0.0);
  for (std::size_t a = 0; a < table.alternative_count(); ++a)
    for (std::size_t g = 0; g < table.group_count(); ++g)
      sums[a] += adjusted.cells[a][g].adjusted_weight;

  std::size_t best = 0;
  for (std::size_t a = 1; a < sums.size(); ++a)
    if (compare_with_tolerance(sums[a], sums[best]) > 0) best = a;
  bool tied = false;
  double runner_up = 0.0;
  bool have_runner_up = false;
  for (std::size_t a = 0; a < sums.size(); ++a) {
    if (a == best) continue;
    if (compare_with_tolerance(sums[a], sums[best]) == 0) tied = true;
    if (!have_runner_up || sums[a] > runner_up) {
      runner_up = sums[a];
      have_runner_up = true;
    }
  }
  AdjustedDecision decision{std::nullopt, rule, 0.0, {}};
  if (!tied) {
    decision.winner = table.alternatives()[best];
    decision.margin = sums[best] - runner_up;
  }
  return decision;
}

}  // namespace simpson
