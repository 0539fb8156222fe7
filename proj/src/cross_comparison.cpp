#include "simpson/cross_comparison.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace simpson {

namespace {

void require_two_alternatives(const PreferenceTable& table,
                              const char* operation) {
  if (table.alternative_count() != 2)
    throw std::invalid_argument(std::string(operation) +
                                ": exactly two alternatives required");
}

std::vector<Rational> row_rates(const PreferenceTable& table,
                                std::size_t alternative) {
  std::vector<Rational> rates;
  rates.reserve(table.group_count());
  for (std::size_t g = 0; g < table.group_count(); ++g)
    rates.push_back(rate(table.cell(alternative, g)));
  return rates;
}

void tally(const Rational& alt1_rate, const Rational& alt2_rate,
           PairSwitchResult& result) {
  if (alt1_rate > alt2_rate)
    ++result.wins_alt1;
  else if (alt2_rate > alt1_rate)
    ++result.wins_alt2;
  else
    ++result.ties;
}

PairSwitchResult switched_pair_by_index(const PreferenceTable& table,
                                        std::size_t a, std::size_t b) {
  PairSwitchResult result;
  result.group_a = table.groups()[a];
  result.group_b = table.groups()[b];
  tally(rate(table.cell(0, a)), rate(table.cell(1, b)), result);
  tally(rate(table.cell(0, b)), rate(table.cell(1, a)), result);
  return result;
}

std::uint64_t checked_factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::uint64_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

PairSwitchResult switched_pair(const PreferenceTable& table,
                               std::string_view group_a,
                               std::string_view group_b) {
  require_two_alternatives(table, "switched_pair");
  const std::size_t a = table.group_index(group_a);
  const std::size_t b = table.group_index(group_b);
  if (a == b)
    throw std::invalid_argument("switched_pair: groups must be distinct");
  return switched_pair_by_index(table, a, b);
}

SwitchedPairSummary all_switched_pairs(const PreferenceTable& table) {
  require_two_alternatives(table, "all_switched_pairs");
  if (table.group_count() < 2)
    throw std::invalid_argument(
        "all_switched_pairs: at least two groups required");
  SwitchedPairSummary summary;
  for (std::size_t a = 0; a < table.group_count(); ++a) {
    for (std::size_t b = a + 1; b < table.group_count(); ++b) {
      PairSwitchResult result = switched_pair_by_index(table, a, b);
      summary.wins_alt1 += result.wins_alt1;
      summary.wins_alt2 += result.wins_alt2;
      summary.ties += result.ties;
      summary.pairs.push_back(std::move(result));
    }
  }
  return summary;
}

PermutationScore permutation_score(const PreferenceTable& table) {
  require_two_alternatives(table, "permutation_score");
  const std::size_t n = table.group_count();
  if (n > 8)
    throw std::invalid_argument(
        "permutation_score: enumeration capped at 8 groups; use the closed "
        "form");

  const std::vector<Rational> rates1 = row_rates(table, 0);
  const std::vector<Rational> rates2 = row_rates(table, 1);

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});

  PermutationScore score;
  do {
    for (std::size_t i = 0; i < n; ++i) {
      const auto cmp = rates2[perm[i]] <=> rates1[i];
      if (cmp > 0)
        ++score.wins_alt2;
      else if (cmp < 0)
        ++score.losses_alt2;
      else
        ++score.ties;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  score.total = score.wins_alt2 + score.ties + score.losses_alt2;
  return score;
}

PermutationScore permutation_score_fast(const PreferenceTable& table) {
  require_two_alternatives(table, "permutation_score_fast");
  const std::size_t n = table.group_count();
  // n * n! must fit the 64-bit tallies
  if (n > 19)
    throw std::overflow_error(
        "permutation_score_fast: tallies exceed 64-bit range beyond 19 "
        "groups");

  const std::vector<Rational> rates1 = row_rates(table, 0);
  const std::vector<Rational> rates2 = row_rates(table, 1);

  std::uint64_t wins = 0;
  std::uint64_t ties = 0;
  std::uint64_t losses = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto cmp = rates2[j] <=> rates1[i];
      if (cmp > 0)
        ++wins;
      else if (cmp < 0)
        ++losses;
      else
        ++ties;
    }
  }

  const std::uint64_t repeats = checked_factorial(n - 1);
  PermutationScore score;
  score.wins_alt2 = wins * repeats;
  score.ties = ties * repeats;
  score.losses_alt2 = losses * repeats;
  score.total = score.wins_alt2 + score.ties + score.losses_alt2;
  return score;
}

}  // namespace simpson
