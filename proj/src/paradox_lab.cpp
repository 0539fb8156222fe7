#include "simpson/paradox_lab.hpp"

#include <cmath>
#include <thread>

#include "simpson/decision.hpp"

namespace simpson {

bool is_paradox_point(const std::array<double, kParadoxCells>& cells) {
  for (const double c : cells)
    if (!(c >= 0.0))
      throw std::invalid_argument(
          "is_paradox_point: cell masses must be nonnegative");

  // s[t][g] success mass, m[t][g] total mass for (alternative t, group g)
  double s[2][2];
  double m[2][2];
  for (int t = 0; t < 2; ++t) {
    for (int g = 0; g < 2; ++g) {
      s[t][g] = cells[std::size_t(t * 4 + g)];
      m[t][g] = s[t][g] + cells[std::size_t(t * 4 + 2 + g)];
      if (m[t][g] == 0.0) return false;  // undefined rate: not a hit
    }
  }

  // Cross-multiplied comparisons keep integer-valued masses exact.
  const auto favors = [&](int t, int g) {
    const int o = 1 - t;
    return s[t][g] * m[o][g] > s[o][g] * m[t][g];
  };
  const double S0 = s[0][0] + s[0][1];
  const double S1 = s[1][0] + s[1][1];
  const double M0 = m[0][0] + m[0][1];
  const double M1 = m[1][0] + m[1][1];
  const bool pooled0 = S0 * M1 > S1 * M0;
  const bool pooled1 = S1 * M0 > S0 * M1;

  return (favors(0, 0) && favors(0, 1) && pooled1) ||
         (favors(1, 0) && favors(1, 1) && pooled0);
}

std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t counter) {
  std::uint64_t z = seed + (counter + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::array<double, kParadoxCells> sample_cells(std::uint64_t seed,
                                               std::uint64_t index) {
  std::array<double, kParadoxCells> cells;
  for (std::size_t j = 0; j < kParadoxCells; ++j) {
    const std::uint64_t bits = splitmix64_at(seed, index * kParadoxCells + j);
    const double u = double(bits >> 11) * 0x1.0p-53;
    cells[j] = -std::log1p(-u);
  }
  return cells;
}

ParadoxEstimate estimate_paradox_probability(std::uint64_t samples,
                                             std::uint64_t seed,
                                             unsigned workers) {
  if (samples == 0)
    throw std::invalid_argument("estimate: samples must be at least 1");
  if (workers == 0) workers = 1;
  if (std::uint64_t(workers) > samples)
    workers = static_cast<unsigned>(samples);

  const auto count_range = [seed](std::uint64_t begin, std::uint64_t end) {
    std::uint64_t hits = 0;
    for (std::uint64_t i = begin; i < end; ++i)
      if (is_paradox_point(sample_cells(seed, i))) ++hits;
    return hits;
  };

  std::uint64_t hits = 0;
  if (workers == 1) {
    hits = count_range(0, samples);
  } else {
    std::vector<std::uint64_t> partial(workers, 0);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    const std::uint64_t chunk = samples / workers;
    const std::uint64_t rest = samples % workers;
    std::uint64_t begin = 0;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t end = begin + chunk + (w < rest ? 1 : 0);
      threads.emplace_back([&, w, begin, end] {
        partial[w] = count_range(begin, end);
      });
      begin = end;
    }
    for (auto& t : threads) t.join();
    for (const std::uint64_t p : partial) hits += p;
  }

  ParadoxEstimate estimate;
  estimate.samples = samples;
  estimate.hits = hits;
  estimate.seed = seed;
  estimate.estimate = double(hits) / double(samples);
  estimate.std_error =
      std::sqrt(estimate.estimate * (1.0 - estimate.estimate) /
                double(samples));
  return estimate;
}

namespace {

constexpr std::uint64_t kSearchCap = 100'000'000;

struct SearchState {
  std::int64_t min_trials;
  int k;
  bool loser_is_alt2;  // which alternative must win every group
  std::uint64_t candidates = 0;
  std::vector<SplitGroup> groups;
};

// Strict preference for the pooled loser within one group.
bool group_prefers_loser(const SearchState& state, std::int64_t s,
                         std::int64_t t, std::int64_t p, std::int64_t h) {
  // rates s/t (alt1) vs p/h (alt2); counts are small, no overflow concern
  return state.loser_is_alt2 ? p * t > s * h : s * h > p * t;
}

// Depth-first enumeration in witness order: within each group alt1
// successes, alt1 trials, alt2 successes, alt2 trials, all ascending.
// Prefixes are visited in lexicographic order, so the first complete
// assignment is the lexicographic minimum.
bool search(SearchState& state, int depth, std::int64_t rem_s1,
            std::int64_t rem_t1, std::int64_t rem_s2, std::int64_t rem_t2) {
  const int left = state.k - depth;  // groups still to fill, including this one

  if (left == 1) {  // the last group is forced by the remaining totals
    if (rem_t1 < std::max(state.min_trials, rem_s1)) return false;
    if (rem_t2 < std::max(state.min_trials, rem_s2)) return false;
    if (++state.candidates > kSearchCap) throw SearchCapExceeded();
    if (!group_prefers_loser(state, rem_s1, rem_t1, rem_s2, rem_t2))
      return false;
    state.groups.emplace_back(SplitGroup{CohortCount(rem_s1, rem_t1),
                                         CohortCount(rem_s2, rem_t2)});
    return true;
  }

  // Leave (left - 1) * min_trials trials for the later groups and enough
  // trial capacity to hold the remaining successes.
  const std::int64_t t1_cap = rem_t1 - (left - 1) * state.min_trials;
  const std::int64_t t2_cap = rem_t2 - (left - 1) * state.min_trials;
  for (std::int64_t s = 0; s <= std::min(rem_s1, t1_cap); ++s) {
    const std::int64_t t_hi = std::min(t1_cap, rem_t1 - (rem_s1 - s));
    for (std::int64_t t = std::max(state.min_trials, s); t <= t_hi; ++t) {
      for (std::int64_t p = 0; p <= std::min(rem_s2, t2_cap); ++p) {
        const std::int64_t h_hi = std::min(t2_cap, rem_t2 - (rem_s2 - p));
        for (std::int64_t h = std::max(state.min_trials, p); h <= h_hi; ++h) {
          if (++state.candidates > kSearchCap) throw SearchCapExceeded();
          if (!group_prefers_loser(state, s, t, p, h)) continue;
          state.groups.emplace_back(SplitGroup{CohortCount(s, t),
                                               CohortCount(p, h)});
          if (search(state, depth + 1, rem_s1 - s, rem_t1 - t, rem_s2 - p,
                     rem_t2 - h))
            return true;
          state.groups.pop_back();
        }
      }
    }
  }
  return false;
}

}  // namespace

std::optional<SplitWitness> find_reversing_split(const CohortCount& totals_alt1,
                                                 const CohortCount& totals_alt2,
                                                 int k,
                                                 std::int64_t min_trials) {
  if (k < 1) throw std::invalid_argument("split search: k must be at least 1");
  if (min_trials < 1)
    throw std::invalid_argument("split search: min_trials must be at least 1");
  const auto pooled_cmp = rate(totals_alt1) <=> rate(totals_alt2);
  if (pooled_cmp == 0)
    throw std::invalid_argument(
        "split search: pooled rates must be strictly ordered");
  if (k == 1) return std::nullopt;  // one group cannot reverse its own pooling
  if (k * min_trials > totals_alt1.trials ||
      k * min_trials > totals_alt2.trials)
    throw std::invalid_argument(
        "split search: totals cannot fill every group with min_trials");

  SearchState state;
  state.min_trials = min_trials;
  state.k = k;
  state.loser_is_alt2 = pooled_cmp > 0;

  if (!search(state, 0, totals_alt1.successes, totals_alt1.trials,
              totals_alt2.successes, totals_alt2.trials))
    return std::nullopt;

  SplitWitness witness{std::move(state.groups)};

  // Self-verification through the reversal detector is mandatory.
  std::vector<std::string> group_labels;
  std::vector<CohortCount> row1;
  std::vector<CohortCount> row2;
  for (std::size_t g = 0; g < witness.groups.size(); ++g) {
    group_labels.push_back("G" + std::to_string(g + 1));
    row1.push_back(witness.groups[g].alt1);
    row2.push_back(witness.groups[g].alt2);
  }
  const PreferenceTable check({"alt1", "alt2"}, std::move(group_labels),
                              {std::move(row1), std::move(row2)});
  if (!detect_reversal(check).reversed)
    throw std::logic_error("split search: witness failed self-verification");
  return witness;
}

}  // namespace simpson
