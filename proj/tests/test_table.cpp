#include "doctest.h"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "fixtures.hpp"
#include "simpson/table.hpp"

using namespace simpson;

TEST_SUITE("table_model") {
  TEST_CASE("cohort invariants enforced at construction") {
    CHECK_THROWS_AS(CohortCount(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(CohortCount(-1, 2), std::invalid_argument);
    CHECK_THROWS_AS(CohortCount(5, 4), std::invalid_argument);
    CHECK(CohortCount(0, 1).successes == 0);
  }

  TEST_CASE("table invariants enforced at construction") {
    CHECK_THROWS_AS(PreferenceTable({"A"}, {"G"}, {{CohortCount(0, 1)}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(PreferenceTable({"A", "A"}, {"G"},
                                    {{CohortCount(0, 1)}, {CohortCount(0, 1)}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        PreferenceTable({"A", "B"}, {"G1", "G2"},
                        {{CohortCount(0, 1)},
                         {CohortCount(0, 1), CohortCount(0, 1)}}),
        std::invalid_argument);
  }

  TEST_CASE("rate") {
    CHECK(rate(CohortCount(3, 4)) == Rational(3, 4));
    CHECK(rate(CohortCount(0, 1)) == Rational(0));
    CHECK(rate(CohortCount(1, 1)) == Rational(1));
  }

  TEST_CASE("pooled_rate") {
    const auto table = fixtures::three_agents();
    CHECK(pooled_rate(table, "Treatment 1") == Rational(6, 10));
    CHECK(pooled_rate(table, "Treatment 2") == Rational(5, 10));
    CHECK(pooled_rate(fixtures::six_agents(), "Treatment 2") ==
          Rational(380, 490));
    CHECK_THROWS_AS(pooled_rate(table, "Treatment 9"), std::out_of_range);

    const PreferenceTable single(
        {"A", "B"}, {"G"}, {{CohortCount(2, 3)}, {CohortCount(1, 3)}});
    CHECK(pooled_rate(single, "A") == rate(single.cell(0, 0)));
  }

  TEST_CASE("rate_sum") {
    const auto table = fixtures::three_agents();
    CHECK(rate_sum(table, "Treatment 1") == Rational(27, 20));
    CHECK(rate_sum(table, "Treatment 2") == Rational(39, 20));
    CHECK_THROWS_AS(rate_sum(table, "nope"), std::out_of_range);

    const PreferenceTable zeros(
        {"A", "B"}, {"G1", "G2"},
        {{CohortCount(0, 3), CohortCount(0, 7)},
         {CohortCount(1, 3), CohortCount(1, 7)}});
    CHECK(rate_sum(zeros, "A") == Rational(0));
  }

  TEST_CASE("column_size_stats") {
    const auto table = fixtures::three_agents();
    const SizeStats agent2 = column_size_stats(table, "Agent 2");
    CHECK(agent2.mean == Rational(5, 2));
    CHECK(agent2.variance == Rational(9, 4));
    CHECK(column_size_stats(table, "Agent 3").variance == Rational(1, 4));
    CHECK_THROWS_AS(column_size_stats(table, "Agent 9"), std::out_of_range);

    // one-column table with three alternatives, sizes 4, 7, 10
    const PreferenceTable closing(
        {"A", "B", "C"}, {"G"},
        {{CohortCount(2, 4)}, {CohortCount(3, 7)}, {CohortCount(4, 10)}});
    const SizeStats stats = column_size_stats(closing, "G");
    CHECK(stats.mean == Rational(7));
    CHECK(stats.variance == Rational(6));

    const PreferenceTable equal(
        {"A", "B"}, {"G"}, {{CohortCount(1, 3)}, {CohortCount(2, 3)}});
    CHECK(column_size_stats(equal, "G").variance == Rational(0));
  }

  TEST_CASE("pooled rate lies between the extreme group rates") {
    std::mt19937_64 rng(20250809);
    for (int trial = 0; trial < 200; ++trial) {
      const auto table = fixtures::random_table(rng, 2 + trial % 3,
                                                1 + trial % 5);
      for (std::size_t a = 0; a < table.alternative_count(); ++a) {
        Rational lo = rate(table.cell(a, 0));
        Rational hi = lo;
        for (std::size_t g = 1; g < table.group_count(); ++g) {
          lo = std::min(lo, rate(table.cell(a, g)));
          hi = std::max(hi, rate(table.cell(a, g)));
        }
        const Rational pooled = pooled_rate(table, a);
        CHECK(pooled >= lo);
        CHECK(pooled <= hi);
      }
    }
  }

  TEST_CASE("weighted and unweighted means can order alternatives differently") {
    const auto table = fixtures::three_agents();
    // unweighted mean of rates prefers Treatment 2
    CHECK(rate_sum(table, "Treatment 1") < rate_sum(table, "Treatment 2"));
    // trial-weighted mean prefers Treatment 1
    CHECK(pooled_rate(table, "Treatment 1") > pooled_rate(table, "Treatment 2"));
  }
}
