#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "simpson/paradox_lab.hpp"
#include "simpson/report.hpp"
#include "simpson/table_io.hpp"

namespace {

// Exit codes: 0 success, 1 usage, 2 parse/validation, 3 no witness found,
// 4 search cap exceeded.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInvalid = 2,
  kNoWitness = 3,
  kCapExceeded = 4,
};

struct CommonOptions {
  std::string input;
  std::string format = "auto";
  std::string output;
};

void add_table_options(CLI::App& cmd, CommonOptions& opts) {
  cmd.add_option("input", opts.input, "table file")->required();
  cmd.add_option("--format", opts.format, "input format: csv or json")
      ->check(CLI::IsMember({"auto", "csv", "json"}));
  cmd.add_option("--output", opts.output, "write the report here");
}

simpson::PreferenceTable load_table(const CommonOptions& opts) {
  std::ifstream in(opts.input, std::ios::binary);
  if (!in)
    throw simpson::ParseError("cannot open '" + opts.input + "'", 0, 0);
  std::ostringstream buffer;
  buffer << in.rdbuf();

  simpson::TableFormat format = simpson::TableFormat::csv;
  if (opts.format == "json" ||
      (opts.format == "auto" && opts.input.ends_with(".json")))
    format = simpson::TableFormat::json;
  return simpson::parse_table(buffer.str(), format);
}

int emit(const simpson::Json& report, const CommonOptions& opts) {
  const std::string text = simpson::reports::render(report);
  if (opts.output.empty()) {
    std::cout << text;
    return kOk;
  }
  std::ofstream out(opts.output, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write '" << opts.output << "'\n";
    return kInvalid;
  }
  out << text;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Detects Simpson-style preference reversals in grouped trial data,\n"
      "scores alternatives across group permutations, reweights preferences\n"
      "for unequal cohort sizes, searches for adversarial regroupings, and\n"
      "estimates reversal frequency in random tables."};
  app.require_subcommand(1);

  CommonOptions opts;

  auto* detect = app.add_subcommand(
      "detect", "per-group vs pooled winners and the reversal flag");
  add_table_options(*detect, opts);

  auto* rank = app.add_subcommand(
      "rank", "per-group and pooled rankings for any number of alternatives");
  add_table_options(*rank, opts);

  auto* compare = app.add_subcommand(
      "compare", "cross-group comparison of two alternatives");
  add_table_options(*compare, opts);
  std::string mode = "permutations";
  compare->add_option("--mode", mode, "permutations or pairwise")
      ->check(CLI::IsMember({"permutations", "pairwise"}));

  auto* decide = app.add_subcommand("decide", "single-rule decision");
  add_table_options(*decide, opts);
  std::string rule = "pooled";
  decide->add_option("--rule", rule, "pooled, rate-sum, or majority")
      ->check(CLI::IsMember({"pooled", "rate-sum", "majority"}));

  auto* adjust = app.add_subcommand(
      "adjust", "reweight preferences from cohorts smaller than the mean");
  add_table_options(*adjust, opts);
  std::string delta_text = "1/2";
  std::string k_text = "1";
  adjust->add_option("--delta", delta_text, "penalty scale (default 1/2)");
  adjust->add_option("--k", k_text, "weight factor (default 1)");

  auto* mc = app.add_subcommand(
      "mc", "Monte Carlo reversal frequency in random 2x2x2 tables");
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  mc->add_option("--samples", samples, "number of random tables");
  mc->add_option("--seed", seed, "PRNG seed");
  mc->add_option("--workers", workers, "worker threads");
  mc->add_option("--output", opts.output, "write the report here");

  auto* split = app.add_subcommand(
      "split", "search for a regrouping of the pooled totals that reverses "
               "the pooled preference");
  add_table_options(*split, opts);
  int groups = 2;
  std::int64_t min_trials = 1;
  split->add_option("--groups", groups, "number of groups in the split");
  split->add_option("--min-trials", min_trials,
                    "minimum trials per group and alternative");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*detect) return emit(simpson::reports::detect(load_table(opts)), opts);
    if (*rank) return emit(simpson::reports::rank(load_table(opts)), opts);
    if (*compare) {
      const simpson::PreferenceTable table = load_table(opts);
      return emit(mode == "pairwise"
                      ? simpson::reports::compare_pairwise(table)
                      : simpson::reports::compare_permutations(table),
                  opts);
    }
    if (*decide) {
      const simpson::PreferenceTable table = load_table(opts);
      const simpson::DecisionRule r =
          rule == "pooled"     ? simpson::DecisionRule::pooled
          : rule == "rate-sum" ? simpson::DecisionRule::rate_sum
                               : simpson::DecisionRule::majority;
      return emit(simpson::reports::decide(table, r), opts);
    }
    if (*adjust) {
      const simpson::PreferenceTable table = load_table(opts);
      const simpson::AdjustmentPolicy policy(
          simpson::parse_rational(delta_text),
          simpson::parse_rational(k_text));
      return emit(simpson::reports::adjust(table, policy), opts);
    }
    if (*mc) {
      const simpson::ParadoxEstimate estimate =
          simpson::estimate_paradox_probability(samples, seed, workers);
      return emit(simpson::reports::monte_carlo(estimate, workers), opts);
    }
    if (*split) {
      const simpson::PreferenceTable table = load_table(opts);
      if (table.alternative_count() != 2)
        throw std::invalid_argument(
            "split: exactly two alternatives required");
      std::int64_t s1 = 0, t1 = 0, s2 = 0, t2 = 0;
      for (std::size_t g = 0; g < table.group_count(); ++g) {
        s1 += table.cell(0, g).successes;
        t1 += table.cell(0, g).trials;
        s2 += table.cell(1, g).successes;
        t2 += table.cell(1, g).trials;
      }
      const std::optional<simpson::SplitWitness> witness =
          simpson::find_reversing_split(simpson::CohortCount(s1, t1),
                                        simpson::CohortCount(s2, t2), groups,
                                        min_trials);
      const int rc =
          emit(simpson::reports::split(table, groups, min_trials, witness),
               opts);
      return rc != kOk ? rc : witness ? kOk : kNoWitness;
    }
  } catch (const simpson::SearchCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const simpson::ParseError& e) {
    std::cerr << "error";
    if (e.line() > 0) {
      std::cerr << " (line " << e.line();
      if (e.field() > 0) std::cerr << ", field " << e.field();
      std::cerr << ")";
    }
    std::cerr << ": " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kUsage;
}
