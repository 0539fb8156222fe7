#include "simpson/table.hpp"

#include <stdexcept>
#include <unordered_set>

namespace simpson {

CohortCount::CohortCount(std::int64_t successes, std::int64_t trials)
    : successes(successes), trials(trials) {
  if (trials < 1)
    throw std::invalid_argument("cohort: trials must be at least 1");
  if (successes < 0)
    throw std::invalid_argument("cohort: successes must be nonnegative");
  if (successes > trials)
    throw std::invalid_argument("cohort: successes exceed trials");
}

Rational rate(const CohortCount& cell) {
  return Rational(cell.successes, cell.trials);
}

namespace {

void require_unique(const std::vector<std::string>& labels, const char* axis) {
  std::unordered_set<std::string_view> seen;
  for (const auto& label : labels) {
    if (label.empty())
      throw std::invalid_argument(std::string("table: empty ") + axis +
                                  " label");
    if (!seen.insert(label).second)
      throw std::invalid_argument(std::string("table: duplicate ") + axis +
                                  " label '" + label + "'");
  }
}

}  // namespace

PreferenceTable::PreferenceTable(std::vector<std::string> alternatives,
                                 std::vector<std::string> groups,
                                 std::vector<std::vector<CohortCount>> cells)
    : alternatives_(std::move(alternatives)),
      groups_(std::move(groups)),
      cells_(std::move(cells)) {
  if (alternatives_.size() < 2)
    throw std::invalid_argument("table: need at least two alternatives");
  if (groups_.empty())
    throw std::invalid_argument("table: need at least one group");
  require_unique(alternatives_, "alternative");
  require_unique(groups_, "group");
  if (cells_.size() != alternatives_.size())
    throw std::invalid_argument("table: one row per alternative required");
  for (const auto& row : cells_)
    if (row.size() != groups_.size())
      throw std::invalid_argument("table: ragged row");
}

const CohortCount& PreferenceTable::cell(std::size_t alternative,
                                         std::size_t group) const {
  return cells_.at(alternative).at(group);
}

std::size_t PreferenceTable::alternative_index(std::string_view label) const {
  for (std::size_t i = 0; i < alternatives_.size(); ++i)
    if (alternatives_[i] == label) return i;
  throw std::out_of_range("table: unknown alternative '" + std::string(label) +
                          "'");
}

std::size_t PreferenceTable::group_index(std::string_view label) const {
  for (std::size_t i = 0; i < groups_.size(); ++i)
    if (groups_[i] == label) return i;
  throw std::out_of_range("table: unknown group '" + std::string(label) + "'");
}

Rational pooled_rate(const PreferenceTable& table, std::size_t alternative) {
  std::int64_t successes = 0;
  std::int64_t trials = 0;
  for (std::size_t g = 0; g < table.group_count(); ++g) {
    const CohortCount& c = table.cell(alternative, g);
    successes += c.successes;
    trials += c.trials;
  }
  return Rational(successes, trials);
}

Rational pooled_rate(const PreferenceTable& table,
                     std::string_view alternative) {
  return pooled_rate(table, table.alternative_index(alternative));
}

Rational rate_sum(const PreferenceTable& table, std::size_t alternative) {
  Rational sum;
  for (std::size_t g = 0; g < table.group_count(); ++g)
    sum += rate(table.cell(alternative, g));
  return sum;
}

Rational rate_sum(const PreferenceTable& table, std::string_view alternative) {
  return rate_sum(table, table.alternative_index(alternative));
}

SizeStats column_size_stats(const PreferenceTable& table, std::size_t group) {
  const std::int64_t m = static_cast<std::int64_t>(table.alternative_count());
  std::int64_t total = 0;
  for (std::size_t a = 0; a < table.alternative_count(); ++a)
    total += table.cell(a, group).trials;
  const Rational mean(total, m);

  Rational squares;
  for (std::size_t a = 0; a < table.alternative_count(); ++a) {
    const Rational dev = Rational(table.cell(a, group).trials) - mean;
    squares += dev * dev;
  }
  return SizeStats{mean, squares / Rational(m)};
}

SizeStats column_size_stats(const PreferenceTable& table,
                            std::string_view group) {
  return column_size_stats(table, table.group_index(group));
}

}  // namespace simpson
