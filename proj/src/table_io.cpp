#include "simpson/table_io.hpp"

#include <charconv>
#include <cstdint>
#include <cstdio>

#include "json.hpp"

namespace simpson {

ParseError::ParseError(const std::string& message, std::size_t line,
                       std::size_t field)
    : std::runtime_error(message), line_(line), field_(field) {}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(trim(line.substr(start)));
      return fields;
    }
    fields.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
}

std::int64_t parse_count(std::string_view text, const char* what,
                         std::size_t line, std::size_t field) {
  std::int64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw ParseError(std::string("malformed ") + what + " '" +
                         std::string(text) + "'",
                     line, field);
  return value;
}

CohortCount parse_cell(std::string_view text, std::size_t line,
                       std::size_t field) {
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos || text.find('/', slash + 1) !=
                                             std::string_view::npos)
    throw ParseError("malformed cell '" + std::string(text) +
                         "': expected successes/trials",
                     line, field);
  const std::int64_t successes =
      parse_count(trim(text.substr(0, slash)), "successes", line, field);
  const std::int64_t trials =
      parse_count(trim(text.substr(slash + 1)), "trials", line, field);
  if (trials < 1)
    throw ParseError("trials must be positive", line, field);
  if (successes < 0)
    throw ParseError("successes must be nonnegative", line, field);
  if (successes > trials)
    throw ParseError("successes exceed trials", line, field);
  return CohortCount(successes, trials);
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
  return lines;
}

}  // namespace

PreferenceTable parse_csv(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError("empty input", 1, 0);

  const auto header = split_fields(lines[0]);
  if (header[0] != "alternative")
    throw ParseError("header must start with 'alternative'", 1, 1);
  if (header.size() < 2)
    throw ParseError("header names no groups", 1, 1);

  std::vector<std::string> groups;
  for (std::size_t f = 1; f < header.size(); ++f) {
    if (header[f].empty())
      throw ParseError("empty group label", 1, f + 1);
    groups.emplace_back(header[f]);
  }

  std::vector<std::string> alternatives;
  std::vector<std::vector<CohortCount>> cells;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const auto fields = split_fields(lines[i]);
    if (fields.size() != header.size())
      throw ParseError("row has " + std::to_string(fields.size()) +
                           " fields, expected " +
                           std::to_string(header.size()),
                       line_no, 0);
    if (fields[0].empty())
      throw ParseError("empty alternative label", line_no, 1);
    alternatives.emplace_back(fields[0]);
    std::vector<CohortCount> row;
    row.reserve(groups.size());
    for (std::size_t f = 1; f < fields.size(); ++f)
      row.push_back(parse_cell(fields[f], line_no, f + 1));
    cells.push_back(std::move(row));
  }

  try {
    return PreferenceTable(std::move(alternatives), std::move(groups),
                           std::move(cells));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0, 0);
  }
}

PreferenceTable parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what(), 0, 0);
  }

  try {
    std::vector<std::string> groups =
        doc.at("groups").get<std::vector<std::string>>();
    std::vector<std::string> alternatives;
    std::vector<std::vector<CohortCount>> cells;
    for (const auto& alt : doc.at("alternatives")) {
      alternatives.push_back(alt.at("name").get<std::string>());
      std::vector<CohortCount> row;
      for (const auto& cell : alt.at("cells")) {
        const auto successes = cell.at("successes").get<std::int64_t>();
        const auto trials = cell.at("trials").get<std::int64_t>();
        if (trials < 1)
          throw ParseError("trials must be positive", alternatives.size(),
                           row.size() + 1);
        if (successes < 0)
          throw ParseError("successes must be nonnegative",
                           alternatives.size(), row.size() + 1);
        if (successes > trials)
          throw ParseError("successes exceed trials", alternatives.size(),
                           row.size() + 1);
        row.push_back(CohortCount(successes, trials));
      }
      cells.push_back(std::move(row));
    }
    return PreferenceTable(std::move(alternatives), std::move(groups),
                           std::move(cells));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what(), 0, 0);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0, 0);
  }
}

PreferenceTable parse_table(std::string_view text, TableFormat format) {
  return format == TableFormat::csv ? parse_csv(text) : parse_json(text);
}

std::string serialize_csv(const PreferenceTable& table) {
  std::string out = "alternative";
  for (const auto& g : table.groups()) {
    out += ',';
    out += g;
  }
  out += '\n';
  for (std::size_t a = 0; a < table.alternative_count(); ++a) {
    out += table.alternatives()[a];
    for (std::size_t g = 0; g < table.group_count(); ++g) {
      const CohortCount& c = table.cell(a, g);
      out += ',';
      out += std::to_string(c.successes);
      out += '/';
      out += std::to_string(c.trials);
    }
    out += '\n';
  }
  return out;
}

std::string serialize_json(const PreferenceTable& table) {
  nlohmann::ordered_json doc;
  doc["groups"] = table.groups();
  doc["alternatives"] = nlohmann::ordered_json::array();
  for (std::size_t a = 0; a < table.alternative_count(); ++a) {
    nlohmann::ordered_json alt;
    alt["name"] = table.alternatives()[a];
    alt["cells"] = nlohmann::ordered_json::array();
    for (std::size_t g = 0; g < table.group_count(); ++g) {
      const CohortCount& c = table.cell(a, g);
      alt["cells"].push_back({{"successes", c.successes},
                              {"trials", c.trials}});
    }
    doc["alternatives"].push_back(std::move(alt));
  }
  return doc.dump(2) + "\n";
}

std::string table_digest(const PreferenceTable& table) {
  const std::string canonical = serialize_csv(table);
  std::uint64_t hash = 0xCBF29CE484222325ULL;
  for (const unsigned char byte : canonical) {
    hash ^= byte;
    hash *= 0x100000001B3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(hash));
  return std::string("fnv1a64:") + buf;
}

Rational parse_rational(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty rational text");

  const std::size_t slash = text.find('/');
  if (slash != std::string_view::npos) {
    const std::int64_t num = parse_count(trim(text.substr(0, slash)),
                                         "numerator", 0, 0);
    const std::int64_t den = parse_count(trim(text.substr(slash + 1)),
                                         "denominator", 0, 0);
    return Rational(num, den);
  }

  const std::size_t dot = text.find('.');
  if (dot == std::string_view::npos)
    return Rational(parse_count(text, "integer", 0, 0));

  std::string digits(text.substr(0, dot));
  const std::string_view frac = text.substr(dot + 1);
  digits += frac;
  std::int64_t den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) {
    if (den > INT64_MAX / 10)
      throw std::invalid_argument("rational text has too many decimals");
    den *= 10;
  }
  return Rational(parse_count(digits, "decimal", 0, 0), den);
}

}  // namespace simpson
