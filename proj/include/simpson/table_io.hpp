#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "simpson/rational.hpp"
#include "simpson/table.hpp"

namespace simpson {

// Parse failure with 1-based line and field coordinates (0 when the
// coordinate does not apply, e.g. structural JSON errors).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t field);

  std::size_t line() const { return line_; }
  std::size_t field() const { return field_; }

 private:
  std::size_t line_;
  std::size_t field_;
};

enum class TableFormat { csv, json };

// CSV layout: header "alternative,<group>,..." then one row per alternative
// with "successes/trials" cells.
PreferenceTable parse_csv(std::string_view text);

// JSON layout: { "groups": [...],
//                "alternatives": [ { "name": ...,
//                                    "cells": [ {"successes": s,
//                                                "trials": t}, ... ] } ] }
PreferenceTable parse_json(std::string_view text);

PreferenceTable parse_table(std::string_view text, TableFormat format);

std::string serialize_csv(const PreferenceTable& table);
std::string serialize_json(const PreferenceTable& table);

/// FNV-1a 64 over the canonical CSV serialization, as "fnv1a64:<hex>".
std::string table_digest(const PreferenceTable& table);

/// Accepts "3", "3/4", or decimal text like "0.25"; exact conversion.
Rational parse_rational(std::string_view text);

}  // namespace simpson
