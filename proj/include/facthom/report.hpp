#pragma once

#include "facthom/complex.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace facthom {

/// One compared quantity of a check: two tables that should agree.
struct CheckRow {
  std::string label;
  BettiTable expected;
  BettiTable actual;
  bool pass = true;
  std::string note;
};

struct CheckReport {
  std::string name;
  std::vector<CheckRow> rows;

  bool pass() const;
  /// Appends a row comparing the two tables for equality.
  void compare(std::string label, BettiTable expected, BettiTable actual, std::string note = {});
  /// Appends a row whose verdict was decided elsewhere.
  void record(std::string label, bool ok, std::string note);

  nlohmann::json to_json() const;
  std::string to_text(bool color = false) const;
};

/// Entries present in exactly one of the tables, or with different dimensions.
std::string describe_difference(const BettiTable& expected, const BettiTable& actual);

}  // namespace facthom
