#include "facthom/report.hpp"

#include <sstream>

namespace facthom {

namespace {

std::string key_text(const BettiKey& k) {
  std::string s = "(" + std::to_string(k.degree);
  if (k.weight) s += "," + std::to_string(*k.weight);
  return s + ")";
}

}  // namespace

std::string describe_difference(const BettiTable& expected, const BettiTable& actual) {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const BettiKey& k, std::size_t e, std::size_t a) {
    if (!first) os << ", ";
    first = false;
    os << key_text(k) << ": expected " << e << ", got " << a;
  };
  for (const auto& [k, d] : expected.entries())
    if (actual.at(k) != d) emit(k, d, actual.at(k));
  for (const auto& [k, d] : actual.entries())
    if (expected.at(k) == 0) emit(k, 0, d);
  return os.str();
}

bool CheckReport::pass() const {
  for (const auto& r : rows)
    if (!r.pass) return false;
  return true;
}

void CheckReport::compare(std::string label, BettiTable expected, BettiTable actual, std::string note) {
  CheckRow row{std::move(label), std::move(expected), std::move(actual), true, std::move(note)};
  row.pass = row.expected == row.actual;
  if (!row.pass) {
    std::string diff = describe_difference(row.expected, row.actual);
    row.note = row.note.empty() ? diff : row.note + "; " + diff;
  }
  rows.push_back(std::move(row));
}

void CheckReport::record(std::string label, bool ok, std::string note) {
  rows.push_back(CheckRow{std::move(label), {}, {}, ok, std::move(note)});
}

nlohmann::json CheckReport::to_json() const {
  nlohmann::json j;
  j["check"] = name;
  j["pass"] = pass();
  j["rows"] = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json row;
    row["label"] = r.label;
    row["pass"] = r.pass;
    row["expected"] = r.expected.to_json()["betti"];
    row["actual"] = r.actual.to_json()["betti"];
    if (!r.note.empty()) row["note"] = r.note;
    j["rows"].push_back(std::move(row));
  }
  return j;
}

std::string CheckReport::to_text(bool color) const {
  const char* green = color ? "\033[32m" : "";
  const char* red = color ? "\033[31m" : "";
  const char* reset = color ? "\033[0m" : "";
  std::ostringstream os;
  os << name << ": " << (pass() ? green : red) << (pass() ? "pass" : "FAIL") << reset << '\n';
  for (const auto& r : rows) {
    os << "  " << (r.pass ? green : red) << (r.pass ? "ok  " : "FAIL") << reset << "  " << r.label;
    if (!r.note.empty()) os << "  [" << r.note << "]";
    os << '\n';
  }
  return os.str();
}

}  // namespace facthom
