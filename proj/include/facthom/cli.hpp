#pragma once

#include "facthom/complex.hpp"
#include "facthom/dsl.hpp"
#include "facthom/report.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace facthom::cli {

enum class Status { ok, check_failed, error };

struct Metadata {
  std::string field;
  int max_deg = 0;
  std::optional<int> max_weight;
  int safe_degree = 0;
  /// Entries above safe_degree may be reported when this is set.
  bool weight_exact = false;

  nlohmann::json to_json() const;
};

struct JobResult {
  std::string request;
  Metadata metadata;
  Status status = Status::ok;
  std::optional<BettiTable> table;
  std::optional<CheckReport> report;
  std::string error;
  std::optional<dsl::Span> span;

  nlohmann::json to_json() const;
  std::string to_text(bool color) const;
};

/// Runs one resolved DSL request.
JobResult execute(const dsl::Request& request);

enum ExitCode { exit_ok = 0, exit_check_failed = 1, exit_usage = 2, exit_dsl_error = 3, exit_error = 4 };

struct Environment {
  bool color = false;
};

/// The whole command line front end; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env = {});

}  // namespace facthom::cli
