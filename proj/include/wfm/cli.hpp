#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wfm/check.hpp"

namespace wfm::cli {

/// One line of a report. Matrix identities carry their first differing entry;
/// verdicts that are not identities carry a short detail string instead.
struct Result {
  std::string id;
  Status status = Status::absent;
  std::optional<Witness> witness;
  std::string detail;
  std::optional<RatMatrix> lhs;  // only with --verbose
  std::optional<RatMatrix> rhs;

  friend bool operator==(const Result&, const Result&) = default;
};

struct Group {
  std::string name;
  std::vector<Result> checks;

  friend bool operator==(const Group&, const Group&) = default;
};

struct Report {
  std::string command;
  std::vector<std::string> inputs;
  std::vector<Group> results;
  std::vector<std::string> notes;  // warnings and written files
  int exit_code = 0;

  bool any_failed() const;
  friend bool operator==(const Report&, const Report&) = default;
};

/// Machine form, stable under re-runs.
std::string to_json(const Report& r);
/// Inverse of to_json. Throws ParseError or SchemaError.
Report parse_report(std::string_view text);

/// Runs one command line (without the program name). Human or JSON output
/// goes to out, diagnostics to err.
Report run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wfm::cli
