#pragma once

#include <string>
#include <vector>

#include "octeig/cli/json_io.hpp"

namespace octeig::cli {

enum class Status { pass, fail, discrepancy };
const char* to_string(Status s);

struct Check {
  std::string name;
  Status status = Status::pass;
  std::vector<double> measured;
  std::vector<double> expected;
  double tolerance = 0.0;
  /// Where the expectation comes from: "worked-example", "identity",
  /// "consistency" or "search".
  std::string origin;
  /// Acceptance criterion number, 0 for supplementary checks.
  int criterion = 0;
  std::string note;
};

/// pass iff measured <= tol.
Check upper_bound_check(std::string name, double measured, double tol, std::string origin,
                        int criterion);
/// pass iff measured > bound.
Check lower_bound_check(std::string name, double measured, double bound, std::string origin,
                        int criterion);

class Report {
 public:
  explicit Report(std::string table_convention = {}) : table_convention_(std::move(table_convention)) {}

  void add(Check c) { checks_.push_back(std::move(c)); }
  /// Checks sorted by name.
  std::vector<Check> sorted() const;
  const Check* find(const std::string& name) const;
  bool has_failures() const;
  std::size_t count(Status s) const;
  const std::string& table_convention() const { return table_convention_; }

  Json to_json() const;
  std::string to_text() const;

 private:
  std::string table_convention_;
  std::vector<Check> checks_;
};

}  // namespace octeig::cli
