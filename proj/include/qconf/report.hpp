#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace qconf {

enum class Status { Pass, Fail, RecordedDiscrepancy, OutOfScope };

std::string to_string(Status s);

struct Check {
  std::string id;           ///< stable claim anchor, e.g. "sl4.serre.e3_e4"
  std::string description;
  Status status = Status::Pass;
  std::string witness;      ///< offending component or u-order; empty on pass
};

/// Pass when ok, otherwise `on_fail` with the witness attached.
Check make_check(std::string id, std::string description, bool ok, std::string witness = {},
                 Status on_fail = Status::Fail);

struct VerificationReport {
  std::string suite;
  std::vector<Check> checks;
  /// Wall time per check group; rendered only in the metadata block.
  std::vector<std::pair<std::string, double>> timings;

  void add(Check c) { checks.push_back(std::move(c)); }
  void add_all(std::vector<Check> cs);
  std::size_t count(Status s) const;
  bool failed() const { return count(Status::Fail) > 0; }
  const Check* find(const std::string& id) const;
};

using CheckGroup = std::pair<std::string, std::function<std::vector<Check>()>>;

/// Runs the groups concurrently and appends their checks in group order.
void run_groups(VerificationReport& report, const std::vector<CheckGroup>& groups);

inline constexpr const char* kReportSchema = "qconf-report/1";

/// Deterministic JSON: the checks array depends only on inputs; timing goes in
/// "metadata" and is omitted when `with_timing` is false.
std::string to_json(const VerificationReport& r, bool with_timing = true);
std::string to_text(const VerificationReport& r);

}  // namespace qconf
