#include "qconf/report.hpp"

#include <json.hpp>

#include <chrono>
#include <future>
#include <sstream>

namespace qconf {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::RecordedDiscrepancy: return "recorded-discrepancy";
    case Status::OutOfScope: return "out-of-scope";
  }
  return "fail";
}

Check make_check(std::string id, std::string description, bool ok, std::string witness, Status on_fail) {
  Check c{std::move(id), std::move(description), ok ? Status::Pass : on_fail, {}};
  if (!ok) c.witness = std::move(witness);
  return c;
}

void VerificationReport::add_all(std::vector<Check> cs) {
  for (auto& c : cs) checks.push_back(std::move(c));
}

std::size_t VerificationReport::count(Status s) const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.status == s;
  return n;
}

const Check* VerificationReport::find(const std::string& id) const {
  for (const auto& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

void run_groups(VerificationReport& report, const std::vector<CheckGroup>& groups) {
  using clock = std::chrono::steady_clock;
  struct Outcome {
    std::vector<Check> checks;
    double seconds;
  };
  std::vector<std::future<Outcome>> pending;
  for (const auto& [name, fn] : groups)
    pending.push_back(std::async(std::launch::async, [&fn] {
      const auto t0 = clock::now();
      auto checks = fn();
      return Outcome{std::move(checks), std::chrono::duration<double>(clock::now() - t0).count()};
    }));
  for (std::size_t k = 0; k < groups.size(); ++k) {
    auto out = pending[k].get();
    report.add_all(std::move(out.checks));
    report.timings.emplace_back(groups[k].first, out.seconds);
  }
}

std::string to_json(const VerificationReport& r, bool with_timing) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["schema"] = kReportSchema;
  j["suite"] = r.suite;
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json e;
    e["id"] = c.id;
    e["description"] = c.description;
    e["status"] = to_string(c.status);
    e["witness"] = c.witness;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  j["summary"] = {{"pass", r.count(Status::Pass)},
                  {"fail", r.count(Status::Fail)},
                  {"recorded-discrepancy", r.count(Status::RecordedDiscrepancy)},
                  {"out-of-scope", r.count(Status::OutOfScope)}};
  if (with_timing) {
    ordered_json t = ordered_json::object();
    for (const auto& [name, secs] : r.timings) t[name] = secs;
    j["metadata"] = {{"wall_seconds", std::move(t)}};
  }
  return j.dump(2) + "\n";
}

std::string to_text(const VerificationReport& r) {
  std::ostringstream os;
  os << "suite " << r.suite << "\n";
  for (const auto& c : r.checks) {
    os << "  [" << to_string(c.status) << "] " << c.id << ": " << c.description << "\n";
    if (!c.witness.empty()) os << "      witness: " << c.witness << "\n";
  }
  os << "pass " << r.count(Status::Pass) << ", fail " << r.count(Status::Fail) << ", recorded-discrepancy "
     << r.count(Status::RecordedDiscrepancy) << ", out-of-scope " << r.count(Status::OutOfScope) << "\n";
  return os.str();
}

}  // namespace qconf
