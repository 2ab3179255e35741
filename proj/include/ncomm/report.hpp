#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "ncomm/integers.hpp"
#include "ncomm/lattice.hpp"
#include "ncomm/ring.hpp"

namespace ncomm {

using json = nlohmann::ordered_json;

struct Assertion {
  std::string description;
  bool ok = true;
  std::string expected;
  std::string got;
};

enum class Status { pass, fail, skipped };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    default: return "skipped";
  }
}

/// Outcome of one named scenario. Failed scenarios always carry at least one
/// witness; notes record engine-computed values that are reported without
/// being asserted.
struct ScenarioResult {
  std::string name;
  Status status = Status::pass;
  std::string skip_reason;
  std::vector<Assertion> assertions;
  std::vector<std::string> witnesses;
  std::vector<std::string> notes;
  double elapsed_ms = 0.0;

  std::size_t failures() const {
    std::size_t n = 0;
    for (const Assertion& a : assertions)
      if (!a.ok) ++n;
    return n;
  }
};

/// Scenario helper: collects assertions, promotes the status, renders
/// subgroups and elements into printable witnesses.
class ScenarioBuilder {
public:
  explicit ScenarioBuilder(std::string name) { result_.name = std::move(name); }

  void require(const std::string& description, bool ok, const std::string& expected = "true",
               const std::string& got = "") {
    Assertion a{description, ok, expected, ok ? expected : (got.empty() ? "false" : got)};
    if (!ok) {
      result_.status = Status::fail;
      if (!got.empty()) witness(description + ": " + got);
    }
    result_.assertions.push_back(std::move(a));
  }

  void require_equal(const std::string& description, const Subgroup& a, const Subgroup& b) {
    bool ok = a == b;
    require(description, ok, describe(a), describe(b));
    if (!ok) {
      witness(description + ": lhs " + describe_rows(a));
      witness(description + ": rhs " + describe_rows(b));
    }
  }

  void witness(std::string w) { result_.witnesses.push_back(std::move(w)); }
  void note(std::string n) { result_.notes.push_back(std::move(n)); }

  void skip(std::string reason) {
    result_.status = Status::skipped;
    result_.skip_reason = std::move(reason);
  }

  static std::string describe(const Subgroup& s) {
    return "subgroup of rank " + std::to_string(s.rank());
  }

  static std::string describe_rows(const Subgroup& s) {
    std::string out = "rank " + std::to_string(s.rank()) + " {";
    for (std::size_t i = 0; i < s.rows().size(); ++i)
      out += (i ? "; " : "") + format_element(s.ring(), s.rows()[i]);
    return out + "}";
  }

  ScenarioResult finish() { return std::move(result_); }

private:
  ScenarioResult result_;
};

struct Report {
  std::uint64_t seed = 0;
  std::vector<ScenarioResult> scenarios;

  bool all_passed() const {
    for (const ScenarioResult& s : scenarios)
      if (s.status == Status::fail) return false;
    return true;
  }
};

/// Machine-readable report. Timing is opt-in so that reruns with the same
/// seed stay byte-identical.
inline json report_to_json(const Report& report, bool with_timings = false) {
  json j;
  j["format"] = 1;
  j["seed"] = report.seed;
  json scenarios = json::array();
  std::size_t passed = 0, failed = 0, skipped = 0;
  for (const ScenarioResult& s : report.scenarios) {
    json js;
    js["name"] = s.name;
    js["status"] = to_string(s.status);
    if (s.status == Status::skipped) js["skip_reason"] = s.skip_reason;
    js["assertions"] = s.assertions.size();
    js["failures"] = s.failures();
    if (with_timings) js["elapsed_ms"] = s.elapsed_ms;
    if (!s.witnesses.empty()) js["witnesses"] = s.witnesses;
    if (!s.notes.empty()) js["notes"] = s.notes;
    json failed_assertions = json::array();
    for (const Assertion& a : s.assertions) {
      if (a.ok) continue;
      failed_assertions.push_back(
          {{"description", a.description}, {"expected", a.expected}, {"got", a.got}});
    }
    if (!failed_assertions.empty()) js["failed_assertions"] = failed_assertions;
    scenarios.push_back(std::move(js));
    if (s.status == Status::pass) ++passed;
    else if (s.status == Status::fail) ++failed;
    else ++skipped;
  }
  j["scenarios"] = std::move(scenarios);
  j["summary"] = {{"total", report.scenarios.size()},
                  {"passed", passed},
                  {"failed", failed},
                  {"skipped", skipped}};
  return j;
}

/// Human-readable summary table, one line per scenario. Timing is opt-in so
/// that identical invocations print identical bytes.
inline std::string report_to_table(const Report& report, bool with_timings = false) {
  std::string out;
  std::size_t width = 4;
  for (const ScenarioResult& s : report.scenarios) width = std::max(width, s.name.size());
  for (const ScenarioResult& s : report.scenarios) {
    std::string line = s.name;
    line.resize(width + 2, ' ');
    line += to_string(s.status);
    if (s.status == Status::skipped) {
      line += " (" + s.skip_reason + ")";
    } else {
      line += "  " + std::to_string(s.assertions.size()) + " assertions";
      if (s.failures() > 0) line += ", " + std::to_string(s.failures()) + " failed";
      if (with_timings)
        line += ", " + std::to_string(static_cast<long long>(s.elapsed_ms)) + " ms";
    }
    out += line + "\n";
  }
  std::size_t passed = 0, failed = 0, skipped = 0;
  for (const ScenarioResult& s : report.scenarios) {
    if (s.status == Status::pass) ++passed;
    else if (s.status == Status::fail) ++failed;
    else ++skipped;
  }
  out += std::to_string(report.scenarios.size()) + " scenarios: " + std::to_string(passed) +
         " passed, " + std::to_string(failed) + " failed, " + std::to_string(skipped) +
         " skipped\n";
  return out;
}

}  // namespace ncomm
