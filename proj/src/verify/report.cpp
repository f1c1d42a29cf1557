#include "dmx/verify/report.hpp"

#include <algorithm>
#include <cstdio>

#include <json.hpp>

namespace dmx::verify {

bool VerificationReport::passed() const {
  if (expectation == Expectation::witness_required) return witness_found && unexpected == 0;
  return counterexamples.empty();
}

VerificationReport merge(VerificationReport a, const VerificationReport& b) {
  if (a.name.empty()) a.name = b.name;
  a.tested += b.tested;
  a.witness_found = a.witness_found || b.witness_found;
  a.unexpected += b.unexpected;
  a.seconds += b.seconds;
  a.counterexamples.insert(a.counterexamples.end(), b.counterexamples.begin(), b.counterexamples.end());
  std::stable_sort(a.counterexamples.begin(), a.counterexamples.end(),
                   [](const Counterexample& x, const Counterexample& y) {
                     return x.instance != y.instance ? x.instance < y.instance : x.details < y.details;
                   });
  return a;
}

std::string format_text(const std::vector<VerificationReport>& reports, std::size_t max_details) {
  std::string out;
  for (const auto& r : reports) {
    out += "check " + r.name + ": " + (r.passed() ? "pass" : "FAIL");
    out += " (tested " + std::to_string(r.tested);
    if (r.expectation == Expectation::witness_required) {
      out += ", findings " + std::to_string(r.counterexamples.size());
      out += r.witness_found ? ", documented witness found" : ", documented witness MISSING";
      if (r.unexpected != 0) out += ", unexpected " + std::to_string(r.unexpected);
    } else {
      out += ", counterexamples " + std::to_string(r.counterexamples.size());
    }
    out += ")\n";
    const std::size_t shown = std::min(max_details, r.counterexamples.size());
    for (std::size_t i = 0; i < shown; ++i) {
      out += "  #" + std::to_string(r.counterexamples[i].instance) + " " + r.counterexamples[i].details + "\n";
    }
    if (shown < r.counterexamples.size()) {
      out += "  ... " + std::to_string(r.counterexamples.size() - shown) + " more\n";
    }
  }
  std::size_t failed = 0;
  for (const auto& r : reports) failed += r.passed() ? 0 : 1;
  out += "summary: " + std::to_string(reports.size() - failed) + " passed, " + std::to_string(failed) + " failed\n";
  return out;
}

std::string format_records(const std::vector<VerificationReport>& reports) {
  std::string out;
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["name"] = r.name;
    j["tested"] = r.tested;
    j["failed"] = r.expectation == Expectation::witness_required ? r.unexpected : r.counterexamples.size();
    j["verdict"] = r.passed() ? "pass" : "fail";
    char seconds[32];
    std::snprintf(seconds, sizeof seconds, "%.3f", r.seconds);
    j["seconds"] = std::stod(seconds);
    out += j.dump() + "\n";
  }
  return out;
}

bool all_passed(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const VerificationReport& r) { return r.passed(); });
}

}  // namespace dmx::verify
