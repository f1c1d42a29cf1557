#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dmx::verify {

enum class Expectation {
  // Passes when no instance violates the claim.
  no_counterexamples,
  // Passes when the documented counterexample is among the findings and nothing unexpected
  // turned up (for instance a failure on a class where the claim is proven).
  witness_required,
};

struct Counterexample {
  std::uint64_t instance = 0;
  std::string details;
  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct VerificationReport {
  std::string name;
  Expectation expectation = Expectation::no_counterexamples;
  std::uint64_t tested = 0;
  std::vector<Counterexample> counterexamples;
  bool witness_found = false;
  std::uint64_t unexpected = 0;
  double seconds = 0.0;

  bool passed() const;
};

/// Associative and commutative: counts add, findings are merged in instance order.
VerificationReport merge(VerificationReport a, const VerificationReport& b);

/// One block per report; no timings, so identical inputs give identical text.
std::string format_text(const std::vector<VerificationReport>& reports, std::size_t max_details = 5);

/// One JSON object per line: name, tested, failed, verdict, seconds.
std::string format_records(const std::vector<VerificationReport>& reports);

bool all_passed(const std::vector<VerificationReport>& reports);

}  // namespace dmx::verify
