#pragma once

#include <string>
#include <vector>

#include "sharp/homotopy.hpp"
#include "sharp/sharp.hpp"

namespace sharp {

/// One hypothesis or conclusion of a theorem harness.
struct Check {
  std::string label;
  Verdict verdict = Verdict::Indeterminate;
  std::string detail;
};

Check check_of(std::string label, const WeakEquivalenceCertificate& cert);
Check check_of(std::string label, const SharpnessReport& report);
Check check_of(std::string label, const HomotopyCartesianVerdict& verdict);
Check check_of(std::string label, bool holds, std::string detail = {});

enum class Outcome {
  /// Every hypothesis and every conclusion Certified.
  Holds,
  /// Hypotheses Certified, some conclusion Refuted.
  Violated,
  /// Hypotheses Certified, some conclusion Indeterminate.
  Undetermined,
  /// Some hypothesis was not Certified; conclusions are not asserted.
  HypothesisNotEstablished,
};
std::string to_string(Outcome o);

struct HarnessReport {
  std::string theorem;
  std::vector<Check> hypotheses;
  std::vector<Check> conclusions;
  Outcome outcome = Outcome::HypothesisNotEstablished;

  bool hypotheses_hold() const;
  /// Sets `outcome` from the recorded checks.
  void settle();
};

}  // namespace sharp
