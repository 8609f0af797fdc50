#include "sharp/harness.hpp"

#include <algorithm>

namespace sharp {

Check check_of(std::string label, const WeakEquivalenceCertificate& cert) {
  return {std::move(label), cert.verdict, cert.detail};
}

Check check_of(std::string label, const SharpnessReport& report) {
  Check c{std::move(label), Verdict::Indeterminate, to_string(report.verdict)};
  if (report.verdict == Sharpness::Sharp) c.verdict = Verdict::Certified;
  if (report.verdict == Sharpness::NotSharp) c.verdict = Verdict::Refuted;
  if (report.witness) {
    const auto& w = report.comparisons[static_cast<std::size_t>(*report.witness)];
    c.detail += " over " + w.simplex_id + " along " + w.delta.to_string() + ": " + w.certificate.detail;
  }
  return c;
}

Check check_of(std::string label, const HomotopyCartesianVerdict& verdict) {
  Check c{std::move(label), Verdict::Indeterminate, verdict.detail};
  if (verdict.verdict == Cartesian::Cartesian) c.verdict = Verdict::Certified;
  if (verdict.verdict == Cartesian::NotCartesian) c.verdict = Verdict::Refuted;
  return c;
}

Check check_of(std::string label, bool holds, std::string detail) {
  return {std::move(label), holds ? Verdict::Certified : Verdict::Refuted, std::move(detail)};
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Holds: return "holds";
    case Outcome::Violated: return "violated";
    case Outcome::Undetermined: return "undetermined";
    case Outcome::HypothesisNotEstablished: return "hypothesis-not-established";
  }
  return "?";
}

bool HarnessReport::hypotheses_hold() const {
  return std::all_of(hypotheses.begin(), hypotheses.end(), [](const Check& c) { return c.verdict == Verdict::Certified; });
}

void HarnessReport::settle() {
  if (!hypotheses_hold()) {
    outcome = Outcome::HypothesisNotEstablished;
    return;
  }
  auto any = [&](Verdict v) {
    return std::any_of(conclusions.begin(), conclusions.end(), [v](const Check& c) { return c.verdict == v; });
  };
  if (any(Verdict::Refuted)) {
    outcome = Outcome::Violated;
  } else if (any(Verdict::Indeterminate)) {
    outcome = Outcome::Undetermined;
  } else {
    outcome = Outcome::Holds;
  }
}

}  // namespace sharp
