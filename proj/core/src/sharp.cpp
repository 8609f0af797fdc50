#include "sharp/sharp.hpp"

#include <algorithm>

#include "sharp/constructions.hpp"

namespace sharp {

std::string to_string(Sharpness s) {
  switch (s) {
    case Sharpness::Sharp: return "sharp";
    case Sharpness::NotSharp: return "not-sharp";
    case Sharpness::Indeterminate: return "indeterminate";
  }
  return "?";
}

std::string to_string(Cartesian c) {
  switch (c) {
    case Cartesian::Cartesian: return "cartesian";
    case Cartesian::NotCartesian: return "not-cartesian";
    case Cartesian::Indeterminate: return "indeterminate";
  }
  return "?";
}

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::None: return "none";
    case Strategy::SharpLeg: return "sharp-leg";
    case Strategy::FibrationLeg: return "fibration-leg";
  }
  return "?";
}

SharpnessReport is_sharp(const SimplicialMap& f, const SharpOptions& options) {
  const auto& y = f.target();
  SharpnessReport report;
  std::optional<int> undecided;
  for (int i = 0; i < y.size(); ++i) {
    const int n = y.dim(i);
    const auto chi = characteristic_map(y, y.nondegenerate(i));
    const Pullback over(f, chi);
    std::vector<SimplicialOperator> deltas;
    if (options.exhaustive) {
      for (int m = 0; m <= n; ++m) {
        for (auto& op : monotone_maps(m, n)) deltas.push_back(op);
      }
    } else {
      for (int v = 0; v <= n; ++v) deltas.push_back(SimplicialOperator(n, {v}));
    }
    for (const auto& delta : deltas) {
      const auto dmap = operator_map(delta);
      const Pullback part(f, compose(chi, dmap));
      const auto cmp = over.induced(part.first(), compose(dmap, part.second()));
      FiberComparison c{i, y.id(i), delta, certify_weak_equivalence(cmp, options.we)};
      const int at = static_cast<int>(report.comparisons.size());
      if (c.certificate.verdict == Verdict::Refuted && !report.witness) report.witness = at;
      if (c.certificate.verdict == Verdict::Indeterminate && !undecided) undecided = at;
      report.comparisons.push_back(std::move(c));
    }
  }
  if (report.witness) {
    report.verdict = Sharpness::NotSharp;
  } else if (undecided) {
    report.verdict = Sharpness::Indeterminate;
    report.witness = undecided;
  }
  return report;
}

bool commutes(const Square& s) {
  return compose(s.right, s.top).images() == compose(s.bottom, s.left).images() &&
         s.top.source() == s.left.source() && s.right.target() == s.bottom.target();
}

Square pullback_square(const SimplicialMap& f, const SimplicialMap& g) {
  const Pullback p(f, g);
  return {p.first(), p.second(), f, g};
}

HomotopyCartesianVerdict is_homotopy_cartesian(const Square& square, Leg designated, const CartesianOptions& options) {
  if (!(square.top.target() == square.right.source()) || !(square.left.target() == square.bottom.source()) ||
      !commutes(square)) {
    throw std::invalid_argument("square does not commute");
  }
  HomotopyCartesianVerdict out;
  std::vector<Leg> legs;
  if (designated != Leg::Bottom) legs.push_back(Leg::Right);
  if (designated != Leg::Right) legs.push_back(Leg::Bottom);
  for (Leg leg : legs) {
    const auto& map = leg == Leg::Right ? square.right : square.bottom;
    if (is_sharp(map, options.sharp).verdict == Sharpness::Sharp) {
      out.strategy = Strategy::SharpLeg;
    } else {
      const int bound = options.kan_bound < 0 ? std::max(map.source().dim(), map.target().dim()) + 1 : options.kan_bound;
      if (has_horn_lifts(map, bound).holds) out.strategy = Strategy::FibrationLeg;
    }
    if (out.strategy != Strategy::None) {
      out.leg_used = leg;
      break;
    }
  }
  if (out.strategy == Strategy::None) {
    out.detail = "no leg was shown sharp or a fibration";
    return out;
  }
  const Pullback strict(square.right, square.bottom);
  const auto cmp = strict.induced(square.top, square.left);
  out.comparison = certify_weak_equivalence(cmp, options.sharp.we);
  switch (out.comparison->verdict) {
    case Verdict::Certified: out.verdict = Cartesian::Cartesian; break;
    case Verdict::Refuted: out.verdict = Cartesian::NotCartesian; break;
    case Verdict::Indeterminate: out.verdict = Cartesian::Indeterminate; break;
  }
  out.detail = "comparison to the strict pullback: " + out.comparison->detail;
  return out;
}

}  // namespace sharp
