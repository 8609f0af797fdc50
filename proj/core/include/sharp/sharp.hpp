#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sharp/homotopy.hpp"
#include "sharp/lifting.hpp"

namespace sharp {

enum class Sharpness { Sharp, NotSharp, Indeterminate };
std::string to_string(Sharpness s);

struct SharpOptions {
  /// Also compare along every monotone δ: Δ[m] -> Δ[n], not only vertices.
  bool exhaustive = false;
  WeOptions we;
};

/// One comparison P_δ -> P_y for a nondegenerate simplex y of the base.
struct FiberComparison {
  int simplex = 0;
  std::string simplex_id;
  SimplicialOperator delta;
  WeakEquivalenceCertificate certificate;
};

struct SharpnessReport {
  Sharpness verdict = Sharpness::Sharp;
  std::vector<FiberComparison> comparisons;
  /// Index into comparisons of the first refuted (or else undecided) check.
  std::optional<int> witness;
};

/// For each nondegenerate y: Δ[n] -> Y and vertex v of Δ[n], certifies the
/// comparison X ×_Y Δ[0] -> X ×_Y Δ[n].
SharpnessReport is_sharp(const SimplicialMap& f, const SharpOptions& options = {});

/// P -> X (top), P -> Y (left), X -> B (right), Y -> B (bottom).
struct Square {
  SimplicialMap top, left, right, bottom;
};
bool commutes(const Square& s);

enum class Leg { Right, Bottom, Either };
enum class Cartesian { Cartesian, NotCartesian, Indeterminate };
std::string to_string(Cartesian c);

enum class Strategy { None, SharpLeg, FibrationLeg };
std::string to_string(Strategy s);

struct CartesianOptions {
  /// Horn-lift bound for the fibration strategy; -1 means dim + 1.
  int kan_bound = -1;
  SharpOptions sharp;
};

struct HomotopyCartesianVerdict {
  Cartesian verdict = Cartesian::Indeterminate;
  Strategy strategy = Strategy::None;
  Leg leg_used = Leg::Right;
  std::optional<WeakEquivalenceCertificate> comparison;
  std::string detail;
};

/// Throws std::invalid_argument when the square does not commute.
HomotopyCartesianVerdict is_homotopy_cartesian(const Square& square, Leg designated = Leg::Either,
                                               const CartesianOptions& options = {});

/// The pullback square of f along g, with its projections.
Square pullback_square(const SimplicialMap& f, const SimplicialMap& g);

}  // namespace sharp
