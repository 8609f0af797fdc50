#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sharp/category.hpp"
#include "sharp/diagram.hpp"
#include "sharp/harness.hpp"
#include "sharp/homotopy.hpp"
#include "sharp/sharp.hpp"
#include "sharp/simplicial_object.hpp"

namespace sharp {

/// A composable string i_0 -> ... -> i_n; `arrows` lists a_1..a_n in
/// application order and is empty for n = 0.
struct ChainString {
  int source = 0;
  std::vector<int> arrows;

  int length() const { return static_cast<int>(arrows.size()); }
  int target(const FiniteCategory& c) const { return arrows.empty() ? source : c.arrow(arrows.back()).dst; }
  /// Object reached after the first k arrows.
  int object_at(const FiniteCategory& c, int k) const { return k == 0 ? source : c.arrow(arrows[static_cast<std::size_t>(k - 1)]).dst; }
  std::string label(const FiniteCategory& c) const;
};

/// The simplicial object [n] ↦ ∐_{i_0 -> ... -> i_n} D(i_0). In level n,
/// d_0 applies the first arrow and drops it, d_n drops the last arrow, the
/// inner faces compose neighbours, and s_j inserts an identity.
class Replacement {
 public:
  const Diagram& diagram() const { return diagram_; }
  const SimplicialObject& object() const { return object_; }
  const std::vector<ChainString>& strings(int n) const { return strings_.at(static_cast<std::size_t>(n)); }
  int summand(int n, const ChainString& s) const;
  /// The summand of a simplex of level n and the simplex of D(i_0) it comes from.
  std::pair<int, SimplexRef> locate(int n, const SimplexRef& s) const;
  SimplexRef embed(int n, int summand, const SimplexRef& s) const;

 private:
  friend Replacement simplicial_replacement(const Diagram& d, int top);
  Diagram diagram_;
  SimplicialObject object_;
  std::vector<std::vector<ChainString>> strings_;
  std::vector<std::map<std::vector<int>, int>> index_;
  std::vector<std::vector<int>> offsets_;
};
/// Levels 0..top, with every simplicial identity checked.
Replacement simplicial_replacement(const Diagram& d, int top);
/// The levelwise map of replacements induced by a map of diagrams.
SimplicialObjectMap replacement_map(const DiagramMap& f, const Replacement& from, const Replacement& to);

/// Degree above which the diagonal of the replacement has only degenerate
/// simplices: nerve dimension of the shape plus the largest dimension of a
/// value. DimensionError when the shape has arbitrarily long strings.
int hocolim_bound(const Diagram& d);

class HomotopyColimit {
 public:
  const FiniteSimplicialSet& object() const { return diagonal_.object(); }
  const Replacement& replacement() const { return replacement_; }
  const Diagonal& diagonal() const { return diagonal_; }
  int bound() const { return diagonal_.bound(); }

  struct Origin {
    int degree = 0;
    int summand = 0;
    /// The string and the simplex of D(i_0) behind a nondegenerate simplex.
    const ChainString* string = nullptr;
    SimplexRef simplex;
  };
  Origin origin(int simplex) const;
  /// Diagonal simplex for the n-simplex x of D(source of the string).
  SimplexRef locate(int n, int summand, const SimplexRef& x) const;

 private:
  friend HomotopyColimit hocolim(const Diagram& d, int bound);
  Replacement replacement_;
  Diagonal diagonal_;
};
/// The diagonal of the simplicial replacement. `bound` defaults to
/// hocolim_bound(d); a smaller bound is a DimensionError.
HomotopyColimit hocolim(const Diagram& d, int bound = -1);

/// hocolim D -> colim D, forgetting the strings.
SimplicialMap hocolim_to_colimit(const HomotopyColimit& h, const Colimit& c);
SimplicialMap natural_map_to_colim(const Diagram& d, int bound = -1);
/// hocolim f for a map of diagrams of the same shape.
SimplicialMap hocolim_map(const DiagramMap& f, const HomotopyColimit& from, const HomotopyColimit& to);
/// hocolim (D∘F) -> hocolim D for a functor F into the shape of D.
SimplicialMap hocolim_along(const Functor& f, const HomotopyColimit& from, const HomotopyColimit& to);

/// X̃i = hocolim over the objects over i, with its maps to X(i) and to hocolim X.
struct Tilde {
  int object = 0;
  OverCategory over;
  HomotopyColimit value;
  SimplicialMap to_value;
  SimplicialMap to_hocolim;
};
/// `whole` is hocolim X; X̃i is computed to the same bound.
Tilde tilde(const Diagram& d, int i, const HomotopyColimit& whole);
Tilde tilde(const Diagram& d, int i);

struct TildePullbackReport {
  int object = 0;
  bool commutes = false;
  /// X̃i -> Ỹi ×_{hocolim Y} hocolim X is an isomorphism.
  IsoCheck comparison;
  bool holds() const { return commutes && comparison.holds; }
};
/// The square (X̃i, hocolim X, Ỹi, hocolim Y) is a strict pullback.
TildePullbackReport verify_tilde_pullback(const DiagramMap& f, int i);
std::vector<TildePullbackReport> verify_tilde_pullback(const DiagramMap& f);

/// Certificate for hocolim D -> colim D.
WeakEquivalenceCertificate is_hocolim_diagram(const Diagram& d, const WeOptions& options = {}, int bound = -1);

struct HocolimOptions {
  WeOptions we;
  CartesianOptions cartesian;
  int bound = -1;
};

/// Part 1: Y a homotopy colimit diagram and every square
///   Xi -> colim X
///   |        |
///   Yi -> colim Y
/// homotopy cartesian imply X is a homotopy colimit diagram.
/// Part 2: X and Y homotopy colimit diagrams and every naturality square
/// homotopy cartesian imply every square above is homotopy cartesian.
HarnessReport verify_thm_hocolims(const DiagramMap& f, int part, const HocolimOptions& options = {});

enum class SpecialCase { Chain, Span, ProperSubsets };
std::string to_string(SpecialCase c);
/// Levelwise sharp maps with homotopy cartesian naturality squares, over a
/// chain of monomorphisms, a span with a mono leg, or a cofibrant functor on
/// proper subsets, give a sharp map of colimits whose object-to-colimit
/// squares are homotopy cartesian.
HarnessReport verify_special_diagrams(const DiagramMap& f, SpecialCase c, const HocolimOptions& options = {});

/// With P = X ×_Y Δ[n] over an n-simplex y of Y: if every P_δ -> P is a weak
/// equivalence, then so is X ×_Y Λ^k[n] -> P.
HarnessReport verify_horn_gluing(const SimplicialMap& f, const SimplexRef& y, int k, const WeOptions& options = {});

}  // namespace sharp
