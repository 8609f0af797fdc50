#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sharp/diagram.hpp"
#include "sharp/harness.hpp"
#include "sharp/simplicial_set.hpp"

namespace sharp {

/// A simplicial object in finite simplicial sets, known in levels 0..top.
/// face(n, i) is d_i : X(n) -> X(n-1); degeneracy(n, j) is s_j : X(n) -> X(n+1).
class SimplicialObject {
 public:
  SimplicialObject() = default;
  /// faces[n] holds d_0..d_n for n >= 1 (faces[0] empty); degeneracies[n]
  /// holds s_0..s_n for n < top. Throws InvariantError on a broken identity.
  SimplicialObject(std::vector<FiniteSimplicialSet> levels, std::vector<std::vector<SimplicialMap>> faces,
                   std::vector<std::vector<SimplicialMap>> degeneracies);
  static SimplicialObject unchecked(std::vector<FiniteSimplicialSet> levels, std::vector<std::vector<SimplicialMap>> faces,
                                    std::vector<std::vector<SimplicialMap>> degeneracies);

  int top() const { return static_cast<int>(levels_.size()) - 1; }
  const FiniteSimplicialSet& level(int n) const { return levels_.at(static_cast<std::size_t>(n)); }
  const SimplicialMap& face(int n, int i) const { return faces_.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(i)); }
  const SimplicialMap& degeneracy(int n, int j) const {
    return degeneracies_.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(j));
  }
  /// X(θ) : X(n) -> X(m) for θ : [m] -> [n].
  SimplicialMap act(const SimplicialOperator& theta) const;

 private:
  std::vector<FiniteSimplicialSet> levels_;
  std::vector<std::vector<SimplicialMap>> faces_;
  std::vector<std::vector<SimplicialMap>> degeneracies_;
};

/// Every broken simplicial identity between levels.
std::vector<std::string> simplicial_object_violations(const SimplicialObject& x);

/// The constant simplicial object at K up to `top`.
SimplicialObject constant_object(const FiniteSimplicialSet& k, int top);
/// Levelwise coproduct.
SimplicialObject levelwise_coproduct(const std::vector<SimplicialObject>& parts);

/// A levelwise map commuting with faces and degeneracies.
struct SimplicialObjectMap {
  SimplicialObject source;
  SimplicialObject target;
  std::vector<SimplicialMap> components;
};
std::vector<std::string> naturality_violations(const SimplicialObjectMap& p);
SimplicialObjectMap constant_object_map(const SimplicialMap& f, int top);

/// The diagonal [n] -> X(n)_n, computed up to a degree bound above which
/// every simplex is assumed degenerate.
class Diagonal {
 public:
  const FiniteSimplicialSet& object() const { return object_; }
  int bound() const { return bound_; }
  /// Diagonal simplex of the n-simplex s of level n.
  SimplexRef locate(int n, const SimplexRef& s) const;
  /// Degree and n-simplex of level n behind each nondegenerate simplex.
  const std::pair<int, SimplexRef>& origin(int simplex) const { return origin_[static_cast<std::size_t>(simplex)]; }

 private:
  friend Diagonal diagonal(const SimplicialObject& x, int bound);
  FiniteSimplicialSet object_;
  int bound_ = 0;
  std::vector<std::unordered_map<SimplexRef, SimplexRef, SimplexRefHash>> normal_;
  std::vector<std::pair<int, SimplexRef>> origin_;
};
/// `bound` defaults to top(); DimensionError when it exceeds top().
Diagonal diagonal(const SimplicialObject& x, int bound = -1);
/// |p| between already computed diagonals.
SimplicialMap diagonal_map(const SimplicialObjectMap& p, const Diagonal& from, const Diagonal& to);

/// L_{n-1}X ⊂ X(n), computed twice: as the union of the images of s_0..s_{n-1}
/// and as the colimit over the proper subsets T of {1..n} of T ↦ X(#T).
struct LatchingObject {
  SimplicialMap inclusion;          // L_{n-1}X ↣ X(n)
  Colimit poset_colimit;            // colim over proper subsets
  SimplicialMap comparison;         // poset colimit -> X(n)
  IsoCheck agreement;               // poset colimit ≅ L_{n-1}X
  bool cofibrant = false;           // T ↦ X(#T) is a cofibrant functor
};
/// The union of degeneracy images only; n >= 1.
SimplicialMap latching_inclusion(const SimplicialObject& x, int n);
/// Both descriptions and their comparison; n >= 1.
LatchingObject latching_object(const SimplicialObject& x, int n);

/// One step F_{n-1}|X| ⊂ F_n|X| of the skeletal filtration of the diagonal,
/// with its attaching square
///   X(n) × ∂Δ[n] ∪ L_{n-1}X × Δ[n]  ->  X(n) × Δ[n]
///             |                              |
///       F_{n-1}|X|           ->           F_n|X|
/// truncated to the degree bound of the diagonal.
struct FiltrationStage {
  int n = 0;
  SimplicialMap inclusion;  // F_n ↣ |X|
  /// Every stage below is recorded only for n >= 1.
  SimplicialMap corner;     // corner ↣ sk(X(n) × Δ[n])
  SimplicialMap attach;     // corner -> F_{n-1}
  SimplicialMap cell;       // sk(X(n) × Δ[n]) -> F_n
  bool commutes = false;
  /// The pushout of (corner, attach) maps isomorphically onto F_n.
  IsoCheck pushout;
  /// Every nondegenerate simplex of X(n) × Δ[n] above the bound lies in the
  /// corner, so truncating the square loses nothing.
  bool corner_holds_high_cells = false;
  bool verified() const { return n == 0 || (commutes && pushout.holds && corner_holds_high_cells); }
};

struct DiagonalFiltration {
  Diagonal diagonal;
  std::vector<FiltrationStage> stages;  // n = 0..bound
  /// colim_n F_n -> |X| is an isomorphism.
  IsoCheck reconstruction;
  bool verified() const;
};
DiagonalFiltration diagonal_filtration(const SimplicialObject& x, int bound = -1);

/// Levelwise sharp maps with homotopy cartesian level squares have a sharp
/// diagonal. Level squares are checked for the generating faces and
/// degeneracies; the others are pasted from these.
HarnessReport verify_diagonal_sharp(const SimplicialObjectMap& p, const SharpOptions& options = {}, int bound = -1);

}  // namespace sharp
