#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "sharp/simplicial_set.hpp"

namespace sharp {

/// Δ[n]; nondegenerate simplices are the nonempty vertex subsets, named
/// like "[0,2]".
FiniteSimplicialSet standard_simplex(int n);
/// ∂Δ[n]: Δ[n] without its top cell.
FiniteSimplicialSet boundary(int n);
/// Λ^k[n]: ∂Δ[n] without the face opposite vertex k.
FiniteSimplicialSet horn(int n, int k);
/// The terminal simplicial set Δ[0].
FiniteSimplicialSet point();

/// Nondegenerate simplex of Δ[n] (or of a subcomplex) spanned by the sorted vertices.
SimplexRef simplex_of(const FiniteSimplicialSet& standard, const std::vector<int>& vertices);
/// The map Δ[m] -> X classifying an m-simplex s.
SimplicialMap characteristic_map(const FiniteSimplicialSet& x, const SimplexRef& s);
/// Δ[m] -> Δ[n] induced by a monotone map [m] -> [n].
SimplicialMap operator_map(const SimplicialOperator& op);
/// Inclusion of a vertex-named subcomplex (boundary, horn) into Δ[n].
SimplicialMap simplex_inclusion(const FiniteSimplicialSet& sub, int n);
SimplicialMap to_point(const FiniteSimplicialSet& x);
/// Δ[0] -> X picking a vertex.
SimplicialMap vertex_map(const FiniteSimplicialSet& x, int vertex);

/// The subcomplex spanned by `keep` (closed under faces automatically) and its inclusion.
SimplicialMap subcomplex(const FiniteSimplicialSet& x, const std::vector<int>& keep);
SimplicialMap image(const SimplicialMap& f);
SimplicialMap skeleton(const FiniteSimplicialSet& x, int n);
/// Corestriction of f through a mono m with image(f) ⊆ image(m).
SimplicialMap factor_through(const SimplicialMap& f, const SimplicialMap& m);

struct Coproduct {
  FiniteSimplicialSet object;
  std::vector<SimplicialMap> injections;
};
/// Ids are "k:id" with k the summand position.
Coproduct coproduct(const std::vector<FiniteSimplicialSet>& parts);
/// The map out of a coproduct with the given components.
SimplicialMap copair(const Coproduct& c, const std::vector<SimplicialMap>& components);
SimplicialMap coproduct_map(const Coproduct& from, const Coproduct& to, const std::vector<SimplicialMap>& components);

/// Strict fiber product X ×_B Y with normal forms for jointly nondegenerate pairs.
class Pullback {
 public:
  Pullback(const SimplicialMap& f, const SimplicialMap& g, int dim_cap = kDefaultDimCap);

  const FiniteSimplicialSet& object() const { return object_; }
  const SimplicialMap& first() const { return first_; }
  const SimplicialMap& second() const { return second_; }
  const SimplicialMap& left_leg() const { return f_; }
  const SimplicialMap& right_leg() const { return g_; }

  /// The simplex (a, b); throws if f(a) != g(b).
  SimplexRef pair(const SimplexRef& a, const SimplexRef& b) const;
  /// The map P -> X ×_B Y induced by p: P -> X and q: P -> Y with f p = g q.
  SimplicialMap induced(const SimplicialMap& p, const SimplicialMap& q) const;

 private:
  struct Table;
  SimplicialMap f_, g_;
  FiniteSimplicialSet object_;
  SimplicialMap first_, second_;
  std::shared_ptr<const Table> table_;
};

/// X × Y, built as the pullback over Δ[0]; ids are "(a,b)".
Pullback product(const FiniteSimplicialSet& x, const FiniteSimplicialSet& y, int dim_cap = kDefaultDimCap);
/// f × g : X × Y -> X' × Y'.
SimplicialMap product_map(const Pullback& from, const Pullback& to, const SimplicialMap& f, const SimplicialMap& g);
/// X_0 × ... × X_{k-1} as iterated binary products; Δ[0] when k = 0.
class FiniteProduct {
 public:
  explicit FiniteProduct(std::vector<FiniteSimplicialSet> parts, int dim_cap = kDefaultDimCap);
  const FiniteSimplicialSet& object() const { return object_; }
  int size() const { return static_cast<int>(parts_.size()); }
  const SimplicialMap& projection(int i) const { return projections_.at(static_cast<std::size_t>(i)); }
  /// The map from `source` with the given components.
  SimplicialMap induced(const FiniteSimplicialSet& source, const std::vector<SimplicialMap>& cone) const;

 private:
  std::vector<FiniteSimplicialSet> parts_;
  std::vector<Pullback> chain_;
  FiniteSimplicialSet object_;
  std::vector<SimplicialMap> projections_;
};
/// ∏ f_i between products with the same number of factors.
SimplicialMap product_map(const FiniteProduct& from, const FiniteProduct& to, const std::vector<SimplicialMap>& components);

/// Induced map of pullbacks from a map of cospans (x: X->X', b: B->B', y: Y->Y').
SimplicialMap pullback_map(const Pullback& from, const Pullback& to, const SimplicialMap& x, const SimplicialMap& y);

/// A simplicial set given degreewise up to `top` by all of its simplices
/// (degenerate ones included). Keys in degree n run over [0, counts[n]).
struct LevelPresentation {
  int top = 0;
  std::vector<int> counts;
  std::function<int(int n, int k, int key)> face;
  std::function<int(int n, int j, int key)> degeneracy;
  std::function<std::string(int n, int key)> name;
};

struct NormalizedLevels {
  FiniteSimplicialSet object;
  /// normal[n][key] is the normal form of the given simplex.
  std::vector<std::vector<SimplexRef>> normal;
};

/// Extracts the nondegenerate presentation. Simplices of degree > top are
/// assumed degenerate; the caller chooses `top` at least the dimension.
NormalizedLevels from_levels(const LevelPresentation& p, int dim_cap = kDefaultDimCap);

}  // namespace sharp
