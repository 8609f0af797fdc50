#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sharp/category.hpp"
#include "sharp/constructions.hpp"
#include "sharp/simplicial_set.hpp"

namespace sharp {

/// A functor from a finite category into finite simplicial sets.
class Diagram {
 public:
  Diagram() = default;
  /// `arrows[a]` is the value on arrow a; identities may be left default
  /// and are filled in. Functoriality is checked.
  Diagram(FiniteCategory shape, std::vector<FiniteSimplicialSet> objects, std::vector<SimplicialMap> arrows);
  static Diagram unchecked(FiniteCategory shape, std::vector<FiniteSimplicialSet> objects,
                           std::vector<SimplicialMap> arrows);

  const FiniteCategory& shape() const { return shape_; }
  const FiniteSimplicialSet& at(int object) const { return objects_[static_cast<std::size_t>(object)]; }
  const SimplicialMap& on(int arrow) const { return arrows_[static_cast<std::size_t>(arrow)]; }
  const std::vector<FiniteSimplicialSet>& objects() const { return objects_; }
  const std::vector<SimplicialMap>& arrows() const { return arrows_; }
  int max_dim() const;

 private:
  FiniteCategory shape_;
  std::vector<FiniteSimplicialSet> objects_;
  std::vector<SimplicialMap> arrows_;
};

std::vector<std::string> diagram_violations(const FiniteCategory& shape, const std::vector<FiniteSimplicialSet>& objects,
                                            const std::vector<SimplicialMap>& arrows);

/// D ∘ F for a functor F: shape -> D.shape().
Diagram restrict(const Diagram& d, const FiniteCategory& shape, const Functor& f);
Diagram restrict(const Diagram& d, const Subcategory& sub);

/// A natural transformation between diagrams of the same shape.
class DiagramMap {
 public:
  DiagramMap() = default;
  DiagramMap(Diagram source, Diagram target, std::vector<SimplicialMap> components);
  static DiagramMap unchecked(Diagram source, Diagram target, std::vector<SimplicialMap> components);

  const Diagram& source() const { return source_; }
  const Diagram& target() const { return target_; }
  const SimplicialMap& at(int object) const { return components_[static_cast<std::size_t>(object)]; }
  const std::vector<SimplicialMap>& components() const { return components_; }

 private:
  Diagram source_;
  Diagram target_;
  std::vector<SimplicialMap> components_;
};

std::vector<std::string> naturality_violations(const Diagram& source, const Diagram& target,
                                               const std::vector<SimplicialMap>& components);
DiagramMap identity_map(const Diagram& d);
DiagramMap restrict(const DiagramMap& f, const FiniteCategory& shape, const Functor& func);

class Colimit {
 public:
  const FiniteSimplicialSet& object() const { return object_; }
  const SimplicialMap& leg(int object) const { return legs_[static_cast<std::size_t>(object)]; }
  const std::vector<SimplicialMap>& legs() const { return legs_; }
  /// The map out of the colimit determined by a cocone; throws when the
  /// components do not form a cocone.
  SimplicialMap induced(const std::vector<SimplicialMap>& cocone) const;

 private:
  friend Colimit colimit(const Diagram& d, int dim_cap);
  Diagram diagram_;
  FiniteSimplicialSet object_;
  std::vector<SimplicialMap> legs_;
  /// For each nondegenerate simplex: an object and a simplex there mapping onto it.
  std::vector<std::pair<int, SimplexRef>> representative_;
};

/// Degreewise colimit by union-find, normalized.
Colimit colimit(const Diagram& d, int dim_cap = kDefaultDimCap);
/// colim f : colim D -> colim E.
SimplicialMap colimit_map(const DiagramMap& f, const Colimit& from, const Colimit& to);

struct Pushout {
  FiniteSimplicialSet object;
  SimplicialMap from_x;  // X -> X ∪_A Y
  SimplicialMap from_y;  // Y -> X ∪_A Y
  Colimit colimit;
};
/// Pushout of X <-f- A -g-> Y.
Pushout pushout(const SimplicialMap& f, const SimplicialMap& g, int dim_cap = kDefaultDimCap);

/// Diagram over the span category a <- c -> b.
Diagram span_diagram(const SimplicialMap& to_a, const SimplicialMap& to_b);
/// Diagram over the chain category from consecutive maps.
Diagram chain_diagram(const std::vector<SimplicialMap>& steps);

/// Outcome of an exact comparison map check.
struct IsoCheck {
  bool holds = false;
  /// Lowest degree where injectivity or surjectivity fails, when it does.
  std::optional<int> failing_degree;
  std::string detail;
};
IsoCheck check_iso(const SimplicialMap& f);

struct DistributiveReport {
  IsoCheck comparison;
  Colimit pulled_back_colimit;
  SimplicialMap comparison_map;  // colim_i (A ×_B D(i)) -> A
};
/// colim_i (A ×_B D(i)) -> A must be an isomorphism for a: A -> B = colim D.
DistributiveReport verify_distributive_law(const Diagram& d, const Colimit& c, const SimplicialMap& a);

struct CofibrancyReport {
  bool cofibrant = true;
  /// First object T whose latching map colim_{P̄T} X -> X(T) is not mono.
  std::optional<int> failing_object;
};
/// X must be indexed by a subset poset (all or proper subsets).
CofibrancyReport is_cofibrant_functor(const Diagram& x, const SubsetPoset& poset);
/// colim over the proper subsets of T present in the poset, with its map to X(T).
struct SubsetColimit {
  Colimit colimit;
  SimplicialMap to_value;
};
SubsetColimit proper_subset_colimit(const Diagram& x, const SubsetPoset& poset, unsigned mask);

struct PosetPushoutSquare {
  FiniteSimplicialSet top_left;      // colim_{P̄S'} X|S'
  FiniteSimplicialSet top_right;     // colim_{P̄S'} X'
  FiniteSimplicialSet bottom_left;   // X(S')
  FiniteSimplicialSet bottom_right;  // colim_{P̄S} X
  SimplicialMap top, left, right, bottom;
  bool commutes = false;
  IsoCheck pushout;  // the canonical map from the pushout of (top, left) to bottom_right
  bool verticals_mono = false;
};
/// X indexed by the proper subsets of {1..n}, n >= 1.
PosetPushoutSquare poset_pushout_decomposition(const Diagram& x, const SubsetPoset& poset);

/// A map of finite sets {0..domain-1} -> {0..codomain-1}.
struct FinMap {
  int domain = 0;
  int codomain = 0;
  std::vector<int> values;
  bool is_injective() const;
};

/// The six-object diagram A ↣ X, A' ↣ X', B ↣ Y with vertical maps
/// p: A -> A', X -> X', A' -> B, q: X' -> Y.
struct PeculiarInstance {
  FinMap a_to_x, p, x_to_xp, ap_to_xp, ap_to_b, q, b_to_y;
};
enum class PeculiarStatus { Holds, Fails, PreconditionViolated };
struct PeculiarResult {
  PeculiarStatus status = PeculiarStatus::PreconditionViolated;
  std::string detail;
};
PeculiarResult verify_peculiar_lemma(const PeculiarInstance& inst);

}  // namespace sharp
