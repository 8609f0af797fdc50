#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sharp/constructions.hpp"
#include "sharp/homology.hpp"
#include "sharp/simplicial_set.hpp"

namespace sharp {

enum class Verdict { Certified, Refuted, Indeterminate };
std::string to_string(Verdict v);

/// How a Certified verdict was obtained.
enum class Route { None, Isomorphism, Collapse, Whitehead };
std::string to_string(Route r);

struct WeOptions {
  /// Caller vouches that every component of both sides is simply connected.
  bool simply_connected = false;
  /// Highest homology degree compared; -1 means max(dim source, dim target).
  int degree_bound = -1;
  /// Both sides are t-skeleta of larger objects: only degrees < t are
  /// trusted, and the verdict is never Certified.
  std::optional<int> truncation;
  /// Skip the mapping-cylinder collapse when the cylinder would be larger.
  int cylinder_limit = 20000;
};

struct HomologyEvidence {
  std::vector<HomologyGroup> source;
  std::vector<HomologyGroup> target;
  /// Homology of the mapping cone, degrees 0..bound+1; all zero iff H_*(f) is iso.
  std::vector<HomologyGroup> cone;
};

/// Outcome of a fundamental-group simplification for one component.
struct Pi1Summary {
  bool trivial = false;
  int generators = 0;
  int relations = 0;
  std::string to_string() const;
};

struct WeakEquivalenceCertificate {
  Verdict verdict = Verdict::Indeterminate;
  Route route = Route::None;
  int degree_bound = 0;
  bool truncated = false;
  bool simply_connected_assumed = false;

  int source_components = 0;
  int target_components = 0;
  bool pi0_bijective = false;
  /// Image of each source component in the target.
  std::vector<int> pi0_map;

  HomologyEvidence homology;
  /// Lowest degree n with H_n(f) not an isomorphism, when refuted by homology.
  std::optional<int> mismatch_degree;
  /// Lowest degree with nonzero mapping-cone homology; the raw witness.
  std::optional<int> cone_degree;

  std::vector<Pi1Summary> source_pi1;
  std::vector<Pi1Summary> target_pi1;

  /// Human-readable reason for the verdict.
  std::string detail;
};

WeakEquivalenceCertificate certify_weak_equivalence(const SimplicialMap& f, const WeOptions& options = {});

/// Greedy elementary collapses of X onto the subcomplex marked `keep`
/// (indexed by nondegenerate simplex). True when nothing else is left.
bool collapses_onto(const FiniteSimplicialSet& x, const std::vector<bool>& keep);
/// Collapse of the target onto the image of a monomorphism.
bool collapses_onto_image(const SimplicialMap& mono);
/// Every component collapses to one of its vertices.
bool is_collapsible(const FiniteSimplicialSet& x);

/// Edge-path presentation of π1 per component, simplified by Tietze moves.
std::vector<Pi1Summary> fundamental_groups(const FiniteSimplicialSet& x);

struct MappingCylinder {
  FiniteSimplicialSet object;
  SimplicialMap from_source;  // A ≅ A × {0} ↣ M
  SimplicialMap from_target;  // B ↣ M
  SimplicialMap retraction;   // M -> B
};
/// (A × Δ[1]) ∪_{A × {1}} B for f: A -> B.
MappingCylinder mapping_cylinder(const SimplicialMap& f, int dim_cap = kDefaultDimCap);

/// A constant map X -> Δ[n] at a vertex.
SimplicialMap constant_map(const FiniteSimplicialSet& x, const FiniteSimplicialSet& target, int vertex);

}  // namespace sharp
