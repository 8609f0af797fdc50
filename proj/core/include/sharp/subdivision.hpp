#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "sharp/simplicial_set.hpp"

namespace sharp {

/// Barycentric subdivision. A nondegenerate k-simplex is a nondegenerate
/// simplex x of X together with a strict chain of k+1 faces of its simplex
/// ending in the whole; ids look like "x|{0}<{0,1}".
struct Subdivision {
  FiniteSimplicialSet object;
  /// The last-vertex map Sd X -> X.
  SimplicialMap last_vertex;
  /// For each nondegenerate simplex: the simplex of X and its chain of faces
  /// as vertex bitmasks.
  std::vector<std::pair<int, std::vector<unsigned>>> cells;
  /// The simplex (x, chain) for a weakly increasing chain ending in the
  /// whole of x; degenerate when the chain repeats.
  SimplexRef ref(int simplex, const std::vector<unsigned>& chain) const;

  std::map<std::pair<int, std::vector<unsigned>>, int> index;
};
Subdivision subdivision(const FiniteSimplicialSet& x, int dim_cap = kDefaultDimCap);
/// Sd f between already subdivided source and target.
SimplicialMap subdivision_map(const SimplicialMap& f, const Subdivision& source, const Subdivision& target);

/// Ex X up to degree `truncation`: n-simplices are the maps Sd Δ[n] -> X.
struct ExResult {
  FiniteSimplicialSet object;
  /// X -> Ex X; requires truncation >= dim X.
  SimplicialMap unit;
  int truncation = 0;
  /// Number of simplices (all of them, degenerate ones included) per degree.
  std::vector<std::uint64_t> level_sizes;
};
ExResult ex(const FiniteSimplicialSet& x, int truncation, std::uint64_t max_level = 200000);
/// Ex^k X with the composite unit.
ExResult ex_iter(const FiniteSimplicialSet& x, int k, int truncation, std::uint64_t max_level = 200000);

}  // namespace sharp
