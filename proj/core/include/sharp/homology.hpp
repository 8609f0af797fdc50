#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "sharp/simplicial_set.hpp"

namespace sharp {

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Sparse integer matrix stored by rows; rows index C_{n-1}, columns C_n.
struct SparseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::map<int, std::int64_t>> entries;

  SparseMatrix() = default;
  SparseMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r)) {}
  void add(int r, int c, std::int64_t v);
  std::int64_t at(int r, int c) const;
};

/// Rank and nontrivial invariant factors (> 1, ascending) of an integer matrix.
struct SmithForm {
  int rank = 0;
  std::vector<std::int64_t> torsion;
};
SmithForm smith_form(const SparseMatrix& m);

struct HomologyGroup {
  int betti = 0;
  std::vector<std::int64_t> torsion;

  bool is_zero() const { return betti == 0 && torsion.empty(); }
  std::string to_string() const;
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Normalized chains: basis of C_n is the nondegenerate n-simplices.
struct ChainComplex {
  std::vector<int> ranks;
  /// boundary[n] : C_n -> C_{n-1}; boundary[0] is the zero map to C_{-1} = 0.
  std::vector<SparseMatrix> boundary;

  int top() const { return static_cast<int>(ranks.size()) - 1; }
  /// True when every composite ∂∂ vanishes.
  bool is_complex() const;
};

ChainComplex chain_complex(const FiniteSimplicialSet& x, int max_degree);
/// Chain complex of the mapping cone: C_n = target_n ⊕ source_{n-1}.
ChainComplex mapping_cone(const SimplicialMap& f, int max_degree);

/// H_0 .. H_top of a chain complex; throws if ∂∂ != 0.
std::vector<HomologyGroup> homology(const ChainComplex& c);
/// H_0 .. H_max_degree; throws DimensionError if max_degree exceeds the cap.
std::vector<HomologyGroup> homology(const FiniteSimplicialSet& x, int max_degree);
std::vector<HomologyGroup> homology(const FiniteSimplicialSet& x);

/// Component label of every vertex, and the number of components.
struct Components {
  int count = 0;
  std::vector<int> of_vertex;
  int of(const FiniteSimplicialSet& x, const SimplexRef& s) const {
    return of_vertex[static_cast<std::size_t>(x.vertex(s, 0))];
  }
};
Components components(const FiniteSimplicialSet& x);

}  // namespace sharp
