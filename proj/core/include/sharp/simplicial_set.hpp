#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sharp/operator.hpp"

namespace sharp {

/// Thrown when constructed data breaks a structural invariant; carries every
/// violation found, not only the first.
class InvariantError : public std::invalid_argument {
 public:
  explicit InvariantError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

/// Eilenberg–Zilber normal form: nondegenerate simplex `index` pulled back
/// along the surjection `degeneracy`.
struct SimplexRef {
  int index = -1;
  SimplicialOperator degeneracy;

  int dim() const { return degeneracy.domain_dim(); }
  bool is_nondegenerate() const { return degeneracy.is_identity(); }

  friend bool operator==(const SimplexRef&, const SimplexRef&) = default;
  friend auto operator<=>(const SimplexRef& a, const SimplexRef& b) {
    if (auto c = a.index <=> b.index; c != 0) return c;
    return a.degeneracy <=> b.degeneracy;
  }
};

struct SimplexRefHash {
  std::size_t operator()(const SimplexRef& s) const noexcept {
    return static_cast<std::size_t>(s.index) * 0x9e3779b97f4a7c15ULL ^ s.degeneracy.hash();
  }
};

/// Raw on-the-wire record: faces are (target id, surjection values) pairs.
struct SimplexRecord {
  std::string id;
  int dim = 0;
  std::vector<std::pair<std::string, std::vector<int>>> faces;
};

class FiniteSimplicialSet {
 public:
  class Builder;

  /// The empty simplicial set.
  FiniteSimplicialSet();

  int size() const { return static_cast<int>(data_->ids.size()); }
  bool empty() const { return data_->ids.empty(); }
  /// Largest dimension of a nondegenerate simplex, -1 when empty.
  int dim() const { return data_->max_dim; }

  const std::string& id(int i) const { return data_->ids[static_cast<std::size_t>(i)]; }
  int dim(int i) const { return data_->dims[static_cast<std::size_t>(i)]; }
  std::optional<int> find(std::string_view id) const;
  int index_of(std::string_view id) const;

  std::span<const SimplexRef> faces(int i) const { return data_->faces[static_cast<std::size_t>(i)]; }
  /// Nondegenerate simplices of dimension n, in insertion order.
  std::span<const int> of_dim(int n) const;
  int count(int n) const { return static_cast<int>(of_dim(n).size()); }

  SimplexRef nondegenerate(int i) const { return {i, SimplicialOperator::identity(dim(i))}; }
  SimplexRef apply(const SimplexRef& s, const SimplicialOperator& op) const;
  SimplexRef face(const SimplexRef& s, int k) const;
  SimplexRef degeneracy(const SimplexRef& s, int k) const;
  /// Index of the k-th vertex of s.
  int vertex(const SimplexRef& s, int k) const;
  std::vector<int> vertices(const SimplexRef& s) const;

  /// Every simplex of degree n, degenerate ones included, in a fixed order.
  std::vector<SimplexRef> simplices(int n) const;
  std::uint64_t simplex_count(int n) const;

  /// `id` for a nondegenerate ref, `id[values]` for a degenerate one.
  std::string ref_name(const SimplexRef& s) const;
  std::vector<SimplexRecord> records() const;

  bool same_object(const FiniteSimplicialSet& o) const { return data_ == o.data_; }
  friend bool operator==(const FiniteSimplicialSet& a, const FiniteSimplicialSet& b);

 private:
  struct Data {
    std::vector<std::string> ids;
    std::vector<int> dims;
    std::vector<std::vector<SimplexRef>> faces;
    std::vector<std::vector<int>> by_dim;
    std::unordered_map<std::string, int> index;
    int max_dim = -1;
  };
  explicit FiniteSimplicialSet(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;
};

/// Nondegenerate simplices must be added after all their faces.
class FiniteSimplicialSet::Builder {
 public:
  int add_vertex(std::string id);
  /// Dimension is faces.size() - 1; each face must already be present.
  int add(std::string id, std::vector<SimplexRef> faces);
  int size() const { return static_cast<int>(ids_.size()); }
  int dim(int i) const { return dims_[static_cast<std::size_t>(i)]; }
  bool contains(std::string_view id) const { return index_.count(std::string(id)) != 0; }

  /// Checks every simplicial identity; throws InvariantError listing failures
  /// and DimensionError above `dim_cap`.
  FiniteSimplicialSet build(int dim_cap = kDefaultDimCap) const;
  FiniteSimplicialSet build_unchecked() const;

 private:
  std::vector<std::string> ids_;
  std::vector<int> dims_;
  std::vector<std::vector<SimplexRef>> faces_;
  std::unordered_map<std::string, int> index_;
};

/// Every broken simplicial identity of X (empty for anything built checked).
std::vector<std::string> validate(const FiniteSimplicialSet& x);
/// Violations of raw records: dangling ids, bad dimensions, non-surjective
/// face operators, duplicate ids and broken identities.
std::vector<std::string> validate_records(const std::vector<SimplexRecord>& records);
/// Records in any order; throws InvariantError on any violation.
FiniteSimplicialSet from_records(const std::vector<SimplexRecord>& records, int dim_cap = kDefaultDimCap);

/// All simplices of X up to a degree, with a reverse index.
class LevelTable {
 public:
  LevelTable(const FiniteSimplicialSet& x, int top);
  int top() const { return static_cast<int>(levels_.size()) - 1; }
  const std::vector<SimplexRef>& level(int n) const { return levels_[static_cast<std::size_t>(n)]; }
  int index(const SimplexRef& s) const;

 private:
  std::vector<std::vector<SimplexRef>> levels_;
  std::vector<std::unordered_map<SimplexRef, int, SimplexRefHash>> lookup_;
};

class SimplicialMap {
 public:
  SimplicialMap() = default;
  /// images[i] is the image of nondegenerate simplex i; checked against faces.
  SimplicialMap(FiniteSimplicialSet source, FiniteSimplicialSet target, std::vector<SimplexRef> images);
  static SimplicialMap unchecked(FiniteSimplicialSet source, FiniteSimplicialSet target,
                                 std::vector<SimplexRef> images);

  const FiniteSimplicialSet& source() const { return source_; }
  const FiniteSimplicialSet& target() const { return target_; }
  const SimplexRef& image(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<SimplexRef>& images() const { return images_; }
  SimplexRef operator()(const SimplexRef& s) const;

  friend bool operator==(const SimplicialMap& a, const SimplicialMap& b);

 private:
  FiniteSimplicialSet source_;
  FiniteSimplicialSet target_;
  std::vector<SimplexRef> images_;
};

std::vector<std::string> map_violations(const FiniteSimplicialSet& source, const FiniteSimplicialSet& target,
                                        const std::vector<SimplexRef>& images);

SimplicialMap identity_map(const FiniteSimplicialSet& x);
/// g ∘ f.
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);
bool is_mono(const SimplicialMap& f);
bool is_epi(const SimplicialMap& f);
bool is_iso(const SimplicialMap& f);
/// Inverse of an isomorphism; throws std::invalid_argument otherwise.
SimplicialMap inverse(const SimplicialMap& f);

/// Degree-n simplex evaluation through normal forms (the operator action).
SimplexRef evaluate_operator(const FiniteSimplicialSet& x, const SimplexRef& s, const SimplicialOperator& op);

/// Backtracking search over simplicial maps A -> X. `fixed[i]`, when set,
/// pins the image of nondegenerate simplex i; `allow(i, candidate)` prunes.
/// The callback returns false to stop. Returns the number of maps visited.
struct MapSearch {
  std::vector<std::optional<SimplexRef>> fixed;
  std::function<bool(int, const SimplexRef&)> allow;
  bool nondegenerate_images_only = false;
  bool injective = false;
};
std::uint64_t enumerate_maps(const FiniteSimplicialSet& a, const FiniteSimplicialSet& x,
                             const std::function<bool(const SimplicialMap&)>& visit, const MapSearch& search = {});
std::optional<SimplicialMap> find_map(const FiniteSimplicialSet& a, const FiniteSimplicialSet& x,
                                      const MapSearch& search = {});
std::optional<SimplicialMap> find_isomorphism(const FiniteSimplicialSet& a, const FiniteSimplicialSet& x);

}  // namespace sharp
