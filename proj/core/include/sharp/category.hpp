#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace sharp {

/// A finite category with an explicit composition table. Identities are
/// created automatically and named "id_<object>".
class FiniteCategory {
 public:
  struct Arrow {
    std::string id;
    int src = 0;
    int dst = 0;
  };

  class Builder;

  int object_count() const { return static_cast<int>(objects_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const std::string& object(int i) const { return objects_[static_cast<std::size_t>(i)]; }
  const Arrow& arrow(int a) const { return arrows_[static_cast<std::size_t>(a)]; }
  std::optional<int> find_object(std::string_view name) const;
  std::optional<int> find_arrow(std::string_view id) const;
  int object_index(std::string_view name) const;
  int arrow_index(std::string_view id) const;

  int identity(int object) const { return identities_[static_cast<std::size_t>(object)]; }
  bool is_identity(int a) const { return identities_[static_cast<std::size_t>(arrow(a).src)] == a; }
  /// g ∘ f; throws unless dst(f) == src(g).
  int compose(int g, int f) const;
  std::vector<int> hom(int from, int to) const;

  /// Composable strings i_0 -> ... -> i_n as arrow lists in application
  /// order; for n = 0 the identities stand for the objects.
  std::vector<std::vector<int>> strings(int n) const;
  /// Length of the longest string of non-identity arrows, or nullopt when
  /// such strings are unbounded.
  std::optional<int> nerve_dimension() const;

  FiniteCategory opposite() const;

 private:
  std::vector<std::string> objects_;
  std::vector<Arrow> arrows_;
  std::vector<int> identities_;
  std::vector<std::vector<int>> table_;
  std::unordered_map<std::string, int> object_index_;
  std::unordered_map<std::string, int> arrow_index_;
};

class FiniteCategory::Builder {
 public:
  int add_object(std::string name);
  int add_arrow(std::string id, int src, int dst);
  int add_arrow(std::string id, std::string_view src, std::string_view dst);
  /// Records g ∘ f = gf for non-identity composable arrows, by id.
  void set_composite(std::string_view g, std::string_view f, std::string_view gf);
  /// Fills in composites forced by uniqueness of parallel arrows; useful for posets.
  void compose_thin();
  /// Throws InvariantError on missing composites or broken associativity.
  FiniteCategory build() const;

 private:
  std::vector<std::string> objects_;
  std::vector<Arrow> arrows_;
  std::vector<std::pair<std::pair<std::string, std::string>, std::string>> composites_;
  bool thin_ = false;
};

/// A functor between finite categories, given on objects and arrows.
struct Functor {
  std::vector<int> on_objects;
  std::vector<int> on_arrows;
};

/// The slice category C/i together with its forgetful functor to C.
struct OverCategory {
  FiniteCategory category;
  Functor forget;
  /// The object of C/i given by the identity of i.
  int terminal = 0;
};
OverCategory over_category(const FiniteCategory& c, int object);

/// Full subcategory on the listed objects (in that order), with its inclusion.
struct Subcategory {
  FiniteCategory category;
  Functor inclusion;
};
Subcategory full_subcategory(const FiniteCategory& c, const std::vector<int>& objects);

/// Subsets of {1..n} ordered by inclusion; objects are named like "{1,3}".
struct SubsetPoset {
  int n = 0;
  bool proper_only = false;
  FiniteCategory category;
  std::vector<unsigned> masks;

  int object_of(unsigned mask) const;
  bool contains(unsigned mask) const;
};
SubsetPoset subset_poset(int n, bool proper_only);
std::string subset_name(unsigned mask);

/// Common shapes used by fixtures and generators.
FiniteCategory discrete_category(int objects);
/// 0 -> 1 -> ... -> (length); all composites present.
FiniteCategory chain_category(int length);
/// a <- c -> b with objects named a, b, c and arrows f: c->a, g: c->b.
FiniteCategory span_category();
/// a -> c <- b.
FiniteCategory cospan_category();
/// Objects 0, 1: two parallel arrows u, v: 0 -> 1.
FiniteCategory parallel_pair_category();
/// Commuting square 0 -> 1, 0 -> 2, 1 -> 3, 2 -> 3.
FiniteCategory square_category();
/// Single arrow a -> b.
FiniteCategory arrow_category();

}  // namespace sharp
