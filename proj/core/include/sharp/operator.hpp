#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sharp {

/// Largest simplicial degree any operator can address.
inline constexpr int kMaxDegree = 30;

/// Default cap on the dimension of generated complexes.
inline constexpr int kDefaultDimCap = 8;

class DimensionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A monotone map [m] -> [n] of the simplex category, stored as its value
/// list. It acts contravariantly: an n-simplex x becomes the m-simplex x·θ.
class SimplicialOperator {
 public:
  SimplicialOperator() = default;

  /// Throws std::invalid_argument unless `values` is weakly increasing with
  /// every entry at most `codomain_dim`.
  SimplicialOperator(int codomain_dim, std::span<const int> values);
  SimplicialOperator(int codomain_dim, std::initializer_list<int> values)
      : SimplicialOperator(codomain_dim, std::span<const int>(values.begin(), values.size())) {}

  static SimplicialOperator identity(int n);
  /// Coface δ_i : [n-1] -> [n] skipping i; acting, it is the face d_i.
  static SimplicialOperator face(int n, int i);
  /// Codegeneracy σ_i : [n+1] -> [n] hitting i twice; acting, it is s_i.
  static SimplicialOperator degeneracy(int n, int i);
  /// Injective operator [k] -> [n] with image the sorted vertex list.
  static SimplicialOperator inclusion(int n, std::span<const int> vertices);

  int domain_dim() const { return domain_; }
  int codomain_dim() const { return codomain_; }
  int operator()(int k) const { return values_[static_cast<std::size_t>(k)]; }
  std::vector<int> values() const;

  bool is_identity() const;
  bool is_injective() const;
  bool is_surjective() const;

  /// (*this)∘inner, i.e. k ↦ (*this)(inner(k)).
  SimplicialOperator after(const SimplicialOperator& inner) const;

  /// Unique factorisation *this = mono ∘ epi with epi surjective, mono injective.
  struct Factorization;
  Factorization factor() const;

  std::string to_string() const;

  friend bool operator==(const SimplicialOperator& a, const SimplicialOperator& b) {
    return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.values_ == b.values_;
  }
  friend auto operator<=>(const SimplicialOperator& a, const SimplicialOperator& b) {
    if (auto c = a.domain_ <=> b.domain_; c != 0) return c;
    if (auto c = a.codomain_ <=> b.codomain_; c != 0) return c;
    return a.values_ <=> b.values_;
  }

  std::size_t hash() const;

 private:
  std::int8_t domain_ = 0;
  std::int8_t codomain_ = 0;
  std::array<std::int8_t, kMaxDegree + 1> values_{};
};

struct SimplicialOperator::Factorization {
  SimplicialOperator epi;
  SimplicialOperator mono;
};

/// All monotone maps [m] -> [n].
std::vector<SimplicialOperator> monotone_maps(int m, int n);
/// All surjective monotone maps [m] -> [n].
std::vector<SimplicialOperator> surjections(int m, int n);

}  // namespace sharp

template <>
struct std::hash<sharp::SimplicialOperator> {
  std::size_t operator()(const sharp::SimplicialOperator& op) const noexcept { return op.hash(); }
};
