#include "sharp/operator.hpp"

#include <algorithm>
#include <sstream>

namespace sharp {

namespace {

void check_degree(int d) {
  if (d < 0 || d > kMaxDegree) {
    throw DimensionError("simplicial degree " + std::to_string(d) + " outside [0, " +
                         std::to_string(kMaxDegree) + "]");
  }
}

}  // namespace

SimplicialOperator::SimplicialOperator(int codomain_dim, std::span<const int> values) {
  if (values.empty()) throw std::invalid_argument("operator needs at least one value");
  check_degree(codomain_dim);
  check_degree(static_cast<int>(values.size()) - 1);
  domain_ = static_cast<std::int8_t>(values.size() - 1);
  codomain_ = static_cast<std::int8_t>(codomain_dim);
  int prev = 0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    const int v = values[k];
    if (v < prev || v > codomain_dim) {
      throw std::invalid_argument("operator values must be weakly increasing within [0, " +
                                  std::to_string(codomain_dim) + "]");
    }
    values_[k] = static_cast<std::int8_t>(v);
    prev = v;
  }
}

SimplicialOperator SimplicialOperator::identity(int n) {
  check_degree(n);
  SimplicialOperator op;
  op.domain_ = op.codomain_ = static_cast<std::int8_t>(n);
  for (int k = 0; k <= n; ++k) op.values_[k] = static_cast<std::int8_t>(k);
  return op;
}

SimplicialOperator SimplicialOperator::face(int n, int i) {
  if (n < 1 || i < 0 || i > n) throw std::invalid_argument("face index out of range");
  check_degree(n);
  SimplicialOperator op;
  op.domain_ = static_cast<std::int8_t>(n - 1);
  op.codomain_ = static_cast<std::int8_t>(n);
  for (int k = 0; k < n; ++k) op.values_[k] = static_cast<std::int8_t>(k < i ? k : k + 1);
  return op;
}

SimplicialOperator SimplicialOperator::degeneracy(int n, int i) {
  if (n < 0 || i < 0 || i > n) throw std::invalid_argument("degeneracy index out of range");
  check_degree(n + 1);
  SimplicialOperator op;
  op.domain_ = static_cast<std::int8_t>(n + 1);
  op.codomain_ = static_cast<std::int8_t>(n);
  for (int k = 0; k <= n + 1; ++k) op.values_[k] = static_cast<std::int8_t>(k <= i ? k : k - 1);
  return op;
}

SimplicialOperator SimplicialOperator::inclusion(int n, std::span<const int> vertices) {
  if (vertices.empty()) throw std::invalid_argument("inclusion needs a vertex");
  for (std::size_t k = 1; k < vertices.size(); ++k) {
    if (vertices[k] <= vertices[k - 1]) throw std::invalid_argument("inclusion vertices must increase");
  }
  return SimplicialOperator(n, vertices);
}

std::vector<int> SimplicialOperator::values() const {
  return {values_.begin(), values_.begin() + domain_ + 1};
}

bool SimplicialOperator::is_identity() const {
  if (domain_ != codomain_) return false;
  for (int k = 0; k <= domain_; ++k) {
    if (values_[k] != k) return false;
  }
  return true;
}

bool SimplicialOperator::is_injective() const {
  for (int k = 1; k <= domain_; ++k) {
    if (values_[k] == values_[k - 1]) return false;
  }
  return true;
}

bool SimplicialOperator::is_surjective() const {
  if (values_[0] != 0 || values_[domain_] != codomain_) return false;
  for (int k = 1; k <= domain_; ++k) {
    if (values_[k] - values_[k - 1] > 1) return false;
  }
  return true;
}

SimplicialOperator SimplicialOperator::after(const SimplicialOperator& inner) const {
  if (inner.codomain_ != domain_) {
    throw std::invalid_argument("operator composition: " + inner.to_string() + " does not land in the domain of " +
                                to_string());
  }
  SimplicialOperator op;
  op.domain_ = inner.domain_;
  op.codomain_ = codomain_;
  for (int k = 0; k <= inner.domain_; ++k) op.values_[k] = values_[inner.values_[k]];
  return op;
}

SimplicialOperator::Factorization SimplicialOperator::factor() const {
  Factorization f;
  f.epi.domain_ = domain_;
  int r = 0;
  f.mono.values_[0] = values_[0];
  f.epi.values_[0] = 0;
  for (int k = 1; k <= domain_; ++k) {
    if (values_[k] != values_[k - 1]) {
      ++r;
      f.mono.values_[r] = values_[k];
    }
    f.epi.values_[k] = static_cast<std::int8_t>(r);
  }
  f.epi.codomain_ = static_cast<std::int8_t>(r);
  f.mono.domain_ = static_cast<std::int8_t>(r);
  f.mono.codomain_ = codomain_;
  return f;
}

std::string SimplicialOperator::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int k = 0; k <= domain_; ++k) {
    if (k) os << ',';
    os << static_cast<int>(values_[k]);
  }
  os << "]->" << static_cast<int>(codomain_);
  return os.str();
}

std::size_t SimplicialOperator::hash() const {
  std::size_t h = static_cast<std::size_t>(domain_) * 131u + static_cast<std::size_t>(codomain_);
  for (int k = 0; k <= domain_; ++k) h = h * 37u + static_cast<std::size_t>(values_[k]);
  return h;
}

std::vector<SimplicialOperator> monotone_maps(int m, int n) {
  check_degree(m);
  check_degree(n);
  std::vector<SimplicialOperator> out;
  std::vector<int> vals(static_cast<std::size_t>(m + 1), 0);
  while (true) {
    out.emplace_back(n, vals);
    int k = m;
    while (k >= 0 && vals[k] == n) --k;
    if (k < 0) break;
    const int v = vals[k] + 1;
    for (int j = k; j <= m; ++j) vals[j] = v;
  }
  return out;
}

std::vector<SimplicialOperator> surjections(int m, int n) {
  std::vector<SimplicialOperator> out;
  if (n > m) return out;
  for (auto& op : monotone_maps(m, n)) {
    if (op.is_surjective()) out.push_back(op);
  }
  return out;
}

}  // namespace sharp
