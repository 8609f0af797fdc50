#include "oracle/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>

namespace oracle {

Diagonal smith(Matrix m) {
  Diagonal out;
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int t = 0;
  while (t < rows && t < cols) {
    // pivot: smallest nonzero absolute value in the remaining block
    int pr = -1, pc = -1;
    for (int r = t; r < rows; ++r) {
      for (int c = t; c < cols; ++c) {
        if (m[r][c] != 0 && (pr < 0 || std::llabs(m[r][c]) < std::llabs(m[pr][pc]))) {
          pr = r;
          pc = c;
        }
      }
    }
    if (pr < 0) break;
    std::swap(m[t], m[pr]);
    for (auto& row : m) std::swap(row[t], row[pc]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int r = t + 1; r < rows; ++r) {
        const auto q = m[r][t] / m[t][t];
        if (q != 0) {
          for (int c = t; c < cols; ++c) m[r][c] -= q * m[t][c];
        }
        if (m[r][t] != 0) {
          clean = false;
          std::swap(m[t], m[r]);
        }
      }
      for (int c = t + 1; c < cols; ++c) {
        const auto q = m[t][c] / m[t][t];
        if (q != 0) {
          for (int r = t; r < rows; ++r) m[r][c] -= q * m[r][t];
        }
        if (m[t][c] != 0) {
          clean = false;
          for (auto& row : m) std::swap(row[t], row[c]);
        }
      }
      if (!clean) continue;
      // the pivot must divide the rest of the block
      for (int r = t + 1; r < rows && clean; ++r) {
        for (int c = t + 1; c < cols; ++c) {
          if (m[r][c] % m[t][t] != 0) {
            for (int k = t; k < cols; ++k) m[t][k] += m[r][k];
            clean = false;
            break;
          }
        }
      }
    }
    out.invariant_factors.push_back(std::llabs(m[t][t]));
    ++t;
  }
  out.rank = t;
  return out;
}

namespace {

std::vector<int> positions(const sharp::FiniteSimplicialSet& x, int n) {
  std::vector<int> at(static_cast<std::size_t>(x.size()), -1);
  int k = 0;
  for (int i = 0; i < x.size(); ++i) {
    if (x.dim(i) == n) at[static_cast<std::size_t>(i)] = k++;
  }
  return at;
}

int count_dim(const sharp::FiniteSimplicialSet& x, int n) {
  int k = 0;
  for (int i = 0; i < x.size(); ++i) k += x.dim(i) == n;
  return k;
}

Matrix zeros(int r, int c) { return Matrix(static_cast<std::size_t>(r), std::vector<std::int64_t>(static_cast<std::size_t>(c), 0)); }

// Adds the boundary of the nondegenerate simplex i of x into column `col`
// of m, rows offset by `row0` and indexed by `pos`, scaled by `sign`.
void add_boundary(Matrix& m, const sharp::FiniteSimplicialSet& x, int i, const std::vector<int>& pos, int row0, int col,
                  int sign) {
  const auto faces = x.faces(i);
  for (std::size_t k = 0; k < faces.size(); ++k) {
    if (!faces[k].degeneracy.is_identity()) continue;
    const int r = row0 + pos[static_cast<std::size_t>(faces[k].index)];
    m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] += (k % 2 == 0 ? 1 : -1) * sign;
  }
}

}  // namespace

Complex chains(const sharp::FiniteSimplicialSet& x, int top) {
  Complex c;
  for (int n = 0; n <= top; ++n) c.ranks.push_back(count_dim(x, n));
  c.boundary.resize(static_cast<std::size_t>(top + 1));
  for (int n = 1; n <= top; ++n) {
    auto& m = c.boundary[static_cast<std::size_t>(n)];
    m = zeros(c.ranks[static_cast<std::size_t>(n - 1)], c.ranks[static_cast<std::size_t>(n)]);
    const auto below = positions(x, n - 1);
    int col = 0;
    for (int i = 0; i < x.size(); ++i) {
      if (x.dim(i) != n) continue;
      add_boundary(m, x, i, below, 0, col++, 1);
    }
  }
  return c;
}

Complex cone(const sharp::SimplicialMap& f, int top) {
  const auto& a = f.source();
  const auto& b = f.target();
  Complex c;
  for (int n = 0; n <= top; ++n) c.ranks.push_back(count_dim(b, n) + (n > 0 ? count_dim(a, n - 1) : 0));
  c.boundary.resize(static_cast<std::size_t>(top + 1));
  for (int n = 1; n <= top; ++n) {
    auto& m = c.boundary[static_cast<std::size_t>(n)];
    m = zeros(c.ranks[static_cast<std::size_t>(n - 1)], c.ranks[static_cast<std::size_t>(n)]);
    const auto b_below = positions(b, n - 1);
    const auto a_below = positions(a, n - 2);
    const int b_rows = count_dim(b, n - 1);
    int col = 0;
    for (int i = 0; i < b.size(); ++i) {
      if (b.dim(i) == n) add_boundary(m, b, i, b_below, 0, col++, 1);
    }
    for (int i = 0; i < a.size(); ++i) {
      if (a.dim(i) != n - 1) continue;
      const auto& im = f.image(i);
      if (im.degeneracy.is_identity()) m[static_cast<std::size_t>(b_below[static_cast<std::size_t>(im.index)])][static_cast<std::size_t>(col)] += 1;
      if (n - 1 > 0) add_boundary(m, a, i, a_below, b_rows, col, -1);
      ++col;
    }
  }
  return c;
}

std::vector<Group> homology(const Complex& c) {
  const int top = static_cast<int>(c.ranks.size()) - 1;
  std::vector<Diagonal> d(static_cast<std::size_t>(top + 2));
  for (int n = 1; n <= top; ++n) d[static_cast<std::size_t>(n)] = smith(c.boundary[static_cast<std::size_t>(n)]);
  std::vector<Group> out;
  for (int n = 0; n <= top; ++n) {
    Group g;
    const int out_rank = n > 0 ? d[static_cast<std::size_t>(n)].rank : 0;
    const int in_rank = n < top ? d[static_cast<std::size_t>(n + 1)].rank : 0;
    g.betti = c.ranks[static_cast<std::size_t>(n)] - out_rank - in_rank;
    if (n < top) {
      for (auto v : d[static_cast<std::size_t>(n + 1)].invariant_factors) {
        if (v > 1) g.torsion.push_back(v);
      }
      std::sort(g.torsion.begin(), g.torsion.end());
    }
    out.push_back(g);
  }
  return out;
}

std::vector<Group> homology(const sharp::FiniteSimplicialSet& x, int top) {
  auto h = homology(chains(x, top + 1));
  h.pop_back();
  return h;
}

std::vector<Group> cone_homology(const sharp::SimplicialMap& f, int top) {
  auto h = homology(cone(f, top + 1));
  h.pop_back();
  return h;
}

std::vector<int> component_labels(const sharp::FiniteSimplicialSet& x) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(x.size()));
  for (int i = 0; i < x.size(); ++i) {
    if (x.dim(i) != 1) continue;
    const auto f = x.faces(i);
    adj[static_cast<std::size_t>(f[0].index)].push_back(f[1].index);
    adj[static_cast<std::size_t>(f[1].index)].push_back(f[0].index);
  }
  std::vector<int> label(static_cast<std::size_t>(x.size()), -1);
  int next = 0;
  for (int v = 0; v < x.size(); ++v) {
    if (x.dim(v) != 0 || label[static_cast<std::size_t>(v)] >= 0) continue;
    std::vector<int> stack{v};
    label[static_cast<std::size_t>(v)] = next;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int w : adj[static_cast<std::size_t>(u)]) {
        if (label[static_cast<std::size_t>(w)] < 0) {
          label[static_cast<std::size_t>(w)] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

int component_count(const sharp::FiniteSimplicialSet& x) {
  const auto l = component_labels(x);
  return l.empty() ? 0 : std::max(0, *std::max_element(l.begin(), l.end()) + 1);
}

bool pi0_bijective(const sharp::SimplicialMap& f) {
  const auto la = component_labels(f.source());
  const auto lb = component_labels(f.target());
  const int na = component_count(f.source());
  const int nb = component_count(f.target());
  if (na != nb) return false;
  std::vector<int> image(static_cast<std::size_t>(na), -1);
  std::vector<bool> hit(static_cast<std::size_t>(nb), false);
  for (int v = 0; v < f.source().size(); ++v) {
    if (f.source().dim(v) != 0) continue;
    const int c = la[static_cast<std::size_t>(v)];
    const int d = lb[static_cast<std::size_t>(f.image(v).index)];
    if (image[static_cast<std::size_t>(c)] < 0) {
      if (hit[static_cast<std::size_t>(d)]) return false;
      image[static_cast<std::size_t>(c)] = d;
      hit[static_cast<std::size_t>(d)] = true;
    } else if (image[static_cast<std::size_t>(c)] != d) {
      return false;
    }
  }
  return true;
}

std::vector<sharp::SimplexRef> all_simplices(const sharp::FiniteSimplicialSet& x, int n) {
  std::vector<sharp::SimplexRef> out;
  for (int i = 0; i < x.size(); ++i) {
    const int k = x.dim(i);
    if (k > n) continue;
    // surjections [n] -> [k]: choose the k positions where the value steps up
    std::vector<int> values(static_cast<std::size_t>(n + 1));
    std::function<void(int, int)> go = [&](int pos, int value) {
      if (pos > n) {
        if (value == k) out.push_back({i, sharp::SimplicialOperator(k, values)});
        return;
      }
      values[static_cast<std::size_t>(pos)] = value;
      go(pos + 1, value);
      if (value < k && pos > 0) {
        values[static_cast<std::size_t>(pos)] = value + 1;
        go(pos + 1, value + 1);
      }
    };
    values[0] = 0;
    if (n == 0) {
      if (k == 0) out.push_back({i, sharp::SimplicialOperator::identity(0)});
      continue;
    }
    go(1, 0);
  }
  return out;
}

namespace {

bool repeats_at(const sharp::SimplicialOperator& s, int j) { return s(j) == s(j + 1); }

sharp::SimplexRef push(const sharp::SimplicialMap& f, const sharp::SimplexRef& s) {
  const auto& im = f.image(s.index);
  return {im.index, im.degeneracy.after(s.degeneracy)};
}

}  // namespace

std::uint64_t product_nondegenerate(const sharp::FiniteSimplicialSet& x, const sharp::FiniteSimplicialSet& y, int n) {
  std::uint64_t count = 0;
  const auto xs = all_simplices(x, n);
  const auto ys = all_simplices(y, n);
  for (const auto& a : xs) {
    for (const auto& b : ys) {
      bool degenerate = false;
      for (int j = 0; j < n && !degenerate; ++j) degenerate = repeats_at(a.degeneracy, j) && repeats_at(b.degeneracy, j);
      count += !degenerate;
    }
  }
  return count;
}

std::uint64_t fiber_product_size(const sharp::SimplicialMap& f, const sharp::SimplicialMap& g, int n) {
  std::uint64_t count = 0;
  const auto xs = all_simplices(f.source(), n);
  const auto ys = all_simplices(g.source(), n);
  for (const auto& a : xs) {
    const auto fa = push(f, a);
    for (const auto& b : ys) count += fa == push(g, b);
  }
  return count;
}

}  // namespace oracle
