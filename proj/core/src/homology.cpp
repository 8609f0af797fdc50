#include "sharp/homology.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include "sharp/union_find.hpp"

namespace sharp {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in homology computation");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in homology computation");
  return r;
}

using Dense = std::vector<std::vector<std::int64_t>>;

// Diagonalizes in place; returns the absolute diagonal entries.
std::vector<std::int64_t> dense_smith(Dense a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<std::int64_t> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      std::size_t pr = rows, pc = cols;
      std::int64_t best = 0;
      for (std::size_t r = t; r < rows; ++r) {
        for (std::size_t c = t; c < cols; ++c) {
          const auto v = std::llabs(a[r][c]);
          if (v != 0 && (best == 0 || v < best)) {
            best = v;
            pr = r;
            pc = c;
          }
        }
      }
      if (best == 0) return diag;
      std::swap(a[t], a[pr]);
      for (auto& row : a) std::swap(row[t], row[pc]);
      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (a[r][t] == 0) continue;
        const std::int64_t q = a[r][t] / a[t][t];
        for (std::size_t c = t; c < cols; ++c) a[r][c] = checked_sub(a[r][c], checked_mul(q, a[t][c]));
        if (a[r][t] != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (a[t][c] == 0) continue;
        const std::int64_t q = a[t][c] / a[t][t];
        for (std::size_t r = t; r < rows; ++r) a[r][c] = checked_sub(a[r][c], checked_mul(q, a[r][t]));
        if (a[t][c] != 0) clean = false;
      }
      if (!clean) continue;
      std::size_t bad = rows;
      for (std::size_t r = t + 1; r < rows && bad == rows; ++r) {
        for (std::size_t c = t + 1; c < cols; ++c) {
          if (a[r][c] % a[t][t] != 0) {
            bad = r;
            break;
          }
        }
      }
      if (bad == rows) break;
      for (std::size_t c = t; c < cols; ++c) a[t][c] = checked_sub(a[t][c], -a[bad][c]);
    }
    diag.push_back(std::llabs(a[t][t]));
  }
  return diag;
}

}  // namespace

void SparseMatrix::add(int r, int c, std::int64_t v) {
  auto& row = entries[static_cast<std::size_t>(r)];
  auto [it, inserted] = row.emplace(c, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) row.erase(it);
  } else if (v == 0) {
    row.erase(it);
  }
}

std::int64_t SparseMatrix::at(int r, int c) const {
  const auto& row = entries[static_cast<std::size_t>(r)];
  auto it = row.find(c);
  return it == row.end() ? 0 : it->second;
}

SmithForm smith_form(const SparseMatrix& m) {
  auto rows = m.entries;
  std::vector<std::set<int>> cols(static_cast<std::size_t>(m.cols));
  for (int r = 0; r < m.rows; ++r) {
    for (const auto& [c, v] : rows[static_cast<std::size_t>(r)]) cols[static_cast<std::size_t>(c)].insert(r);
  }
  SmithForm out;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int c = 0; c < m.cols; ++c) {
      auto& col = cols[static_cast<std::size_t>(c)];
      if (col.empty()) continue;
      int pivot = -1;
      std::size_t best = 0;
      for (int r : col) {
        const auto v = rows[static_cast<std::size_t>(r)].at(c);
        const auto sz = rows[static_cast<std::size_t>(r)].size();
        if ((v == 1 || v == -1) && (pivot < 0 || sz < best)) {
          pivot = r;
          best = sz;
        }
      }
      if (pivot < 0) continue;
      progress = true;
      auto& prow = rows[static_cast<std::size_t>(pivot)];
      const std::int64_t pv = prow.at(c);
      const std::vector<int> others(col.begin(), col.end());
      for (int r : others) {
        if (r == pivot) continue;
        auto& row = rows[static_cast<std::size_t>(r)];
        const std::int64_t factor = checked_mul(row.at(c), pv);
        for (const auto& [pc, v] : prow) {
          auto [it, inserted] = row.emplace(pc, 0);
          it->second = checked_sub(it->second, checked_mul(factor, v));
          if (it->second == 0) {
            row.erase(it);
            cols[static_cast<std::size_t>(pc)].erase(r);
          } else if (inserted) {
            cols[static_cast<std::size_t>(pc)].insert(r);
          }
        }
      }
      for (const auto& [pc, v] : prow) cols[static_cast<std::size_t>(pc)].erase(pivot);
      prow.clear();
      ++out.rank;
    }
  }
  std::vector<int> live_rows, live_cols;
  for (int r = 0; r < m.rows; ++r) {
    if (!rows[static_cast<std::size_t>(r)].empty()) live_rows.push_back(r);
  }
  for (int c = 0; c < m.cols; ++c) {
    if (!cols[static_cast<std::size_t>(c)].empty()) live_cols.push_back(c);
  }
  if (live_rows.empty()) return out;
  std::vector<int> col_pos(static_cast<std::size_t>(m.cols), -1);
  for (std::size_t k = 0; k < live_cols.size(); ++k) col_pos[static_cast<std::size_t>(live_cols[k])] = static_cast<int>(k);
  Dense dense(live_rows.size(), std::vector<std::int64_t>(live_cols.size(), 0));
  for (std::size_t k = 0; k < live_rows.size(); ++k) {
    for (const auto& [c, v] : rows[static_cast<std::size_t>(live_rows[k])]) {
      dense[k][static_cast<std::size_t>(col_pos[static_cast<std::size_t>(c)])] = v;
    }
  }
  for (auto d : dense_smith(std::move(dense))) {
    ++out.rank;
    if (d > 1) out.torsion.push_back(d);
  }
  std::sort(out.torsion.begin(), out.torsion.end());
  return out;
}

std::string HomologyGroup::to_string() const {
  std::ostringstream os;
  bool any = false;
  if (betti > 0) {
    os << 'Z';
    if (betti > 1) os << '^' << betti;
    any = true;
  }
  for (auto t : torsion) {
    if (any) os << " + ";
    os << "Z/" << t;
    any = true;
  }
  if (!any) os << '0';
  return os.str();
}

bool ChainComplex::is_complex() const {
  for (int n = 2; n <= top(); ++n) {
    const auto& outer = boundary[static_cast<std::size_t>(n - 1)];
    const auto& inner = boundary[static_cast<std::size_t>(n)];
    std::vector<std::vector<std::pair<int, std::int64_t>>> outer_cols(static_cast<std::size_t>(outer.cols));
    for (int r = 0; r < outer.rows; ++r) {
      for (const auto& [c, w] : outer.entries[static_cast<std::size_t>(r)]) outer_cols[static_cast<std::size_t>(c)].push_back({r, w});
    }
    std::vector<std::map<int, std::int64_t>> product(static_cast<std::size_t>(inner.cols));
    for (int mid = 0; mid < inner.rows; ++mid) {
      for (const auto& [c, v] : inner.entries[static_cast<std::size_t>(mid)]) {
        for (const auto& [r, w] : outer_cols[static_cast<std::size_t>(mid)]) product[static_cast<std::size_t>(c)][r] += v * w;
      }
    }
    for (const auto& col : product) {
      for (const auto& [r, v] : col) {
        if (v != 0) return false;
      }
    }
  }
  return true;
}

namespace {

std::vector<int> positions(const FiniteSimplicialSet& x) {
  std::vector<int> pos(static_cast<std::size_t>(x.size()), -1);
  for (int n = 0; n <= x.dim(); ++n) {
    int k = 0;
    for (int i : x.of_dim(n)) pos[static_cast<std::size_t>(i)] = k++;
  }
  return pos;
}

void add_boundary(const FiniteSimplicialSet& x, const std::vector<int>& pos, int n, SparseMatrix& m, int row_offset,
                  int col_offset, std::int64_t sign) {
  for (int i : x.of_dim(n)) {
    const auto faces = x.faces(i);
    for (std::size_t k = 0; k < faces.size(); ++k) {
      if (!faces[k].is_nondegenerate()) continue;
      const std::int64_t s = (k % 2 == 0 ? 1 : -1) * sign;
      m.add(row_offset + pos[static_cast<std::size_t>(faces[k].index)], col_offset + pos[static_cast<std::size_t>(i)], s);
    }
  }
}

}  // namespace

ChainComplex chain_complex(const FiniteSimplicialSet& x, int max_degree) {
  if (max_degree > kMaxDegree) throw DimensionError("homology degree above the maximal degree");
  ChainComplex c;
  const auto pos = positions(x);
  for (int n = 0; n <= max_degree; ++n) {
    c.ranks.push_back(x.count(n));
    SparseMatrix m(n == 0 ? 0 : x.count(n - 1), x.count(n));
    if (n > 0) add_boundary(x, pos, n, m, 0, 0, 1);
    c.boundary.push_back(std::move(m));
  }
  return c;
}

ChainComplex mapping_cone(const SimplicialMap& f, int max_degree) {
  const auto& a = f.source();
  const auto& b = f.target();
  const auto pa = positions(a);
  const auto pb = positions(b);
  ChainComplex c;
  for (int n = 0; n <= max_degree; ++n) {
    c.ranks.push_back(b.count(n) + a.count(n - 1));
    if (n == 0) {
      c.boundary.emplace_back(0, c.ranks[0]);
      continue;
    }
    const int rows_b = b.count(n - 1);
    SparseMatrix m(rows_b + a.count(n - 2), c.ranks[static_cast<std::size_t>(n)]);
    add_boundary(b, pb, n, m, 0, 0, 1);
    const int col_a = b.count(n);
    for (int i : a.of_dim(n - 1)) {
      const auto& im = f.image(i);
      if (im.is_nondegenerate()) m.add(pb[static_cast<std::size_t>(im.index)], col_a + pa[static_cast<std::size_t>(i)], 1);
    }
    if (n >= 2) add_boundary(a, pa, n - 1, m, rows_b, col_a, -1);
    c.boundary.push_back(std::move(m));
  }
  return c;
}

std::vector<HomologyGroup> homology(const ChainComplex& c) {
  if (!c.is_complex()) throw std::logic_error("boundary maps do not compose to zero");
  std::vector<SmithForm> forms;
  for (const auto& m : c.boundary) forms.push_back(smith_form(m));
  std::vector<HomologyGroup> out;
  for (int n = 0; n <= c.top(); ++n) {
    HomologyGroup g;
    const int next_rank = n + 1 <= c.top() ? forms[static_cast<std::size_t>(n + 1)].rank : 0;
    g.betti = c.ranks[static_cast<std::size_t>(n)] - forms[static_cast<std::size_t>(n)].rank - next_rank;
    if (n + 1 <= c.top()) g.torsion = forms[static_cast<std::size_t>(n + 1)].torsion;
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<HomologyGroup> homology(const FiniteSimplicialSet& x, int max_degree) {
  if (max_degree < 0) return {};
  auto h = homology(chain_complex(x, max_degree + 1));
  h.resize(static_cast<std::size_t>(max_degree + 1));
  return h;
}

std::vector<HomologyGroup> homology(const FiniteSimplicialSet& x) { return homology(x, std::max(x.dim(), 0)); }

Components components(const FiniteSimplicialSet& x) {
  UnionFind uf(static_cast<std::size_t>(x.size()));
  for (int e : x.of_dim(1)) {
    const auto faces = x.faces(e);
    uf.unite(static_cast<std::size_t>(faces[0].index), static_cast<std::size_t>(faces[1].index));
  }
  Components out;
  out.of_vertex.assign(static_cast<std::size_t>(x.size()), -1);
  std::vector<int> label(static_cast<std::size_t>(x.size()), -1);
  for (int v : x.of_dim(0)) {
    const auto r = uf.find(static_cast<std::size_t>(v));
    if (label[r] < 0) label[r] = out.count++;
    out.of_vertex[static_cast<std::size_t>(v)] = label[r];
  }
  return out;
}

}  // namespace sharp
