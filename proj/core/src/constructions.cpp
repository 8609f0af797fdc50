#include "sharp/constructions.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_map>

namespace sharp {

namespace {

std::string vertex_name(unsigned mask) {
  std::string s = "[";
  bool first = true;
  for (int v = 0; v < 32; ++v) {
    if (!(mask >> v & 1u)) continue;
    if (!first) s += ',';
    s += std::to_string(v);
    first = false;
  }
  return s + "]";
}

FiniteSimplicialSet simplex_like(int n, unsigned skip_a, unsigned skip_b) {
  if (n < 0) throw std::invalid_argument("standard simplex of negative dimension");
  if (n > kDefaultDimCap) throw DimensionError("standard simplex of dimension " + std::to_string(n) + " exceeds the cap");
  const unsigned full = (1u << (n + 1)) - 1u;
  FiniteSimplicialSet::Builder b;
  std::unordered_map<unsigned, int> at;
  for (int k = 0; k <= n; ++k) {
    for (unsigned mask = 1; mask <= full; ++mask) {
      if (std::popcount(mask) != k + 1 || mask == skip_a || mask == skip_b) continue;
      std::vector<SimplexRef> faces;
      if (k > 0) {
        for (int v = 0; v <= n; ++v) {
          if (!(mask >> v & 1u)) continue;
          faces.push_back({at.at(mask & ~(1u << v)), SimplicialOperator::identity(k - 1)});
        }
      }
      at[mask] = b.add(vertex_name(mask), std::move(faces));
    }
  }
  return b.build_unchecked();
}

std::string name_of(const std::vector<int>& vertices) {
  std::string s = "[";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(vertices[i]);
  }
  return s + "]";
}

std::vector<int> subset_vertices(const std::string& name) {
  std::vector<int> out;
  int cur = -1;
  for (char c : name) {
    if (c >= '0' && c <= '9') {
      cur = (cur < 0 ? 0 : cur * 10) + (c - '0');
    } else if (cur >= 0) {
      out.push_back(cur);
      cur = -1;
    }
  }
  return out;
}

}  // namespace

FiniteSimplicialSet standard_simplex(int n) { return simplex_like(n, 0, 0); }

FiniteSimplicialSet boundary(int n) {
  if (n < 0) throw std::invalid_argument("boundary of negative dimension");
  return simplex_like(n, (1u << (n + 1)) - 1u, 0);
}

FiniteSimplicialSet horn(int n, int k) {
  if (n < 1 || k < 0 || k > n) throw std::invalid_argument("horn index out of range");
  const unsigned full = (1u << (n + 1)) - 1u;
  return simplex_like(n, full, full & ~(1u << k));
}

FiniteSimplicialSet point() { return standard_simplex(0); }

SimplexRef simplex_of(const FiniteSimplicialSet& standard, const std::vector<int>& vertices) {
  return standard.nondegenerate(standard.index_of(name_of(vertices)));
}

SimplicialMap characteristic_map(const FiniteSimplicialSet& x, const SimplexRef& s) {
  const int m = s.dim();
  auto source = standard_simplex(m);
  std::vector<SimplexRef> images;
  images.reserve(static_cast<std::size_t>(source.size()));
  for (int i = 0; i < source.size(); ++i) {
    const auto verts = subset_vertices(source.id(i));
    images.push_back(x.apply(s, SimplicialOperator::inclusion(m, verts)));
  }
  return SimplicialMap::unchecked(std::move(source), x, std::move(images));
}

SimplicialMap operator_map(const SimplicialOperator& op) {
  auto target = standard_simplex(op.codomain_dim());
  const auto top = target.nondegenerate(target.size() - 1);
  return characteristic_map(target, target.apply(top, op));
}

SimplicialMap simplex_inclusion(const FiniteSimplicialSet& sub, int n) {
  auto target = standard_simplex(n);
  std::vector<SimplexRef> images;
  for (int i = 0; i < sub.size(); ++i) images.push_back(target.nondegenerate(target.index_of(sub.id(i))));
  return SimplicialMap(sub, std::move(target), std::move(images));
}

SimplicialMap to_point(const FiniteSimplicialSet& x) {
  std::vector<SimplexRef> images;
  images.reserve(static_cast<std::size_t>(x.size()));
  for (int i = 0; i < x.size(); ++i) {
    std::vector<int> zeros(static_cast<std::size_t>(x.dim(i) + 1), 0);
    images.push_back({0, SimplicialOperator(0, zeros)});
  }
  return SimplicialMap::unchecked(x, point(), std::move(images));
}

SimplicialMap vertex_map(const FiniteSimplicialSet& x, int vertex) {
  if (vertex < 0 || vertex >= x.size() || x.dim(vertex) != 0) throw std::invalid_argument("vertex_map: not a vertex");
  return SimplicialMap::unchecked(point(), x, {x.nondegenerate(vertex)});
}

SimplicialMap subcomplex(const FiniteSimplicialSet& x, const std::vector<int>& keep) {
  std::vector<char> mark(static_cast<std::size_t>(x.size()), 0);
  std::vector<int> stack(keep.begin(), keep.end());
  while (!stack.empty()) {
    const int i = stack.back();
    stack.pop_back();
    if (mark[static_cast<std::size_t>(i)]) continue;
    mark[static_cast<std::size_t>(i)] = 1;
    for (const auto& f : x.faces(i)) stack.push_back(f.index);
  }
  FiniteSimplicialSet::Builder b;
  std::vector<int> local(static_cast<std::size_t>(x.size()), -1);
  std::vector<SimplexRef> images;
  for (int i = 0; i < x.size(); ++i) {
    if (!mark[static_cast<std::size_t>(i)]) continue;
    std::vector<SimplexRef> faces;
    for (const auto& f : x.faces(i)) faces.push_back({local[static_cast<std::size_t>(f.index)], f.degeneracy});
    local[static_cast<std::size_t>(i)] = b.add(x.id(i), std::move(faces));
    images.push_back(x.nondegenerate(i));
  }
  return SimplicialMap::unchecked(b.build_unchecked(), x, std::move(images));
}

SimplicialMap image(const SimplicialMap& f) {
  std::vector<int> keep;
  for (const auto& im : f.images()) keep.push_back(im.index);
  return subcomplex(f.target(), keep);
}

SimplicialMap skeleton(const FiniteSimplicialSet& x, int n) {
  std::vector<int> keep;
  for (int i = 0; i < x.size(); ++i) {
    if (x.dim(i) <= n) keep.push_back(i);
  }
  return subcomplex(x, keep);
}

SimplicialMap factor_through(const SimplicialMap& f, const SimplicialMap& m) {
  if (!is_mono(m)) throw std::invalid_argument("factor_through: not a monomorphism");
  if (!(f.target() == m.target())) throw std::invalid_argument("factor_through: different targets");
  std::vector<int> back(static_cast<std::size_t>(m.target().size()), -1);
  for (int i = 0; i < m.source().size(); ++i) back[static_cast<std::size_t>(m.image(i).index)] = i;
  std::vector<SimplexRef> images;
  for (const auto& im : f.images()) {
    const int v = back[static_cast<std::size_t>(im.index)];
    if (v < 0) throw std::invalid_argument("factor_through: image not contained in the subobject");
    images.push_back({v, im.degeneracy});
  }
  return SimplicialMap::unchecked(f.source(), m.source(), std::move(images));
}

Coproduct coproduct(const std::vector<FiniteSimplicialSet>& parts) {
  FiniteSimplicialSet::Builder b;
  std::vector<std::vector<SimplexRef>> images(parts.size());
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const auto& x = parts[k];
    const std::string prefix = std::to_string(k) + ":";
    std::vector<int> local(static_cast<std::size_t>(x.size()));
    for (int i = 0; i < x.size(); ++i) {
      std::vector<SimplexRef> faces;
      for (const auto& f : x.faces(i)) faces.push_back({local[static_cast<std::size_t>(f.index)], f.degeneracy});
      local[static_cast<std::size_t>(i)] = b.add(prefix + x.id(i), std::move(faces));
      images[k].push_back({local[static_cast<std::size_t>(i)], SimplicialOperator::identity(x.dim(i))});
    }
  }
  Coproduct out{b.build_unchecked(), {}};
  for (std::size_t k = 0; k < parts.size(); ++k) {
    out.injections.push_back(SimplicialMap::unchecked(parts[k], out.object, std::move(images[k])));
  }
  return out;
}

SimplicialMap copair(const Coproduct& c, const std::vector<SimplicialMap>& components) {
  if (components.size() != c.injections.size()) throw std::invalid_argument("copair: wrong number of components");
  if (components.empty()) return SimplicialMap::unchecked(c.object, FiniteSimplicialSet(), {});
  const auto& target = components.front().target();
  std::vector<SimplexRef> images(static_cast<std::size_t>(c.object.size()));
  for (std::size_t k = 0; k < components.size(); ++k) {
    if (!(components[k].target() == target)) throw std::invalid_argument("copair: components have different targets");
    if (!(components[k].source() == c.injections[k].source())) throw std::invalid_argument("copair: wrong source");
    const auto& inj = c.injections[k];
    for (int i = 0; i < inj.source().size(); ++i) {
      images[static_cast<std::size_t>(inj.image(i).index)] = components[k].image(i);
    }
  }
  return SimplicialMap::unchecked(c.object, target, std::move(images));
}

SimplicialMap coproduct_map(const Coproduct& from, const Coproduct& to, const std::vector<SimplicialMap>& components) {
  std::vector<SimplicialMap> legs;
  for (std::size_t k = 0; k < components.size(); ++k) legs.push_back(compose(to.injections.at(k), components[k]));
  if (legs.empty()) return SimplicialMap::unchecked(from.object, to.object, {});
  return copair(from, legs);
}

struct PairHash {
  std::size_t operator()(const std::pair<SimplexRef, SimplexRef>& p) const noexcept {
    return SimplexRefHash{}(p.first) * 1000003u ^ SimplexRefHash{}(p.second);
  }
};

struct Pullback::Table {
  std::unordered_map<std::pair<SimplexRef, SimplexRef>, int, PairHash> index;
};

namespace {

struct JointNormal {
  SimplexRef a, b;
  SimplicialOperator rho;
};

JointNormal joint_normalize(const SimplexRef& a, const SimplexRef& b) {
  const int m = a.dim();
  std::vector<int> rho(static_cast<std::size_t>(m + 1), 0);
  std::vector<int> av{a.degeneracy(0)}, bv{b.degeneracy(0)};
  int r = 0;
  for (int i = 1; i <= m; ++i) {
    if (!(a.degeneracy(i) == a.degeneracy(i - 1) && b.degeneracy(i) == b.degeneracy(i - 1))) {
      ++r;
      av.push_back(a.degeneracy(i));
      bv.push_back(b.degeneracy(i));
    }
    rho[static_cast<std::size_t>(i)] = r;
  }
  return {{a.index, SimplicialOperator(a.degeneracy.codomain_dim(), av)},
          {b.index, SimplicialOperator(b.degeneracy.codomain_dim(), bv)},
          SimplicialOperator(r, rho)};
}

bool jointly_nondegenerate(const SimplicialOperator& s, const SimplicialOperator& t) {
  for (int i = 0; i < s.domain_dim(); ++i) {
    if (s(i) == s(i + 1) && t(i) == t(i + 1)) return false;
  }
  return true;
}

}  // namespace

Pullback::Pullback(const SimplicialMap& f, const SimplicialMap& g, int dim_cap) : f_(f), g_(g) {
  if (!(f.target() == g.target())) throw std::invalid_argument("pullback: maps have different codomains");
  const auto& x = f.source();
  const auto& y = g.source();
  auto table = std::make_shared<Table>();
  FiniteSimplicialSet::Builder b;
  std::vector<SimplexRef> first_images, second_images;

  std::map<int, std::pair<std::vector<int>, std::vector<int>>> buckets;
  for (int i = 0; i < x.size(); ++i) buckets[f.image(i).index].first.push_back(i);
  for (int j = 0; j < y.size(); ++j) buckets[g.image(j).index].second.push_back(j);

  std::map<std::pair<int, int>, std::vector<SimplicialOperator>> surj_cache;
  auto surj = [&](int n, int p) -> const std::vector<SimplicialOperator>& {
    auto it = surj_cache.find({n, p});
    if (it == surj_cache.end()) it = surj_cache.emplace(std::make_pair(n, p), surjections(n, p)).first;
    return it->second;
  };

  const int top = std::max(x.dim(), 0) + std::max(y.dim(), 0);
  for (int n = 0; n <= top; ++n) {
    for (const auto& [u, members] : buckets) {
      for (int xi : members.first) {
        const int p = x.dim(xi);
        if (p > n) continue;
        const auto& alpha = f.image(xi).degeneracy;
        for (int yi : members.second) {
          const int q = y.dim(yi);
          if (q > n || n > p + q) continue;
          const auto& beta = g.image(yi).degeneracy;
          for (const auto& s : surj(n, p)) {
            const auto as = alpha.after(s);
            for (const auto& t : surj(n, q)) {
              if (!jointly_nondegenerate(s, t) || !(as == beta.after(t))) continue;
              if (n > dim_cap) {
                throw DimensionError("pullback has dimension above the cap " + std::to_string(dim_cap));
              }
              const SimplexRef a{xi, s}, c{yi, t};
              std::vector<SimplexRef> faces;
              if (n > 0) {
                for (int k = 0; k <= n; ++k) {
                  const auto jn = joint_normalize(x.face(a, k), y.face(c, k));
                  faces.push_back({table->index.at({jn.a, jn.b}), jn.rho});
                }
              }
              const int idx = b.add("(" + x.ref_name(a) + "," + y.ref_name(c) + ")", std::move(faces));
              table->index.emplace(std::make_pair(a, c), idx);
              first_images.push_back(a);
              second_images.push_back(c);
            }
          }
        }
      }
    }
  }
  object_ = b.build_unchecked();
  first_ = SimplicialMap::unchecked(object_, x, std::move(first_images));
  second_ = SimplicialMap::unchecked(object_, y, std::move(second_images));
  table_ = std::move(table);
}

SimplexRef Pullback::pair(const SimplexRef& a, const SimplexRef& b) const {
  if (a.dim() != b.dim() || f_(a) != g_(b)) throw std::invalid_argument("pullback pair: simplices do not agree over the base");
  const auto jn = joint_normalize(a, b);
  return {table_->index.at({jn.a, jn.b}), jn.rho};
}

SimplicialMap Pullback::induced(const SimplicialMap& p, const SimplicialMap& q) const {
  if (!(p.source() == q.source())) throw std::invalid_argument("pullback induced: different sources");
  if (!(p.target() == f_.source()) || !(q.target() == g_.source())) {
    throw std::invalid_argument("pullback induced: maps do not land in the legs");
  }
  std::vector<SimplexRef> images;
  images.reserve(p.images().size());
  for (int i = 0; i < p.source().size(); ++i) images.push_back(pair(p.image(i), q.image(i)));
  return SimplicialMap::unchecked(p.source(), object_, std::move(images));
}

Pullback product(const FiniteSimplicialSet& x, const FiniteSimplicialSet& y, int dim_cap) {
  return Pullback(to_point(x), to_point(y), dim_cap);
}

FiniteProduct::FiniteProduct(std::vector<FiniteSimplicialSet> parts, int dim_cap) : parts_(std::move(parts)) {
  if (parts_.empty()) {
    object_ = point();
    return;
  }
  object_ = parts_.front();
  projections_.push_back(identity_map(object_));
  for (std::size_t i = 1; i < parts_.size(); ++i) {
    chain_.emplace_back(product(object_, parts_[i], dim_cap));
    const auto& p = chain_.back();
    for (auto& q : projections_) q = compose(q, p.first());
    projections_.push_back(p.second());
    object_ = p.object();
  }
}

SimplicialMap FiniteProduct::induced(const FiniteSimplicialSet& source, const std::vector<SimplicialMap>& cone) const {
  if (cone.size() != parts_.size()) throw std::invalid_argument("FiniteProduct::induced: wrong number of components");
  if (parts_.empty()) return to_point(source);
  SimplicialMap m = cone.front();
  for (std::size_t i = 1; i < cone.size(); ++i) m = chain_[i - 1].induced(m, cone[i]);
  if (!(m.source() == source)) throw std::invalid_argument("FiniteProduct::induced: components have another source");
  return m;
}

SimplicialMap product_map(const FiniteProduct& from, const FiniteProduct& to, const std::vector<SimplicialMap>& components) {
  if (from.size() != to.size() || static_cast<int>(components.size()) != from.size()) {
    throw std::invalid_argument("product_map: factor counts differ");
  }
  std::vector<SimplicialMap> cone;
  for (int i = 0; i < from.size(); ++i) cone.push_back(compose(components[static_cast<std::size_t>(i)], from.projection(i)));
  return to.induced(from.object(), cone);
}

SimplicialMap product_map(const Pullback& from, const Pullback& to, const SimplicialMap& f, const SimplicialMap& g) {
  return to.induced(compose(f, from.first()), compose(g, from.second()));
}

SimplicialMap pullback_map(const Pullback& from, const Pullback& to, const SimplicialMap& x, const SimplicialMap& y) {
  return to.induced(compose(x, from.first()), compose(y, from.second()));
}

NormalizedLevels from_levels(const LevelPresentation& p, int dim_cap) {
  NormalizedLevels out;
  out.normal.resize(static_cast<std::size_t>(p.top + 1));
  FiniteSimplicialSet::Builder b;
  for (int n = 0; n <= p.top; ++n) {
    const int count = p.counts[static_cast<std::size_t>(n)];
    std::vector<std::pair<int, int>> hit(static_cast<std::size_t>(count), {-1, -1});
    if (n > 0) {
      const int below = p.counts[static_cast<std::size_t>(n - 1)];
      for (int z = 0; z < below; ++z) {
        for (int j = 0; j < n; ++j) {
          auto& h = hit[static_cast<std::size_t>(p.degeneracy(n - 1, j, z))];
          if (h.first < 0) h = {j, z};
        }
      }
    }
    auto& normal = out.normal[static_cast<std::size_t>(n)];
    normal.resize(static_cast<std::size_t>(count));
    for (int key = 0; key < count; ++key) {
      const auto [j, z] = hit[static_cast<std::size_t>(key)];
      if (j >= 0) {
        const auto& base = out.normal[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(z)];
        normal[static_cast<std::size_t>(key)] = {base.index, base.degeneracy.after(SimplicialOperator::degeneracy(n - 1, j))};
        continue;
      }
      if (n > dim_cap) throw DimensionError("nondegenerate simplex above the dimension cap " + std::to_string(dim_cap));
      std::vector<SimplexRef> faces;
      if (n > 0) {
        for (int k = 0; k <= n; ++k) {
          faces.push_back(out.normal[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(p.face(n, k, key))]);
        }
      }
      const int idx = b.add(p.name(n, key), std::move(faces));
      normal[static_cast<std::size_t>(key)] = {idx, SimplicialOperator::identity(n)};
    }
  }
  out.object = b.build(dim_cap);
  return out;
}

}  // namespace sharp
