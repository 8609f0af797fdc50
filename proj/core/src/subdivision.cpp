#include "sharp/subdivision.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "sharp/constructions.hpp"

namespace sharp {

namespace {

unsigned full_mask(int n) { return (1u << (n + 1)) - 1u; }

std::vector<int> bits(unsigned mask) {
  std::vector<int> out;
  for (int v = 0; v < 32; ++v) {
    if (mask >> v & 1u) out.push_back(v);
  }
  return out;
}

std::string chain_name(const std::vector<unsigned>& chain) {
  std::string s;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i) s += '<';
    s += '{';
    const auto b = bits(chain[i]);
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (j) s += ',';
      s += std::to_string(b[j]);
    }
    s += '}';
  }
  return s;
}

// Image of a vertex set under a monotone map given by its values.
unsigned push_mask(unsigned mask, const SimplicialOperator& op) {
  unsigned out = 0;
  for (int v : bits(mask)) out |= 1u << op(v);
  return out;
}

// Rewrites (x, chain) with a possibly proper top face as a chain on the
// nondegenerate simplex carrying that face.
std::pair<int, std::vector<unsigned>> normalize(const FiniteSimplicialSet& x, int simplex, std::vector<unsigned> chain) {
  const int n = x.dim(simplex);
  const unsigned top = chain.back();
  if (top == full_mask(n)) return {simplex, std::move(chain)};
  const auto verts = bits(top);
  const auto theta = SimplicialOperator::inclusion(n, verts);
  const auto s = x.apply(x.nondegenerate(simplex), theta);
  for (auto& m : chain) {
    unsigned local = 0;
    for (std::size_t p = 0; p < verts.size(); ++p) {
      if (m >> verts[p] & 1u) local |= 1u << p;
    }
    m = push_mask(local, s.degeneracy);
  }
  return {s.index, std::move(chain)};
}

}  // namespace

SimplexRef Subdivision::ref(int simplex, const std::vector<unsigned>& chain) const {
  std::vector<unsigned> strict;
  std::vector<int> values;
  for (unsigned m : chain) {
    if (strict.empty() || strict.back() != m) strict.push_back(m);
    values.push_back(static_cast<int>(strict.size()) - 1);
  }
  const int at = index.at({simplex, strict});
  return {at, SimplicialOperator(static_cast<int>(strict.size()) - 1, values)};
}

Subdivision subdivision(const FiniteSimplicialSet& x, int dim_cap) {
  Subdivision sd;
  FiniteSimplicialSet::Builder b;
  std::vector<int> builder_index;
  const int top = std::max(x.dim(), 0);
  for (int k = 0; k <= top; ++k) {
    for (int s = 0; s < x.size(); ++s) {
      const int n = x.dim(s);
      if (n < k) continue;
      // strict chains F_0 < ... < F_k = [n], built from the top down
      std::vector<unsigned> chain(static_cast<std::size_t>(k + 1));
      chain[static_cast<std::size_t>(k)] = full_mask(n);
      std::function<void(int)> descend = [&](int pos) {
        if (pos < 0) {
          std::vector<SimplexRef> faces;
          if (k > 0) {
            for (int j = 0; j <= k; ++j) {
              std::vector<unsigned> rest;
              for (int i = 0; i <= k; ++i) {
                if (i != j) rest.push_back(chain[static_cast<std::size_t>(i)]);
              }
              const auto [owner, normal] = normalize(x, s, std::move(rest));
              faces.push_back(sd.ref(owner, normal));
            }
          }
          const int at = b.add(x.id(s) + "|" + chain_name(chain), std::move(faces));
          sd.index[{s, chain}] = at;
          sd.cells.push_back({s, chain});
          return;
        }
        const unsigned above = chain[static_cast<std::size_t>(pos + 1)];
        // proper nonempty subsets of `above`, with at least pos + 1 elements
        for (unsigned m = 1; m < above; ++m) {
          if ((m & ~above) != 0 || std::popcount(m) < pos + 1) continue;
          chain[static_cast<std::size_t>(pos)] = m;
          descend(pos - 1);
        }
      };
      descend(k - 1);
    }
  }
  sd.object = b.build(dim_cap);
  std::vector<SimplexRef> images;
  for (const auto& [s, chain] : sd.cells) {
    std::vector<int> values;
    for (unsigned m : chain) values.push_back(31 - std::countl_zero(m));
    images.push_back(x.apply(x.nondegenerate(s), SimplicialOperator(x.dim(s), values)));
  }
  sd.last_vertex = SimplicialMap::unchecked(sd.object, x, std::move(images));
  return sd;
}

SimplicialMap subdivision_map(const SimplicialMap& f, const Subdivision& source, const Subdivision& target) {
  std::vector<SimplexRef> images;
  for (const auto& [s, chain] : source.cells) {
    const auto im = f.image(s);
    std::vector<unsigned> pushed;
    for (unsigned m : chain) pushed.push_back(push_mask(m, im.degeneracy));
    images.push_back(target.ref(im.index, pushed));
  }
  return SimplicialMap::unchecked(source.object, target.object, std::move(images));
}

ExResult ex(const FiniteSimplicialSet& x, int truncation, std::uint64_t max_level) {
  if (truncation < 0) throw std::invalid_argument("truncation must be nonnegative");
  const int t = truncation;
  std::vector<Subdivision> sd;
  for (int n = 0; n <= t + 1; ++n) sd.push_back(subdivision(standard_simplex(n)));
  std::vector<std::vector<SimplicialMap>> level(static_cast<std::size_t>(t + 1));
  std::vector<std::map<std::vector<SimplexRef>, int>> lookup(static_cast<std::size_t>(t + 1));
  ExResult out;
  out.truncation = t;
  for (int n = 0; n <= t; ++n) {
    auto& lv = level[static_cast<std::size_t>(n)];
    enumerate_maps(sd[static_cast<std::size_t>(n)].object, x, [&](const SimplicialMap& g) {
      lookup[static_cast<std::size_t>(n)][g.images()] = static_cast<int>(lv.size());
      lv.push_back(g);
      if (lv.size() > max_level) throw DimensionError("Ex level " + std::to_string(n) + " exceeds the size cap");
      return true;
    });
    out.level_sizes.push_back(lv.size());
  }
  std::vector<std::vector<SimplicialMap>> sd_face(static_cast<std::size_t>(t + 1)), sd_degen(static_cast<std::size_t>(t + 1));
  for (int n = 1; n <= t; ++n) {
    for (int k = 0; k <= n; ++k) {
      sd_face[static_cast<std::size_t>(n)].push_back(subdivision_map(operator_map(SimplicialOperator::face(n, k)),
                                                                      sd[static_cast<std::size_t>(n - 1)], sd[static_cast<std::size_t>(n)]));
    }
  }
  for (int n = 0; n < t; ++n) {
    for (int j = 0; j <= n; ++j) {
      sd_degen[static_cast<std::size_t>(n)].push_back(subdivision_map(operator_map(SimplicialOperator::degeneracy(n, j)),
                                                                       sd[static_cast<std::size_t>(n + 1)], sd[static_cast<std::size_t>(n)]));
    }
  }
  LevelPresentation p;
  p.top = t;
  for (const auto& lv : level) p.counts.push_back(static_cast<int>(lv.size()));
  p.face = [&](int n, int k, int key) {
    const auto g = compose(level[static_cast<std::size_t>(n)][static_cast<std::size_t>(key)], sd_face[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]);
    return lookup[static_cast<std::size_t>(n - 1)].at(g.images());
  };
  p.degeneracy = [&](int n, int j, int key) {
    const auto g = compose(level[static_cast<std::size_t>(n)][static_cast<std::size_t>(key)], sd_degen[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)]);
    return lookup[static_cast<std::size_t>(n + 1)].at(g.images());
  };
  p.name = [](int n, int key) { return "ex" + std::to_string(n) + "." + std::to_string(key); };
  auto nl = from_levels(p, std::max(t, kDefaultDimCap));
  out.object = nl.object;
  if (x.dim() > t) return out;
  std::vector<SimplexRef> images;
  for (int i = 0; i < x.size(); ++i) {
    const int n = x.dim(i);
    const auto g = compose(characteristic_map(x, x.nondegenerate(i)), sd[static_cast<std::size_t>(n)].last_vertex);
    images.push_back(nl.normal[static_cast<std::size_t>(n)][static_cast<std::size_t>(lookup[static_cast<std::size_t>(n)].at(g.images()))]);
  }
  out.unit = SimplicialMap(x, out.object, std::move(images));
  return out;
}

ExResult ex_iter(const FiniteSimplicialSet& x, int k, int truncation, std::uint64_t max_level) {
  if (k < 1) throw std::invalid_argument("ex_iter needs k >= 1");
  ExResult cur = ex(x, truncation, max_level);
  for (int i = 1; i < k; ++i) {
    ExResult next = ex(cur.object, truncation, max_level);
    next.unit = compose(next.unit, cur.unit);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace sharp
