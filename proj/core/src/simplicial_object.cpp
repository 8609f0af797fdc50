#include "sharp/simplicial_object.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "sharp/constructions.hpp"

namespace sharp {

namespace {

std::string op_name(const char* kind, int n, int i) {
  return std::string(kind) + "_" + std::to_string(i) + " on level " + std::to_string(n);
}

void expect_same(std::vector<std::string>& out, const SimplicialMap& a, const SimplicialMap& b, const std::string& what) {
  if (!(a == b)) out.push_back(what);
}

}  // namespace

SimplicialObject::SimplicialObject(std::vector<FiniteSimplicialSet> levels, std::vector<std::vector<SimplicialMap>> faces,
                                   std::vector<std::vector<SimplicialMap>> degeneracies)
    : levels_(std::move(levels)), faces_(std::move(faces)), degeneracies_(std::move(degeneracies)) {
  auto v = simplicial_object_violations(*this);
  if (!v.empty()) throw InvariantError(std::move(v));
}

SimplicialObject SimplicialObject::unchecked(std::vector<FiniteSimplicialSet> levels,
                                             std::vector<std::vector<SimplicialMap>> faces,
                                             std::vector<std::vector<SimplicialMap>> degeneracies) {
  SimplicialObject x;
  x.levels_ = std::move(levels);
  x.faces_ = std::move(faces);
  x.degeneracies_ = std::move(degeneracies);
  return x;
}

SimplicialMap SimplicialObject::act(const SimplicialOperator& theta) const {
  const int n = theta.codomain_dim();
  if (n > top() || theta.domain_dim() > top()) throw DimensionError("operator " + theta.to_string() + " leaves the known levels");
  const auto fac = theta.factor();
  // the mono part: drop the missing vertices, largest first
  SimplicialMap out = identity_map(level(n));
  std::vector<int> missing;
  for (int v = 0, k = 0; v <= n; ++v) {
    if (k <= fac.mono.domain_dim() && fac.mono(k) == v) {
      ++k;
    } else {
      missing.push_back(v);
    }
  }
  int cur = n;
  for (auto it = missing.rbegin(); it != missing.rend(); ++it) out = compose(face(cur--, *it), out);
  // the epi part: peel off the last repeated position
  std::vector<int> sigma = fac.epi.values();
  std::vector<int> positions;
  while (static_cast<int>(sigma.size()) - 1 > cur) {
    int p = static_cast<int>(sigma.size()) - 2;
    while (sigma[static_cast<std::size_t>(p)] != sigma[static_cast<std::size_t>(p + 1)]) --p;
    positions.push_back(p);
    sigma.erase(sigma.begin() + p + 1);
  }
  for (auto it = positions.rbegin(); it != positions.rend(); ++it) {
    out = compose(degeneracy(cur, *it), out);
    ++cur;
  }
  return out;
}

std::vector<std::string> simplicial_object_violations(const SimplicialObject& x) {
  std::vector<std::string> out;
  const int top = x.top();
  for (int n = 0; n <= top; ++n) {
    for (int i = 0; n > 0 && i <= n; ++i) {
      const auto& d = x.face(n, i);
      if (!(d.source() == x.level(n)) || !(d.target() == x.level(n - 1))) out.push_back(op_name("d", n, i) + " has the wrong ends");
    }
    for (int j = 0; n < top && j <= n; ++j) {
      const auto& s = x.degeneracy(n, j);
      if (!(s.source() == x.level(n)) || !(s.target() == x.level(n + 1))) out.push_back(op_name("s", n, j) + " has the wrong ends");
    }
  }
  if (!out.empty()) return out;
  auto at = [](int n) { return " on level " + std::to_string(n); };
  for (int n = 2; n <= top; ++n) {
    for (int j = 1; j <= n; ++j) {
      for (int i = 0; i < j; ++i) {
        expect_same(out, compose(x.face(n - 1, i), x.face(n, j)), compose(x.face(n - 1, j - 1), x.face(n, i)),
                    "d_" + std::to_string(i) + " d_" + std::to_string(j) + " != d_" + std::to_string(j - 1) + " d_" +
                        std::to_string(i) + at(n));
      }
    }
  }
  for (int n = 0; n + 2 <= top; ++n) {
    for (int j = 0; j <= n; ++j) {
      for (int i = 0; i <= j; ++i) {
        expect_same(out, compose(x.degeneracy(n + 1, i), x.degeneracy(n, j)), compose(x.degeneracy(n + 1, j + 1), x.degeneracy(n, i)),
                    "s_" + std::to_string(i) + " s_" + std::to_string(j) + " != s_" + std::to_string(j + 1) + " s_" +
                        std::to_string(i) + at(n));
      }
    }
  }
  for (int n = 0; n + 1 <= top; ++n) {
    const auto id = identity_map(x.level(n));
    for (int j = 0; j <= n; ++j) {
      const auto& s = x.degeneracy(n, j);
      for (int i = 0; i <= n + 1; ++i) {
        const auto lhs = compose(x.face(n + 1, i), s);
        const std::string name = "d_" + std::to_string(i) + " s_" + std::to_string(j);
        if (i == j || i == j + 1) {
          expect_same(out, lhs, id, name + " != id" + at(n));
        } else if (i < j) {
          expect_same(out, lhs, compose(x.degeneracy(n - 1, j - 1), x.face(n, i)),
                      name + " != s_" + std::to_string(j - 1) + " d_" + std::to_string(i) + at(n));
        } else {
          expect_same(out, lhs, compose(x.degeneracy(n - 1, j), x.face(n, i - 1)),
                      name + " != s_" + std::to_string(j) + " d_" + std::to_string(i - 1) + at(n));
        }
      }
    }
  }
  return out;
}

SimplicialObject constant_object(const FiniteSimplicialSet& k, int top) {
  if (top < 0) throw std::invalid_argument("constant_object needs top >= 0");
  const auto id = identity_map(k);
  std::vector<FiniteSimplicialSet> levels(static_cast<std::size_t>(top + 1), k);
  std::vector<std::vector<SimplicialMap>> faces(static_cast<std::size_t>(top + 1)), degens(static_cast<std::size_t>(top));
  for (int n = 1; n <= top; ++n) faces[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n + 1), id);
  for (int n = 0; n < top; ++n) degens[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n + 1), id);
  return SimplicialObject::unchecked(std::move(levels), std::move(faces), std::move(degens));
}

SimplicialObject levelwise_coproduct(const std::vector<SimplicialObject>& parts) {
  if (parts.empty()) throw std::invalid_argument("levelwise_coproduct needs at least one part");
  const int top = parts.front().top();
  for (const auto& p : parts) {
    if (p.top() != top) throw std::invalid_argument("levelwise_coproduct: parts known to different levels");
  }
  std::vector<Coproduct> cs;
  std::vector<FiniteSimplicialSet> levels;
  for (int n = 0; n <= top; ++n) {
    std::vector<FiniteSimplicialSet> xs;
    for (const auto& p : parts) xs.push_back(p.level(n));
    cs.push_back(coproduct(xs));
    levels.push_back(cs.back().object);
  }
  auto sum = [&](int from, int to, auto pick) {
    std::vector<SimplicialMap> comps;
    for (const auto& p : parts) comps.push_back(pick(p));
    return coproduct_map(cs[static_cast<std::size_t>(from)], cs[static_cast<std::size_t>(to)], comps);
  };
  std::vector<std::vector<SimplicialMap>> faces(static_cast<std::size_t>(top + 1)), degens(static_cast<std::size_t>(top));
  for (int n = 1; n <= top; ++n) {
    for (int i = 0; i <= n; ++i) faces[static_cast<std::size_t>(n)].push_back(sum(n, n - 1, [&](const SimplicialObject& p) { return p.face(n, i); }));
  }
  for (int n = 0; n < top; ++n) {
    for (int j = 0; j <= n; ++j) {
      degens[static_cast<std::size_t>(n)].push_back(sum(n, n + 1, [&](const SimplicialObject& p) { return p.degeneracy(n, j); }));
    }
  }
  return SimplicialObject::unchecked(std::move(levels), std::move(faces), std::move(degens));
}

std::vector<std::string> naturality_violations(const SimplicialObjectMap& p) {
  std::vector<std::string> out;
  const auto& x = p.source;
  const auto& y = p.target;
  if (x.top() != y.top() || static_cast<int>(p.components.size()) != x.top() + 1) {
    out.push_back("levels of source, target and components do not match");
    return out;
  }
  for (int n = 0; n <= x.top(); ++n) {
    const auto& c = p.components[static_cast<std::size_t>(n)];
    if (!(c.source() == x.level(n)) || !(c.target() == y.level(n))) {
      out.push_back("component " + std::to_string(n) + " has the wrong ends");
    }
  }
  if (!out.empty()) return out;
  for (int n = 1; n <= x.top(); ++n) {
    for (int i = 0; i <= n; ++i) {
      expect_same(out, compose(p.components[static_cast<std::size_t>(n - 1)], x.face(n, i)),
                  compose(y.face(n, i), p.components[static_cast<std::size_t>(n)]), "does not commute with " + op_name("d", n, i));
    }
  }
  for (int n = 0; n < x.top(); ++n) {
    for (int j = 0; j <= n; ++j) {
      expect_same(out, compose(p.components[static_cast<std::size_t>(n + 1)], x.degeneracy(n, j)),
                  compose(y.degeneracy(n, j), p.components[static_cast<std::size_t>(n)]), "does not commute with " + op_name("s", n, j));
    }
  }
  return out;
}

SimplicialObjectMap constant_object_map(const SimplicialMap& f, int top) {
  return {constant_object(f.source(), top), constant_object(f.target(), top),
          std::vector<SimplicialMap>(static_cast<std::size_t>(top + 1), f)};
}

SimplexRef Diagonal::locate(int n, const SimplexRef& s) const {
  if (n < 0 || n > bound_) throw DimensionError("degree " + std::to_string(n) + " is above the diagonal bound " + std::to_string(bound_));
  return normal_[static_cast<std::size_t>(n)].at(s);
}

Diagonal diagonal(const SimplicialObject& x, int bound) {
  if (bound < 0) bound = x.top();
  if (bound > x.top()) {
    throw DimensionError("diagonal bound " + std::to_string(bound) + " exceeds the known levels (" + std::to_string(x.top()) + ")");
  }
  std::vector<std::vector<SimplexRef>> simp(static_cast<std::size_t>(bound + 1));
  std::vector<std::unordered_map<SimplexRef, int, SimplexRefHash>> key(static_cast<std::size_t>(bound + 1));
  for (int n = 0; n <= bound; ++n) {
    auto& s = simp[static_cast<std::size_t>(n)];
    s = x.level(n).simplices(n);
    for (std::size_t k = 0; k < s.size(); ++k) key[static_cast<std::size_t>(n)][s[k]] = static_cast<int>(k);
  }
  std::set<std::string> used;
  LevelPresentation p;
  p.top = bound;
  for (const auto& s : simp) p.counts.push_back(static_cast<int>(s.size()));
  p.face = [&](int n, int k, int at) {
    const auto& s = simp[static_cast<std::size_t>(n)][static_cast<std::size_t>(at)];
    return key[static_cast<std::size_t>(n - 1)].at(x.face(n, k)(x.level(n).face(s, k)));
  };
  p.degeneracy = [&](int n, int j, int at) {
    const auto& s = simp[static_cast<std::size_t>(n)][static_cast<std::size_t>(at)];
    return key[static_cast<std::size_t>(n + 1)].at(x.degeneracy(n, j)(x.level(n).degeneracy(s, j)));
  };
  p.name = [&](int n, int at) {
    std::string name = x.level(n).ref_name(simp[static_cast<std::size_t>(n)][static_cast<std::size_t>(at)]);
    if (!used.insert(name).second) {
      name += "@" + std::to_string(n);
      used.insert(name);
    }
    return name;
  };
  auto nl = from_levels(p, std::max(bound, kDefaultDimCap));
  Diagonal out;
  out.object_ = nl.object;
  out.bound_ = bound;
  out.normal_.resize(static_cast<std::size_t>(bound + 1));
  out.origin_.resize(static_cast<std::size_t>(nl.object.size()));
  for (int n = 0; n <= bound; ++n) {
    const auto& s = simp[static_cast<std::size_t>(n)];
    auto& normal = out.normal_[static_cast<std::size_t>(n)];
    normal.reserve(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) {
      const auto& r = nl.normal[static_cast<std::size_t>(n)][k];
      normal.emplace(s[k], r);
      if (r.is_nondegenerate()) out.origin_[static_cast<std::size_t>(r.index)] = {n, s[k]};
    }
  }
  return out;
}

SimplicialMap diagonal_map(const SimplicialObjectMap& p, const Diagonal& from, const Diagonal& to) {
  std::vector<SimplexRef> images;
  for (int i = 0; i < from.object().size(); ++i) {
    const auto& [n, s] = from.origin(i);
    images.push_back(to.locate(n, p.components.at(static_cast<std::size_t>(n))(s)));
  }
  return SimplicialMap(from.object(), to.object(), std::move(images));
}

SimplicialMap latching_inclusion(const SimplicialObject& x, int n) {
  if (n < 1) throw std::invalid_argument("the latching object needs n >= 1");
  std::vector<int> keep;
  for (int j = 0; j < n; ++j) {
    for (const auto& im : x.degeneracy(n - 1, j).images()) keep.push_back(im.index);
  }
  return subcomplex(x.level(n), keep);
}

LatchingObject latching_object(const SimplicialObject& x, int n) {
  LatchingObject out;
  out.inclusion = latching_inclusion(x, n);
  const auto poset = subset_poset(n, true);
  const auto& cat = poset.category;
  // T ⊂ {1..n} gives the surjection [n] -> [#T], k ↦ #{t ∈ T : t <= k}
  auto collapse = [&](unsigned mask) {
    std::vector<int> v;
    for (int k = 0; k <= n; ++k) v.push_back(std::popcount(mask & ((1u << k) - 1u)));
    return SimplicialOperator(std::popcount(mask), v);
  };
  std::vector<FiniteSimplicialSet> objects;
  for (unsigned m : poset.masks) objects.push_back(x.level(std::popcount(m)));
  std::vector<SimplicialMap> arrows(static_cast<std::size_t>(cat.arrow_count()));
  for (int a = 0; a < cat.arrow_count(); ++a) {
    if (cat.is_identity(a)) continue;
    const unsigned s = poset.masks[static_cast<std::size_t>(cat.arrow(a).src)];
    const unsigned t = poset.masks[static_cast<std::size_t>(cat.arrow(a).dst)];
    // σ(k) counts the elements of S among the first k elements of T
    std::vector<int> v{0};
    int seen = 0;
    for (int e = 0; e < n; ++e) {
      if (!(t >> e & 1u)) continue;
      if (s >> e & 1u) ++seen;
      v.push_back(seen);
    }
    arrows[static_cast<std::size_t>(a)] = x.act(SimplicialOperator(std::popcount(s), v));
  }
  const Diagram d(cat, std::move(objects), std::move(arrows));
  out.poset_colimit = colimit(d);
  std::vector<SimplicialMap> cocone;
  for (unsigned m : poset.masks) cocone.push_back(x.act(collapse(m)));
  out.comparison = out.poset_colimit.induced(cocone);
  try {
    out.agreement = check_iso(factor_through(out.comparison, out.inclusion));
  } catch (const std::invalid_argument& e) {
    out.agreement.holds = false;
    out.agreement.detail = e.what();
  }
  out.cofibrant = is_cofibrant_functor(d, poset).cofibrant;
  return out;
}

bool DiagonalFiltration::verified() const {
  return reconstruction.holds && std::all_of(stages.begin(), stages.end(), [](const FiltrationStage& s) { return s.verified(); });
}

DiagonalFiltration diagonal_filtration(const SimplicialObject& x, int bound) {
  DiagonalFiltration out{diagonal(x, bound), {}, {}};
  const auto& diag = out.diagonal;
  const int b = diag.bound();
  for (int n = 0; n <= b; ++n) {
    FiltrationStage st;
    st.n = n;
    const auto& level = x.level(n);
    const auto delta = standard_simplex(n);
    std::vector<int> number(static_cast<std::size_t>(delta.size()), -1);
    for (int v : delta.of_dim(0)) number[static_cast<std::size_t>(v)] = std::stoi(delta.id(v).substr(1));
    const int top_cell = delta.of_dim(n)[0];
    const auto prod = product(level, delta, std::max(level.dim(), 0) + n);
    const auto sk = skeleton(prod.object(), b);
    const auto& cells = sk.source();

    std::vector<char> in_latching(static_cast<std::size_t>(level.size()), 0);
    if (n > 0) {
      const auto latch = latching_inclusion(x, n);
      for (const auto& im : latch.images()) in_latching[static_cast<std::size_t>(im.index)] = 1;
    }
    auto in_corner = [&](const SimplexRef& p) {
      return prod.second()(p).index != top_cell || in_latching[static_cast<std::size_t>(prod.first()(p).index)];
    };

    std::map<SimplicialOperator, SimplicialMap> acts;
    std::vector<SimplexRef> images;
    std::vector<int> corner_keep;
    for (int i = 0; i < cells.size(); ++i) {
      const auto p = sk.image(i);
      const auto a = prod.first()(p);
      const auto t = prod.second()(p);
      std::vector<int> v;
      for (int w : delta.vertices(t)) v.push_back(number[static_cast<std::size_t>(w)]);
      const SimplicialOperator theta(n, v);
      auto it = acts.find(theta);
      if (it == acts.end()) it = acts.emplace(theta, x.act(theta)).first;
      images.push_back(diag.locate(theta.domain_dim(), it->second(a)));
      if (in_corner(p)) corner_keep.push_back(i);
    }
    const SimplicialMap phi(cells, diag.object(), std::move(images));
    st.inclusion = image(phi);
    st.cell = factor_through(phi, st.inclusion);
    if (n > 0) {
      st.corner_holds_high_cells = true;
      for (int i = 0; i < prod.object().size(); ++i) {
        if (prod.object().dim(i) > b && !in_corner(prod.object().nondegenerate(i))) st.corner_holds_high_cells = false;
      }
      const auto& below = out.stages.back().inclusion;
      const auto step = factor_through(below, st.inclusion);
      st.corner = subcomplex(cells, corner_keep);
      const auto corner_cell = compose(st.cell, st.corner);
      try {
        st.attach = factor_through(compose(phi, st.corner), below);
        st.commutes = compose(step, st.attach) == corner_cell;
      } catch (const std::invalid_argument&) {
        st.commutes = false;
      }
      if (st.commutes) {
        const auto po = pushout(st.corner, st.attach);
        st.pushout = check_iso(po.colimit.induced({st.cell, step, corner_cell}));
      } else {
        st.pushout.detail = "the corner does not land in the previous stage";
      }
    }
    out.stages.push_back(std::move(st));
  }
  std::vector<SimplicialMap> legs;
  for (const auto& st : out.stages) legs.push_back(st.inclusion);
  if (b == 0) {
    out.reconstruction = check_iso(legs.front());
  } else {
    std::vector<SimplicialMap> steps;
    for (int n = 1; n <= b; ++n) steps.push_back(factor_through(legs[static_cast<std::size_t>(n - 1)], legs[static_cast<std::size_t>(n)]));
    out.reconstruction = check_iso(colimit(chain_diagram(steps)).induced(legs));
  }
  return out;
}

HarnessReport verify_diagonal_sharp(const SimplicialObjectMap& p, const SharpOptions& options, int bound) {
  HarnessReport r;
  r.theorem = "diagonal of levelwise sharp maps";
  const auto nat = naturality_violations(p);
  r.hypotheses.push_back(check_of("levelwise map is natural", nat.empty(), nat.empty() ? "" : nat.front()));
  if (!nat.empty()) {
    r.settle();
    return r;
  }
  const auto& x = p.source;
  const auto& y = p.target;
  const int top = x.top();
  for (int n = 0; n <= top; ++n) {
    r.hypotheses.push_back(check_of("level " + std::to_string(n) + " map is sharp", is_sharp(p.components[static_cast<std::size_t>(n)], options)));
  }
  CartesianOptions co;
  co.sharp = options;
  auto square = [&](const std::string& label, const SimplicialMap& tx, const SimplicialMap& ty, int from, int to) {
    const Square sq{tx, p.components[static_cast<std::size_t>(from)], p.components[static_cast<std::size_t>(to)], ty};
    r.hypotheses.push_back(check_of(label, is_homotopy_cartesian(sq, Leg::Right, co)));
  };
  for (int n = 1; n <= top; ++n) {
    for (int i = 0; i <= n; ++i) square("square for " + op_name("d", n, i), x.face(n, i), y.face(n, i), n, n - 1);
  }
  for (int n = 0; n < top; ++n) {
    for (int j = 0; j <= n; ++j) square("square for " + op_name("s", n, j), x.degeneracy(n, j), y.degeneracy(n, j), n, n + 1);
  }
  if (r.hypotheses_hold()) {
    const auto dx = diagonal(x, bound);
    const auto dy = diagonal(y, bound);
    r.conclusions.push_back(check_of("diagonal map is sharp", is_sharp(diagonal_map(p, dx, dy), options)));
  }
  r.settle();
  return r;
}

}  // namespace sharp
