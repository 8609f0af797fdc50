#include "sharp/diagram.hpp"

#include <algorithm>
#include <set>

#include "sharp/union_find.hpp"

namespace sharp {

std::vector<std::string> diagram_violations(const FiniteCategory& shape, const std::vector<FiniteSimplicialSet>& objects,
                                            const std::vector<SimplicialMap>& arrows) {
  std::vector<std::string> out;
  if (static_cast<int>(objects.size()) != shape.object_count() || static_cast<int>(arrows.size()) != shape.arrow_count()) {
    out.push_back("diagram does not assign a value to every object and arrow");
    return out;
  }
  for (int a = 0; a < shape.arrow_count(); ++a) {
    const auto& ar = shape.arrow(a);
    const auto& m = arrows[static_cast<std::size_t>(a)];
    if (!(m.source() == objects[static_cast<std::size_t>(ar.src)]) || !(m.target() == objects[static_cast<std::size_t>(ar.dst)])) {
      out.push_back("value on arrow '" + ar.id + "' has the wrong source or target");
    }
  }
  if (!out.empty()) return out;
  for (int a = 0; a < shape.arrow_count(); ++a) {
    if (shape.is_identity(a) && !(arrows[static_cast<std::size_t>(a)] == identity_map(objects[static_cast<std::size_t>(shape.arrow(a).src)]))) {
      out.push_back("identity arrow '" + shape.arrow(a).id + "' is not sent to an identity");
    }
  }
  for (int f = 0; f < shape.arrow_count(); ++f) {
    for (int g = 0; g < shape.arrow_count(); ++g) {
      if (shape.arrow(f).dst != shape.arrow(g).src || shape.is_identity(f) || shape.is_identity(g)) continue;
      const int gf = shape.compose(g, f);
      if (!(compose(arrows[static_cast<std::size_t>(g)], arrows[static_cast<std::size_t>(f)]).images() ==
            arrows[static_cast<std::size_t>(gf)].images())) {
        out.push_back("functoriality fails: D(" + shape.arrow(g).id + ") . D(" + shape.arrow(f).id + ") != D(" +
                      shape.arrow(gf).id + ")");
      }
    }
  }
  return out;
}

namespace {

std::vector<SimplicialMap> fill_identities(const FiniteCategory& shape, const std::vector<FiniteSimplicialSet>& objects,
                                           std::vector<SimplicialMap> arrows) {
  arrows.resize(static_cast<std::size_t>(shape.arrow_count()));
  for (int o = 0; o < shape.object_count() && o < static_cast<int>(objects.size()); ++o) {
    auto& slot = arrows[static_cast<std::size_t>(shape.identity(o))];
    if (slot.images().empty() && slot.source().empty()) slot = identity_map(objects[static_cast<std::size_t>(o)]);
  }
  return arrows;
}

}  // namespace

Diagram::Diagram(FiniteCategory shape, std::vector<FiniteSimplicialSet> objects, std::vector<SimplicialMap> arrows)
    : shape_(std::move(shape)), objects_(std::move(objects)) {
  arrows_ = fill_identities(shape_, objects_, std::move(arrows));
  auto v = diagram_violations(shape_, objects_, arrows_);
  if (!v.empty()) throw InvariantError(std::move(v));
}

Diagram Diagram::unchecked(FiniteCategory shape, std::vector<FiniteSimplicialSet> objects,
                           std::vector<SimplicialMap> arrows) {
  Diagram d;
  d.shape_ = std::move(shape);
  d.objects_ = std::move(objects);
  d.arrows_ = fill_identities(d.shape_, d.objects_, std::move(arrows));
  return d;
}

int Diagram::max_dim() const {
  int m = -1;
  for (const auto& x : objects_) m = std::max(m, x.dim());
  return m;
}

Diagram restrict(const Diagram& d, const FiniteCategory& shape, const Functor& f) {
  std::vector<FiniteSimplicialSet> objects;
  std::vector<SimplicialMap> arrows;
  for (int o = 0; o < shape.object_count(); ++o) objects.push_back(d.at(f.on_objects[static_cast<std::size_t>(o)]));
  for (int a = 0; a < shape.arrow_count(); ++a) arrows.push_back(d.on(f.on_arrows[static_cast<std::size_t>(a)]));
  return Diagram::unchecked(shape, std::move(objects), std::move(arrows));
}

Diagram restrict(const Diagram& d, const Subcategory& sub) { return restrict(d, sub.category, sub.inclusion); }

std::vector<std::string> naturality_violations(const Diagram& source, const Diagram& target,
                                               const std::vector<SimplicialMap>& components) {
  std::vector<std::string> out;
  const auto& shape = source.shape();
  if (shape.object_count() != target.shape().object_count() || shape.arrow_count() != target.shape().arrow_count() ||
      static_cast<int>(components.size()) != shape.object_count()) {
    out.push_back("diagram map between diagrams of different shapes");
    return out;
  }
  for (int o = 0; o < shape.object_count(); ++o) {
    const auto& c = components[static_cast<std::size_t>(o)];
    if (!(c.source() == source.at(o)) || !(c.target() == target.at(o))) {
      out.push_back("component at '" + shape.object(o) + "' has the wrong source or target");
    }
  }
  if (!out.empty()) return out;
  for (int a = 0; a < shape.arrow_count(); ++a) {
    if (shape.is_identity(a)) continue;
    const auto& ar = shape.arrow(a);
    const auto lhs = compose(target.on(a), components[static_cast<std::size_t>(ar.src)]);
    const auto rhs = compose(components[static_cast<std::size_t>(ar.dst)], source.on(a));
    if (lhs.images() != rhs.images()) out.push_back("naturality square for '" + ar.id + "' does not commute");
  }
  return out;
}

DiagramMap::DiagramMap(Diagram source, Diagram target, std::vector<SimplicialMap> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  auto v = naturality_violations(source_, target_, components_);
  if (!v.empty()) throw InvariantError(std::move(v));
}

DiagramMap DiagramMap::unchecked(Diagram source, Diagram target, std::vector<SimplicialMap> components) {
  DiagramMap m;
  m.source_ = std::move(source);
  m.target_ = std::move(target);
  m.components_ = std::move(components);
  return m;
}

DiagramMap identity_map(const Diagram& d) {
  std::vector<SimplicialMap> comps;
  for (const auto& x : d.objects()) comps.push_back(identity_map(x));
  return DiagramMap::unchecked(d, d, std::move(comps));
}

DiagramMap restrict(const DiagramMap& f, const FiniteCategory& shape, const Functor& func) {
  std::vector<SimplicialMap> comps;
  for (int o = 0; o < shape.object_count(); ++o) comps.push_back(f.at(func.on_objects[static_cast<std::size_t>(o)]));
  return DiagramMap::unchecked(restrict(f.source(), shape, func), restrict(f.target(), shape, func), std::move(comps));
}

Colimit colimit(const Diagram& d, int dim_cap) {
  Colimit out;
  out.diagram_ = d;
  const auto& shape = d.shape();
  const int objects = shape.object_count();
  const int top = std::max(d.max_dim(), 0);
  std::vector<LevelTable> tables;
  tables.reserve(static_cast<std::size_t>(objects));
  for (int o = 0; o < objects; ++o) tables.emplace_back(d.at(o), top);

  // keys in degree n: object o, local simplex k  ->  offset[n][o] + k
  std::vector<std::vector<int>> offset(static_cast<std::size_t>(top + 1), std::vector<int>(static_cast<std::size_t>(objects + 1), 0));
  std::vector<std::vector<int>> label(static_cast<std::size_t>(top + 1));
  std::vector<std::vector<int>> rep(static_cast<std::size_t>(top + 1));  // class -> key
  std::vector<std::vector<int>> key_object(static_cast<std::size_t>(top + 1));
  std::vector<int> counts(static_cast<std::size_t>(top + 1), 0);
  for (int n = 0; n <= top; ++n) {
    auto& off = offset[static_cast<std::size_t>(n)];
    for (int o = 0; o < objects; ++o) off[static_cast<std::size_t>(o + 1)] = off[static_cast<std::size_t>(o)] + static_cast<int>(tables[static_cast<std::size_t>(o)].level(n).size());
    const int total = off[static_cast<std::size_t>(objects)];
    UnionFind uf(static_cast<std::size_t>(total));
    for (int a = 0; a < shape.arrow_count(); ++a) {
      if (shape.is_identity(a)) continue;
      const auto& ar = shape.arrow(a);
      const auto& from = tables[static_cast<std::size_t>(ar.src)].level(n);
      for (std::size_t k = 0; k < from.size(); ++k) {
        const auto img = d.on(a)(from[k]);
        uf.unite(static_cast<std::size_t>(off[static_cast<std::size_t>(ar.src)] + static_cast<int>(k)),
                 static_cast<std::size_t>(off[static_cast<std::size_t>(ar.dst)] + tables[static_cast<std::size_t>(ar.dst)].index(img)));
      }
    }
    label[static_cast<std::size_t>(n)] = uf.labels(&counts[static_cast<std::size_t>(n)]);
    auto& ko = key_object[static_cast<std::size_t>(n)];
    ko.resize(static_cast<std::size_t>(total));
    for (int o = 0; o < objects; ++o) {
      for (int k = off[static_cast<std::size_t>(o)]; k < off[static_cast<std::size_t>(o + 1)]; ++k) ko[static_cast<std::size_t>(k)] = o;
    }
    auto& r = rep[static_cast<std::size_t>(n)];
    r.assign(static_cast<std::size_t>(counts[static_cast<std::size_t>(n)]), -1);
    for (int k = 0; k < total; ++k) {
      const int cls = label[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
      const int o = ko[static_cast<std::size_t>(k)];
      const bool nondeg = tables[static_cast<std::size_t>(o)].level(n)[static_cast<std::size_t>(k - off[static_cast<std::size_t>(o)])].is_nondegenerate();
      auto& slot = r[static_cast<std::size_t>(cls)];
      if (slot < 0) {
        slot = k;
      } else if (nondeg) {
        const int so = ko[static_cast<std::size_t>(slot)];
        if (!tables[static_cast<std::size_t>(so)].level(n)[static_cast<std::size_t>(slot - off[static_cast<std::size_t>(so)])].is_nondegenerate()) slot = k;
      }
    }
  }
  auto simplex_at = [&](int n, int key) -> std::pair<int, SimplexRef> {
    const int o = key_object[static_cast<std::size_t>(n)][static_cast<std::size_t>(key)];
    return {o, tables[static_cast<std::size_t>(o)].level(n)[static_cast<std::size_t>(key - offset[static_cast<std::size_t>(n)][static_cast<std::size_t>(o)])]};
  };
  auto class_of = [&](int n, int o, const SimplexRef& s) {
    return label[static_cast<std::size_t>(n)][static_cast<std::size_t>(offset[static_cast<std::size_t>(n)][static_cast<std::size_t>(o)] + tables[static_cast<std::size_t>(o)].index(s))];
  };

  LevelPresentation p;
  p.top = top;
  p.counts = counts;
  p.face = [&](int n, int k, int cls) {
    const auto [o, s] = simplex_at(n, rep[static_cast<std::size_t>(n)][static_cast<std::size_t>(cls)]);
    return class_of(n - 1, o, d.at(o).face(s, k));
  };
  p.degeneracy = [&](int n, int j, int cls) {
    const auto [o, s] = simplex_at(n, rep[static_cast<std::size_t>(n)][static_cast<std::size_t>(cls)]);
    return class_of(n + 1, o, d.at(o).degeneracy(s, j));
  };
  p.name = [&](int n, int cls) {
    const auto [o, s] = simplex_at(n, rep[static_cast<std::size_t>(n)][static_cast<std::size_t>(cls)]);
    return shape.object(o) + "." + d.at(o).ref_name(s);
  };
  auto nl = from_levels(p, dim_cap);
  out.object_ = nl.object;
  out.representative_.resize(static_cast<std::size_t>(out.object_.size()));
  for (int n = 0; n <= top; ++n) {
    for (int cls = 0; cls < counts[static_cast<std::size_t>(n)]; ++cls) {
      const auto& nf = nl.normal[static_cast<std::size_t>(n)][static_cast<std::size_t>(cls)];
      if (nf.is_nondegenerate()) out.representative_[static_cast<std::size_t>(nf.index)] = simplex_at(n, rep[static_cast<std::size_t>(n)][static_cast<std::size_t>(cls)]);
    }
  }
  for (int o = 0; o < objects; ++o) {
    const auto& x = d.at(o);
    std::vector<SimplexRef> images;
    for (int i = 0; i < x.size(); ++i) {
      const int n = x.dim(i);
      images.push_back(nl.normal[static_cast<std::size_t>(n)][static_cast<std::size_t>(class_of(n, o, x.nondegenerate(i)))]);
    }
    out.legs_.push_back(SimplicialMap::unchecked(x, out.object_, std::move(images)));
  }
  return out;
}

SimplicialMap Colimit::induced(const std::vector<SimplicialMap>& cocone) const {
  const auto& shape = diagram_.shape();
  if (static_cast<int>(cocone.size()) != shape.object_count()) throw std::invalid_argument("cocone has the wrong number of legs");
  if (cocone.empty()) return SimplicialMap::unchecked(object_, FiniteSimplicialSet(), {});
  const auto& target = cocone.front().target();
  for (int o = 0; o < shape.object_count(); ++o) {
    if (!(cocone[static_cast<std::size_t>(o)].source() == diagram_.at(o)) || !(cocone[static_cast<std::size_t>(o)].target() == target)) {
      throw std::invalid_argument("cocone leg at '" + shape.object(o) + "' has the wrong source or target");
    }
  }
  for (int a = 0; a < shape.arrow_count(); ++a) {
    if (shape.is_identity(a)) continue;
    const auto& ar = shape.arrow(a);
    if (compose(cocone[static_cast<std::size_t>(ar.dst)], diagram_.on(a)).images() != cocone[static_cast<std::size_t>(ar.src)].images()) {
      throw std::invalid_argument("cocone does not commute with arrow '" + ar.id + "'");
    }
  }
  std::vector<SimplexRef> images;
  images.reserve(representative_.size());
  for (const auto& [o, s] : representative_) images.push_back(cocone[static_cast<std::size_t>(o)](s));
  return SimplicialMap::unchecked(object_, target, std::move(images));
}

SimplicialMap colimit_map(const DiagramMap& f, const Colimit& from, const Colimit& to) {
  std::vector<SimplicialMap> cocone;
  for (int o = 0; o < f.source().shape().object_count(); ++o) cocone.push_back(compose(to.leg(o), f.at(o)));
  if (cocone.empty()) return SimplicialMap::unchecked(from.object(), to.object(), {});
  return from.induced(cocone);
}

Pushout pushout(const SimplicialMap& f, const SimplicialMap& g, int dim_cap) {
  if (!(f.source() == g.source())) throw std::invalid_argument("pushout: maps have different domains");
  FiniteCategory::Builder b;
  b.add_object("X");
  b.add_object("Y");
  b.add_object("A");
  b.add_arrow("f", "A", "X");
  b.add_arrow("g", "A", "Y");
  auto shape = b.build();
  std::vector<SimplicialMap> arrows(static_cast<std::size_t>(shape.arrow_count()));
  arrows[static_cast<std::size_t>(shape.arrow_index("f"))] = f;
  arrows[static_cast<std::size_t>(shape.arrow_index("g"))] = g;
  auto d = Diagram::unchecked(shape, {f.target(), g.target(), f.source()}, std::move(arrows));
  auto c = colimit(d, dim_cap);
  return {c.object(), c.leg(0), c.leg(1), c};
}

Diagram span_diagram(const SimplicialMap& to_a, const SimplicialMap& to_b) {
  auto shape = span_category();
  std::vector<SimplicialMap> arrows(static_cast<std::size_t>(shape.arrow_count()));
  arrows[static_cast<std::size_t>(shape.arrow_index("f"))] = to_a;
  arrows[static_cast<std::size_t>(shape.arrow_index("g"))] = to_b;
  return Diagram(shape, {to_a.target(), to_b.target(), to_a.source()}, std::move(arrows));
}

Diagram chain_diagram(const std::vector<SimplicialMap>& steps) {
  const int len = static_cast<int>(steps.size());
  auto shape = chain_category(len);
  std::vector<FiniteSimplicialSet> objects;
  if (steps.empty()) throw std::invalid_argument("chain_diagram needs at least one map");
  objects.push_back(steps.front().source());
  for (const auto& s : steps) objects.push_back(s.target());
  std::vector<SimplicialMap> arrows(static_cast<std::size_t>(shape.arrow_count()));
  for (int i = 0; i <= len; ++i) {
    for (int j = i + 1; j <= len; ++j) {
      SimplicialMap m = steps[static_cast<std::size_t>(i)];
      for (int k = i + 1; k < j; ++k) m = compose(steps[static_cast<std::size_t>(k)], m);
      arrows[static_cast<std::size_t>(shape.arrow_index(std::to_string(i) + "<" + std::to_string(j)))] = m;
    }
  }
  return Diagram(shape, std::move(objects), std::move(arrows));
}

IsoCheck check_iso(const SimplicialMap& f) {
  IsoCheck out;
  if (is_iso(f)) {
    out.holds = true;
    return out;
  }
  int worst = kMaxDegree + 1;
  std::vector<int> hit(static_cast<std::size_t>(f.target().size()), -1);
  for (int i = 0; i < f.source().size(); ++i) {
    const auto& im = f.image(i);
    if (!im.is_nondegenerate()) {
      if (f.source().dim(i) < worst) {
        worst = f.source().dim(i);
        out.detail = "'" + f.source().id(i) + "' maps to a degenerate simplex";
      }
      continue;
    }
    auto& h = hit[static_cast<std::size_t>(im.index)];
    if (h >= 0 && f.source().dim(i) < worst) {
      worst = f.source().dim(i);
      out.detail = "'" + f.source().id(h) + "' and '" + f.source().id(i) + "' have the same image";
    }
    h = i;
  }
  for (int t = 0; t < f.target().size(); ++t) {
    if (hit[static_cast<std::size_t>(t)] < 0 && f.target().dim(t) < worst) {
      worst = f.target().dim(t);
      out.detail = "'" + f.target().id(t) + "' is not in the image";
    }
  }
  out.failing_degree = worst;
  return out;
}

DistributiveReport verify_distributive_law(const Diagram& d, const Colimit& c, const SimplicialMap& a) {
  if (!(a.target() == c.object())) throw std::invalid_argument("distributive law: map does not land in the colimit");
  const auto& shape = d.shape();
  std::vector<Pullback> pbs;
  std::vector<FiniteSimplicialSet> objects;
  for (int o = 0; o < shape.object_count(); ++o) {
    pbs.emplace_back(a, c.leg(o));
    objects.push_back(pbs.back().object());
  }
  std::vector<SimplicialMap> arrows(static_cast<std::size_t>(shape.arrow_count()));
  for (int ar = 0; ar < shape.arrow_count(); ++ar) {
    const auto& e = shape.arrow(ar);
    const auto& from = pbs[static_cast<std::size_t>(e.src)];
    arrows[static_cast<std::size_t>(ar)] = pbs[static_cast<std::size_t>(e.dst)].induced(from.first(), compose(d.on(ar), from.second()));
  }
  auto pulled = Diagram::unchecked(shape, std::move(objects), std::move(arrows));
  auto q = colimit(pulled);
  std::vector<SimplicialMap> cocone;
  for (const auto& pb : pbs) cocone.push_back(pb.first());
  SimplicialMap cmp = cocone.empty() ? SimplicialMap::unchecked(q.object(), a.source(), {}) : q.induced(cocone);
  return {check_iso(cmp), q, cmp};
}

SubsetColimit proper_subset_colimit(const Diagram& x, const SubsetPoset& poset, unsigned mask) {
  std::vector<int> objs;
  for (std::size_t k = 0; k < poset.masks.size(); ++k) {
    const unsigned m = poset.masks[k];
    if (m != mask && (m & ~mask) == 0) objs.push_back(static_cast<int>(k));
  }
  auto sub = full_subcategory(poset.category, objs);
  auto c = colimit(restrict(x, sub));
  const int t = poset.object_of(mask);
  std::vector<SimplicialMap> cocone;
  for (int o : objs) cocone.push_back(x.on(poset.category.hom(o, t).at(0)));
  SimplicialMap to = cocone.empty() ? SimplicialMap::unchecked(c.object(), x.at(t), {}) : c.induced(cocone);
  return {std::move(c), std::move(to)};
}

CofibrancyReport is_cofibrant_functor(const Diagram& x, const SubsetPoset& poset) {
  CofibrancyReport out;
  for (std::size_t k = 0; k < poset.masks.size(); ++k) {
    if (!is_mono(proper_subset_colimit(x, poset, poset.masks[k]).to_value)) {
      out.cofibrant = false;
      out.failing_object = static_cast<int>(k);
      return out;
    }
  }
  return out;
}

PosetPushoutSquare poset_pushout_decomposition(const Diagram& x, const SubsetPoset& poset) {
  if (poset.n < 1 || !poset.proper_only) throw std::invalid_argument("poset decomposition needs proper subsets of {1..n}, n >= 1");
  const unsigned top_bit = 1u << (poset.n - 1);
  const unsigned s_prime = top_bit - 1u;
  const auto& cat = poset.category;

  std::vector<int> lower, upper;
  for (std::size_t k = 0; k < poset.masks.size(); ++k) {
    const unsigned m = poset.masks[k];
    if ((m & top_bit) == 0 && m != s_prime) lower.push_back(static_cast<int>(k));
  }
  for (int o : lower) upper.push_back(poset.object_of(poset.masks[static_cast<std::size_t>(o)] | top_bit));
  auto sub = full_subcategory(cat, lower);
  Functor shift;
  shift.on_objects = upper;
  for (int a = 0; a < sub.category.arrow_count(); ++a) {
    const auto& ar = sub.category.arrow(a);
    const int s = upper[static_cast<std::size_t>(ar.src)], t = upper[static_cast<std::size_t>(ar.dst)];
    shift.on_arrows.push_back(s == t ? cat.identity(s) : cat.hom(s, t).at(0));
  }
  auto x_lower = restrict(x, sub);
  auto x_upper = restrict(x, sub.category, shift);
  std::vector<SimplicialMap> comps;
  for (std::size_t k = 0; k < lower.size(); ++k) comps.push_back(x.on(cat.hom(lower[k], upper[k]).at(0)));
  const auto nat = DiagramMap::unchecked(x_lower, x_upper, comps);

  const auto c_lower = colimit(x_lower);
  const auto c_upper = colimit(x_upper);
  const auto c_all = colimit(x);
  const int s_obj = poset.object_of(s_prime);

  PosetPushoutSquare sq;
  sq.top_left = c_lower.object();
  sq.top_right = c_upper.object();
  sq.bottom_left = x.at(s_obj);
  sq.bottom_right = c_all.object();
  sq.top = colimit_map(nat, c_lower, c_upper);
  std::vector<SimplicialMap> to_s, to_all;
  for (int o : lower) to_s.push_back(x.on(cat.hom(o, s_obj).at(0)));
  for (int o : upper) to_all.push_back(c_all.leg(o));
  sq.left = to_s.empty() ? SimplicialMap::unchecked(sq.top_left, sq.bottom_left, {}) : c_lower.induced(to_s);
  sq.right = to_all.empty() ? SimplicialMap::unchecked(sq.top_right, sq.bottom_right, {}) : c_upper.induced(to_all);
  sq.bottom = c_all.leg(s_obj);
  sq.commutes = compose(sq.right, sq.top).images() == compose(sq.bottom, sq.left).images();
  const auto po = pushout(sq.top, sq.left);
  if (sq.commutes) {
    const auto cmp = po.colimit.induced({sq.right, sq.bottom, compose(sq.right, sq.top)});
    sq.pushout = check_iso(cmp);
  } else {
    sq.pushout.detail = "square does not commute";
  }
  sq.verticals_mono = is_mono(sq.left) && is_mono(sq.right);
  return sq;
}

bool FinMap::is_injective() const {
  std::set<int> seen(values.begin(), values.end());
  return seen.size() == values.size();
}

namespace {

bool well_formed(const FinMap& m) {
  if (static_cast<int>(m.values.size()) != m.domain) return false;
  return std::all_of(m.values.begin(), m.values.end(), [&](int v) { return v >= 0 && v < m.codomain; });
}

int at(const FinMap& m, int i) { return m.values[static_cast<std::size_t>(i)]; }

// Is the map into the pullback L ×_T R, given by (l, r), a bijection?
bool bijective_onto_pullback(int domain, const std::function<std::pair<int, int>(int)>& pair, const FinMap& l_to_t,
                             const FinMap& r_to_t) {
  std::set<std::pair<int, int>> target;
  for (int l = 0; l < l_to_t.domain; ++l) {
    for (int r = 0; r < r_to_t.domain; ++r) {
      if (at(l_to_t, l) == at(r_to_t, r)) target.insert({l, r});
    }
  }
  std::set<std::pair<int, int>> image;
  for (int i = 0; i < domain; ++i) {
    const auto pr = pair(i);
    if (!target.count(pr) || !image.insert(pr).second) return false;
  }
  return image.size() == target.size();
}

}  // namespace

PeculiarResult verify_peculiar_lemma(const PeculiarInstance& in) {
  PeculiarResult out;
  for (const FinMap* m : {&in.a_to_x, &in.p, &in.x_to_xp, &in.ap_to_xp, &in.ap_to_b, &in.q, &in.b_to_y}) {
    if (!well_formed(*m)) {
      out.detail = "a map is not a function between the declared sets";
      return out;
    }
  }
  const int a = in.a_to_x.domain, x = in.a_to_x.codomain, ap = in.p.codomain, xp = in.x_to_xp.codomain,
            b = in.ap_to_b.codomain, y = in.q.codomain;
  if (in.p.domain != a || in.x_to_xp.domain != x || in.ap_to_xp.domain != ap || in.ap_to_xp.codomain != xp ||
      in.ap_to_b.domain != ap || in.q.domain != xp || in.b_to_y.domain != b || in.b_to_y.codomain != y) {
    out.detail = "maps are not composable as required";
    return out;
  }
  if (!in.a_to_x.is_injective() || !in.ap_to_xp.is_injective() || !in.b_to_y.is_injective()) {
    out.detail = "a horizontal map is not mono";
    return out;
  }
  for (int i = 0; i < a; ++i) {
    if (at(in.x_to_xp, at(in.a_to_x, i)) != at(in.ap_to_xp, at(in.p, i))) {
      out.detail = "top square does not commute";
      return out;
    }
  }
  for (int i = 0; i < ap; ++i) {
    if (at(in.q, at(in.ap_to_xp, i)) != at(in.b_to_y, at(in.ap_to_b, i))) {
      out.detail = "bottom square does not commute";
      return out;
    }
  }
  // Top square is a pushout: A' ⊔_A X -> X' bijective.
  UnionFind uf(static_cast<std::size_t>(ap + x));
  for (int i = 0; i < a; ++i) uf.unite(static_cast<std::size_t>(at(in.p, i)), static_cast<std::size_t>(ap + at(in.a_to_x, i)));
  std::vector<int> cls_image(static_cast<std::size_t>(ap + x), -1);
  std::set<int> xp_hit;
  for (int e = 0; e < ap + x; ++e) {
    const int img = e < ap ? at(in.ap_to_xp, e) : at(in.x_to_xp, e - ap);
    auto& slot = cls_image[uf.find(static_cast<std::size_t>(e))];
    if (slot >= 0 && slot != img) {
      out.detail = "top square is not a pushout";
      return out;
    }
    slot = img;
    xp_hit.insert(img);
  }
  std::set<int> class_images;
  for (int e = 0; e < ap + x; ++e) {
    if (uf.find(static_cast<std::size_t>(e)) == static_cast<std::size_t>(e)) {
      if (!class_images.insert(cls_image[static_cast<std::size_t>(e)]).second) {
        out.detail = "top square is not a pushout";
        return out;
      }
    }
  }
  if (static_cast<int>(xp_hit.size()) != xp) {
    out.detail = "top square is not a pushout";
    return out;
  }
  FinMap x_to_y{x, y, {}};
  for (int i = 0; i < x; ++i) x_to_y.values.push_back(at(in.q, at(in.x_to_xp, i)));
  const bool outer = bijective_onto_pullback(
      a, [&](int i) { return std::make_pair(at(in.ap_to_b, at(in.p, i)), at(in.a_to_x, i)); }, in.b_to_y, x_to_y);
  if (!outer) {
    out.detail = "outer rectangle is not a pullback";
    return out;
  }
  const bool bottom = bijective_onto_pullback(
      ap, [&](int i) { return std::make_pair(at(in.ap_to_b, i), at(in.ap_to_xp, i)); }, in.b_to_y, in.q);
  out.status = bottom ? PeculiarStatus::Holds : PeculiarStatus::Fails;
  out.detail = bottom ? "bottom square is a pullback" : "bottom square is not a pullback";
  return out;
}

}  // namespace sharp
