#include "sharp/hocolim.hpp"

#include <algorithm>
#include <bit>

#include "sharp/constructions.hpp"

namespace sharp {

std::string ChainString::label(const FiniteCategory& c) const {
  std::string s = "(";
  if (arrows.empty()) {
    s += c.object(source);
  } else {
    for (std::size_t k = 0; k < arrows.size(); ++k) {
      if (k) s += ',';
      s += c.arrow(arrows[k]).id;
    }
  }
  return s + ")";
}

namespace {

std::vector<int> string_key(const ChainString& s) { return s.arrows.empty() ? std::vector<int>{s.source} : s.arrows; }

}  // namespace

int Replacement::summand(int n, const ChainString& s) const {
  return index_.at(static_cast<std::size_t>(n)).at(string_key(s));
}

std::pair<int, SimplexRef> Replacement::locate(int n, const SimplexRef& s) const {
  const auto& off = offsets_.at(static_cast<std::size_t>(n));
  const int k = static_cast<int>(std::upper_bound(off.begin(), off.end(), s.index) - off.begin()) - 1;
  return {k, {s.index - off[static_cast<std::size_t>(k)], s.degeneracy}};
}

SimplexRef Replacement::embed(int n, int summand, const SimplexRef& s) const {
  return {offsets_[static_cast<std::size_t>(n)][static_cast<std::size_t>(summand)] + s.index, s.degeneracy};
}

Replacement simplicial_replacement(const Diagram& d, int top) {
  if (top < 0) throw std::invalid_argument("simplicial_replacement needs top >= 0");
  const auto& c = d.shape();
  Replacement r;
  r.diagram_ = d;
  r.strings_.resize(static_cast<std::size_t>(top + 1));
  r.index_.resize(static_cast<std::size_t>(top + 1));
  r.offsets_.resize(static_cast<std::size_t>(top + 1));
  std::vector<FiniteSimplicialSet> levels;
  for (int n = 0; n <= top; ++n) {
    auto& strs = r.strings_[static_cast<std::size_t>(n)];
    for (auto& arrows : c.strings(n)) {
      ChainString s{c.arrow(arrows.front()).src, n == 0 ? std::vector<int>{} : arrows};
      r.index_[static_cast<std::size_t>(n)][string_key(s)] = static_cast<int>(strs.size());
      strs.push_back(std::move(s));
    }
    FiniteSimplicialSet::Builder b;
    auto& off = r.offsets_[static_cast<std::size_t>(n)];
    for (const auto& s : strs) {
      off.push_back(b.size());
      const auto& x = d.at(s.source);
      const std::string prefix = s.label(c) + ":";
      for (int i = 0; i < x.size(); ++i) {
        std::vector<SimplexRef> faces;
        for (const auto& f : x.faces(i)) faces.push_back({off.back() + f.index, f.degeneracy});
        b.add(prefix + x.id(i), std::move(faces));
      }
    }
    levels.push_back(b.build_unchecked());
  }
  // a map between levels sending summand k to summand target(k) through a component
  auto level_map = [&](int from, int to, auto&& route) {
    std::vector<SimplexRef> images;
    const auto& strs = r.strings_[static_cast<std::size_t>(from)];
    for (std::size_t k = 0; k < strs.size(); ++k) {
      const auto [dest, via] = route(strs[k]);
      const int t = r.summand(to, dest);
      const auto& x = d.at(strs[k].source);
      for (int i = 0; i < x.size(); ++i) {
        images.push_back(r.embed(to, t, via < 0 ? x.nondegenerate(i) : d.on(via).image(i)));
      }
    }
    return SimplicialMap::unchecked(levels[static_cast<std::size_t>(from)], levels[static_cast<std::size_t>(to)], std::move(images));
  };
  std::vector<std::vector<SimplicialMap>> faces(static_cast<std::size_t>(top + 1)), degens(static_cast<std::size_t>(top));
  for (int n = 1; n <= top; ++n) {
    for (int i = 0; i <= n; ++i) {
      faces[static_cast<std::size_t>(n)].push_back(level_map(n, n - 1, [&](const ChainString& s) {
        ChainString t = s;
        int via = -1;
        if (i == 0) {
          via = s.arrows.front();
          t.source = c.arrow(via).dst;
          t.arrows.erase(t.arrows.begin());
        } else if (i == n) {
          t.arrows.pop_back();
        } else {
          const auto k = static_cast<std::size_t>(i);
          t.arrows[k - 1] = c.compose(s.arrows[k], s.arrows[k - 1]);
          t.arrows.erase(t.arrows.begin() + i);
        }
        return std::pair{t, via};
      }));
    }
  }
  for (int n = 0; n < top; ++n) {
    for (int j = 0; j <= n; ++j) {
      degens[static_cast<std::size_t>(n)].push_back(level_map(n, n + 1, [&](const ChainString& s) {
        ChainString t = s;
        t.arrows.insert(t.arrows.begin() + j, c.identity(s.object_at(c, j)));
        return std::pair{t, -1};
      }));
    }
  }
  r.object_ = SimplicialObject(std::move(levels), std::move(faces), std::move(degens));
  return r;
}

SimplicialObjectMap replacement_map(const DiagramMap& f, const Replacement& from, const Replacement& to) {
  if (from.object().top() != to.object().top()) throw std::invalid_argument("replacement_map: replacements of different heights");
  SimplicialObjectMap out{from.object(), to.object(), {}};
  for (int n = 0; n <= from.object().top(); ++n) {
    std::vector<SimplexRef> images;
    const auto& strs = from.strings(n);
    for (std::size_t k = 0; k < strs.size(); ++k) {
      const auto& g = f.at(strs[k].source);
      for (const auto& im : g.images()) images.push_back(to.embed(n, static_cast<int>(k), im));
    }
    out.components.push_back(SimplicialMap::unchecked(from.object().level(n), to.object().level(n), std::move(images)));
  }
  return out;
}

int hocolim_bound(const Diagram& d) {
  const auto nerve = d.shape().nerve_dimension();
  if (!nerve) throw DimensionError("the shape has arbitrarily long strings of non-identity arrows");
  return *nerve + std::max(d.max_dim(), 0);
}

HomotopyColimit::Origin HomotopyColimit::origin(int simplex) const {
  const auto& [n, s] = diagonal_.origin(simplex);
  const auto [k, x] = replacement_.locate(n, s);
  return {n, k, &replacement_.strings(n)[static_cast<std::size_t>(k)], x};
}

SimplexRef HomotopyColimit::locate(int n, int summand, const SimplexRef& x) const {
  if (n < 0 || n > bound()) throw DimensionError("degree " + std::to_string(n) + " is above the hocolim bound " + std::to_string(bound()));
  return diagonal_.locate(n, replacement_.embed(n, summand, x));
}

HomotopyColimit hocolim(const Diagram& d, int bound) {
  const int need = hocolim_bound(d);
  if (bound < 0) bound = need;
  if (bound < need) {
    throw DimensionError("hocolim bound " + std::to_string(bound) + " is below the " + std::to_string(need) +
                         " needed for this diagram");
  }
  HomotopyColimit h;
  h.replacement_ = simplicial_replacement(d, bound);
  h.diagonal_ = diagonal(h.replacement_.object(), bound);
  return h;
}

SimplicialMap hocolim_to_colimit(const HomotopyColimit& h, const Colimit& c) {
  std::vector<SimplexRef> images;
  for (int i = 0; i < h.object().size(); ++i) {
    const auto o = h.origin(i);
    images.push_back(c.leg(o.string->source)(o.simplex));
  }
  return SimplicialMap(h.object(), c.object(), std::move(images));
}

SimplicialMap natural_map_to_colim(const Diagram& d, int bound) { return hocolim_to_colimit(hocolim(d, bound), colimit(d)); }

SimplicialMap hocolim_map(const DiagramMap& f, const HomotopyColimit& from, const HomotopyColimit& to) {
  std::vector<SimplexRef> images;
  for (int i = 0; i < from.object().size(); ++i) {
    const auto o = from.origin(i);
    images.push_back(to.locate(o.degree, o.summand, f.at(o.string->source)(o.simplex)));
  }
  return SimplicialMap(from.object(), to.object(), std::move(images));
}

SimplicialMap hocolim_along(const Functor& f, const HomotopyColimit& from, const HomotopyColimit& to) {
  std::vector<SimplexRef> images;
  for (int i = 0; i < from.object().size(); ++i) {
    const auto o = from.origin(i);
    ChainString s{f.on_objects[static_cast<std::size_t>(o.string->source)], {}};
    for (int a : o.string->arrows) s.arrows.push_back(f.on_arrows[static_cast<std::size_t>(a)]);
    images.push_back(to.locate(o.degree, to.replacement().summand(o.degree, s), o.simplex));
  }
  return SimplicialMap(from.object(), to.object(), std::move(images));
}

Tilde tilde(const Diagram& d, int i, const HomotopyColimit& whole) {
  const auto& c = d.shape();
  if (i < 0 || i >= c.object_count()) throw std::invalid_argument("tilde: no object " + std::to_string(i));
  Tilde t;
  t.object = i;
  t.over = over_category(c, i);
  const auto restricted = restrict(d, t.over.category, t.over.forget);
  t.value = hocolim(restricted, whole.bound());
  std::vector<SimplexRef> images;
  for (int s = 0; s < t.value.object().size(); ++s) {
    const auto o = t.value.origin(s);
    const int u = c.arrow_index(t.over.category.object(o.string->source));
    images.push_back(d.on(u)(o.simplex));
  }
  t.to_value = SimplicialMap(t.value.object(), d.at(i), std::move(images));
  t.to_hocolim = hocolim_along(t.over.forget, t.value, whole);
  return t;
}

Tilde tilde(const Diagram& d, int i) { return tilde(d, i, hocolim(d)); }

TildePullbackReport verify_tilde_pullback(const DiagramMap& f, int i) {
  const int bound = std::max(hocolim_bound(f.source()), hocolim_bound(f.target()));
  const auto hx = hocolim(f.source(), bound);
  const auto hy = hocolim(f.target(), bound);
  const auto tx = tilde(f.source(), i, hx);
  const auto ty = tilde(f.target(), i, hy);
  const auto over = restrict(f, tx.over.category, tx.over.forget);
  TildePullbackReport out;
  out.object = i;
  const auto left = hocolim_map(over, tx.value, ty.value);
  const auto right = hocolim_map(f, hx, hy);
  out.commutes = compose(right, tx.to_hocolim) == compose(ty.to_hocolim, left);
  if (!out.commutes) {
    out.comparison.detail = "the square does not commute";
    return out;
  }
  const Pullback strict(right, ty.to_hocolim, std::max(bound, kDefaultDimCap));
  out.comparison = check_iso(strict.induced(tx.to_hocolim, left));
  return out;
}

std::vector<TildePullbackReport> verify_tilde_pullback(const DiagramMap& f) {
  std::vector<TildePullbackReport> out;
  for (int i = 0; i < f.source().shape().object_count(); ++i) out.push_back(verify_tilde_pullback(f, i));
  return out;
}

WeakEquivalenceCertificate is_hocolim_diagram(const Diagram& d, const WeOptions& options, int bound) {
  return certify_weak_equivalence(natural_map_to_colim(d, bound), options);
}

namespace {

std::string object_label(const FiniteCategory& c, int i) { return "'" + c.object(i) + "'"; }

void add_colimit_squares(std::vector<Check>& out, const DiagramMap& f, const Colimit& cx, const Colimit& cy,
                         const SimplicialMap& colim_f, const CartesianOptions& co) {
  const auto& c = f.source().shape();
  for (int i = 0; i < c.object_count(); ++i) {
    const Square sq{cx.leg(i), f.at(i), colim_f, cy.leg(i)};
    out.push_back(check_of("square from " + object_label(c, i) + " to the colimits is homotopy cartesian",
                           is_homotopy_cartesian(sq, Leg::Either, co)));
  }
}

void add_naturality_squares(std::vector<Check>& out, const DiagramMap& f, const CartesianOptions& co) {
  const auto& c = f.source().shape();
  for (int a = 0; a < c.arrow_count(); ++a) {
    if (c.is_identity(a)) continue;
    const auto& ar = c.arrow(a);
    const Square sq{f.source().on(a), f.at(ar.src), f.at(ar.dst), f.target().on(a)};
    out.push_back(check_of("naturality square of '" + ar.id + "' is homotopy cartesian", is_homotopy_cartesian(sq, Leg::Either, co)));
  }
}

}  // namespace

HarnessReport verify_thm_hocolims(const DiagramMap& f, int part, const HocolimOptions& options) {
  if (part != 1 && part != 2) throw std::invalid_argument("part must be 1 or 2");
  HarnessReport r;
  r.theorem = "homotopy colimit diagrams, part " + std::to_string(part);
  const auto cx = colimit(f.source());
  const auto cy = colimit(f.target());
  const auto colim_f = colimit_map(f, cx, cy);
  const int bound = options.bound >= 0 ? options.bound : std::max(hocolim_bound(f.source()), hocolim_bound(f.target()));
  auto hocolim_cert = [&](const Diagram& d, const Colimit& c) {
    return certify_weak_equivalence(hocolim_to_colimit(hocolim(d, bound), c), options.we);
  };
  if (part == 1) {
    r.hypotheses.push_back(check_of("target is a homotopy colimit diagram", hocolim_cert(f.target(), cy)));
    add_colimit_squares(r.hypotheses, f, cx, cy, colim_f, options.cartesian);
    if (r.hypotheses_hold()) r.conclusions.push_back(check_of("source is a homotopy colimit diagram", hocolim_cert(f.source(), cx)));
  } else {
    r.hypotheses.push_back(check_of("source is a homotopy colimit diagram", hocolim_cert(f.source(), cx)));
    r.hypotheses.push_back(check_of("target is a homotopy colimit diagram", hocolim_cert(f.target(), cy)));
    add_naturality_squares(r.hypotheses, f, options.cartesian);
    if (r.hypotheses_hold()) add_colimit_squares(r.conclusions, f, cx, cy, colim_f, options.cartesian);
  }
  r.settle();
  return r;
}

std::string to_string(SpecialCase c) {
  switch (c) {
    case SpecialCase::Chain: return "chain";
    case SpecialCase::Span: return "span";
    case SpecialCase::ProperSubsets: return "proper-subsets";
  }
  return "?";
}

namespace {

// Objects 0..L with exactly one arrow i -> j for i <= j and none backwards.
bool is_chain_shape(const FiniteCategory& c) {
  for (int i = 0; i < c.object_count(); ++i) {
    for (int j = 0; j < c.object_count(); ++j) {
      const auto h = c.hom(i, j).size();
      if (h != (i <= j ? 1u : 0u)) return false;
    }
  }
  return true;
}

bool all_mono(const Diagram& d) {
  for (int a = 0; a < d.shape().arrow_count(); ++a) {
    if (!is_mono(d.on(a))) return false;
  }
  return true;
}

std::optional<SubsetPoset> as_proper_subset_poset(const FiniteCategory& c) {
  const int count = c.object_count() + 1;
  if (!std::has_single_bit(static_cast<unsigned>(count))) return std::nullopt;
  auto p = subset_poset(std::countr_zero(static_cast<unsigned>(count)), true);
  if (p.category.object_count() != c.object_count() || p.category.arrow_count() != c.arrow_count()) return std::nullopt;
  for (int o = 0; o < c.object_count(); ++o) {
    if (p.category.object(o) != c.object(o)) return std::nullopt;
  }
  for (int a = 0; a < c.arrow_count(); ++a) {
    const auto& x = c.arrow(a);
    const auto& y = p.category.arrow(a);
    if (x.src != y.src || x.dst != y.dst) return std::nullopt;
  }
  return p;
}

}  // namespace

HarnessReport verify_special_diagrams(const DiagramMap& f, SpecialCase kind, const HocolimOptions& options) {
  HarnessReport r;
  r.theorem = "special diagrams, " + to_string(kind) + " case";
  const auto& c = f.source().shape();
  const auto& x = f.source();
  const auto& y = f.target();
  switch (kind) {
    case SpecialCase::Chain: {
      const bool shape = is_chain_shape(c);
      r.hypotheses.push_back(check_of("shape is a finite chain", shape));
      if (shape) r.hypotheses.push_back(check_of("every map of both chains is a monomorphism", all_mono(x) && all_mono(y)));
      break;
    }
    case SpecialCase::Span: {
      std::vector<int> legs;
      for (int a = 0; a < c.arrow_count(); ++a) {
        if (!c.is_identity(a)) legs.push_back(a);
      }
      const bool shape = c.object_count() == 3 && legs.size() == 2 && c.arrow(legs[0]).src == c.arrow(legs[1]).src &&
                         c.arrow(legs[0]).dst != c.arrow(legs[1]).dst && c.arrow(legs[0]).dst != c.arrow(legs[0]).src &&
                         c.arrow(legs[1]).dst != c.arrow(legs[1]).src;
      r.hypotheses.push_back(check_of("shape is a span", shape));
      if (shape) {
        std::string mono_leg;
        for (int a : legs) {
          if (mono_leg.empty() && is_mono(x.on(a)) && is_mono(y.on(a))) mono_leg = c.arrow(a).id;
        }
        r.hypotheses.push_back(check_of("one leg is a monomorphism in both spans", !mono_leg.empty(),
                                        mono_leg.empty() ? "" : "leg '" + mono_leg + "'"));
      }
      break;
    }
    case SpecialCase::ProperSubsets: {
      const auto poset = as_proper_subset_poset(c);
      r.hypotheses.push_back(check_of("shape is a poset of proper subsets", poset.has_value()));
      if (poset) {
        const auto rx = is_cofibrant_functor(x, *poset);
        const auto ry = is_cofibrant_functor(y, *poset);
        r.hypotheses.push_back(check_of("source is cofibrant", rx.cofibrant,
                                        rx.failing_object ? "fails at " + object_label(c, *rx.failing_object) : ""));
        r.hypotheses.push_back(check_of("target is cofibrant", ry.cofibrant,
                                        ry.failing_object ? "fails at " + object_label(c, *ry.failing_object) : ""));
      }
      break;
    }
  }
  for (int i = 0; i < c.object_count(); ++i) {
    r.hypotheses.push_back(check_of("map at " + object_label(c, i) + " is sharp", is_sharp(f.at(i), options.cartesian.sharp)));
  }
  add_naturality_squares(r.hypotheses, f, options.cartesian);
  if (r.hypotheses_hold()) {
    const auto cx = colimit(x);
    const auto cy = colimit(y);
    const auto colim_f = colimit_map(f, cx, cy);
    r.conclusions.push_back(check_of("map of colimits is sharp", is_sharp(colim_f, options.cartesian.sharp)));
    add_colimit_squares(r.conclusions, f, cx, cy, colim_f, options.cartesian);
  }
  r.settle();
  return r;
}

HarnessReport verify_horn_gluing(const SimplicialMap& f, const SimplexRef& y, int k, const WeOptions& options) {
  const int n = y.dim();
  if (n < 1 || k < 0 || k > n) throw std::invalid_argument("horn gluing needs n >= 1 and 0 <= k <= n");
  HarnessReport r;
  r.theorem = "horn gluing";
  const auto chi = characteristic_map(f.target(), y);
  const Pullback whole(f, chi);
  for (int m = 0; m <= n; ++m) {
    for (const auto& delta : monotone_maps(m, n)) {
      const auto dmap = operator_map(delta);
      const Pullback part(f, compose(chi, dmap));
      const auto cmp = whole.induced(part.first(), compose(dmap, part.second()));
      r.hypotheses.push_back(check_of("restriction along " + delta.to_string() + " is a weak equivalence",
                                      certify_weak_equivalence(cmp, options)));
    }
  }
  if (r.hypotheses_hold()) {
    const auto incl = simplex_inclusion(horn(n, k), n);
    const Pullback q(f, compose(chi, incl));
    const auto j = whole.induced(q.first(), compose(incl, q.second()));
    r.conclusions.push_back(check_of("restriction to the horn " + std::to_string(k) + " of " + std::to_string(n) +
                                         " is a weak equivalence",
                                     certify_weak_equivalence(j, options)));
  }
  r.settle();
  return r;
}

}  // namespace sharp
