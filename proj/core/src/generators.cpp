#include "sharp/generators.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "sharp/constructions.hpp"
#include "sharp/fixtures.hpp"

namespace sharp::gen {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

FiniteSimplicialSet regular_complex(Rng& rng, int max_dim, int max_vertices) {
  const int v = uniform(rng, 1, max_vertices);
  const auto full = standard_simplex(v - 1);
  std::vector<bool> present(1u << v, false);
  std::vector<int> keep;
  for (int k = 0; k <= std::min(max_dim, v - 1); ++k) {
    for (unsigned mask = 1; mask < (1u << v); ++mask) {
      if (std::popcount(mask) != k + 1) continue;
      bool facets = true;
      for (int b = 0; b < v && k > 0; ++b) {
        if (mask >> b & 1u) facets = facets && present[mask & ~(1u << b)];
      }
      if (!facets || (k > 0 && !coin(rng, 0.55))) continue;
      present[mask] = true;
      std::string id = "[";
      bool first = true;
      for (int b = 0; b < v; ++b) {
        if (!(mask >> b & 1u)) continue;
        if (!first) id += ',';
        id += std::to_string(b);
        first = false;
      }
      keep.push_back(full.index_of(id + "]"));
    }
  }
  return subcomplex(full, keep).source();
}

}  // namespace

FiniteSimplicialSet complex(Rng& rng, int max_dim, int max_vertices) {
  const int roll = uniform(rng, 0, 9);
  if (roll == 0) return fixtures::circle();
  if (roll == 1 && max_dim >= 2) return fixtures::projective_plane();
  if (roll == 2) {
    return coproduct({regular_complex(rng, max_dim, std::max(1, max_vertices / 2)),
                      regular_complex(rng, max_dim, std::max(1, max_vertices / 2))})
        .object;
  }
  return regular_complex(rng, max_dim, max_vertices);
}

std::optional<SimplicialMap> map(Rng& rng, const FiniteSimplicialSet& a, const FiniteSimplicialSet& x, std::uint64_t cap) {
  std::optional<SimplicialMap> chosen;
  std::uint64_t seen = 0;
  enumerate_maps(a, x, [&](const SimplicialMap& f) {
    ++seen;
    if (std::uniform_int_distribution<std::uint64_t>(1, seen)(rng) == 1) chosen = f;
    return seen < cap;
  });
  return chosen;
}

FiniteCategory shape(Rng& rng, int max_objects) {
  std::vector<FiniteCategory> options;
  for (int k = 1; k <= max_objects; ++k) options.push_back(discrete_category(k));
  for (int l = 1; l + 1 <= max_objects; ++l) options.push_back(chain_category(l));
  if (max_objects >= 2) {
    options.push_back(arrow_category());
    options.push_back(parallel_pair_category());
  }
  if (max_objects >= 3) {
    options.push_back(span_category());
    options.push_back(cospan_category());
  }
  if (max_objects >= 4) {
    options.push_back(square_category());
    options.push_back(subset_poset(2, false).category);
  }
  return options[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(options.size()) - 1))];
}

Diagram diagram(Rng& rng, const FiniteCategory& c, int max_dim) {
  if (!c.nerve_dimension()) throw std::invalid_argument("random diagrams need a shape without loops");
  // order objects so that every non-identity arrow goes forward
  const int n = c.object_count();
  std::vector<int> indegree(static_cast<std::size_t>(n), 0), order;
  for (int a = 0; a < c.arrow_count(); ++a) {
    if (!c.is_identity(a)) ++indegree[static_cast<std::size_t>(c.arrow(a).dst)];
  }
  std::vector<bool> placed(static_cast<std::size_t>(n), false);
  while (static_cast<int>(order.size()) < n) {
    for (int o = 0; o < n; ++o) {
      if (placed[static_cast<std::size_t>(o)] || indegree[static_cast<std::size_t>(o)] != 0) continue;
      placed[static_cast<std::size_t>(o)] = true;
      order.push_back(o);
      for (int a = 0; a < c.arrow_count(); ++a) {
        if (!c.is_identity(a) && c.arrow(a).src == o) --indegree[static_cast<std::size_t>(c.arrow(a).dst)];
      }
    }
  }
  std::vector<int> rank(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) rank[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;

  std::vector<FiniteSimplicialSet> objects(static_cast<std::size_t>(n));
  std::vector<SimplicialMap> arrows(static_cast<std::size_t>(c.arrow_count()));
  for (int o : order) {
    std::vector<int> incoming;
    for (int a = 0; a < c.arrow_count(); ++a) {
      if (!c.is_identity(a) && c.arrow(a).dst == o) incoming.push_back(a);
    }
    std::sort(incoming.begin(), incoming.end(), [&](int x, int y) {
      return rank[static_cast<std::size_t>(c.arrow(x).src)] < rank[static_cast<std::size_t>(c.arrow(y).src)];
    });
    bool done = false;
    for (int attempt = 0; attempt < 8 && !done; ++attempt) {
      auto value = attempt == 7 ? point() : complex(rng, max_dim);
      objects[static_cast<std::size_t>(o)] = value;
      done = true;
      for (int a : incoming) {
        const int src = c.arrow(a).src;
        // arrows b: k -> src with a ∘ b already assigned
        std::vector<std::pair<int, int>> constraints;
        for (int b = 0; b < c.arrow_count(); ++b) {
          if (!c.is_identity(b) && c.arrow(b).dst == src) constraints.push_back({b, c.compose(a, b)});
        }
        std::optional<SimplicialMap> chosen;
        std::uint64_t seen = 0;
        enumerate_maps(objects[static_cast<std::size_t>(src)], value, [&](const SimplicialMap& f) {
          for (const auto& [b, ab] : constraints) {
            if (compose(f, arrows[static_cast<std::size_t>(b)]).images() != arrows[static_cast<std::size_t>(ab)].images()) return true;
          }
          ++seen;
          if (std::uniform_int_distribution<std::uint64_t>(1, seen)(rng) == 1) chosen = f;
          return seen < 2048;
        });
        if (!chosen) {
          done = false;
          break;
        }
        arrows[static_cast<std::size_t>(a)] = *chosen;
      }
    }
  }
  return Diagram(c, std::move(objects), std::move(arrows));
}

DistributiveInstance distributive_instance(Rng& rng, int max_objects, int max_dim) {
  for (;;) {
    auto d = diagram(rng, shape(rng, max_objects), max_dim);
    auto c = colimit(d);
    if (c.object().empty()) continue;
    std::optional<SimplicialMap> a;
    const int roll = uniform(rng, 0, 3);
    if (roll == 0) {
      a = identity_map(c.object());
    } else if (roll == 1) {
      const int s = uniform(rng, 0, c.object().size() - 1);
      a = characteristic_map(c.object(), c.object().nondegenerate(s));
    } else {
      a = map(rng, complex(rng, max_dim), c.object());
    }
    if (!a) continue;
    return {std::move(d), std::move(c), std::move(*a)};
  }
}

DiagramMap diagram_map(Rng& rng, const Diagram& target, int max_dim) {
  const auto& shape = target.shape();
  const int roll = uniform(rng, 0, 4);
  if (roll == 0) return identity_map(target);
  if (roll == 1) {
    const auto k = complex(rng, max_dim, 3);
    std::vector<Pullback> prods;
    std::vector<FiniteSimplicialSet> objects;
    std::vector<SimplicialMap> comps;
    for (const auto& x : target.objects()) {
      prods.push_back(product(k, x));
      objects.push_back(prods.back().object());
      comps.push_back(prods.back().second());
    }
    std::vector<SimplicialMap> arrows;
    for (int a = 0; a < shape.arrow_count(); ++a) {
      const auto& ar = shape.arrow(a);
      arrows.push_back(product_map(prods[static_cast<std::size_t>(ar.src)], prods[static_cast<std::size_t>(ar.dst)],
                                   identity_map(k), target.on(a)));
    }
    Diagram source(shape, std::move(objects), std::move(arrows));
    return DiagramMap(std::move(source), target, std::move(comps));
  }
  if (roll == 2) {
    std::vector<Coproduct> sums;
    std::vector<FiniteSimplicialSet> objects;
    std::vector<SimplicialMap> comps;
    for (const auto& x : target.objects()) {
      sums.push_back(coproduct({x, x}));
      objects.push_back(sums.back().object);
      comps.push_back(copair(sums.back(), {identity_map(x), identity_map(x)}));
    }
    std::vector<SimplicialMap> arrows;
    for (int a = 0; a < shape.arrow_count(); ++a) {
      const auto& ar = shape.arrow(a);
      arrows.push_back(coproduct_map(sums[static_cast<std::size_t>(ar.src)], sums[static_cast<std::size_t>(ar.dst)],
                                     {target.on(a), target.on(a)}));
    }
    Diagram source(shape, std::move(objects), std::move(arrows));
    return DiagramMap(std::move(source), target, std::move(comps));
  }
  // pullback of the diagram along a map into its colimit
  const auto c = colimit(target);
  std::optional<SimplicialMap> a;
  if (c.object().empty()) {
    a = identity_map(c.object());
  } else if (roll == 3) {
    const int s = uniform(rng, 0, c.object().size() - 1);
    a = characteristic_map(c.object(), c.object().nondegenerate(s));
  } else {
    a = map(rng, complex(rng, max_dim, 3), c.object());
  }
  if (!a) a = identity_map(c.object());
  std::vector<Pullback> pbs;
  std::vector<FiniteSimplicialSet> objects;
  std::vector<SimplicialMap> comps;
  for (int o = 0; o < shape.object_count(); ++o) {
    pbs.emplace_back(*a, c.leg(o));
    objects.push_back(pbs.back().object());
    comps.push_back(pbs.back().second());
  }
  std::vector<SimplicialMap> arrows;
  for (int x = 0; x < shape.arrow_count(); ++x) {
    const auto& ar = shape.arrow(x);
    arrows.push_back(pullback_map(pbs[static_cast<std::size_t>(ar.src)], pbs[static_cast<std::size_t>(ar.dst)],
                                  identity_map(a->source()), target.on(x)));
  }
  Diagram source(shape, std::move(objects), std::move(arrows));
  return DiagramMap(std::move(source), target, std::move(comps));
}

namespace {

BooleanPresheaf simple_presheaf(Rng& rng, const BooleanAlgebra& alg, int max_dim) {
  const auto n = static_cast<std::size_t>(alg.size());
  switch (uniform(rng, 0, 3)) {
    case 0: {
      std::vector<FiniteSimplicialSet> per_atom;
      for (int i = 0; i < alg.atom_count(); ++i) per_atom.push_back(regular_complex(rng, max_dim, 3));
      return atom_family(alg, per_atom);
    }
    case 1:
      return constant_presheaf(alg, regular_complex(rng, max_dim, 3));
    case 2: {
      // S_b: the full subcomplex on the vertices kept by every atom below b
      const auto z = regular_complex(rng, max_dim, 4);
      const auto verts = z.of_dim(0);
      std::vector<unsigned> kept;
      for (int i = 0; i < alg.atom_count(); ++i) kept.push_back(static_cast<unsigned>(uniform(rng, 0, (1 << verts.size()) - 1)));
      std::vector<SimplicialMap> inclusions;
      std::vector<FiniteSimplicialSet> values;
      for (Element b = 0; b < n; ++b) {
        unsigned allowed = (1u << verts.size()) - 1u;
        for (int i : alg.atoms_below(b)) allowed &= kept[static_cast<std::size_t>(i)];
        std::vector<int> keep;
        for (int s = 0; s < z.size(); ++s) {
          bool inside = true;
          for (int v : z.vertices(z.nondegenerate(s))) {
            const auto at = std::find(verts.begin(), verts.end(), v) - verts.begin();
            inside = inside && (allowed >> at & 1u);
          }
          if (inside) keep.push_back(s);
        }
        inclusions.push_back(subcomplex(z, keep));
        values.push_back(inclusions.back().source());
      }
      return presheaf_from(alg, std::move(values),
                           [&](Element b, Element c) { return factor_through(inclusions[b], inclusions[c]); });
    }
    default: {
      std::vector<FiniteSimplicialSet> values;
      for (Element b = 0; b < n; ++b) values.push_back(regular_complex(rng, max_dim, 3));
      return presheaf_from(alg, values, [&](Element b, Element c) {
        return compose(vertex_map(values[c], values[c].of_dim(0).front()), to_point(values[b]));
      });
    }
  }
}

}  // namespace

BooleanPresheaf boolean_presheaf(Rng& rng, int max_atoms, int max_dim) {
  const auto alg = BooleanAlgebra::with_atoms(uniform(rng, 1, max_atoms));
  if (coin(rng, 0.2)) return product(simple_presheaf(rng, alg, 0), simple_presheaf(rng, alg, max_dim));
  return simple_presheaf(rng, alg, max_dim);
}

PeculiarInstance peculiar(Rng& rng, int max_size) {
  auto random_map = [&](int domain, int codomain) {
    FinMap m{domain, codomain, {}};
    for (int i = 0; i < domain; ++i) m.values.push_back(uniform(rng, 0, codomain - 1));
    return m;
  };
  for (;;) {
    // A ⊂ X, X' = A' ⊔ (X \ A), B ⊂ Y
    const int x = uniform(rng, 0, max_size);
    const int a = uniform(rng, 0, x);
    const int ap = uniform(rng, a == 0 ? 0 : 1, max_size);
    const int y = uniform(rng, 1, max_size);
    const int b = uniform(rng, ap == 0 ? 0 : 1, y);
    if (x - a + ap > max_size + 2) continue;
    PeculiarInstance in;
    in.a_to_x = {a, x, {}};
    for (int i = 0; i < a; ++i) in.a_to_x.values.push_back(i);
    in.p = random_map(a, ap);
    const int xp = ap + (x - a);
    in.ap_to_xp = {ap, xp, {}};
    for (int i = 0; i < ap; ++i) in.ap_to_xp.values.push_back(i);
    in.x_to_xp = {x, xp, {}};
    for (int i = 0; i < x; ++i) in.x_to_xp.values.push_back(i < a ? in.p.values[static_cast<std::size_t>(i)] : ap + (i - a));
    in.b_to_y = {b, y, {}};
    for (int i = 0; i < b; ++i) in.b_to_y.values.push_back(i);
    if (ap > 0 && b == 0) continue;
    in.ap_to_b = random_map(ap, std::max(b, 1));
    in.ap_to_b.codomain = b;
    in.q = {xp, y, {}};
    for (int i = 0; i < xp; ++i) {
      in.q.values.push_back(i < ap ? in.ap_to_b.values[static_cast<std::size_t>(i)] : uniform(rng, 0, y - 1));
    }
    // shuffle the labels of X' and Y so the instance is not in normal form
    std::vector<int> px(static_cast<std::size_t>(xp)), py(static_cast<std::size_t>(y));
    std::iota(px.begin(), px.end(), 0);
    std::iota(py.begin(), py.end(), 0);
    std::shuffle(px.begin(), px.end(), rng);
    std::shuffle(py.begin(), py.end(), rng);
    for (auto& v : in.ap_to_xp.values) v = px[static_cast<std::size_t>(v)];
    for (auto& v : in.x_to_xp.values) v = px[static_cast<std::size_t>(v)];
    std::vector<int> q(static_cast<std::size_t>(xp));
    for (int i = 0; i < xp; ++i) q[static_cast<std::size_t>(px[static_cast<std::size_t>(i)])] = py[static_cast<std::size_t>(in.q.values[static_cast<std::size_t>(i)])];
    in.q.values = q;
    for (auto& v : in.b_to_y.values) v = py[static_cast<std::size_t>(v)];
    if (verify_peculiar_lemma(in).status != PeculiarStatus::PreconditionViolated) return in;
  }
}

}  // namespace sharp::gen
