#include "sharp/fixtures.hpp"

#include <bit>

#include "sharp/constructions.hpp"

namespace sharp::fixtures {

namespace {

SimplexRef nd(int index, int dim) { return {index, SimplicialOperator::identity(dim)}; }

}  // namespace

FiniteSimplicialSet circle() {
  FiniteSimplicialSet::Builder b;
  const int v = b.add_vertex("v");
  b.add("e", {nd(v, 0), nd(v, 0)});
  return b.build();
}

FiniteSimplicialSet projective_plane() {
  FiniteSimplicialSet::Builder b;
  const int v = b.add_vertex("v");
  const int e = b.add("e", {nd(v, 0), nd(v, 0)});
  b.add("t", {nd(e, 1), {v, SimplicialOperator::degeneracy(0, 0)}, nd(e, 1)});
  return b.build();
}

FiniteSimplicialSet two_points() {
  FiniteSimplicialSet::Builder b;
  b.add_vertex("p");
  b.add_vertex("q");
  return b.build();
}

FiniteSimplicialSet sphere() {
  FiniteSimplicialSet::Builder b;
  const int v0 = b.add_vertex("0");
  const int v1 = b.add_vertex("1");
  const int v2 = b.add_vertex("2");
  const int e01 = b.add("01", {nd(v1, 0), nd(v0, 0)});
  const int e02 = b.add("02", {nd(v2, 0), nd(v0, 0)});
  const int e12 = b.add("12", {nd(v2, 0), nd(v1, 0)});
  b.add("upper", {nd(e12, 1), nd(e02, 1), nd(e01, 1)});
  b.add("lower", {nd(e12, 1), nd(e02, 1), nd(e01, 1)});
  return b.build();
}

Diagram suspension_span() {
  const auto s1 = circle();
  return span_diagram(to_point(s1), to_point(s1));
}

Diagram sphere_span() {
  const auto rim = simplex_inclusion(boundary(2), 2);
  return span_diagram(rim, rim);
}

Diagram skeleton_chain() {
  const auto x = standard_simplex(2);
  const auto sk0 = skeleton(x, 0);
  const auto sk1 = skeleton(x, 1);
  return chain_diagram({factor_through(sk0, sk1), sk1});
}

Diagram cone_functor() {
  const auto poset = subset_poset(3, true);
  const auto& c = poset.category;
  std::vector<FiniteSimplicialSet> objects;
  for (unsigned m : poset.masks) objects.push_back(standard_simplex(std::popcount(m)));
  std::vector<SimplicialMap> arrows(static_cast<std::size_t>(c.arrow_count()));
  for (int a = 0; a < c.arrow_count(); ++a) {
    if (c.is_identity(a)) continue;
    const unsigned s = poset.masks[static_cast<std::size_t>(c.arrow(a).src)];
    const unsigned t = poset.masks[static_cast<std::size_t>(c.arrow(a).dst)];
    // vertex 0 is the cone point; the others are the elements of T in order
    std::vector<int> at{0};
    int pos = 0;
    for (int e = 0; e < 3; ++e) {
      if (!(t >> e & 1u)) continue;
      ++pos;
      if (s >> e & 1u) at.push_back(pos);
    }
    arrows[static_cast<std::size_t>(a)] = operator_map(SimplicialOperator::inclusion(std::popcount(t), at));
  }
  return Diagram(c, std::move(objects), std::move(arrows));
}

DiagramMap product_projection(const Diagram& d, const FiniteSimplicialSet& k) {
  const auto& c = d.shape();
  std::vector<Pullback> products;
  std::vector<FiniteSimplicialSet> objects;
  std::vector<SimplicialMap> components;
  for (int o = 0; o < c.object_count(); ++o) {
    products.push_back(product(d.at(o), k));
    objects.push_back(products.back().object());
    components.push_back(products.back().first());
  }
  const auto id = identity_map(k);
  std::vector<SimplicialMap> arrows;
  for (int a = 0; a < c.arrow_count(); ++a) {
    const auto& ar = c.arrow(a);
    arrows.push_back(product_map(products[static_cast<std::size_t>(ar.src)], products[static_cast<std::size_t>(ar.dst)], d.on(a), id));
  }
  return DiagramMap(Diagram(c, std::move(objects), std::move(arrows)), d, std::move(components));
}

Diagram constant_diagram(const FiniteCategory& c, const FiniteSimplicialSet& k) {
  return Diagram(c, std::vector<FiniteSimplicialSet>(static_cast<std::size_t>(c.object_count()), k),
                 std::vector<SimplicialMap>(static_cast<std::size_t>(c.arrow_count()), identity_map(k)));
}

PresheafSquare product_square(const Diagram& x, const FiniteSimplicialSet& k) {
  const auto top = product_projection(x, k);
  std::vector<SimplicialMap> second, bang, kbang;
  for (int o = 0; o < x.shape().object_count(); ++o) {
    second.push_back(product(x.at(o), k).second());
    bang.push_back(to_point(x.at(o)));
    kbang.push_back(to_point(k));
  }
  const auto ks = constant_diagram(x.shape(), k);
  const auto pt = constant_diagram(x.shape(), point());
  return {top, DiagramMap(top.source(), ks, second), DiagramMap(x, pt, bang), DiagramMap(ks, pt, kbang)};
}

}  // namespace sharp::fixtures
