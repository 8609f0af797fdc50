#include <gtest/gtest.h>

#include <set>

#include "oracle/oracle.hpp"
#include "sharp/boolean.hpp"
#include "sharp/constructions.hpp"
#include "sharp/fixtures.hpp"
#include "sharp/generators.hpp"

using namespace sharp;

namespace {

// The 2-skeleton of the 0-coskeleton on {0,1}: alternating strings of length <= 3.
FiniteSimplicialSet alternating_pair() {
  FiniteSimplicialSet::Builder b;
  const int v0 = b.add_vertex("0");
  const int v1 = b.add_vertex("1");
  auto nd = [](int i, int dim) { return SimplexRef{i, SimplicialOperator::identity(dim)}; };
  const int e01 = b.add("01", {nd(v1, 0), nd(v0, 0)});
  const int e10 = b.add("10", {nd(v0, 0), nd(v1, 0)});
  b.add("010", {nd(e10, 1), {v0, SimplicialOperator::degeneracy(0, 0)}, nd(e01, 1)});
  b.add("101", {nd(e01, 1), {v1, SimplicialOperator::degeneracy(0, 0)}, nd(e10, 1)});
  return b.build();
}

using fixtures::constant_diagram;
using fixtures::product_square;

// Objectwise map into a constant diagram.
DiagramMap to_constant(const Diagram& d, const FiniteSimplicialSet& k, const std::vector<SimplicialMap>& components) {
  return DiagramMap(d, constant_diagram(d.shape(), k), components);
}

Diagram arrow_presheaf(const SimplicialMap& f) { return chain_diagram({f}); }

BooleanPresheafMap discrete_map(const std::vector<SimplicialMap>& components) {
  const auto c = discrete_category(static_cast<int>(components.size()));
  std::vector<FiniteSimplicialSet> src, dst;
  std::vector<SimplicialMap> ids_src, ids_dst;
  for (const auto& f : components) {
    src.push_back(f.source());
    dst.push_back(f.target());
    ids_src.push_back(identity_map(f.source()));
    ids_dst.push_back(identity_map(f.target()));
  }
  return inverse_image_restriction(DiagramMap(Diagram(c, src, ids_src), Diagram(c, dst, ids_dst), components));
}

}  // namespace

TEST(BooleanAlgebra, LawsHoldExhaustively) {
  for (int n = 0; n <= 6; ++n) EXPECT_TRUE(boolean_law_violations(BooleanAlgebra::with_atoms(n)).empty()) << n;
}

TEST(BooleanAlgebra, NamesRoundTrip) {
  const BooleanAlgebra alg({"x", "y", "z"});
  for (Element b = 0; b < 8; ++b) EXPECT_EQ(alg.parse(alg.name(b)), b);
  EXPECT_EQ(alg.parse("1"), 7u);
  EXPECT_EQ(alg.name(5), "x+z");
  EXPECT_THROW(alg.parse("w"), std::invalid_argument);
  EXPECT_THROW(BooleanAlgebra({"x", "x"}), std::invalid_argument);
}

TEST(BooleanAlgebra, DecompositionsArePartitions) {
  // Bell numbers
  const std::vector<std::size_t> bell{1, 1, 2, 5, 15, 52};
  for (int n = 0; n <= 5; ++n) {
    const auto alg = BooleanAlgebra::with_atoms(n);
    const auto ds = decompositions(alg, alg.top());
    EXPECT_EQ(ds.size(), bell[static_cast<std::size_t>(n)]);
    for (const auto& d : ds) EXPECT_TRUE(is_decomposition(alg, d));
  }
  const auto alg = BooleanAlgebra::with_atoms(3);
  EXPECT_FALSE(is_decomposition(alg, {7, {3, 6}}));
  EXPECT_FALSE(is_decomposition(alg, {7, {3}}));
  EXPECT_FALSE(is_decomposition(alg, {3, {3, 0}}));
}

TEST(Presheaf, BrokenCubeIsRejected) {
  const auto alg = BooleanAlgebra::with_atoms(2);
  const auto y = standard_simplex(1);
  const auto at0 = vertex_map(y, y.index_of("[0]"));
  const auto at1 = vertex_map(y, y.index_of("[1]"));
  std::vector<FiniteSimplicialSet> values{point(), point(), point(), y};
  BooleanPresheaf::Covers covers;
  covers.emplace(std::pair{1u, 0u}, identity_map(point()));
  covers.emplace(std::pair{2u, 0u}, identity_map(point()));
  covers.emplace(std::pair{3u, 1u}, to_point(y));
  covers.emplace(std::pair{3u, 2u}, to_point(y));
  covers.emplace(std::pair{0u, 0u}, identity_map(point()));
  EXPECT_THROW(BooleanPresheaf(alg, values, covers), InvariantError);
  covers.erase({0u, 0u});
  EXPECT_NO_THROW(BooleanPresheaf(alg, values, covers));
  // X(1) -> X(0) through a0 lands at [0] and through a1 at [1]
  values = {y, y, y, y};
  covers.clear();
  covers.emplace(std::pair{1u, 0u}, compose(at0, to_point(y)));
  covers.emplace(std::pair{2u, 0u}, compose(at1, to_point(y)));
  covers.emplace(std::pair{3u, 1u}, identity_map(y));
  covers.emplace(std::pair{3u, 2u}, identity_map(y));
  const auto bad = presheaf_violations(alg, values, covers);
  ASSERT_EQ(bad.size(), 1u);
  EXPECT_NE(bad.front().find("differ"), std::string::npos);
}

TEST(Sheaf, Examples) {
  const auto alg = BooleanAlgebra::with_atoms(3);
  EXPECT_TRUE(is_sheaf(atom_family(alg, {fixtures::circle(), standard_simplex(1), fixtures::two_points()})).holds);
  const auto c = is_sheaf(constant_presheaf(alg, standard_simplex(1)));
  EXPECT_FALSE(c.holds);
  ASSERT_TRUE(c.counterexample.has_value());
  EXPECT_EQ(c.counterexample->element, alg.top());
  // the terminal presheaf is a sheaf
  EXPECT_TRUE(is_sheaf(constant_presheaf(alg, point())).holds);
  const auto one = BooleanAlgebra::with_atoms(1);
  EXPECT_TRUE(is_sheaf(atom_family(one, {fixtures::circle()})).holds);
  const auto two = fixtures::two_points();
  const auto bad_bottom = presheaf_from(one, {two, fixtures::circle()}, [&](Element, Element) {
    return compose(vertex_map(two, two.of_dim(0).front()), to_point(fixtures::circle()));
  });
  const auto r = is_sheaf(bad_bottom);
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.counterexample->element, 0u);
}

TEST(Sheaf, AtomCriterionMatchesAllDecompositions) {
  gen::Rng rng(9);
  int sheaves = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const auto x = gen::boolean_presheaf(rng, 4);
    const bool atoms = is_sheaf(x).holds;
    EXPECT_EQ(atoms, is_sheaf(x, true).holds) << trial;
    sheaves += atoms;
  }
  EXPECT_GT(sheaves, 10);
  EXPECT_LT(sheaves, 110);
}

TEST(Sheafify, TwoAtomExample) {
  const auto alg = BooleanAlgebra::with_atoms(2);
  const auto k = fixtures::circle();
  const auto m = standard_simplex(1);
  const std::vector<FiniteSimplicialSet> values{point(), k, m, point()};
  const auto x = presheaf_from(alg, values, [&](Element b, Element c) {
    if (b != 3) return to_point(values[b]);
    return vertex_map(values[c], values[c].of_dim(0).front());
  });
  EXPECT_FALSE(is_sheaf(x).holds);
  const auto l = sheafify(x);
  EXPECT_EQ(l.sheaf.at(3), product(k, m).object());
  EXPECT_TRUE(is_sheaf(l.sheaf).holds);
  EXPECT_FALSE(is_iso(l.unit));
}

TEST(Sheafify, RandomPresheaves) {
  gen::Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const auto x = gen::boolean_presheaf(rng, 4);
    const auto l = sheafify(x);
    EXPECT_TRUE(naturality_violations(l.unit).empty()) << trial;
    EXPECT_TRUE(is_sheaf(l.sheaf).holds) << trial;
    EXPECT_EQ(is_iso(l.unit), is_sheaf(x).holds) << trial;
    // L L X ≅ L X through the unit
    const auto ll = sheafify(l.sheaf);
    EXPECT_TRUE(is_iso(ll.unit)) << trial;
    for (int i = 0; i < x.algebra().atom_count(); ++i) EXPECT_EQ(l.sheaf.at(x.algebra().atom(i)), x.at(x.algebra().atom(i)));
  }
}

TEST(Sheafify, MapsAreNatural) {
  gen::Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto x = gen::boolean_presheaf(rng, 3);
    const auto k = constant_presheaf(x.algebra(), trial % 3 == 0 ? standard_simplex(1) : fixtures::two_points());
    const auto f = projection(x, k);
    ASSERT_TRUE(naturality_violations(f).empty());
    const auto from = sheafify(f.source);
    const auto to = sheafify(f.target);
    const auto lf = sheafify(f, from, to);
    EXPECT_TRUE(naturality_violations(lf).empty()) << trial;
    // L f η = η f
    for (Element b = 0; b < static_cast<Element>(x.algebra().size()); ++b) {
      EXPECT_EQ(compose(lf.at(b), from.unit.at(b)), compose(to.unit.at(b), f.at(b)));
    }
  }
}

TEST(Representable, Values) {
  const auto alg = BooleanAlgebra::with_atoms(3);
  for (Element b = 0; b < 8; ++b) {
    const auto y = representable(alg, b);
    EXPECT_TRUE(is_sheaf(y, true).holds) << b;
    for (Element c = 0; c < 8; ++c) EXPECT_EQ(y.at(c).size(), alg.leq(c, b) ? 1 : 0);
  }
  EXPECT_TRUE(is_iso(sheafify(representable(alg, alg.top())).unit));
  EXPECT_TRUE(is_sheaf(tensor_representable(alg, fixtures::circle(), 5)).holds);
}

TEST(LocalModel, WeakEquivalences) {
  const auto alg = BooleanAlgebra::with_atoms(2);
  const auto x = atom_family(alg, {fixtures::circle(), standard_simplex(2)});
  EXPECT_EQ(local_weak_equivalence(identity_map(x)).verdict, Verdict::Certified);
  EXPECT_EQ(local_weak_equivalence(projection(x, constant_presheaf(alg, standard_simplex(1)))).verdict, Verdict::Certified);
  const auto f = discrete_map({to_point(fixtures::circle()), identity_map(standard_simplex(1))});
  const auto c = local_weak_equivalence(f);
  ASSERT_EQ(c.verdict, Verdict::Refuted);
  EXPECT_EQ(c.atom, 0);
  const auto& cert = c.atoms[0];
  ASSERT_TRUE(cert.cone_degree.has_value());
  const auto h = oracle::cone_homology(f.at(1), *cert.cone_degree);
  EXPECT_FALSE(h[static_cast<std::size_t>(*cert.cone_degree)] == (oracle::Group{0, {}}));
}

TEST(LocalModel, Fibrations) {
  const auto alg = BooleanAlgebra::with_atoms(2);
  const auto x = atom_family(alg, {fixtures::two_points(), standard_simplex(1)});
  EXPECT_TRUE(local_fibration(identity_map(x), 2).holds);
  EXPECT_TRUE(local_trivial_fibration(identity_map(x), 2).holds);
  const auto k = constant_presheaf(alg, fixtures::two_points());
  EXPECT_TRUE(local_fibration(projection(x, k), 2).holds);
  EXPECT_FALSE(local_trivial_fibration(projection(x, k), 2).holds);
  const auto y = standard_simplex(1);
  const auto inc = discrete_map({identity_map(point()), vertex_map(y, y.index_of("[0]"))});
  const auto r = local_fibration(inc, 2);
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.atom, 1);
}

TEST(LocalModel, TrivialFibrationWithinBound) {
  const auto k = alternating_pair();
  const auto f = discrete_map({product(k, standard_simplex(1)).second(), identity_map(point())});
  EXPECT_TRUE(local_trivial_fibration(f, 2).holds);
  // ∂Δ[3] -> K has no filler
  EXPECT_FALSE(local_trivial_fibration(f, 3).holds);
}

TEST(LocalModel, FibrationsAreRepresentableLifts) {
  gen::Rng rng(77);
  const int bound = 2;
  for (int trial = 0; trial < 25; ++trial) {
    const int atoms = 1 + trial % 2;
    std::vector<SimplicialMap> parts;
    for (int i = 0; i < atoms; ++i) {
      const auto a = gen::complex(rng, 1, 3);
      const auto b = gen::complex(rng, 1, 3);
      auto m = gen::map(rng, a, b);
      parts.push_back(m ? *m : identity_map(b));
    }
    const auto f = discrete_map(parts);
    bool all = true;
    for (Element b = 0; b < static_cast<Element>(f.source.algebra().size()); ++b) {
      for (int n = 1; n <= bound; ++n) {
        for (int h = 0; h <= n; ++h) all = all && rlp_against_representable(f, simplex_inclusion(horn(n, h), n), b).holds;
      }
    }
    EXPECT_EQ(local_fibration(f, bound).holds, all) << trial;
  }
}

TEST(InverseImage, Restriction) {
  const auto c = arrow_category();
  const auto k = fixtures::circle();
  const auto cst = inverse_image_restriction(constant_diagram(c, k));
  EXPECT_EQ(cst.at(1), k);
  EXPECT_EQ(cst.at(2), k);
  EXPECT_TRUE(is_sheaf(cst).holds);
  const auto f = to_point(k);
  const auto fam = inverse_image_restriction(arrow_presheaf(f));
  EXPECT_EQ(fam.at(1), k);
  EXPECT_EQ(fam.at(2), point());
  EXPECT_EQ(fam.algebra().atom_count(), 2);
}

TEST(InverseImage, PullbackSquaresStayPullbacks) {
  const auto x = arrow_presheaf(to_point(fixtures::circle()));
  const auto sq = product_square(x, standard_simplex(1));
  ASSERT_TRUE(square_violations(sq).empty());
  const auto a = inverse_image_restriction(sq.top.source());
  const auto top = inverse_image_restriction(sq.top, a, inverse_image_restriction(sq.top.target()));
  const auto left = inverse_image_restriction(sq.left, a, inverse_image_restriction(sq.left.target()));
  const auto right = inverse_image_restriction(sq.right);
  const auto bottom = inverse_image_restriction(sq.bottom);
  for (Element b = 0; b < 4; ++b) {
    const Pullback p(right.at(b), bottom.at(b));
    EXPECT_TRUE(check_iso(p.induced(top.at(b), left.at(b))).holds) << b;
  }
}

TEST(InverseImage, PreservesMonosAndSurjections) {
  const auto y = standard_simplex(1);
  const auto mono = inverse_image_restriction(to_constant(constant_diagram(arrow_category(), point()), y,
                                                          {vertex_map(y, 0), vertex_map(y, 0)}));
  for (const auto& m : mono.components) EXPECT_TRUE(is_mono(m));
  const auto epi = discrete_map({to_point(y), to_point(fixtures::circle())});
  for (const auto& m : epi.components) {
    for (int n = 0; n <= 2; ++n) {
      std::set<std::pair<int, std::string>> hit;
      for (const auto& s : m.source().simplices(n)) hit.insert({m(s).index, m(s).degeneracy.to_string()});
      EXPECT_EQ(hit.size(), m.target().simplices(n).size());
    }
  }
}

TEST(InverseImageTheorem, Fixtures) {
  const auto arrow = arrow_presheaf(to_point(standard_simplex(1)));
  const auto span = fixtures::sphere_span();
  for (const auto& x : {arrow, span}) {
    const auto r = verify_inverse_image_preserves_hocartesian(product_square(x, fixtures::two_points()));
    EXPECT_EQ(r.outcome, Outcome::Holds);
    for (const auto& c : r.conclusions) EXPECT_EQ(c.verdict, Verdict::Certified) << c.label << ": " << c.detail;
  }
}

TEST(InverseImageTheorem, FailingObjectRejectsHypothesis) {
  // A = (∅ -> Δ[0]) over constant points: the square at the first object is
  // ∅ -> Δ[0] over the identity of Δ[0]
  const FiniteSimplicialSet empty;
  const auto a = arrow_presheaf(SimplicialMap(empty, point(), {}));
  const auto pt = constant_diagram(arrow_category(), point());
  const std::vector<SimplicialMap> from_a{SimplicialMap(empty, point(), {}), identity_map(point())};
  const auto ids = identity_map(pt);
  const PresheafSquare s{DiagramMap(a, pt, from_a), DiagramMap(a, pt, from_a), ids, ids};
  const auto r = verify_inverse_image_preserves_hocartesian(s);
  EXPECT_EQ(r.outcome, Outcome::HypothesisNotEstablished);
  EXPECT_TRUE(r.conclusions.empty());
  EXPECT_EQ(r.hypotheses[1].verdict, Verdict::Refuted);
  EXPECT_EQ(r.hypotheses[2].verdict, Verdict::Certified);
}

TEST(PresheafSharpness, Objectwise) {
  const auto x = fixtures::sphere_span();
  const auto proj = fixtures::product_projection(x, standard_simplex(1));
  EXPECT_EQ(sharp_over_presheaf_site(proj).verdict, Sharpness::Sharp);
  const auto y = standard_simplex(1);
  const auto c = arrow_category();
  const auto inc = DiagramMap(constant_diagram(c, point()), arrow_presheaf(to_point(y)), {vertex_map(y, 0), identity_map(point())});
  const auto r = sharp_over_presheaf_site(inc);
  EXPECT_EQ(r.verdict, Sharpness::NotSharp);
  EXPECT_EQ(r.failing, 0);
  const auto two = fixtures::two_points();
  const auto disc = to_constant(constant_diagram(c, two), point(), {to_point(two), to_point(two)});
  EXPECT_EQ(sharp_over_presheaf_site(disc).verdict, Sharpness::Sharp);
}

TEST(PresheafSharpness, InverseImagePreservesSharpMaps) {
  for (const auto& x : {fixtures::sphere_span(), fixtures::skeleton_chain()}) {
    const auto f = fixtures::product_projection(x, fixtures::two_points());
    ASSERT_EQ(sharp_over_presheaf_site(f).verdict, Sharpness::Sharp);
    EXPECT_EQ(is_sharp_atomwise(inverse_image_restriction(f)).verdict, Sharpness::Sharp);
  }
}
