#include <gtest/gtest.h>

#include "oracle/oracle.hpp"
#include "sharp/constructions.hpp"
#include "sharp/diagram.hpp"
#include "sharp/fixtures.hpp"
#include "sharp/generators.hpp"
#include "sharp/homology.hpp"
#include "sharp/homotopy.hpp"
#include "sharp/lifting.hpp"
#include "sharp/sharp.hpp"
#include "sharp/subdivision.hpp"

using namespace sharp;

namespace {

oracle::Group group(int betti, std::vector<std::int64_t> torsion = {}) { return {betti, std::move(torsion)}; }

std::vector<oracle::Group> as_oracle(const std::vector<HomologyGroup>& h) {
  std::vector<oracle::Group> out;
  for (const auto& g : h) out.push_back({g.betti, g.torsion});
  return out;
}

SimplicialMap vertex_inclusion(const FiniteSimplicialSet& x, const std::string& id) { return vertex_map(x, x.index_of(id)); }

// Checks a refutation against the brute-force oracle.
void expect_genuine(const SimplicialMap& f, const WeakEquivalenceCertificate& c) {
  ASSERT_EQ(c.verdict, Verdict::Refuted);
  if (!c.pi0_bijective) {
    EXPECT_FALSE(oracle::pi0_bijective(f));
    return;
  }
  ASSERT_TRUE(c.cone_degree.has_value());
  const int d = *c.cone_degree;
  const auto h = oracle::cone_homology(f, d);
  EXPECT_FALSE(h[static_cast<std::size_t>(d)] == group(0)) << "degree " << d;
  for (int k = 0; k < d; ++k) EXPECT_TRUE(h[static_cast<std::size_t>(k)] == group(0)) << "degree " << k;
}

}  // namespace

TEST(Homology, Examples) {
  for (int n = 0; n <= 4; ++n) {
    const auto h = homology(standard_simplex(n));
    EXPECT_EQ(h[0].betti, 1);
    for (std::size_t k = 1; k < h.size(); ++k) EXPECT_TRUE(h[k].is_zero());
  }
  EXPECT_EQ(as_oracle(homology(fixtures::circle(), 1)), (std::vector<oracle::Group>{group(1), group(1)}));
  const auto rp2 = homology(fixtures::projective_plane(), 2);
  EXPECT_EQ(as_oracle(rp2), (std::vector<oracle::Group>{group(1), group(0, {2}), group(0)}));
  EXPECT_EQ(as_oracle(rp2), oracle::homology(fixtures::projective_plane(), 2));
  EXPECT_EQ(as_oracle(homology(fixtures::sphere(), 2)), (std::vector<oracle::Group>{group(1), group(0), group(1)}));
}

TEST(Homology, AgreesWithOracleOnRandomComplexes) {
  gen::Rng rng(41);
  for (int trial = 0; trial < 80; ++trial) {
    auto x = gen::complex(rng, 3, 5);
    if (trial % 4 == 0) x = product(x, gen::complex(rng, 1, 2)).object();
    const int top = std::max(x.dim(), 0) + 1;
    EXPECT_EQ(as_oracle(homology(x, top)), oracle::homology(x, top));
    EXPECT_TRUE(chain_complex(x, top).is_complex());
  }
}

TEST(Homology, ConeAgreesWithOracle) {
  gen::Rng rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    const auto f = gen::map(rng, gen::complex(rng, 2, 4), gen::complex(rng, 2, 4));
    if (!f) continue;
    const int top = std::max(f->source().dim(), f->target().dim()) + 2;
    auto mine = homology(mapping_cone(*f, top + 1));
    mine.pop_back();
    EXPECT_EQ(as_oracle(mine), oracle::cone_homology(*f, top));
  }
}

TEST(Homology, ComponentsAgreeWithOracle) {
  gen::Rng rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    const auto x = gen::complex(rng, 2, 5);
    EXPECT_EQ(components(x).count, oracle::component_count(x));
  }
}

TEST(Certify, Examples) {
  const auto id = certify_weak_equivalence(identity_map(fixtures::projective_plane()));
  EXPECT_EQ(id.verdict, Verdict::Certified);
  EXPECT_EQ(id.route, Route::Isomorphism);
  for (int n = 1; n <= 3; ++n) {
    const auto c = certify_weak_equivalence(to_point(standard_simplex(n)));
    EXPECT_EQ(c.verdict, Verdict::Certified) << c.detail;
  }
  const auto s1 = to_point(fixtures::circle());
  const auto r = certify_weak_equivalence(s1);
  EXPECT_EQ(r.mismatch_degree, 1);
  expect_genuine(s1, r);
  const auto two = to_point(fixtures::two_points());
  expect_genuine(two, certify_weak_equivalence(two));
}

TEST(Certify, DegreeBoundBelowDimensionIsAnError) {
  WeOptions o;
  o.degree_bound = 1;
  EXPECT_THROW(certify_weak_equivalence(identity_map(standard_simplex(2)), o), DimensionError);
}

TEST(Certify, RpTwoToPointIsRefutedByTorsion) {
  const auto f = to_point(fixtures::projective_plane());
  const auto c = certify_weak_equivalence(f);
  EXPECT_EQ(c.mismatch_degree, 1);
  expect_genuine(f, c);
}

TEST(Certify, CollapsibleAndSimplyConnectedRoutes) {
  // the inclusion of a vertex into the horn deformation retracts
  const auto h = horn(3, 1);
  const auto c = certify_weak_equivalence(vertex_inclusion(h, "[0]"));
  EXPECT_EQ(c.verdict, Verdict::Certified);
  // sphere to itself by a map swapping hemispheres: not an isomorphism route
  const auto s = fixtures::sphere();
  std::vector<SimplexRef> images;
  for (int i = 0; i < s.size(); ++i) {
    const auto& id = s.id(i);
    images.push_back(s.nondegenerate(id == "upper" ? s.index_of("lower") : id == "lower" ? s.index_of("upper") : i));
  }
  const SimplicialMap swap(s, s, images);
  EXPECT_EQ(certify_weak_equivalence(swap).verdict, Verdict::Certified);
  // sphere onto a point is refuted in degree 2
  const auto r = certify_weak_equivalence(to_point(s));
  EXPECT_EQ(r.mismatch_degree, 2);
}

TEST(Certify, CircleCoveringIsRefutedByHomology) {
  // the double cover of the circle: two vertices, two edges
  FiniteSimplicialSet::Builder b;
  const int a = b.add_vertex("a"), c = b.add_vertex("b");
  const SimplexRef va{a, SimplicialOperator::identity(0)}, vb{c, SimplicialOperator::identity(0)};
  b.add("ab", {vb, va});
  b.add("ba", {va, vb});
  const auto cover = b.build();
  const auto circle = fixtures::circle();
  const SimplicialMap f(cover, circle, {circle.nondegenerate(0), circle.nondegenerate(0), circle.nondegenerate(1),
                                       circle.nondegenerate(1)});
  const auto r = certify_weak_equivalence(f);
  expect_genuine(f, r);
}

TEST(Certify, TwoOutOfThreeNeverRefutesTheThirdMap) {
  gen::Rng rng(53);
  for (int trial = 0; trial < 60; ++trial) {
    const auto x = gen::complex(rng, 2, 4);
    const auto y = gen::complex(rng, 2, 4);
    const auto f = gen::map(rng, x, y);
    if (!f) continue;
    const auto g = to_point(y);
    const auto cf = certify_weak_equivalence(*f);
    const auto cgf = certify_weak_equivalence(compose(g, *f));
    if (cf.verdict == Verdict::Certified && cgf.verdict == Verdict::Certified) {
      EXPECT_NE(certify_weak_equivalence(g).verdict, Verdict::Refuted);
    }
  }
}

TEST(Subdivision, Examples) {
  const auto sd1 = subdivision(standard_simplex(1));
  EXPECT_EQ(sd1.object.count(0), 3);
  EXPECT_EQ(sd1.object.count(1), 2);
  const auto sd2 = subdivision(standard_simplex(2));
  EXPECT_EQ(sd2.object.count(0), 7);
  EXPECT_EQ(sd2.object.count(1), 12);
  EXPECT_EQ(sd2.object.count(2), 6);
  EXPECT_TRUE(validate(sd2.object).empty());
  const auto sdc = subdivision(fixtures::circle());
  EXPECT_EQ(sdc.object.count(0), 2);
  EXPECT_EQ(sdc.object.count(1), 2);
  for (const auto& x : {fixtures::circle(), fixtures::projective_plane(), fixtures::sphere(), horn(2, 0)}) {
    const auto sd = subdivision(x);
    EXPECT_EQ(as_oracle(homology(sd.object, 2)), oracle::homology(x, 2));
    EXPECT_NE(certify_weak_equivalence(sd.last_vertex).verdict, Verdict::Refuted);
  }
}

TEST(Ex, Examples) {
  const auto e0 = ex(point(), 3);
  EXPECT_TRUE(find_isomorphism(e0.object, point()).has_value());
  EXPECT_TRUE(is_iso(e0.unit));

  const auto circle = fixtures::circle();
  const auto e = ex(circle, 2);
  EXPECT_GT(e.object.count(1), circle.count(1));
  WeOptions o;
  o.truncation = 2;
  const auto c = certify_weak_equivalence(e.unit, o);
  EXPECT_NE(c.verdict, Verdict::Refuted) << c.detail;
  EXPECT_EQ(as_oracle(homology(e.object, 1)), oracle::homology(circle, 1));
}

TEST(Ex, UnitIsNotRefutedOnFixtures) {
  for (const auto& x : {standard_simplex(1), standard_simplex(2), boundary(2), horn(2, 1), fixtures::two_points()}) {
    const auto e = ex(x, std::max(x.dim(), 1) + 1);
    WeOptions o;
    o.truncation = e.truncation;
    EXPECT_NE(certify_weak_equivalence(e.unit, o).verdict, Verdict::Refuted);
  }
}

TEST(HornLifts, Examples) {
  const auto disc = coproduct({point(), point(), point()}).object;
  const auto f = gen::map(*std::make_unique<gen::Rng>(1), disc, fixtures::two_points());
  ASSERT_TRUE(f.has_value());
  EXPECT_TRUE(has_horn_lifts(*f, 3).holds);

  for (int n = 1; n <= 2; ++n) {
    const auto proj = product(fixtures::two_points(), standard_simplex(n));
    EXPECT_TRUE(has_horn_lifts(proj.second(), n + 1).holds);
  }

  const auto r = has_horn_lifts(to_point(fixtures::circle()), 3);
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.failing_dim, 2);
  EXPECT_FALSE(r.failure.empty());
}

TEST(Rlp, Examples) {
  const auto boundary_in = simplex_inclusion(boundary(1), 1);
  EXPECT_TRUE(has_rlp(identity_map(fixtures::sphere()), boundary_in).holds);
  // Δ[1] is not a Kan complex: endpoints prescribed in the wrong order
  // admit no monotone lift
  const auto seg = has_rlp(to_point(standard_simplex(1)), boundary_in);
  EXPECT_FALSE(seg.holds);
  EXPECT_FALSE(seg.failure.empty());
  EXPECT_TRUE(has_rlp(to_point(standard_simplex(1)), simplex_inclusion(boundary(0), 0)).holds);
  EXPECT_FALSE(has_rlp(to_point(fixtures::two_points()), boundary_in).holds);
  EXPECT_TRUE(is_trivial_fibration(identity_map(fixtures::projective_plane()), 3).holds);
  EXPECT_TRUE(is_trivial_fibration(to_point(point()), 3).holds);
  const auto circle = is_trivial_fibration(to_point(fixtures::circle()), 2);
  EXPECT_FALSE(circle.holds);
  EXPECT_EQ(circle.failing_dim, 2);
}

TEST(Sharp, Examples) {
  const std::vector<std::pair<FiniteSimplicialSet, FiniteSimplicialSet>> pairs{
      {fixtures::circle(), standard_simplex(1)}, {fixtures::two_points(), standard_simplex(2)},
      {standard_simplex(1), fixtures::circle()}, {fixtures::sphere(), boundary(2)},
      {horn(2, 1), standard_simplex(1)}};
  for (const auto& [k, b] : pairs) {
    const auto p = product(k, b);
    const auto r = is_sharp(p.second());
    EXPECT_EQ(r.verdict, Sharpness::Sharp);
  }
  const auto d1 = standard_simplex(1);
  const auto v = is_sharp(vertex_inclusion(d1, "[0]"));
  EXPECT_EQ(v.verdict, Sharpness::NotSharp);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(v.comparisons[static_cast<std::size_t>(*v.witness)].certificate.verdict, Verdict::Refuted);

  const auto disc = coproduct({point(), point(), point()}).object;
  gen::Rng rng(2);
  for (int t = 0; t < 5; ++t) {
    const auto f = gen::map(rng, disc, fixtures::two_points());
    EXPECT_EQ(is_sharp(*f).verdict, Sharpness::Sharp);
  }
}

TEST(Sharp, ExhaustiveModeAgreesWithVertexReduction) {
  SharpOptions ex;
  ex.exhaustive = true;
  for (const auto& f : {product(fixtures::circle(), standard_simplex(2)).second(), vertex_inclusion(standard_simplex(1), "[1]"),
                        simplex_inclusion(boundary(2), 2), to_point(fixtures::circle())}) {
    const auto a = is_sharp(f).verdict;
    const auto b = is_sharp(f, ex).verdict;
    if (a != Sharpness::Indeterminate && b != Sharpness::Indeterminate) EXPECT_EQ(a, b);
  }
}

TEST(Sharp, FibrationsAreSharp) {
  std::vector<SimplicialMap> maps{product(fixtures::two_points(), standard_simplex(2)).second(),
                                  to_point(standard_simplex(2)), to_point(fixtures::two_points()),
                                  identity_map(fixtures::circle())};
  for (const auto& f : maps) {
    if (has_horn_lifts(f, std::max(f.source().dim(), f.target().dim()) + 1).holds) {
      EXPECT_EQ(is_sharp(f).verdict, Sharpness::Sharp);
    }
  }
}

TEST(Sharp, BaseChangeAndCoproducts) {
  const auto p = product(fixtures::circle(), standard_simplex(2)).second();
  gen::Rng rng(61);
  for (int t = 0; t < 10; ++t) {
    const auto g = gen::map(rng, gen::complex(rng, 2, 3), p.target());
    if (!g) continue;
    const Pullback pb(p, *g);
    EXPECT_NE(is_sharp(pb.second()).verdict, Sharpness::NotSharp);
  }
  const auto q = product(fixtures::two_points(), standard_simplex(1)).second();
  const auto a = coproduct({p.source(), q.source()});
  const auto b = coproduct({p.target(), q.target()});
  EXPECT_EQ(is_sharp(coproduct_map(a, b, {p, q})).verdict, Sharpness::Sharp);
}

TEST(HomotopyCartesian, Examples) {
  const auto proj = product(fixtures::circle(), standard_simplex(1)).second();
  const auto d1 = standard_simplex(1);
  const auto strict = pullback_square(proj, vertex_inclusion(d1, "[1]"));
  const auto v = is_homotopy_cartesian(strict, Leg::Right);
  EXPECT_EQ(v.verdict, Cartesian::Cartesian);
  EXPECT_EQ(v.strategy, Strategy::SharpLeg);

  const auto v0 = vertex_inclusion(d1, "[0]");
  const auto v1 = vertex_inclusion(d1, "[1]");
  const FiniteSimplicialSet empty;
  const Square e{SimplicialMap(empty, point(), {}), SimplicialMap(empty, point(), {}), v0, v1};
  // neither leg is sharp or a fibration, and the homotopy pullback (paths
  // from 0 to 1) is not empty, so nothing may be claimed
  EXPECT_EQ(is_homotopy_cartesian(e).verdict, Cartesian::Indeterminate);

  const auto c = fixtures::circle();
  const Square s{to_point(c), to_point(c), identity_map(point()), identity_map(point())};
  const auto ns = is_homotopy_cartesian(s);
  EXPECT_EQ(ns.verdict, Cartesian::NotCartesian);
  ASSERT_TRUE(ns.comparison.has_value());
  EXPECT_EQ(ns.comparison->mismatch_degree, 1);

  const Square bad{v0, v0, v0, v1};
  EXPECT_THROW(is_homotopy_cartesian(bad), std::invalid_argument);
}

TEST(HomotopyCartesian, CoproductsOfCartesianSquares) {
  const auto p1 = product(fixtures::circle(), standard_simplex(1)).second();
  const auto p2 = product(fixtures::two_points(), standard_simplex(2)).second();
  const auto s1 = pullback_square(p1, vertex_map(p1.target(), 0));
  const auto s2 = pullback_square(p2, characteristic_map(p2.target(), p2.target().nondegenerate(3)));
  auto sum = [](const SimplicialMap& f, const SimplicialMap& g) {
    return coproduct_map(coproduct({f.source(), g.source()}), coproduct({f.target(), g.target()}), {f, g});
  };
  const Square s{sum(s1.top, s2.top), sum(s1.left, s2.left), sum(s1.right, s2.right), sum(s1.bottom, s2.bottom)};
  EXPECT_EQ(is_homotopy_cartesian(s).verdict, Cartesian::Cartesian);
}
