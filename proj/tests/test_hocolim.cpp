#include <gtest/gtest.h>

#include "oracle/oracle.hpp"
#include "sharp/constructions.hpp"
#include "sharp/fixtures.hpp"
#include "sharp/generators.hpp"
#include "sharp/hocolim.hpp"
#include "sharp/homotopy.hpp"
#include "sharp/simplicial_object.hpp"

using namespace sharp;

namespace {

oracle::Group group(int betti, std::vector<std::int64_t> torsion = {}) { return {betti, std::move(torsion)}; }

std::vector<oracle::Group> sphere_homology(int n) {
  std::vector<oracle::Group> h(static_cast<std::size_t>(n + 1), group(0));
  h[0] = group(1);
  h[static_cast<std::size_t>(n)].betti += 1;
  return h;
}

// Diagonal of a constant object back to K, read off the origins.
SimplicialMap diagonal_to_value(const Diagonal& d, const FiniteSimplicialSet& k) {
  std::vector<SimplexRef> images;
  for (int i = 0; i < d.object().size(); ++i) images.push_back(d.origin(i).second);
  return SimplicialMap(d.object(), k, std::move(images));
}

Diagram discrete_pair(const FiniteSimplicialSet& a, const FiniteSimplicialSet& b) {
  auto c = discrete_category(2);
  return Diagram(c, {a, b}, {identity_map(a), identity_map(b)});
}

void expect_holds(const HarnessReport& r) {
  EXPECT_EQ(r.outcome, Outcome::Holds) << r.theorem;
  for (const auto& c : r.hypotheses) EXPECT_EQ(c.verdict, Verdict::Certified) << c.label << ": " << c.detail;
  for (const auto& c : r.conclusions) EXPECT_EQ(c.verdict, Verdict::Certified) << c.label << ": " << c.detail;
}

}  // namespace

TEST(Replacement, SpanLevelOneHasFiveSummands) {
  const auto r = simplicial_replacement(fixtures::suspension_span(), 2);
  // three identities and two legs
  EXPECT_EQ(r.strings(0).size(), 3u);
  EXPECT_EQ(r.strings(1).size(), 5u);
  EXPECT_EQ(r.strings(2).size(), 7u);
  EXPECT_TRUE(simplicial_object_violations(r.object()).empty());
}

TEST(Replacement, DiscreteShapeIsLevelwiseCoproduct) {
  const auto a = fixtures::circle();
  const auto b = standard_simplex(1);
  const auto r = simplicial_replacement(discrete_pair(a, b), 3);
  for (int n = 0; n <= 3; ++n) {
    EXPECT_EQ(r.strings(n).size(), 2u);
    EXPECT_EQ(r.object().level(n).size(), a.size() + b.size());
  }
  const auto h = hocolim(discrete_pair(a, b));
  EXPECT_EQ(oracle::homology(h.object(), 2), (std::vector<oracle::Group>{group(2), group(1), group(0)}));
}

TEST(Replacement, IdentitiesHoldOnRandomDiagrams) {
  gen::Rng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const auto d = gen::diagram(rng, gen::shape(rng, 3), 1);
    const auto r = simplicial_replacement(d, 3);
    EXPECT_TRUE(simplicial_object_violations(r.object()).empty()) << trial;
  }
}

TEST(Replacement, ActIsFunctorial) {
  const auto r = simplicial_replacement(fixtures::sphere_span(), 3);
  const auto& x = r.object();
  for (int m = 0; m <= 2; ++m) {
    for (int n = 0; n <= 3; ++n) {
      for (const auto& theta : monotone_maps(m, n)) {
        for (int l = 0; l <= 2; ++l) {
          for (const auto& eta : monotone_maps(l, m)) {
            EXPECT_EQ(x.act(theta.after(eta)), compose(x.act(eta), x.act(theta)));
          }
        }
      }
    }
  }
  EXPECT_EQ(x.act(SimplicialOperator::face(2, 1)), x.face(2, 1));
  EXPECT_EQ(x.act(SimplicialOperator::degeneracy(1, 0)), x.degeneracy(1, 0));
}

TEST(Diagonal, ConstantObjectGivesValue) {
  for (const auto& k : {fixtures::circle(), fixtures::projective_plane(), standard_simplex(2)}) {
    const auto d = diagonal(constant_object(k, 3));
    EXPECT_TRUE(check_iso(diagonal_to_value(d, k)).holds);
  }
}

TEST(Diagonal, LevelwiseCoproduct) {
  const auto a = constant_object(fixtures::circle(), 2);
  const auto b = constant_object(standard_simplex(1), 2);
  const auto d = diagonal(levelwise_coproduct({a, b}));
  EXPECT_EQ(oracle::homology(d.object(), 1), (std::vector<oracle::Group>{group(2), group(1)}));
  EXPECT_EQ(d.object().size(), fixtures::circle().size() + standard_simplex(1).size());
}

TEST(Diagonal, BoundAboveTopIsAnError) {
  EXPECT_THROW(diagonal(constant_object(standard_simplex(1), 1), 2), DimensionError);
  EXPECT_THROW(hocolim(fixtures::suspension_span(), 1), DimensionError);
}

TEST(Hocolim, SuspensionOfCircle) {
  const auto d = fixtures::suspension_span();
  const auto h = hocolim(d);
  EXPECT_EQ(h.bound(), 2);
  EXPECT_EQ(oracle::homology(h.object(), 2), sphere_homology(2));
  const auto to_colim = natural_map_to_colim(d);
  const auto cert = certify_weak_equivalence(to_colim);
  ASSERT_EQ(cert.verdict, Verdict::Refuted);
  ASSERT_TRUE(cert.cone_degree.has_value());
  EXPECT_FALSE(oracle::cone_homology(to_colim, *cert.cone_degree)[static_cast<std::size_t>(*cert.cone_degree)] == group(0));
}

TEST(Hocolim, MonoSpanIsHocolimDiagram) {
  const auto d = fixtures::sphere_span();
  EXPECT_EQ(oracle::homology(hocolim(d).object(), 2), sphere_homology(2));
  EXPECT_EQ(is_hocolim_diagram(d).verdict, Verdict::Certified);
}

TEST(Hocolim, SingleObjectIsHocolimDiagram) {
  for (const auto& k : {fixtures::circle(), standard_simplex(2), fixtures::two_points()}) {
    const auto d = Diagram(discrete_category(1), {k}, {identity_map(k)});
    const auto f = natural_map_to_colim(d);
    // hocolim over a point is K itself
    EXPECT_TRUE(check_iso(f).holds);
    EXPECT_EQ(is_hocolim_diagram(d).verdict, Verdict::Certified);
  }
}

TEST(Hocolim, CofibrantSubsetDiagramsAndChains) {
  EXPECT_EQ(is_hocolim_diagram(fixtures::cone_functor()).verdict, Verdict::Certified);
  EXPECT_EQ(is_hocolim_diagram(fixtures::skeleton_chain()).verdict, Verdict::Certified);
}

TEST(Hocolim, TerminalObjectShapes) {
  // a chain has a terminal object, so its hocolim is the last value up to equivalence
  const auto d = chain_diagram({to_point(fixtures::circle())});
  EXPECT_EQ(oracle::homology(hocolim(d).object(), 2), (std::vector<oracle::Group>{group(1), group(0), group(0)}));
}

TEST(Hocolim, HomotopyInvariance) {
  for (const auto& d : {fixtures::sphere_span(), fixtures::suspension_span(), fixtures::skeleton_chain()}) {
    const auto f = fixtures::product_projection(d, standard_simplex(1));
    const int bound = std::max(hocolim_bound(f.source()), hocolim_bound(f.target()));
    const auto hx = hocolim(f.source(), bound);
    const auto hy = hocolim(f.target(), bound);
    const auto g = hocolim_map(f, hx, hy);
    EXPECT_EQ(g, diagonal_map(replacement_map(f, hx.replacement(), hy.replacement()), hx.diagonal(), hy.diagonal()));
    WeOptions o;
    o.simply_connected = true;
    EXPECT_EQ(certify_weak_equivalence(g, o).verdict, Verdict::Certified);
  }
}

TEST(Tilde, TerminalIndexRecoversHocolim) {
  const auto d = fixtures::skeleton_chain();
  const auto t = tilde(d, 2);
  // the over category of the terminal object is the whole chain
  EXPECT_TRUE(check_iso(t.to_hocolim).holds);
}

TEST(Tilde, PullbackOnFixtures) {
  for (const auto& d : {fixtures::suspension_span(), fixtures::sphere_span(), fixtures::skeleton_chain()}) {
    for (const auto& r : verify_tilde_pullback(identity_map(d))) EXPECT_TRUE(r.holds()) << r.comparison.detail;
    for (const auto& r : verify_tilde_pullback(fixtures::product_projection(d, fixtures::two_points()))) {
      EXPECT_TRUE(r.holds()) << r.comparison.detail;
    }
  }
}

TEST(Tilde, PullbackOnRandomMaps) {
  gen::Rng rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const auto y = gen::diagram(rng, gen::shape(rng, 3), 1);
    const auto f = gen::diagram_map(rng, y, 1);
    for (const auto& r : verify_tilde_pullback(f)) EXPECT_TRUE(r.holds()) << "trial " << trial << ": " << r.comparison.detail;
  }
}

TEST(Latching, DescriptionsAgree) {
  const auto r = simplicial_replacement(fixtures::sphere_span(), 3);
  for (int n = 1; n <= 3; ++n) {
    const auto l = latching_object(r.object(), n);
    EXPECT_TRUE(l.agreement.holds) << n << ": " << l.agreement.detail;
    EXPECT_TRUE(l.cofibrant) << n;
  }
  gen::Rng rng(99);
  for (int trial = 0; trial < 15; ++trial) {
    const auto d = gen::diagram(rng, gen::shape(rng, 3), 1);
    const auto x = simplicial_replacement(d, 2).object();
    for (int n = 1; n <= 2; ++n) EXPECT_TRUE(latching_object(x, n).agreement.holds) << trial << " " << n;
  }
}

TEST(Latching, ConstantObjectIsWholeLevel) {
  const auto x = constant_object(fixtures::circle(), 3);
  for (int n = 1; n <= 3; ++n) EXPECT_TRUE(check_iso(latching_inclusion(x, n)).holds);
}

TEST(Latching, ReplacementOfDiscreteShape) {
  // every string of a discrete shape is a string of identities, hence degenerate
  const auto r = simplicial_replacement(discrete_pair(fixtures::circle(), standard_simplex(1)), 2);
  EXPECT_TRUE(check_iso(latching_inclusion(r.object(), 1)).holds);
  const auto span = simplicial_replacement(fixtures::suspension_span(), 2);
  const auto l = latching_inclusion(span.object(), 1);
  // the two legs are not degenerate; each carries a copy of S¹
  EXPECT_EQ(span.object().level(1).size() - l.source().size(), 2 * fixtures::circle().size());
}

TEST(Filtration, VerifiedOnFixtures) {
  for (const auto& d : {fixtures::suspension_span(), fixtures::sphere_span(), fixtures::skeleton_chain()}) {
    const auto h = hocolim(d);
    const auto f = diagonal_filtration(h.replacement().object(), h.bound());
    EXPECT_TRUE(f.verified());
    for (const auto& s : f.stages) {
      EXPECT_TRUE(s.verified()) << s.n << ": " << s.pushout.detail;
    }
    EXPECT_TRUE(f.reconstruction.holds) << f.reconstruction.detail;
  }
  const auto span = hocolim(fixtures::suspension_span());
  const auto f = diagonal_filtration(span.replacement().object(), span.bound());
  // a span has strings of length at most one
  EXPECT_TRUE(check_iso(f.stages[1].inclusion).holds);
  const auto c = diagonal_filtration(constant_object(fixtures::circle(), 2));
  EXPECT_TRUE(c.verified());
  EXPECT_TRUE(check_iso(c.stages[0].inclusion).holds);
}

TEST(DiagonalSharp, ConstantAndProjection) {
  const auto k = standard_simplex(1);
  const Pullback p = product(fixtures::circle(), k);
  expect_holds(verify_diagonal_sharp(constant_object_map(p.first(), 2)));
  const auto f = fixtures::product_projection(fixtures::sphere_span(), k);
  const int bound = hocolim_bound(f.source());
  const auto hx = simplicial_replacement(f.source(), bound);
  const auto hy = simplicial_replacement(f.target(), bound);
  expect_holds(verify_diagonal_sharp(replacement_map(f, hx, hy), {}, bound));
}

TEST(DiagonalSharp, LevelwiseCoproductOfSharpMaps) {
  const auto a = constant_object_map(product(fixtures::circle(), fixtures::two_points()).first(), 2);
  const auto b = constant_object_map(identity_map(standard_simplex(1)), 2);
  SimplicialObjectMap p{levelwise_coproduct({a.source, b.source}), levelwise_coproduct({a.target, b.target}), {}};
  for (int n = 0; n <= 2; ++n) {
    const auto from = coproduct({a.source.level(n), b.source.level(n)});
    const auto to = coproduct({a.target.level(n), b.target.level(n)});
    p.components.push_back(coproduct_map(from, to, {a.components[static_cast<std::size_t>(n)], b.components[static_cast<std::size_t>(n)]}));
  }
  EXPECT_TRUE(naturality_violations(p).empty());
  expect_holds(verify_diagonal_sharp(p));
}

TEST(HocolimTheorem, PartsOneAndTwoOnFixtures) {
  for (const auto& d : {fixtures::sphere_span(), fixtures::skeleton_chain(), fixtures::cone_functor()}) {
    for (const auto& k : {standard_simplex(1), fixtures::two_points()}) {
      const auto f = fixtures::product_projection(d, k);
      expect_holds(verify_thm_hocolims(f, 1));
      expect_holds(verify_thm_hocolims(f, 2));
    }
    expect_holds(verify_thm_hocolims(identity_map(d), 2));
  }
}

TEST(HocolimTheorem, FailingHypothesisIsReported) {
  const auto f = identity_map(fixtures::suspension_span());
  EXPECT_EQ(verify_thm_hocolims(f, 1).outcome, Outcome::HypothesisNotEstablished);
  EXPECT_EQ(verify_thm_hocolims(f, 2).outcome, Outcome::HypothesisNotEstablished);
  EXPECT_THROW(verify_thm_hocolims(f, 3), std::invalid_argument);
}

TEST(SpecialDiagrams, AllThreeCases) {
  const auto k = fixtures::two_points();
  expect_holds(verify_special_diagrams(fixtures::product_projection(fixtures::skeleton_chain(), k), SpecialCase::Chain));
  expect_holds(verify_special_diagrams(fixtures::product_projection(fixtures::sphere_span(), k), SpecialCase::Span));
  expect_holds(verify_special_diagrams(fixtures::product_projection(fixtures::cone_functor(), k), SpecialCase::ProperSubsets));
}

TEST(SpecialDiagrams, WrongShapeIsAHypothesisFailure) {
  const auto f = fixtures::product_projection(fixtures::sphere_span(), fixtures::two_points());
  EXPECT_EQ(verify_special_diagrams(f, SpecialCase::Chain).outcome, Outcome::HypothesisNotEstablished);
  EXPECT_EQ(verify_special_diagrams(f, SpecialCase::ProperSubsets).outcome, Outcome::HypothesisNotEstablished);
  const auto g = identity_map(fixtures::suspension_span());
  // neither leg S¹ -> Δ[0] is a monomorphism
  EXPECT_EQ(verify_special_diagrams(g, SpecialCase::Span).outcome, Outcome::HypothesisNotEstablished);
}

TEST(HornGluing, ProjectionOverSimplex) {
  const auto y = standard_simplex(2);
  const Pullback p = product(fixtures::two_points(), y);
  const auto top = y.nondegenerate(y.of_dim(2).front());
  for (int k = 0; k <= 2; ++k) expect_holds(verify_horn_gluing(p.second(), top, k));
  const Pullback q = product(standard_simplex(1), y);
  expect_holds(verify_horn_gluing(q.second(), top, 1));
}

TEST(HornGluing, NonFibrationFailsHypothesis) {
  // the inclusion of a vertex: the fiber over the far vertex is empty
  const auto y = standard_simplex(1);
  const auto f = vertex_map(y, 0);
  const auto top = y.nondegenerate(y.of_dim(1).front());
  const auto r = verify_horn_gluing(f, top, 0);
  EXPECT_EQ(r.outcome, Outcome::HypothesisNotEstablished);
}
