// One line per acceptance criterion; exit status 0 only when all pass.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "oracle/oracle.hpp"
#include "sharp/boolean.hpp"
#include "sharp/constructions.hpp"
#include "sharp/fixtures.hpp"
#include "sharp/generators.hpp"
#include "sharp/hocolim.hpp"
#include "sharp/io.hpp"
#include "sharp/sharp.hpp"

using namespace sharp;
namespace fs = std::filesystem;

namespace {

const fs::path corpus = SHARP_CORPUS_DIR;

struct Finding {
  bool ok = true;
  std::string note;
};

std::vector<fs::path> corpus_files(const std::string& ext) {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(corpus)) {
    if (e.is_regular_file() && e.path().extension() == ext) out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool all_certified(const HarnessReport& r) {
  if (r.outcome != sharp::Outcome::Holds) return false;
  for (const auto& c : r.hypotheses) {
    if (c.verdict != Verdict::Certified) return false;
  }
  for (const auto& c : r.conclusions) {
    if (c.verdict != Verdict::Certified) return false;
  }
  return true;
}

Finding distributive() {
  gen::Rng rng(1);
  int good = 0;
  const int n = 200;
  for (int k = 0; k < n; ++k) {
    const auto inst = gen::distributive_instance(rng, 4, 2);
    good += verify_distributive_law(inst.diagram, inst.colimit, inst.a).comparison.holds;
  }
  return {good == n, std::to_string(good) + "/" + std::to_string(n) + " instances are isomorphisms"};
}

Finding tilde_pullback() {
  gen::Rng rng(2);
  int good = 0, objects = 0;
  const int n = 100;
  for (int k = 0; k < n; ++k) {
    const auto y = gen::diagram(rng, gen::shape(rng, 4), 1);
    const auto f = gen::diagram_map(rng, y, 1);
    bool all = true;
    for (const auto& r : verify_tilde_pullback(f)) {
      all = all && r.holds();
      ++objects;
    }
    good += all;
  }
  return {good == n, std::to_string(good) + "/" + std::to_string(n) + " maps, " + std::to_string(objects) + " objects"};
}

Finding sharpness() {
  const auto d1 = standard_simplex(1);
  const auto d2 = standard_simplex(2);
  const auto two = fixtures::two_points();
  const std::vector<std::pair<FiniteSimplicialSet, FiniteSimplicialSet>> pairs{
      {fixtures::circle(), d1}, {two, d2}, {d1, d1}, {d2, d1}, {two, fixtures::circle()}, {fixtures::circle(), boundary(2)}};
  int sharp = 0;
  for (const auto& [k, b] : pairs) sharp += is_sharp(product(k, b).second()).verdict == Sharpness::Sharp;
  const bool vertex = is_sharp(vertex_map(d1, d1.index_of("[0]"))).verdict == Sharpness::NotSharp;
  const auto three = coproduct({point(), point(), point()}).object;
  const std::vector<SimplicialMap> discrete{to_point(two), to_point(three), identity_map(two), vertex_map(two, 0),
                                            copair(coproduct({point(), point(), point()}), {vertex_map(two, 0), vertex_map(two, 1), vertex_map(two, 1)})};
  int discrete_sharp = 0;
  for (const auto& f : discrete) discrete_sharp += is_sharp(f).verdict == Sharpness::Sharp;
  const bool ok = sharp == static_cast<int>(pairs.size()) && vertex && discrete_sharp == static_cast<int>(discrete.size());
  return {ok, std::to_string(sharp) + "/" + std::to_string(pairs.size()) + " projections sharp, vertex inclusion " +
                  (vertex ? "not sharp" : "misjudged") + ", " + std::to_string(discrete_sharp) + "/" +
                  std::to_string(discrete.size()) + " discrete maps sharp"};
}

Finding thm_hocolims() {
  const std::vector<DiagramMap> fixtures{
      fixtures::product_projection(fixtures::sphere_span(), standard_simplex(1)),
      fixtures::product_projection(fixtures::skeleton_chain(), fixtures::two_points()),
      fixtures::product_projection(fixtures::cone_functor(), fixtures::two_points())};
  int good = 0, checks = 0;
  for (const auto& f : fixtures) {
    for (int part : {1, 2}) {
      const auto r = verify_thm_hocolims(f, part);
      good += all_certified(r);
      checks += static_cast<int>(r.hypotheses.size() + r.conclusions.size());
    }
  }
  return {good == 6, std::to_string(good) + "/6 harness runs fully certified (" + std::to_string(checks) + " checks)"};
}

Finding suspension() {
  const auto h = hocolim(fixtures::suspension_span());
  const auto g = oracle::homology(h.object(), 2);
  const bool ok = g.size() == 3 && g[0] == oracle::Group{1, {}} && g[1] == oracle::Group{0, {}} && g[2] == oracle::Group{1, {}};
  std::string s;
  for (const auto& x : g) s += (s.empty() ? "" : ", ") + ("Z^" + std::to_string(x.betti));
  return {ok, "oracle homology of hocolim: " + s};
}

Finding filtration() {
  std::vector<std::pair<std::string, SimplicialObject>> objects;
  std::vector<int> bounds;
  auto add_diagram = [&](const std::string& name, const Diagram& d) {
    const auto h = hocolim(d);
    objects.emplace_back(name, h.replacement().object());
    bounds.push_back(h.bound());
  };
  for (const auto& p : corpus_files(".diag")) add_diagram(p.filename().string(), io::parse_diagram(p));
  for (const auto& p : corpus_files(".dmap")) {
    const auto f = io::parse_diagram_map(p);
    add_diagram(p.filename().string() + " source", f.source());
    add_diagram(p.filename().string() + " target", f.target());
  }
  for (const auto& p : corpus_files(".sset")) {
    const auto x = io::parse_sset(p);
    objects.emplace_back(p.filename().string(), constant_object(x, std::max(x.dim(), 1)));
    bounds.push_back(-1);
  }
  int good = 0;
  std::string bad;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    const auto f = diagonal_filtration(objects[i].second, bounds[i]);
    bool ok = f.verified() && f.reconstruction.holds;
    for (const auto& s : f.stages) ok = ok && s.verified();
    good += ok;
    if (!ok && bad.empty()) bad = "; first failure " + objects[i].first;
  }
  return {good == static_cast<int>(objects.size()),
          std::to_string(good) + "/" + std::to_string(objects.size()) + " corpus simplicial objects reconstructed" + bad};
}

Finding sheafification() {
  gen::Rng rng(7);
  std::vector<BooleanPresheaf> xs;
  for (int k = 0; k < 200; ++k) xs.push_back(gen::boolean_presheaf(rng, 4));
  for (const auto& p : corpus_files(".bpsh")) xs.push_back(io::parse_presheaf(p));
  int good = 0, sheaves = 0;
  for (const auto& x : xs) {
    const auto l = sheafify(x);
    const bool is = is_sheaf(x).holds;
    sheaves += is;
    const bool ok = is_sheaf(l.sheaf).holds && (!is || is_iso(l.unit)) && is_iso(sheafify(l.sheaf).unit);
    good += ok;
  }
  return {good == static_cast<int>(xs.size()), std::to_string(good) + "/" + std::to_string(xs.size()) + " presheaves (" +
                                                   std::to_string(sheaves) + " already sheaves)"};
}

Finding inverse_image() {
  int good = 0, elements = 0;
  const std::vector<std::string> files{"arrow_product.square", "span_product.square"};
  for (const auto& name : files) {
    const auto s = io::parse_presheaf_square(corpus / name);
    const auto r = verify_inverse_image_preserves_hocartesian(s);
    good += all_certified(r);
    elements += static_cast<int>(r.conclusions.size());
  }
  return {good == 2, std::to_string(good) + "/2 presheaf fixtures, " + std::to_string(elements) + " restricted squares cartesian"};
}

Finding horn_gluing() {
  const auto f = io::parse_map(corpus / "two_points_projection.smap");
  const auto& y = f.target();
  const auto r = verify_horn_gluing(f, y.nondegenerate(y.of_dim(2).front()), 1);
  return {all_certified(r), "Λ^1[2] comparison: " + to_string(r.outcome)};
}

Finding peculiar() {
  gen::Rng rng(10);
  int good = 0;
  for (int k = 0; k < 200; ++k) good += verify_peculiar_lemma(gen::peculiar(rng)).status == PeculiarStatus::Holds;
  return {good == 200, std::to_string(good) + "/200 instances"};
}

// A refutation is genuine when the oracle sees the same witness.
bool genuine(const SimplicialMap& f, const WeakEquivalenceCertificate& c) {
  if (!c.pi0_bijective) return !oracle::pi0_bijective(f);
  if (!c.cone_degree) return false;
  const auto h = oracle::cone_homology(f, *c.cone_degree);
  return !(h[static_cast<std::size_t>(*c.cone_degree)] == oracle::Group{0, {}});
}

Finding soundness() {
  int refuted = 0, confirmed = 0;
  auto check = [&](const SimplicialMap& f, const WeakEquivalenceCertificate& c) {
    if (c.verdict != Verdict::Refuted) return;
    ++refuted;
    confirmed += genuine(f, c);
  };
  for (const auto& p : corpus_files(".smap")) {
    const auto f = io::parse_map(p);
    check(f, certify_weak_equivalence(f));
    const auto r = is_sharp(f);
    for (const auto& cmp : r.comparisons) {
      const auto chi = characteristic_map(f.target(), f.target().nondegenerate(cmp.simplex));
      const Pullback over(f, chi);
      const auto dmap = operator_map(cmp.delta);
      const Pullback part(f, compose(chi, dmap));
      check(over.induced(part.first(), compose(dmap, part.second())), cmp.certificate);
    }
  }
  std::vector<Diagram> diagrams;
  for (const auto& p : corpus_files(".diag")) diagrams.push_back(io::parse_diagram(p));
  for (const auto& p : corpus_files(".dmap")) {
    const auto f = io::parse_diagram_map(p);
    diagrams.push_back(f.source());
    diagrams.push_back(f.target());
  }
  for (const auto& d : diagrams) {
    const auto h = hocolim(d);
    const auto c = colimit(d);
    const auto f = hocolim_to_colimit(h, c);
    check(f, certify_weak_equivalence(f));
    for (int i = 0; i < d.shape().object_count(); ++i) {
      const auto t = tilde(d, i, h);
      check(t.to_value, certify_weak_equivalence(t.to_value));
    }
  }
  return {confirmed == refuted && refuted > 0,
          std::to_string(confirmed) + "/" + std::to_string(refuted) + " refutations confirmed by the oracle"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_s;
    std::function<Finding()> run;
  };
  const std::vector<Criterion> criteria{
      {"distributive law", 30, distributive},
      {"tilde pullback", 60, tilde_pullback},
      {"sharpness checker", 10, sharpness},
      {"hocolim theorem parts 1 and 2", 120, thm_hocolims},
      {"suspension hocolim", 5, suspension},
      {"diagonal filtration", 30, filtration},
      {"sheafification", 10, sheafification},
      {"inverse image theorem", 20, inverse_image},
      {"horn gluing", 5, horn_gluing},
      {"pullback/pushout lemma on sets", 5, peculiar},
      {"soundness regression", 0, soundness},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    Finding o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_s <= 0 || s < c.limit_s;
    const bool pass = o.ok && in_time;
    failed += !pass;
    char timing[64];
    if (c.limit_s > 0) std::snprintf(timing, sizeof timing, "%.2f s of %.0f s", s, c.limit_s);
    else std::snprintf(timing, sizeof timing, "%.2f s", s);
    std::printf("criterion %2zu %s  %s: %s (%s)\n", i + 1, pass ? "PASS" : "FAIL", c.name, o.note.c_str(), timing);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
