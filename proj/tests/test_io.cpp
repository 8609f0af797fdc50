#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "sharp/constructions.hpp"
#include "sharp/fixtures.hpp"
#include "sharp/io.hpp"

using namespace sharp;
namespace fs = std::filesystem;

namespace {

const fs::path corpus = SHARP_CORPUS_DIR;

std::string path(const std::string& name) { return (corpus / name).string(); }

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run sharpcheck(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int s = cli::run(args, out, err);
  return {s, out.str(), err.str()};
}

io::Json report(const Run& r) { return io::parse_json(r.out); }

std::vector<fs::path> corpus_files() {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(corpus)) {
    if (e.is_regular_file()) out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Parses a file of any kind and emits it again.
io::Json reemit(const fs::path& p) {
  switch (*io::kind_of(p)) {
    case io::FileKind::SimplicialSet: return io::to_json(io::parse_sset(p));
    case io::FileKind::Map: return io::to_json(io::parse_map(p));
    case io::FileKind::Diagram: return io::to_json(io::parse_diagram(p));
    case io::FileKind::DiagramMap: return io::to_json(io::parse_diagram_map(p));
    case io::FileKind::Square: {
      const auto j = io::parse_json(io::read_file(p), p.string());
      if (io::is_presheaf_square(j)) return io::to_json(io::presheaf_square_from_json(j));
      return io::to_json(io::square_from_json(j));
    }
    case io::FileKind::Presheaf: return io::to_json(io::parse_presheaf(p));
  }
  return {};
}

}  // namespace

TEST(Formats, EdgeFixture) {
  const auto x = io::parse_sset(path("delta1.sset"));
  EXPECT_EQ(x.count(0), 2);
  EXPECT_EQ(x.count(1), 1);
  EXPECT_EQ(x.dim(), 1);
}

TEST(Formats, BrokenIdentityIsNamed) {
  try {
    io::parse_sset(path("malformed/bad_identity.sset"));
    FAIL() << "accepted";
  } catch (const InvariantError& e) {
    EXPECT_NE(std::string(e.what()).find("d_0 d_2 = d_1 d_0 fails on 'abc'"), std::string::npos) << e.what();
    EXPECT_NE(std::string(e.what()).find("bad_identity.sset:/simplices"), std::string::npos);
  }
}

TEST(Formats, SyntaxErrorHasPosition) {
  try {
    io::parse_sset(path("malformed/syntax_error.sset"));
    FAIL() << "accepted";
  } catch (const io::ParseError& e) {
    EXPECT_EQ(e.where(), path("malformed/syntax_error.sset") + ":4:5");
  }
  try {
    io::parse_map(path("malformed/dangling_face.smap"));
    FAIL() << "accepted";
  } catch (const io::ParseError& e) {
    EXPECT_EQ(e.where(), path("malformed/dangling_face.smap") + ":/images/0/1/0");
  }
  EXPECT_THROW(io::sset_from_json(io::Json::parse(R"({"simplices": [{"id": "a"}]})")), io::ParseError);
  EXPECT_THROW(io::sset_from_json(io::Json::parse(R"([{"id": "a", "dim": 0}, {"id": "a", "dim": 0}])")), InvariantError);
}

TEST(Formats, SpanDiagram) {
  const auto d = io::parse_diagram(path("suspension_span.diag"));
  EXPECT_EQ(d.shape().object_count(), 3);
  EXPECT_EQ(d.at(d.shape().object_index("c")), fixtures::circle());
}

TEST(Formats, NaturalityIsChecked) {
  const auto d1 = standard_simplex(1);
  const auto d = chain_diagram({vertex_map(d1, d1.index_of("[0]"))});
  auto j = io::to_json(identity_map(d));
  j["components"]["1"] = io::images_json(compose(vertex_map(d1, d1.index_of("[1]")), to_point(d1)));
  try {
    io::diagram_map_from_json(j);
    FAIL() << "accepted";
  } catch (const InvariantError& e) {
    EXPECT_NE(std::string(e.what()).find("naturality square for '0<1' does not commute"), std::string::npos) << e.what();
  }
}

TEST(Formats, CorpusRoundTripsByteForByte) {
  int files = 0;
  for (const auto& p : corpus_files()) {
    const auto text = io::read_file(p);
    EXPECT_EQ(io::dump(reemit(p)), text) << p;
    ++files;
  }
  EXPECT_GE(files, 30);
}

TEST(Formats, ParsedObjectsKeepIds) {
  for (const auto& x : {fixtures::projective_plane(), product(fixtures::circle(), standard_simplex(1)).object(), fixtures::sphere()}) {
    const auto y = io::sset_from_json(io::parse_json(io::dump(io::to_json(x))));
    EXPECT_EQ(x, y);
    EXPECT_TRUE(find_isomorphism(x, y).has_value());
  }
  const auto alg = BooleanAlgebra({"p", "q"});
  const auto x = atom_family(alg, {fixtures::circle(), standard_simplex(1)});
  const auto y = io::presheaf_from_json(io::to_json(x));
  EXPECT_EQ(y.values(), x.values());
  EXPECT_TRUE(is_iso(identity_map(y)));
}

TEST(Formats, Digest) {
  EXPECT_EQ(io::sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  const auto r = report(sharpcheck({"validate", path("circle.sset")}));
  EXPECT_EQ(r["inputs"][0]["sha256"], io::sha256_hex(io::read_file(path("circle.sset"))));
}

TEST(Cli, ExitStatuses) {
  const std::vector<std::pair<std::vector<std::string>, int>> cases{
      {{"check-sharp", path("vertex_inclusion.smap")}, 1},
      {{"check-sharp", path("circle_projection.smap")}, 0},
      {{"check-we", path("circle_to_point.smap")}, 1},
      {{"check-we", path("horn_inclusion.smap")}, 0},
      {{"check-we", path("projective_plane_to_point.smap")}, 1},
      {{"check-kan", path("circle.sset")}, 1},
      {{"check-kan", path("delta0.sset")}, 0},
      {{"check-hocartesian", path("circle_pullback.square")}, 0},
      {{"check-hocartesian", path("empty_path.square")}, 2},
      {{"verify", "distributive", path("sphere_span.diag"), path("sphere_edge.smap")}, 0},
      {{"verify", "tilde-pullback", path("skeleton_chain_projection.dmap")}, 0},
      {{"verify", "thm-hocolims", "--part", "2", path("skeleton_chain_projection.dmap")}, 0},
      {{"verify", "thm-hocolims", "--part", "1", path("suspension_identity.dmap")}, 2},
      {{"verify", "special-diagrams", "--case", "span", path("sphere_span_projection.dmap")}, 0},
      {{"verify", "special-diagrams", "--case", "chain", path("sphere_span_projection.dmap")}, 2},
      {{"verify", "thm-inverse-image", path("span_product.square")}, 0},
      {{"verify", "horn-gluing", path("two_points_projection.smap"), "--simplex", "[0,1,2]", "--horn", "1"}, 0},
      {{"verify", "peculiar", "--seed", "11", "--count", "20"}, 0},
      {{"sheaf-check", path("atom_family.bpsh")}, 0},
      {{"sheaf-check", path("constant_delta1.bpsh")}, 1},
      {{"sheaf-check", path("circle_arrow.diag"), "--all-decompositions"}, 0},
      {{"sheafify", path("two_atoms.bpsh")}, 0},
      {{"homology", path("sphere.sset")}, 0},
      {{"validate", path("malformed/bad_identity.sset")}, 3},
      {{"verify", "peculiar"}, 3},
      {{"check-we", path("circle.sset"), "--format", "xml"}, 3},
      {{"check-we", path("missing.smap")}, 3},
      {{"frobnicate"}, 3},
  };
  for (const auto& [args, status] : cases) {
    const auto r = sharpcheck(args);
    EXPECT_EQ(r.status, status) << args.front() << " " << args.back() << "\n" << r.err;
    const auto j = report(r);
    EXPECT_EQ(j["verdict"], io::to_string(static_cast<io::Status>(status)));
  }
}

TEST(Cli, RefutingCertificateForVertexInclusion) {
  const auto j = report(sharpcheck({"check-sharp", path("vertex_inclusion.smap")}));
  const auto& s = j["evidence"]["sharpness"];
  EXPECT_EQ(s["verdict"], "not-sharp");
  EXPECT_EQ(s["witness_comparison"]["certificate"]["verdict"], "refuted");
  EXPECT_EQ(s["witness_comparison"]["simplex"], "[0,1]");
}

TEST(Cli, HypothesisLedger) {
  const auto j = report(sharpcheck({"verify", "thm-hocolims", "--part", "1", path("sphere_span_projection.dmap")}));
  EXPECT_EQ(j["verdict"], "pass");
  const auto& r = j["evidence"]["report"];
  EXPECT_FALSE(r["hypotheses"].empty());
  for (const auto& h : r["hypotheses"]) EXPECT_EQ(h["verdict"], "certified");
  for (const auto& c : r["conclusions"]) EXPECT_EQ(c["verdict"], "certified");
}

TEST(Cli, SuspensionHocolim) {
  const auto out = fs::temp_directory_path() / "sharp_suspension.sset";
  const auto j = report(sharpcheck({"hocolim", path("suspension_span.diag"), "--output", out.string()}));
  EXPECT_EQ(j["evidence"]["homology"], io::Json::parse(R"([{"betti":1,"torsion":[]},{"betti":0,"torsion":[]},{"betti":1,"torsion":[]}])"));
  EXPECT_EQ(j["evidence"]["to_colimit"]["verdict"], "refuted");
  const auto x = io::parse_sset(out);
  EXPECT_EQ(homology(x, 2)[2].betti, 1);
  fs::remove(out);
}

TEST(Cli, ReportsAreDeterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"verify", "distributive", "--seed", "5", "--count", "10"},
           {"check-sharp", path("circle_projection.smap"), "--exhaustive-delta"},
           {"sheafify", path("atom_family.bpsh")}}) {
    const auto a = sharpcheck(args);
    const auto b = sharpcheck(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_FALSE(report(a).contains("elapsed_ms"));
  }
  auto args = std::vector<std::string>{"homology", path("circle.sset"), "--timing"};
  EXPECT_TRUE(report(sharpcheck(args)).contains("elapsed_ms"));
  EXPECT_EQ(report(sharpcheck({"verify", "peculiar", "--seed", "3", "--count", "5"}))["seed"], 3);
}

TEST(Cli, SheafifyOutputIsASheaf) {
  const auto out = fs::temp_directory_path() / "sharp_two_atoms.bpsh";
  const auto r = report(sharpcheck({"sheafify", path("two_atoms.bpsh"), "--output", out.string()}));
  EXPECT_FALSE(r["evidence"]["input_is_sheaf"].get<bool>());
  EXPECT_TRUE(r["evidence"]["sheaf_check"]["holds"].get<bool>());
  EXPECT_EQ(sharpcheck({"sheaf-check", out.string()}).status, 0);
  fs::remove(out);
}
