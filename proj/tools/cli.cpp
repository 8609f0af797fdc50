#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <functional>
#include <optional>

#include "sharp/boolean.hpp"
#include "sharp/generators.hpp"
#include "sharp/hocolim.hpp"
#include "sharp/homology.hpp"
#include "sharp/io.hpp"
#include "sharp/lifting.hpp"
#include "sharp/sharp.hpp"

namespace sharp::cli {
namespace {

using io::Json;
using io::Status;

struct Config {
  int dim_cap = kDefaultDimCap;
  int degree_bound = -1;
  bool simply_connected = false;
  bool exhaustive = false;
  bool timing = false;
  std::optional<std::uint64_t> seed;
  std::string format = "json";
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Session {
 public:
  Session(const Config& cfg, io::VerdictReport& report) : cfg_(cfg), report_(report) {}

  Json load(const std::string& path) {
    const auto text = io::read_file(path);
    report_.inputs.push_back({path, io::sha256_hex(text)});
    return io::parse_json(text, path);
  }
  FiniteSimplicialSet sset(const std::string& p) { return io::sset_from_json(load(p), cfg_.dim_cap, p); }
  SimplicialMap map(const std::string& p) { return io::map_from_json(load(p), cfg_.dim_cap, p); }
  Diagram diagram(const std::string& p) { return io::diagram_from_json(load(p), cfg_.dim_cap, p); }
  DiagramMap diagram_map(const std::string& p) { return io::diagram_map_from_json(load(p), cfg_.dim_cap, p); }
  /// A .bpsh file, or a .diag read as a presheaf and restricted to its objects.
  BooleanPresheaf presheaf(const std::string& p) {
    if (io::kind_of(p) == io::FileKind::Diagram) return inverse_image_restriction(diagram(p));
    return io::presheaf_from_json(load(p), cfg_.dim_cap, p);
  }

  WeOptions we() const {
    WeOptions o;
    o.simply_connected = cfg_.simply_connected;
    o.degree_bound = cfg_.degree_bound;
    return o;
  }
  SharpOptions sharp() const {
    SharpOptions o;
    o.exhaustive = cfg_.exhaustive;
    o.we = we();
    return o;
  }
  CartesianOptions cartesian(int kan_bound = -1) const {
    CartesianOptions o;
    o.kan_bound = kan_bound;
    o.sharp = sharp();
    return o;
  }
  HocolimOptions hocolim(int bound = -1) const {
    HocolimOptions o;
    o.we = we();
    o.cartesian = cartesian();
    o.bound = bound;
    return o;
  }
  gen::Rng rng() {
    if (!cfg_.seed) throw UsageError("randomized verification needs --seed");
    report_.seed = cfg_.seed;
    return gen::Rng(*cfg_.seed);
  }

  void finish(Status s, Json evidence) {
    report_.status = s;
    report_.evidence = std::move(evidence);
  }

 private:
  const Config& cfg_;
  io::VerdictReport& report_;
};

Json counts(const FiniteSimplicialSet& x) {
  Json out = Json::array();
  for (int n = 0; n <= x.dim(); ++n) out.push_back(x.count(n));
  return out;
}

Json summary(const FiniteSimplicialSet& x) { return Json{{"dim", x.dim()}, {"nondegenerate", counts(x)}}; }

Json summary(const FiniteCategory& c) {
  int arrows = 0;
  for (int a = 0; a < c.arrow_count(); ++a) arrows += !c.is_identity(a);
  return Json{{"objects", c.object_count()}, {"arrows", arrows}};
}

Json validate_file(Session& s, const std::string& path, int dim_cap) {
  const auto kind = io::kind_of(path);
  if (!kind) throw UsageError(path + ": unknown extension (expected .sset .smap .diag .dmap .square .bpsh)");
  Json out{{"path", path}, {"kind", io::to_string(*kind)}};
  switch (*kind) {
    case io::FileKind::SimplicialSet: out["summary"] = summary(s.sset(path)); break;
    case io::FileKind::Map: {
      const auto f = s.map(path);
      out["summary"] = Json{{"source", summary(f.source())}, {"target", summary(f.target())}};
      break;
    }
    case io::FileKind::Diagram: out["summary"] = summary(s.diagram(path).shape()); break;
    case io::FileKind::DiagramMap: out["summary"] = summary(s.diagram_map(path).source().shape()); break;
    case io::FileKind::Square: {
      const auto j = s.load(path);
      if (io::is_presheaf_square(j)) {
        out["summary"] = summary(io::presheaf_square_from_json(j, dim_cap, path).top.source().shape());
      } else {
        out["summary"] = Json{{"P", summary(io::square_from_json(j, dim_cap, path).top.source())}};
      }
      break;
    }
    case io::FileKind::Presheaf: {
      const auto x = s.presheaf(path);
      out["summary"] = Json{{"atoms", x.algebra().atoms()}};
      break;
    }
  }
  return out;
}

SpecialCase parse_case(const std::string& s) {
  if (s == "chain") return SpecialCase::Chain;
  if (s == "span") return SpecialCase::Span;
  return SpecialCase::ProperSubsets;
}

Leg parse_leg(const std::string& s) {
  if (s == "right") return Leg::Right;
  if (s == "bottom") return Leg::Bottom;
  return Leg::Either;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for sharp maps, homotopy colimits and sheaves of finite simplicial sets", "sharpcheck"};
  app.fallthrough();
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--dim-cap", cfg.dim_cap, "Largest dimension accepted in inputs and constructions")->check(CLI::Range(0, kMaxDegree));
  app.add_option("--degree-bound", cfg.degree_bound, "Highest homology degree compared, or horn dimension for check-kan");
  app.add_flag("--simply-connected", cfg.simply_connected, "Assume every component is simply connected");
  app.add_flag("--exhaustive-delta", cfg.exhaustive, "Compare along every monotone map, not only vertices");
  app.add_option("--seed", cfg.seed, "Seed for randomized verifiers");
  app.add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"json"}));
  app.add_flag("--timing", cfg.timing, "Add elapsed milliseconds to the report");

  io::VerdictReport report;
  report.command = args;
  Session s(cfg, report);
  std::function<void()> action;

  std::vector<std::string> files;
  auto* validate = app.add_subcommand("validate", "Parse files and check every invariant");
  validate->add_option("files", files)->required();
  validate->callback([&] {
    action = [&] {
      Json list = Json::array();
      for (const auto& f : files) list.push_back(validate_file(s, f, cfg.dim_cap));
      s.finish(Status::Pass, Json{{"files", std::move(list)}});
    };
  });

  std::string file;
  auto* homology_cmd = app.add_subcommand("homology", "Integral homology of a simplicial set");
  homology_cmd->add_option("file", file)->required();
  homology_cmd->callback([&] {
    action = [&] {
      const auto x = s.sset(file);
      const int top = cfg.degree_bound >= 0 ? cfg.degree_bound : std::max(x.dim(), 0);
      s.finish(Status::Pass, Json{{"summary", summary(x)},
                                  {"components", components(x).count},
                                  {"homology", io::to_json(homology(x, top))}});
    };
  });

  auto* we_cmd = app.add_subcommand("check-we", "Certify or refute a weak equivalence");
  we_cmd->add_option("file", file)->required();
  we_cmd->callback([&] {
    action = [&] {
      const auto c = certify_weak_equivalence(s.map(file), s.we());
      s.finish(io::status_of(c.verdict), Json{{"certificate", io::to_json(c)}});
    };
  });

  auto* kan_cmd = app.add_subcommand("check-kan", "Bounded horn lifting for a map or a simplicial set");
  kan_cmd->add_option("file", file)->required();
  kan_cmd->callback([&] {
    action = [&] {
      const auto f = io::kind_of(file) == io::FileKind::Map ? s.map(file) : to_point(s.sset(file));
      const int bound = cfg.degree_bound >= 0 ? cfg.degree_bound : std::max(f.source().dim(), f.target().dim()) + 1;
      const auto r = has_horn_lifts(f, bound);
      s.finish(r.holds ? Status::Pass : Status::Fail, Json{{"bound", bound}, {"lifts", io::to_json(r)}});
    };
  });

  auto* sharp_cmd = app.add_subcommand("check-sharp", "Decide sharpness by fiber comparisons");
  sharp_cmd->add_option("file", file)->required();
  sharp_cmd->callback([&] {
    action = [&] {
      const auto r = is_sharp(s.map(file), s.sharp());
      s.finish(io::status_of(r.verdict), Json{{"sharpness", io::to_json(r)}});
    };
  });

  std::string leg = "either";
  int kan_bound = -1;
  auto* hocart_cmd = app.add_subcommand("check-hocartesian", "Decide whether a square is homotopy cartesian");
  hocart_cmd->add_option("file", file)->required();
  hocart_cmd->add_option("--leg", leg, "Leg to use")->check(CLI::IsMember({"right", "bottom", "either"}));
  hocart_cmd->add_option("--kan-bound", kan_bound, "Horn bound for the fibration strategy");
  hocart_cmd->callback([&] {
    action = [&] {
      const auto sq = io::square_from_json(s.load(file), cfg.dim_cap, file);
      const auto v = is_homotopy_cartesian(sq, parse_leg(leg), s.cartesian(kan_bound));
      s.finish(io::status_of(v.verdict), Json{{"square", io::to_json(v)}});
    };
  });

  int bound = -1;
  std::string output;
  auto* hocolim_cmd = app.add_subcommand("hocolim", "Homotopy colimit as the diagonal of the simplicial replacement");
  hocolim_cmd->add_option("file", file)->required();
  hocolim_cmd->add_option("--bound", bound, "Diagonal degree bound");
  hocolim_cmd->add_option("--output", output, "Write the homotopy colimit as .sset");
  hocolim_cmd->callback([&] {
    action = [&] {
      const auto d = s.diagram(file);
      const auto h = sharp::hocolim(d, bound);
      const auto& x = h.object();
      if (!output.empty()) io::write_file(output, io::to_json(x));
      s.finish(Status::Pass, Json{{"bound", h.bound()},
                                  {"hocolim", summary(x)},
                                  {"homology", io::to_json(homology(x, h.bound()))},
                                  {"to_colimit", io::to_json(is_hocolim_diagram(d, s.we(), h.bound()))}});
    };
  });

  std::string object;
  auto* tilde_cmd = app.add_subcommand("tilde", "Homotopy colimit over the objects above one object");
  tilde_cmd->add_option("file", file)->required();
  tilde_cmd->add_option("--object", object, "Object name")->required();
  tilde_cmd->add_option("--output", output, "Write the result as .sset");
  tilde_cmd->callback([&] {
    action = [&] {
      const auto d = s.diagram(file);
      const auto i = d.shape().find_object(object);
      if (!i) throw UsageError("no object '" + object + "' in " + file);
      const auto t = tilde(d, *i);
      if (!output.empty()) io::write_file(output, io::to_json(t.value.object()));
      s.finish(Status::Pass, Json{{"object", object},
                                  {"over_objects", t.over.category.object_count()},
                                  {"tilde", summary(t.value.object())},
                                  {"to_value", io::to_json(certify_weak_equivalence(t.to_value, s.we()))}});
    };
  });

  auto* verify = app.add_subcommand("verify", "Theorem harnesses and randomized verifiers");
  verify->require_subcommand(1);
  int count = 0;

  std::string second;
  auto* distributive = verify->add_subcommand("distributive", "colim (A x_B D) -> A is an isomorphism for A -> colim D");
  distributive->add_option("diagram", file);
  distributive->add_option("map", second);
  distributive->add_option("--count", count, "Random instances when no files are given");
  distributive->callback([&] {
    action = [&] {
      if (file.empty() != second.empty()) throw UsageError("give a diagram and a map, or neither");
      if (!file.empty()) {
        const auto d = s.diagram(file);
        auto a = s.map(second);
        const auto c = colimit(d, cfg.dim_cap);
        if (!(a.target() == c.object())) {
          const auto iso = find_isomorphism(a.target(), c.object());
          if (!iso) throw UsageError(second + ": target is not the colimit of " + file);
          a = compose(*iso, a);
        }
        const auto r = verify_distributive_law(d, c, a);
        s.finish(r.comparison.holds ? Status::Pass : Status::Fail, Json{{"comparison", io::to_json(r.comparison)}});
        return;
      }
      auto rng = s.rng();
      const int n = count > 0 ? count : 200;
      Json failures = Json::array();
      for (int k = 0; k < n; ++k) {
        const auto inst = gen::distributive_instance(rng, 4, 2);
        const auto r = verify_distributive_law(inst.diagram, inst.colimit, inst.a);
        if (!r.comparison.holds) failures.push_back(Json{{"instance", k}, {"detail", r.comparison.detail}});
      }
      s.finish(failures.empty() ? Status::Pass : Status::Fail, Json{{"instances", n}, {"failures", std::move(failures)}});
    };
  });

  auto* tilde_pullback = verify->add_subcommand("tilde-pullback", "X~i -> Y~i x hocolim X is an isomorphism at every object");
  tilde_pullback->add_option("file", file);
  tilde_pullback->add_option("--count", count, "Random instances when no file is given");
  tilde_pullback->callback([&] {
    action = [&] {
      if (!file.empty()) {
        Json objects = Json::array();
        bool all = true;
        for (const auto& r : verify_tilde_pullback(s.diagram_map(file))) {
          all = all && r.holds();
          objects.push_back(io::to_json(r));
        }
        s.finish(all ? Status::Pass : Status::Fail, Json{{"objects", std::move(objects)}});
        return;
      }
      auto rng = s.rng();
      const int n = count > 0 ? count : 100;
      Json failures = Json::array();
      for (int k = 0; k < n; ++k) {
        const auto y = gen::diagram(rng, gen::shape(rng, 3), 1);
        const auto f = gen::diagram_map(rng, y, 1);
        for (const auto& r : verify_tilde_pullback(f)) {
          if (!r.holds()) failures.push_back(Json{{"instance", k}, {"object", r.object}, {"detail", r.comparison.detail}});
        }
      }
      s.finish(failures.empty() ? Status::Pass : Status::Fail, Json{{"instances", n}, {"failures", std::move(failures)}});
    };
  });

  int part = 1;
  auto* thm_hocolims = verify->add_subcommand("thm-hocolims", "Homotopy colimits and homotopy cartesian squares");
  thm_hocolims->add_option("file", file)->required();
  thm_hocolims->add_option("--part", part, "1 or 2")->check(CLI::IsMember({1, 2}));
  thm_hocolims->callback([&] {
    action = [&] {
      const auto r = verify_thm_hocolims(s.diagram_map(file), part, s.hocolim());
      s.finish(io::status_of(r.outcome), Json{{"report", io::to_json(r)}});
    };
  });

  auto* thm_inverse = verify->add_subcommand("thm-inverse-image", "Restriction to objects keeps homotopy cartesian squares");
  thm_inverse->add_option("file", file)->required();
  thm_inverse->callback([&] {
    action = [&] {
      const auto j = s.load(file);
      if (!io::is_presheaf_square(j)) throw UsageError(file + ": expected a presheaf square");
      const auto r = verify_inverse_image_preserves_hocartesian(io::presheaf_square_from_json(j, cfg.dim_cap, file), s.cartesian());
      s.finish(io::status_of(r.outcome), Json{{"report", io::to_json(r)}});
    };
  });

  std::string special = "chain";
  auto* special_cmd = verify->add_subcommand("special-diagrams", "Chains, spans and cofibrant subset diagrams");
  special_cmd->add_option("file", file)->required();
  special_cmd->add_option("--case", special, "chain, span or proper-subsets")
      ->check(CLI::IsMember({"chain", "span", "proper-subsets"}));
  special_cmd->callback([&] {
    action = [&] {
      const auto r = verify_special_diagrams(s.diagram_map(file), parse_case(special), s.hocolim());
      s.finish(io::status_of(r.outcome), Json{{"report", io::to_json(r)}});
    };
  });

  std::string simplex;
  int horn_index = 0;
  auto* horn_cmd = verify->add_subcommand("horn-gluing", "Fiber over a horn of a simplex");
  horn_cmd->add_option("file", file)->required();
  horn_cmd->add_option("--simplex", simplex, "Id of a nondegenerate simplex of the base")->required();
  horn_cmd->add_option("--horn", horn_index, "Horn index k")->required();
  horn_cmd->callback([&] {
    action = [&] {
      const auto f = s.map(file);
      const auto y = f.target().find(simplex);
      if (!y) throw UsageError("no simplex '" + simplex + "' in the base");
      if (horn_index < 0 || horn_index > f.target().dim(*y)) throw UsageError("horn index out of range");
      const auto r = verify_horn_gluing(f, f.target().nondegenerate(*y), horn_index, s.we());
      s.finish(io::status_of(r.outcome), Json{{"report", io::to_json(r)}});
    };
  });

  auto* peculiar_cmd = verify->add_subcommand("peculiar", "Random instances of the pullback/pushout lemma on sets");
  peculiar_cmd->add_option("--count", count, "Number of instances");
  peculiar_cmd->callback([&] {
    action = [&] {
      auto rng = s.rng();
      const int n = count > 0 ? count : 200;
      Json failures = Json::array();
      for (int k = 0; k < n; ++k) {
        const auto r = verify_peculiar_lemma(gen::peculiar(rng));
        if (r.status != PeculiarStatus::Holds) failures.push_back(Json{{"instance", k}, {"detail", r.detail}});
      }
      s.finish(failures.empty() ? Status::Pass : Status::Fail, Json{{"instances", n}, {"failures", std::move(failures)}});
    };
  });

  auto* sheafify_cmd = app.add_subcommand("sheafify", "Sheafification on a finite boolean algebra");
  sheafify_cmd->add_option("file", file)->required();
  sheafify_cmd->add_option("--output", output, "Write the sheaf as .bpsh");
  sheafify_cmd->callback([&] {
    action = [&] {
      const auto x = s.presheaf(file);
      const auto l = sheafify(x);
      if (!output.empty()) io::write_file(output, io::to_json(l.sheaf));
      const auto& alg = x.algebra();
      Json values = Json::array();
      for (Element b = 0; b < static_cast<Element>(alg.size()); ++b) {
        values.push_back(Json{{"element", alg.name(b)}, {"value", summary(l.sheaf.at(b))}});
      }
      s.finish(Status::Pass, Json{{"atoms", alg.atoms()},
                                  {"input_is_sheaf", is_sheaf(x).holds},
                                  {"unit_is_iso", is_iso(l.unit)},
                                  {"sheaf_check", io::to_json(alg, is_sheaf(l.sheaf))},
                                  {"values", std::move(values)}});
    };
  });

  bool all_decompositions = false;
  auto* sheaf_cmd = app.add_subcommand("sheaf-check", "Decide the sheaf condition");
  sheaf_cmd->add_option("file", file)->required();
  sheaf_cmd->add_flag("--all-decompositions", all_decompositions, "Check every decomposition, not only atoms");
  sheaf_cmd->callback([&] {
    action = [&] {
      const auto x = s.presheaf(file);
      const auto c = is_sheaf(x, all_decompositions);
      s.finish(c.holds ? Status::Pass : Status::Fail, Json{{"sheaf", io::to_json(x.algebra(), c)}});
    };
  });

  const auto start = std::chrono::steady_clock::now();
  auto emit_error = [&](const std::string& message) {
    report.status = Status::Error;
    report.error = message;
    err << "sharpcheck: " << message << "\n";
    out << io::dump(report.to_json());
    return static_cast<int>(Status::Error);
  };
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    return emit_error(e.what());
  }
  try {
    action();
  } catch (const io::ParseError& e) {
    return emit_error(e.what());
  } catch (const InvariantError& e) {
    return emit_error(e.what());
  } catch (const DimensionError& e) {
    return emit_error(std::string("dimension cap: ") + e.what());
  } catch (const UsageError& e) {
    return emit_error(e.what());
  } catch (const std::invalid_argument& e) {
    return emit_error(e.what());
  }
  if (cfg.timing) {
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  }
  out << io::dump(report.to_json());
  return static_cast<int>(report.status);
}

}  // namespace sharp::cli
