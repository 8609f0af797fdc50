#include "sharp/io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace sharp::io {

ParseError::ParseError(std::string where, const std::string& message)
    : std::runtime_error(where + ": " + message), where_(std::move(where)) {}

std::optional<FileKind> kind_of(const std::filesystem::path& p) {
  const auto e = p.extension().string();
  if (e == ".sset") return FileKind::SimplicialSet;
  if (e == ".smap") return FileKind::Map;
  if (e == ".diag") return FileKind::Diagram;
  if (e == ".dmap") return FileKind::DiagramMap;
  if (e == ".square") return FileKind::Square;
  if (e == ".bpsh") return FileKind::Presheaf;
  return std::nullopt;
}

std::string extension(FileKind k) {
  switch (k) {
    case FileKind::SimplicialSet: return ".sset";
    case FileKind::Map: return ".smap";
    case FileKind::Diagram: return ".diag";
    case FileKind::DiagramMap: return ".dmap";
    case FileKind::Square: return ".square";
    case FileKind::Presheaf: return ".bpsh";
  }
  return {};
}

std::string to_string(FileKind k) {
  switch (k) {
    case FileKind::SimplicialSet: return "simplicial set";
    case FileKind::Map: return "simplicial map";
    case FileKind::Diagram: return "diagram";
    case FileKind::DiagramMap: return "diagram map";
    case FileKind::Square: return "square";
    case FileKind::Presheaf: return "boolean presheaf";
  }
  return {};
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw ParseError(p.string(), "cannot read file");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Json parse_json(std::string_view text, const std::string& source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    int line = 1, col = 1;
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    if (const auto k = msg.find(": "); k != std::string::npos) msg = msg.substr(k + 2);
    throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(col), msg);
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_file(const std::filesystem::path& p, const Json& j) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  out << dump(j);
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

namespace {

std::string escape(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

// A JSON value with its location, for error messages.
struct Node {
  const Json& j;
  const std::string& source;
  std::string path;

  std::string where() const { return source + ":" + (path.empty() ? "/" : path); }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(where(), msg); }

  bool has(const std::string& key) const { return j.is_object() && j.contains(key); }
  Node field(const std::string& key) const {
    if (!j.is_object()) fail("expected an object");
    const auto it = j.find(key);
    if (it == j.end()) fail("missing field '" + key + "'");
    return {*it, source, path + "/" + escape(key)};
  }
  std::size_t size() const {
    if (!j.is_array()) fail("expected an array");
    return j.size();
  }
  Node at(std::size_t i) const { return {j.at(i), source, path + "/" + std::to_string(i)}; }
  std::vector<std::pair<std::string, Node>> items() const {
    if (!j.is_object()) fail("expected an object");
    std::vector<std::pair<std::string, Node>> out;
    for (auto it = j.begin(); it != j.end(); ++it) out.push_back({it.key(), Node{it.value(), source, path + "/" + escape(it.key())}});
    return out;
  }
  std::string str() const {
    if (!j.is_string()) fail("expected a string");
    return j.get<std::string>();
  }
  std::int64_t integer() const {
    if (!j.is_number_integer()) fail("expected an integer");
    return j.get<std::int64_t>();
  }
  bool boolean() const {
    if (!j.is_boolean()) fail("expected true or false");
    return j.get<bool>();
  }
  std::vector<int> ints() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < size(); ++i) {
      const auto v = at(i).integer();
      if (v < 0 || v > kMaxDegree) at(i).fail("operator value out of range");
      out.push_back(static_cast<int>(v));
    }
    return out;
  }
};

// Runs f, prefixing the location to any invariant violation it reports.
template <class F>
auto located(const Node& n, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InvariantError& e) {
    std::vector<std::string> v;
    for (const auto& s : e.violations()) v.push_back(n.where() + ": " + s);
    throw InvariantError(std::move(v));
  }
}

FiniteSimplicialSet read_sset(const Node& n, int dim_cap) {
  const Node list = n.j.is_array() ? n : n.field("simplices");
  std::vector<SimplexRecord> records;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const Node r = list.at(i);
    SimplexRecord rec{r.field("id").str(), 0, {}};
    const auto dim = r.field("dim").integer();
    if (dim < 0 || dim > kMaxDegree) r.field("dim").fail("dimension out of range");
    rec.dim = static_cast<int>(dim);
    if (r.has("faces")) {
      const Node faces = r.field("faces");
      for (std::size_t k = 0; k < faces.size(); ++k) {
        const Node f = faces.at(k);
        if (f.size() != 2) f.fail("a face is [id, operator values]");
        rec.faces.emplace_back(f.at(0).str(), f.at(1).ints());
      }
    }
    records.push_back(std::move(rec));
  }
  return located(list, [&] { return from_records(records, dim_cap); });
}

SimplexRef read_ref(const Node& n, const FiniteSimplicialSet& x) {
  if (n.size() != 2) n.fail("a simplex is [id, operator values]");
  const auto id = n.at(0).str();
  const auto i = x.find(id);
  if (!i) n.at(0).fail("no simplex '" + id + "'");
  const auto values = n.at(1).ints();
  std::optional<SimplicialOperator> op;
  try {
    op.emplace(x.dim(*i), values);
  } catch (const std::invalid_argument& e) {
    n.at(1).fail(e.what());
  }
  if (!op->is_surjective()) n.at(1).fail("operator values are not a degeneracy of '" + id + "'");
  return {*i, *op};
}

SimplicialMap read_images(const Node& n, const FiniteSimplicialSet& source, const FiniteSimplicialSet& target) {
  std::vector<std::optional<SimplexRef>> images(static_cast<std::size_t>(source.size()));
  for (std::size_t k = 0; k < n.size(); ++k) {
    const Node e = n.at(k);
    if (e.size() != 3) e.fail("an image is [source id, target id, operator values]");
    const auto id = e.at(0).str();
    const auto i = source.find(id);
    if (!i) e.at(0).fail("no source simplex '" + id + "'");
    auto& slot = images[static_cast<std::size_t>(*i)];
    if (slot) e.at(0).fail("second image for '" + id + "'");
    Json pair = Json::array({e.j.at(1), e.j.at(2)});
    const std::string sub = e.path;
    slot = read_ref(Node{pair, n.source, sub + "/1"}, target);
  }
  std::vector<SimplexRef> out;
  for (int i = 0; i < source.size(); ++i) {
    if (!images[static_cast<std::size_t>(i)]) n.fail("no image for '" + source.id(i) + "'");
    out.push_back(*images[static_cast<std::size_t>(i)]);
  }
  return located(n, [&] { return SimplicialMap(source, target, std::move(out)); });
}

FiniteCategory read_category(const Node& n) {
  FiniteCategory::Builder b;
  const Node objects = n.field("objects");
  for (std::size_t i = 0; i < objects.size(); ++i) b.add_object(objects.at(i).str());
  const auto names = objects.j.get<std::vector<std::string>>();
  auto object = [&](const Node& o) {
    const auto s = o.str();
    if (std::find(names.begin(), names.end(), s) == names.end()) o.fail("no object '" + s + "'");
    return s;
  };
  if (n.has("arrows")) {
    const Node arrows = n.field("arrows");
    for (std::size_t i = 0; i < arrows.size(); ++i) {
      const Node a = arrows.at(i);
      b.add_arrow(a.field("id").str(), object(a.field("src")), object(a.field("dst")));
    }
  }
  if (n.has("composites")) {
    const Node cs = n.field("composites");
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const Node c = cs.at(i);
      if (c.size() != 3) c.fail("a composite is [g, f, g∘f]");
      b.set_composite(c.at(0).str(), c.at(1).str(), c.at(2).str());
    }
  }
  if (n.has("thin") && n.field("thin").boolean()) b.compose_thin();
  return located(n, [&] { return b.build(); });
}

struct Values {
  std::vector<FiniteSimplicialSet> objects;
  std::vector<SimplicialMap> arrows;
};

Values read_values(const Node& n, const FiniteCategory& c, int dim_cap) {
  Values v;
  v.objects.resize(static_cast<std::size_t>(c.object_count()));
  v.arrows.resize(static_cast<std::size_t>(c.arrow_count()));
  std::vector<bool> seen(v.objects.size(), false);
  for (const auto& [name, value] : n.field("on_objects").items()) {
    const auto o = c.find_object(name);
    if (!o) value.fail("no object '" + name + "'");
    v.objects[static_cast<std::size_t>(*o)] = read_sset(value, dim_cap);
    seen[static_cast<std::size_t>(*o)] = true;
  }
  for (int o = 0; o < c.object_count(); ++o) {
    if (!seen[static_cast<std::size_t>(o)]) n.field("on_objects").fail("no value for object '" + c.object(o) + "'");
  }
  std::vector<bool> arrow_seen(v.arrows.size(), false);
  if (n.has("on_arrows")) {
    for (const auto& [id, images] : n.field("on_arrows").items()) {
      const auto a = c.find_arrow(id);
      if (!a) images.fail("no arrow '" + id + "'");
      if (c.is_identity(*a)) images.fail("identities are not listed");
      const auto& arrow = c.arrow(*a);
      v.arrows[static_cast<std::size_t>(*a)] =
          read_images(images, v.objects[static_cast<std::size_t>(arrow.src)], v.objects[static_cast<std::size_t>(arrow.dst)]);
      arrow_seen[static_cast<std::size_t>(*a)] = true;
    }
  }
  for (int a = 0; a < c.arrow_count(); ++a) {
    if (!c.is_identity(a) && !arrow_seen[static_cast<std::size_t>(a)]) n.fail("no value for arrow '" + c.arrow(a).id + "'");
  }
  return v;
}

Diagram read_diagram(const Node& n, const FiniteCategory& c, int dim_cap) {
  auto v = read_values(n, c, dim_cap);
  return located(n, [&] { return Diagram(c, std::move(v.objects), std::move(v.arrows)); });
}

std::vector<SimplicialMap> read_components(const Node& n, const Diagram& source, const Diagram& target) {
  const auto& c = source.shape();
  std::vector<std::optional<SimplicialMap>> parts(static_cast<std::size_t>(c.object_count()));
  for (const auto& [name, images] : n.items()) {
    const auto o = c.find_object(name);
    if (!o) images.fail("no object '" + name + "'");
    parts[static_cast<std::size_t>(*o)] = read_images(images, source.at(*o), target.at(*o));
  }
  std::vector<SimplicialMap> out;
  for (int o = 0; o < c.object_count(); ++o) {
    if (!parts[static_cast<std::size_t>(o)]) n.fail("no component at '" + c.object(o) + "'");
    out.push_back(*parts[static_cast<std::size_t>(o)]);
  }
  return out;
}

Json values_json(const Diagram& d) {
  const auto& c = d.shape();
  Json out = Json::object();
  Json objs = Json::object();
  for (int o = 0; o < c.object_count(); ++o) objs[c.object(o)] = to_json(d.at(o));
  out["on_objects"] = std::move(objs);
  Json arrows = Json::object();
  for (int a = 0; a < c.arrow_count(); ++a) {
    if (!c.is_identity(a)) arrows[c.arrow(a).id] = images_json(d.on(a));
  }
  out["on_arrows"] = std::move(arrows);
  return out;
}

Json components_json(const FiniteCategory& c, const std::vector<SimplicialMap>& parts) {
  Json out = Json::object();
  for (int o = 0; o < c.object_count(); ++o) out[c.object(o)] = images_json(parts[static_cast<std::size_t>(o)]);
  return out;
}

Json optional_int(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

template <class F>
auto from_file(const std::filesystem::path& p, F&& f) {
  const auto text = read_file(p);
  const auto j = parse_json(text, p.string());
  return f(j, p.string());
}

}  // namespace

Json to_json(const FiniteSimplicialSet& x, const SimplexRef& s) {
  return Json::array({x.id(s.index), s.degeneracy.values()});
}

Json to_json(const FiniteSimplicialSet& x) {
  Json list = Json::array();
  for (const auto& r : x.records()) {
    Json faces = Json::array();
    for (const auto& [id, values] : r.faces) faces.push_back(Json::array({id, values}));
    list.push_back(Json{{"id", r.id}, {"dim", r.dim}, {"faces", std::move(faces)}});
  }
  return Json{{"simplices", std::move(list)}};
}

Json images_json(const SimplicialMap& f) {
  Json out = Json::array();
  for (int i = 0; i < f.source().size(); ++i) {
    const auto& s = f.image(i);
    out.push_back(Json::array({f.source().id(i), f.target().id(s.index), s.degeneracy.values()}));
  }
  return out;
}

Json to_json(const SimplicialMap& f) {
  return Json{{"source", to_json(f.source())}, {"target", to_json(f.target())}, {"images", images_json(f)}};
}

Json to_json(const FiniteCategory& c) {
  Json objects = Json::array();
  for (int o = 0; o < c.object_count(); ++o) objects.push_back(c.object(o));
  Json arrows = Json::array();
  Json composites = Json::array();
  for (int a = 0; a < c.arrow_count(); ++a) {
    if (c.is_identity(a)) continue;
    const auto& arrow = c.arrow(a);
    arrows.push_back(Json{{"id", arrow.id}, {"src", c.object(arrow.src)}, {"dst", c.object(arrow.dst)}});
  }
  for (int g = 0; g < c.arrow_count(); ++g) {
    if (c.is_identity(g)) continue;
    for (int f = 0; f < c.arrow_count(); ++f) {
      if (c.is_identity(f) || c.arrow(f).dst != c.arrow(g).src) continue;
      composites.push_back(Json::array({c.arrow(g).id, c.arrow(f).id, c.arrow(c.compose(g, f)).id}));
    }
  }
  return Json{{"objects", std::move(objects)}, {"arrows", std::move(arrows)}, {"composites", std::move(composites)}};
}

Json to_json(const Diagram& d) {
  Json out = to_json(d.shape());
  const Json values = values_json(d);
  for (const auto& [k, v] : values.items()) out[k] = v;
  return out;
}

Json to_json(const DiagramMap& f) {
  const auto& c = f.source().shape();
  return Json{{"shape", to_json(c)},
              {"source", values_json(f.source())},
              {"target", values_json(f.target())},
              {"components", components_json(c, f.components())}};
}

Json to_json(const Square& s) {
  return Json{{"kind", "square"},
              {"P", to_json(s.top.source())},
              {"X", to_json(s.top.target())},
              {"Y", to_json(s.left.target())},
              {"B", to_json(s.right.target())},
              {"top", images_json(s.top)},
              {"left", images_json(s.left)},
              {"right", images_json(s.right)},
              {"bottom", images_json(s.bottom)}};
}

Json to_json(const PresheafSquare& s) {
  const auto& c = s.top.source().shape();
  return Json{{"kind", "presheaf-square"},
              {"shape", to_json(c)},
              {"A", values_json(s.top.source())},
              {"B", values_json(s.top.target())},
              {"C", values_json(s.left.target())},
              {"D", values_json(s.right.target())},
              {"top", components_json(c, s.top.components())},
              {"left", components_json(c, s.left.components())},
              {"right", components_json(c, s.right.components())},
              {"bottom", components_json(c, s.bottom.components())}};
}

Json to_json(const BooleanPresheaf& x) {
  const auto& alg = x.algebra();
  Json values = Json::array();
  for (Element b = 0; b < static_cast<Element>(alg.size()); ++b) values.push_back(Json{{"element", b}, {"value", to_json(x.at(b))}});
  Json restrictions = Json::array();
  for (const auto& [key, f] : x.covers()) {
    restrictions.push_back(Json{{"from", key.first}, {"to", key.second}, {"images", images_json(f)}});
  }
  return Json{{"atoms", alg.atoms()}, {"values", std::move(values)}, {"restrictions", std::move(restrictions)}};
}

FiniteSimplicialSet sset_from_json(const Json& j, int dim_cap, const std::string& source) {
  return read_sset(Node{j, source, ""}, dim_cap);
}

SimplicialMap map_from_json(const Json& j, int dim_cap, const std::string& source) {
  const Node n{j, source, ""};
  const auto from = read_sset(n.field("source"), dim_cap);
  const auto to = read_sset(n.field("target"), dim_cap);
  return read_images(n.field("images"), from, to);
}

FiniteCategory category_from_json(const Json& j, const std::string& source) { return read_category(Node{j, source, ""}); }

Diagram diagram_from_json(const Json& j, int dim_cap, const std::string& source) {
  const Node n{j, source, ""};
  return read_diagram(n, read_category(n), dim_cap);
}

DiagramMap diagram_map_from_json(const Json& j, int dim_cap, const std::string& source) {
  const Node n{j, source, ""};
  const auto c = read_category(n.field("shape"));
  const auto from = read_diagram(n.field("source"), c, dim_cap);
  const auto to = read_diagram(n.field("target"), c, dim_cap);
  const Node comps = n.field("components");
  auto parts = read_components(comps, from, to);
  return located(comps, [&] { return DiagramMap(from, to, std::move(parts)); });
}

bool is_presheaf_square(const Json& j) { return j.is_object() && j.value("kind", std::string()) == "presheaf-square"; }

Square square_from_json(const Json& j, int dim_cap, const std::string& source) {
  const Node n{j, source, ""};
  const auto p = read_sset(n.field("P"), dim_cap);
  const auto x = read_sset(n.field("X"), dim_cap);
  const auto y = read_sset(n.field("Y"), dim_cap);
  const auto b = read_sset(n.field("B"), dim_cap);
  Square s{read_images(n.field("top"), p, x), read_images(n.field("left"), p, y), read_images(n.field("right"), x, b),
           read_images(n.field("bottom"), y, b)};
  if (!commutes(s)) throw InvariantError({n.where() + ": square does not commute: right∘top != bottom∘left"});
  return s;
}

PresheafSquare presheaf_square_from_json(const Json& j, int dim_cap, const std::string& source) {
  const Node n{j, source, ""};
  const auto c = read_category(n.field("shape"));
  const auto a = read_diagram(n.field("A"), c, dim_cap);
  const auto b = read_diagram(n.field("B"), c, dim_cap);
  const auto cc = read_diagram(n.field("C"), c, dim_cap);
  const auto d = read_diagram(n.field("D"), c, dim_cap);
  auto edge = [&](const char* name, const Diagram& from, const Diagram& to) {
    const Node e = n.field(name);
    auto parts = read_components(e, from, to);
    return located(e, [&] { return DiagramMap(from, to, std::move(parts)); });
  };
  PresheafSquare s{edge("top", a, b), edge("left", a, cc), edge("right", b, d), edge("bottom", cc, d)};
  auto bad = square_violations(s);
  if (!bad.empty()) {
    for (auto& v : bad) v = n.where() + ": " + v;
    throw InvariantError(std::move(bad));
  }
  return s;
}

BooleanPresheaf presheaf_from_json(const Json& j, int dim_cap, const std::string& source) {
  const Node n{j, source, ""};
  const Node atoms = n.field("atoms");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < atoms.size(); ++i) names.push_back(atoms.at(i).str());
  std::optional<BooleanAlgebra> alg;
  try {
    alg.emplace(names);
  } catch (const std::invalid_argument& e) {
    atoms.fail(e.what());
  }
  auto element = [&](const Node& e) {
    const auto v = e.integer();
    if (v < 0 || v > static_cast<std::int64_t>(alg->top())) e.fail("no element " + std::to_string(v));
    return static_cast<Element>(v);
  };
  std::vector<std::optional<FiniteSimplicialSet>> values(static_cast<std::size_t>(alg->size()));
  const Node vs = n.field("values");
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const Node v = vs.at(i);
    const auto b = element(v.field("element"));
    if (values[b]) v.field("element").fail("second value for element " + std::to_string(b));
    values[b] = read_sset(v.field("value"), dim_cap);
  }
  std::vector<FiniteSimplicialSet> all;
  for (Element b = 0; b < values.size(); ++b) {
    if (!values[b]) vs.fail("no value for element " + std::to_string(b) + " (" + alg->name(b) + ")");
    all.push_back(*values[b]);
  }
  BooleanPresheaf::Covers covers;
  const Node rs = n.field("restrictions");
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const Node r = rs.at(i);
    const auto b = element(r.field("from"));
    const auto c = element(r.field("to"));
    if (covers.count({b, c})) r.fail("second restriction " + std::to_string(b) + " -> " + std::to_string(c));
    covers.emplace(std::pair{b, c}, read_images(r.field("images"), all[b], all[c]));
  }
  return located(n, [&] { return BooleanPresheaf(*alg, std::move(all), std::move(covers)); });
}

FiniteSimplicialSet parse_sset(const std::filesystem::path& p, int dim_cap) {
  return from_file(p, [&](const Json& j, const std::string& s) { return sset_from_json(j, dim_cap, s); });
}

SimplicialMap parse_map(const std::filesystem::path& p, int dim_cap) {
  return from_file(p, [&](const Json& j, const std::string& s) { return map_from_json(j, dim_cap, s); });
}

Diagram parse_diagram(const std::filesystem::path& p, int dim_cap) {
  return from_file(p, [&](const Json& j, const std::string& s) { return diagram_from_json(j, dim_cap, s); });
}

DiagramMap parse_diagram_map(const std::filesystem::path& p, int dim_cap) {
  return from_file(p, [&](const Json& j, const std::string& s) { return diagram_map_from_json(j, dim_cap, s); });
}

Square parse_square(const std::filesystem::path& p, int dim_cap) {
  return from_file(p, [&](const Json& j, const std::string& s) { return square_from_json(j, dim_cap, s); });
}

PresheafSquare parse_presheaf_square(const std::filesystem::path& p, int dim_cap) {
  return from_file(p, [&](const Json& j, const std::string& s) { return presheaf_square_from_json(j, dim_cap, s); });
}

BooleanPresheaf parse_presheaf(const std::filesystem::path& p, int dim_cap) {
  return from_file(p, [&](const Json& j, const std::string& s) { return presheaf_from_json(j, dim_cap, s); });
}

Json to_json(const HomologyGroup& g) { return Json{{"betti", g.betti}, {"torsion", g.torsion}}; }

Json to_json(const std::vector<HomologyGroup>& h) {
  Json out = Json::array();
  for (const auto& g : h) out.push_back(to_json(g));
  return out;
}

Json to_json(const WeakEquivalenceCertificate& c) {
  Json pi1 = Json::object();
  auto summaries = [](const std::vector<Pi1Summary>& v) {
    Json out = Json::array();
    for (const auto& s : v) out.push_back(s.to_string());
    return out;
  };
  pi1["source"] = summaries(c.source_pi1);
  pi1["target"] = summaries(c.target_pi1);
  return Json{{"verdict", to_string(c.verdict)},
              {"route", to_string(c.route)},
              {"degree_bound", c.degree_bound},
              {"truncated", c.truncated},
              {"simply_connected_assumed", c.simply_connected_assumed},
              {"components", Json{{"source", c.source_components}, {"target", c.target_components}}},
              {"pi0_bijective", c.pi0_bijective},
              {"pi0_map", c.pi0_map},
              {"homology",
               Json{{"source", to_json(c.homology.source)}, {"target", to_json(c.homology.target)}, {"cone", to_json(c.homology.cone)}}},
              {"mismatch_degree", optional_int(c.mismatch_degree)},
              {"cone_degree", optional_int(c.cone_degree)},
              {"pi1", std::move(pi1)},
              {"detail", c.detail}};
}

Json to_json(const SharpnessReport& r) {
  Json comps = Json::array();
  for (const auto& c : r.comparisons) {
    comps.push_back(Json{{"simplex", c.simplex_id}, {"delta", c.delta.values()}, {"certificate", to_json(c.certificate)}});
  }
  Json out{{"verdict", to_string(r.verdict)}, {"witness", optional_int(r.witness)}};
  if (r.witness) out["witness_comparison"] = comps.at(static_cast<std::size_t>(*r.witness));
  out["comparison_count"] = r.comparisons.size();
  out["comparisons"] = std::move(comps);
  return out;
}

Json to_json(const HomotopyCartesianVerdict& v) {
  const char* leg = v.leg_used == Leg::Right ? "right" : v.leg_used == Leg::Bottom ? "bottom" : "either";
  Json out{{"verdict", to_string(v.verdict)}, {"strategy", to_string(v.strategy)}, {"leg", leg}};
  out["comparison"] = v.comparison ? to_json(*v.comparison) : Json(nullptr);
  out["detail"] = v.detail;
  return out;
}

Json to_json(const HarnessReport& r) {
  auto checks = [](const std::vector<Check>& v) {
    Json out = Json::array();
    for (const auto& c : v) out.push_back(Json{{"label", c.label}, {"verdict", to_string(c.verdict)}, {"detail", c.detail}});
    return out;
  };
  return Json{{"theorem", r.theorem}, {"outcome", to_string(r.outcome)}, {"hypotheses", checks(r.hypotheses)}, {"conclusions", checks(r.conclusions)}};
}

Json to_json(const LiftReport& r) {
  Json out{{"holds", r.holds}, {"problems", r.problems}};
  if (!r.holds) {
    out["failure"] = r.failure;
    out["failing_dim"] = r.failing_dim;
    out["failing_horn"] = r.failing_horn;
  }
  return out;
}

Json to_json(const IsoCheck& c) {
  return Json{{"holds", c.holds}, {"failing_degree", optional_int(c.failing_degree)}, {"detail", c.detail}};
}

Json to_json(const TildePullbackReport& r) {
  return Json{{"object", r.object}, {"commutes", r.commutes}, {"comparison", to_json(r.comparison)}, {"holds", r.holds()}};
}

Json to_json(const BooleanAlgebra& alg, const SheafCheck& c) {
  Json out{{"holds", c.holds}};
  if (c.counterexample) {
    Json parts = Json::array();
    for (auto p : c.counterexample->parts) parts.push_back(alg.name(p));
    out["counterexample"] = Json{{"element", alg.name(c.counterexample->element)}, {"parts", std::move(parts)}};
  } else {
    out["counterexample"] = nullptr;
  }
  out["detail"] = c.detail;
  return out;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Indeterminate: return "indeterminate";
    case Status::Error: return "error";
  }
  return {};
}

Status status_of(Verdict v) {
  switch (v) {
    case Verdict::Certified: return Status::Pass;
    case Verdict::Refuted: return Status::Fail;
    case Verdict::Indeterminate: return Status::Indeterminate;
  }
  return Status::Error;
}

Status status_of(Sharpness s) {
  switch (s) {
    case Sharpness::Sharp: return Status::Pass;
    case Sharpness::NotSharp: return Status::Fail;
    case Sharpness::Indeterminate: return Status::Indeterminate;
  }
  return Status::Error;
}

Status status_of(Cartesian c) {
  switch (c) {
    case Cartesian::Cartesian: return Status::Pass;
    case Cartesian::NotCartesian: return Status::Fail;
    case Cartesian::Indeterminate: return Status::Indeterminate;
  }
  return Status::Error;
}

Status status_of(Outcome o) {
  switch (o) {
    case Outcome::Holds: return Status::Pass;
    case Outcome::Violated: return Status::Fail;
    case Outcome::Undetermined:
    case Outcome::HypothesisNotEstablished: return Status::Indeterminate;
  }
  return Status::Error;
}

Json VerdictReport::to_json() const {
  Json inputs_json = Json::array();
  for (const auto& i : inputs) inputs_json.push_back(Json{{"path", i.path}, {"sha256", i.sha256}});
  Json out{{"command", command}, {"inputs", std::move(inputs_json)}, {"verdict", to_string(status)}};
  if (error) out["error"] = *error;
  else out["evidence"] = evidence;
  out["seed"] = seed ? Json(*seed) : Json(nullptr);
  if (elapsed_ms) out["elapsed_ms"] = *elapsed_ms;
  return out;
}

}  // namespace sharp::io
