#include "sharp/boolean.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "sharp/constructions.hpp"

namespace sharp {

BooleanAlgebra::BooleanAlgebra(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
  if (atom_count() > kMaxAtoms) throw std::invalid_argument("at most " + std::to_string(kMaxAtoms) + " atoms are supported");
  std::set<std::string> seen;
  for (const auto& a : atoms_) {
    if (a.empty() || a == "0" || a == "1" || a.find('+') != std::string::npos) throw std::invalid_argument("bad atom name '" + a + "'");
    if (!seen.insert(a).second) throw std::invalid_argument("duplicate atom '" + a + "'");
  }
}

BooleanAlgebra BooleanAlgebra::with_atoms(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("a" + std::to_string(i));
  return BooleanAlgebra(std::move(names));
}

std::vector<int> BooleanAlgebra::atoms_below(Element b) const {
  std::vector<int> out;
  for (int i = 0; i < atom_count(); ++i) {
    if (b >> i & 1u) out.push_back(i);
  }
  return out;
}

std::string BooleanAlgebra::name(Element b) const {
  if (b == 0) return "0";
  std::string s;
  for (int i : atoms_below(b)) {
    if (!s.empty()) s += '+';
    s += atoms_[static_cast<std::size_t>(i)];
  }
  return s;
}

Element BooleanAlgebra::parse(const std::string& s) const {
  if (s == "0") return 0;
  if (s == "1") return top();
  Element b = 0;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto end = std::min(s.find('+', start), s.size());
    const auto part = s.substr(start, end - start);
    const auto it = std::find(atoms_.begin(), atoms_.end(), part);
    if (it == atoms_.end()) throw std::invalid_argument("unknown atom '" + part + "' in '" + s + "'");
    b |= atom(static_cast<int>(it - atoms_.begin()));
    start = end + 1;
  }
  return b;
}

std::vector<std::string> boolean_law_violations(const BooleanAlgebra& alg) {
  std::vector<std::string> out;
  const Element n = static_cast<Element>(alg.size());
  auto fail = [&](const std::string& law, std::initializer_list<Element> at) {
    std::string s = law + " fails at";
    for (Element e : at) s += " " + alg.name(e);
    out.push_back(s);
  };
  for (Element a = 0; a < n; ++a) {
    const Element c = alg.complement(a);
    if (alg.join(a, c) != alg.top() || alg.meet(a, c) != 0) fail("complement", {a});
    if (alg.complement(c) != a) fail("double complement", {a});
    if (alg.meet(a, a) != a || alg.join(a, a) != a) fail("idempotence", {a});
    if (!alg.leq(0, a) || !alg.leq(a, alg.top())) fail("bounds", {a});
    for (Element b = 0; b < n; ++b) {
      if (alg.meet(a, b) != alg.meet(b, a) || alg.join(a, b) != alg.join(b, a)) fail("commutativity", {a, b});
      if (alg.meet(a, alg.join(a, b)) != a || alg.join(a, alg.meet(a, b)) != a) fail("absorption", {a, b});
      if (alg.complement(alg.join(a, b)) != alg.meet(alg.complement(a), alg.complement(b)) ||
          alg.complement(alg.meet(a, b)) != alg.join(alg.complement(a), alg.complement(b))) {
        fail("De Morgan", {a, b});
      }
      if (alg.leq(a, b) != (alg.meet(a, b) == a)) fail("order", {a, b});
      for (Element c2 = 0; c2 < n; ++c2) {
        if (alg.meet(a, alg.meet(b, c2)) != alg.meet(alg.meet(a, b), c2) ||
            alg.join(a, alg.join(b, c2)) != alg.join(alg.join(a, b), c2)) {
          fail("associativity", {a, b, c2});
        }
        if (alg.meet(a, alg.join(b, c2)) != alg.join(alg.meet(a, b), alg.meet(a, c2)) ||
            alg.join(a, alg.meet(b, c2)) != alg.meet(alg.join(a, b), alg.join(a, c2))) {
          fail("distributivity", {a, b, c2});
        }
      }
    }
  }
  return out;
}

bool is_decomposition(const BooleanAlgebra& alg, const Decomposition& d) {
  if (!alg.contains(d.element)) return false;
  Element seen = 0;
  for (Element p : d.parts) {
    if (p == 0 || !alg.contains(p) || (seen & p) != 0) return false;
    seen |= p;
  }
  return seen == d.element;
}

Decomposition atom_decomposition(const BooleanAlgebra& alg, Element e) {
  Decomposition d{e, {}};
  for (int i : alg.atoms_below(e)) d.parts.push_back(alg.atom(i));
  return d;
}

std::vector<Decomposition> decompositions(const BooleanAlgebra& alg, Element e) {
  const auto atoms = alg.atoms_below(e);
  std::vector<Decomposition> out;
  std::vector<Element> blocks;
  // each atom joins an existing block or opens a new one
  auto place = [&](auto&& self, std::size_t k) -> void {
    if (k == atoms.size()) {
      out.push_back({e, blocks});
      return;
    }
    const Element a = alg.atom(atoms[k]);
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      blocks[j] |= a;
      self(self, k + 1);
      blocks[j] &= ~a;
    }
    blocks.push_back(a);
    self(self, k + 1);
    blocks.pop_back();
  };
  place(place, 0);
  return out;
}

std::string to_string(const BooleanAlgebra& alg, const Decomposition& d) {
  std::string s = alg.name(d.element) + " = ";
  if (d.parts.empty()) return s + "(empty join)";
  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    if (i) s += " | ";
    s += alg.name(d.parts[i]);
  }
  return s;
}

std::vector<std::string> presheaf_violations(const BooleanAlgebra& alg, const std::vector<FiniteSimplicialSet>& values,
                                             const BooleanPresheaf::Covers& covers) {
  std::vector<std::string> out;
  if (static_cast<int>(values.size()) != alg.size()) {
    out.push_back("expected " + std::to_string(alg.size()) + " values, got " + std::to_string(values.size()));
    return out;
  }
  std::size_t expected = 0;
  for (Element b = 0; b < static_cast<Element>(alg.size()); ++b) {
    for (int i : alg.atoms_below(b)) {
      ++expected;
      const Element c = b & ~alg.atom(i);
      const auto it = covers.find({b, c});
      const std::string what = "restriction " + alg.name(b) + " -> " + alg.name(c);
      if (it == covers.end()) {
        out.push_back(what + " is missing");
      } else if (!(it->second.source() == values[b]) || !(it->second.target() == values[c])) {
        out.push_back(what + " has the wrong source or target");
      }
    }
  }
  if (covers.size() != expected) out.push_back("restrictions given along pairs that are not covers");
  if (!out.empty()) return out;
  for (Element b = 0; b < static_cast<Element>(alg.size()); ++b) {
    const auto atoms = alg.atoms_below(b);
    for (std::size_t x = 0; x < atoms.size(); ++x) {
      for (std::size_t y = x + 1; y < atoms.size(); ++y) {
        const Element bi = b & ~alg.atom(atoms[x]);
        const Element bj = b & ~alg.atom(atoms[y]);
        const Element bij = bi & bj;
        if (!(compose(covers.at({bi, bij}), covers.at({b, bi})) == compose(covers.at({bj, bij}), covers.at({b, bj})))) {
          out.push_back("restrictions " + alg.name(b) + " -> " + alg.name(bij) + " through " + alg.name(bi) + " and " +
                        alg.name(bj) + " differ");
        }
      }
    }
  }
  return out;
}

BooleanPresheaf::BooleanPresheaf(BooleanAlgebra algebra, std::vector<FiniteSimplicialSet> values, Covers covers)
    : algebra_(std::move(algebra)), values_(std::move(values)), covers_(std::move(covers)) {
  auto v = presheaf_violations(algebra_, values_, covers_);
  if (!v.empty()) throw InvariantError(std::move(v));
}

BooleanPresheaf BooleanPresheaf::unchecked(BooleanAlgebra algebra, std::vector<FiniteSimplicialSet> values, Covers covers) {
  BooleanPresheaf x;
  x.algebra_ = std::move(algebra);
  x.values_ = std::move(values);
  x.covers_ = std::move(covers);
  return x;
}

SimplicialMap BooleanPresheaf::restriction(Element b, Element c) const {
  if (!algebra_.contains(b) || !algebra_.leq(c, b)) {
    throw std::invalid_argument("no restriction " + algebra_.name(b) + " -> " + algebra_.name(c));
  }
  SimplicialMap m = identity_map(at(b));
  Element cur = b;
  for (int i : algebra_.atoms_below(b & ~c)) {
    const Element next = cur & ~algebra_.atom(i);
    m = compose(covers_.at({cur, next}), m);
    cur = next;
  }
  return m;
}

BooleanPresheaf presheaf_from(const BooleanAlgebra& alg, std::vector<FiniteSimplicialSet> values,
                              const std::function<SimplicialMap(Element, Element)>& restrict) {
  BooleanPresheaf::Covers covers;
  for (Element b = 0; b < static_cast<Element>(alg.size()); ++b) {
    for (int i : alg.atoms_below(b)) {
      const Element c = b & ~alg.atom(i);
      covers.emplace(std::pair{b, c}, restrict(b, c));
    }
  }
  return BooleanPresheaf(alg, std::move(values), std::move(covers));
}

BooleanPresheaf constant_presheaf(const BooleanAlgebra& alg, const FiniteSimplicialSet& k) {
  const auto id = identity_map(k);
  return presheaf_from(alg, std::vector<FiniteSimplicialSet>(static_cast<std::size_t>(alg.size()), k),
                       [&](Element, Element) { return id; });
}

namespace {

std::vector<FiniteProduct> family_products(const BooleanAlgebra& alg, const std::vector<FiniteSimplicialSet>& per_atom) {
  if (static_cast<int>(per_atom.size()) != alg.atom_count()) throw std::invalid_argument("one value per atom is needed");
  std::vector<FiniteProduct> out;
  for (Element b = 0; b < static_cast<Element>(alg.size()); ++b) {
    std::vector<FiniteSimplicialSet> parts;
    for (int i : alg.atoms_below(b)) parts.push_back(per_atom[static_cast<std::size_t>(i)]);
    out.emplace_back(std::move(parts));
  }
  return out;
}

// Position of atom i among the atoms of b.
int position(Element b, int i) { return std::popcount(b & ((1u << i) - 1u)); }

BooleanPresheaf family_of(const BooleanAlgebra& alg, const std::vector<FiniteProduct>& products) {
  std::vector<FiniteSimplicialSet> values;
  for (const auto& p : products) values.push_back(p.object());
  return presheaf_from(alg, std::move(values), [&](Element b, Element c) {
    const auto& from = products[b];
    std::vector<SimplicialMap> cone;
    for (int i : alg.atoms_below(c)) cone.push_back(from.projection(position(b, i)));
    return products[c].induced(from.object(), cone);
  });
}

BooleanPresheaf supported_below(const BooleanAlgebra& alg, const FiniteSimplicialSet& k, Element b) {
  if (!alg.contains(b)) throw std::invalid_argument("not an element of the algebra");
  const FiniteSimplicialSet empty;
  std::vector<FiniteSimplicialSet> values;
  for (Element c = 0; c < static_cast<Element>(alg.size()); ++c) values.push_back(alg.leq(c, b) ? k : empty);
  const auto id = identity_map(k);
  return presheaf_from(alg, values, [&](Element c, Element d) {
    return alg.leq(c, b) ? id : SimplicialMap(empty, values[d], {});
  });
}

}  // namespace

BooleanPresheaf atom_family(const BooleanAlgebra& alg, const std::vector<FiniteSimplicialSet>& per_atom) {
  return family_of(alg, family_products(alg, per_atom));
}

BooleanPresheaf representable(const BooleanAlgebra& alg, Element b) { return supported_below(alg, point(), b); }

BooleanPresheaf tensor_representable(const BooleanAlgebra& alg, const FiniteSimplicialSet& k, Element b) {
  return sheafify(supported_below(alg, k, b)).sheaf;
}

BooleanPresheaf product(const BooleanPresheaf& x, const BooleanPresheaf& y) {
  if (!(x.algebra() == y.algebra())) throw std::invalid_argument("presheaves on different algebras");
  const auto& alg = x.algebra();
  std::vector<Pullback> products;
  std::vector<FiniteSimplicialSet> values;
  for (Element b = 0; b < static_cast<Element>(alg.size()); ++b) {
    products.push_back(product(x.at(b), y.at(b)));
    values.push_back(products.back().object());
  }
  return presheaf_from(alg, std::move(values), [&](Element b, Element c) {
    return product_map(products[b], products[c], x.covers().at({b, c}), y.covers().at({b, c}));
  });
}

std::vector<std::string> naturality_violations(const BooleanPresheafMap& f) {
  std::vector<std::string> out;
  const auto& alg = f.source.algebra();
  if (!(alg == f.target.algebra())) return {"source and target live on different algebras"};
  if (static_cast<int>(f.components.size()) != alg.size()) return {"one component per element is needed"};
  for (Element b = 0; b < static_cast<Element>(alg.size()); ++b) {
    if (!(f.at(b).source() == f.source.at(b)) || !(f.at(b).target() == f.target.at(b))) {
      out.push_back("component at " + alg.name(b) + " has the wrong source or target");
    }
  }
  if (!out.empty()) return out;
  for (const auto& [bc, r] : f.source.covers()) {
    const auto [b, c] = bc;
    if (!(compose(f.at(c), r) == compose(f.target.covers().at(bc), f.at(b)))) {
      out.push_back("naturality square " + alg.name(b) + " -> " + alg.name(c) + " does not commute");
    }
  }
  return out;
}

BooleanPresheafMap identity_map(const BooleanPresheaf& x) {
  BooleanPresheafMap f{x, x, {}};
  for (const auto& v : x.values()) f.components.push_back(identity_map(v));
  return f;
}

BooleanPresheafMap projection(const BooleanPresheaf& x, const BooleanPresheaf& y) {
  const auto p = product(x, y);
  BooleanPresheafMap f{p, x, {}};
  for (Element b = 0; b < static_cast<Element>(x.algebra().size()); ++b) {
    f.components.push_back(Pullback(to_point(x.at(b)), to_point(y.at(b))).first());
  }
  return f;
}

bool is_iso(const BooleanPresheafMap& f) {
  return std::all_of(f.components.begin(), f.components.end(), [](const SimplicialMap& m) { return is_iso(m); });
}

SheafCheck is_sheaf(const BooleanPresheaf& x, bool all_decompositions) {
  const auto& alg = x.algebra();
  SheafCheck out;
  for (Element b = alg.top() + 1; b-- > 0;) {
    const auto ds = all_decompositions ? decompositions(alg, b) : std::vector<Decomposition>{atom_decomposition(alg, b)};
    for (const auto& d : ds) {
      std::vector<FiniteSimplicialSet> parts;
      std::vector<SimplicialMap> cone;
      for (Element p : d.parts) {
        parts.push_back(x.at(p));
        cone.push_back(x.restriction(b, p));
      }
      const FiniteProduct prod(std::move(parts));
      const auto check = check_iso(prod.induced(x.at(b), cone));
      if (!check.holds) {
        out.holds = false;
        out.counterexample = d;
        out.detail = "X(" + alg.name(b) + ") -> product over " + to_string(alg, d) + " is not an isomorphism: " + check.detail;
        return out;
      }
    }
  }
  return out;
}

Sheafification sheafify(const BooleanPresheaf& x) {
  const auto& alg = x.algebra();
  std::vector<FiniteSimplicialSet> per_atom;
  for (int i = 0; i < alg.atom_count(); ++i) per_atom.push_back(x.at(alg.atom(i)));
  auto products = family_products(alg, per_atom);
  Sheafification out{family_of(alg, products), {}, {}};
  out.unit.source = x;
  out.unit.target = out.sheaf;
  for (Element b = 0; b < static_cast<Element>(alg.size()); ++b) {
    std::vector<SimplicialMap> cone;
    for (int i : alg.atoms_below(b)) cone.push_back(x.restriction(b, alg.atom(i)));
    out.unit.components.push_back(products[b].induced(x.at(b), cone));
  }
  out.products = std::move(products);
  return out;
}

BooleanPresheafMap sheafify(const BooleanPresheafMap& f, const Sheafification& from, const Sheafification& to) {
  const auto& alg = f.source.algebra();
  std::vector<SimplicialMap> atoms;
  for (int i = 0; i < alg.atom_count(); ++i) atoms.push_back(f.at(alg.atom(i)));
  const auto& ps = from.products;
  const auto& pt = to.products;
  BooleanPresheafMap out{from.sheaf, to.sheaf, {}};
  for (Element b = 0; b < static_cast<Element>(alg.size()); ++b) {
    std::vector<SimplicialMap> parts;
    for (int i : alg.atoms_below(b)) parts.push_back(atoms[static_cast<std::size_t>(i)]);
    out.components.push_back(product_map(ps[b], pt[b], parts));
  }
  return out;
}

LocalCertificate local_weak_equivalence(const BooleanPresheafMap& f, const WeOptions& options) {
  const auto& alg = f.source.algebra();
  LocalCertificate out;
  for (int i = 0; i < alg.atom_count(); ++i) {
    out.atoms.push_back(certify_weak_equivalence(f.at(alg.atom(i)), options));
    const auto v = out.atoms.back().verdict;
    const bool worse = (v == Verdict::Refuted && out.verdict != Verdict::Refuted) ||
                       (v == Verdict::Indeterminate && out.verdict == Verdict::Certified);
    if (worse) {
      out.verdict = v;
      out.atom = i;
    }
  }
  if (out.atom) {
    out.detail = "at atom '" + alg.atoms()[static_cast<std::size_t>(*out.atom)] + "': " + out.atoms[static_cast<std::size_t>(*out.atom)].detail;
  } else {
    out.detail = "certified at every atom";
  }
  return out;
}

namespace {

LocalLiftReport atomwise_lifts(const BooleanPresheafMap& f, const std::function<LiftReport(const SimplicialMap&)>& check) {
  const auto& alg = f.source.algebra();
  LocalLiftReport out;
  for (int i = 0; i < alg.atom_count(); ++i) {
    out.atoms.push_back(check(f.at(alg.atom(i))));
    if (!out.atoms.back().holds && out.holds) {
      out.holds = false;
      out.atom = i;
    }
  }
  return out;
}

}  // namespace

LocalLiftReport local_fibration(const BooleanPresheafMap& f, int bound) {
  return atomwise_lifts(f, [bound](const SimplicialMap& m) { return has_horn_lifts(m, bound); });
}

LocalLiftReport local_trivial_fibration(const BooleanPresheafMap& f, int bound) {
  return atomwise_lifts(f, [bound](const SimplicialMap& m) { return is_trivial_fibration(m, bound); });
}

LiftReport rlp_against_representable(const BooleanPresheafMap& f, const SimplicialMap& i, Element b) {
  return has_rlp(f.at(b), i);
}

AtomwiseSharpness is_sharp_atomwise(const BooleanPresheafMap& f, const SharpOptions& options) {
  const auto& alg = f.source.algebra();
  AtomwiseSharpness out;
  for (int i = 0; i < alg.atom_count(); ++i) {
    out.reports.push_back(is_sharp(f.at(alg.atom(i)), options));
    const auto v = out.reports.back().verdict;
    if ((v == Sharpness::NotSharp && out.verdict != Sharpness::NotSharp) ||
        (v == Sharpness::Indeterminate && out.verdict == Sharpness::Sharp)) {
      out.verdict = v;
      out.failing = i;
    }
  }
  return out;
}

namespace {

BooleanAlgebra object_algebra(const FiniteCategory& c) {
  std::vector<std::string> names;
  for (int i = 0; i < c.object_count(); ++i) {
    const auto& o = c.object(i);
    names.push_back(o == "0" || o == "1" || o.find('+') != std::string::npos ? "[" + o + "]" : o);
  }
  return BooleanAlgebra(std::move(names));
}

}  // namespace

BooleanPresheaf inverse_image_restriction(const Diagram& x) { return atom_family(object_algebra(x.shape()), x.objects()); }

BooleanPresheafMap inverse_image_restriction(const DiagramMap& f, const BooleanPresheaf& source, const BooleanPresheaf& target) {
  const auto& alg = source.algebra();
  const auto ps = family_products(alg, f.source().objects());
  const auto pt = family_products(alg, f.target().objects());
  BooleanPresheafMap out{source, target, {}};
  for (Element b = 0; b < static_cast<Element>(alg.size()); ++b) {
    std::vector<SimplicialMap> parts;
    for (int i : alg.atoms_below(b)) parts.push_back(f.at(i));
    out.components.push_back(product_map(ps[b], pt[b], parts));
  }
  return out;
}

BooleanPresheafMap inverse_image_restriction(const DiagramMap& f) {
  return inverse_image_restriction(f, inverse_image_restriction(f.source()), inverse_image_restriction(f.target()));
}

std::vector<std::string> square_violations(const PresheafSquare& s) {
  std::vector<std::string> out;
  const auto& c = s.top.source().shape();
  const int n = c.object_count();
  for (const auto* m : {&s.left, &s.right, &s.bottom}) {
    if (m->source().shape().object_count() != n) return {"the maps live on different categories"};
  }
  for (int i = 0; i < n; ++i) {
    const auto sq = at_object(s, i);
    const std::string at = " at '" + c.object(i) + "'";
    if (!(sq.top.source() == sq.left.source())) out.push_back("top and left have different sources" + at);
    if (!(sq.top.target() == sq.right.source())) out.push_back("right does not start at the target of top" + at);
    if (!(sq.left.target() == sq.bottom.source())) out.push_back("bottom does not start at the target of left" + at);
    if (!(sq.right.target() == sq.bottom.target())) out.push_back("right and bottom have different targets" + at);
    if (out.empty() && !commutes(sq)) out.push_back("square does not commute" + at);
  }
  return out;
}

Square at_object(const PresheafSquare& s, int object) {
  return {s.top.at(object), s.left.at(object), s.right.at(object), s.bottom.at(object)};
}

HarnessReport verify_inverse_image_preserves_hocartesian(const PresheafSquare& s, const CartesianOptions& options) {
  HarnessReport r;
  r.theorem = "inverse image preserves homotopy cartesian squares";
  const auto bad = square_violations(s);
  r.hypotheses.push_back(check_of("square of presheaves commutes", bad.empty(), bad.empty() ? "" : bad.front()));
  if (!bad.empty()) {
    r.settle();
    return r;
  }
  const auto& c = s.top.source().shape();
  for (int i = 0; i < c.object_count(); ++i) {
    r.hypotheses.push_back(check_of("square at '" + c.object(i) + "' is homotopy cartesian",
                                    is_homotopy_cartesian(at_object(s, i), Leg::Either, options)));
  }
  if (r.hypotheses_hold()) {
    const auto a = inverse_image_restriction(s.top.source());
    const auto b = inverse_image_restriction(s.top.target());
    const auto cc = inverse_image_restriction(s.left.target());
    const auto d = inverse_image_restriction(s.right.target());
    const auto top = inverse_image_restriction(s.top, a, b);
    const auto left = inverse_image_restriction(s.left, a, cc);
    const auto right = inverse_image_restriction(s.right, b, d);
    const auto bottom = inverse_image_restriction(s.bottom, cc, d);
    const auto& alg = a.algebra();
    for (Element e = 1; e < static_cast<Element>(alg.size()); ++e) {
      const Square sq{top.at(e), left.at(e), right.at(e), bottom.at(e)};
      r.conclusions.push_back(check_of("restricted square at " + alg.name(e) + " is homotopy cartesian",
                                       is_homotopy_cartesian(sq, Leg::Either, options)));
    }
  }
  r.settle();
  return r;
}

AtomwiseSharpness sharp_over_presheaf_site(const DiagramMap& f, const SharpOptions& options) {
  AtomwiseSharpness out;
  for (int i = 0; i < f.source().shape().object_count(); ++i) {
    out.reports.push_back(is_sharp(f.at(i), options));
    const auto v = out.reports.back().verdict;
    if ((v == Sharpness::NotSharp && out.verdict != Sharpness::NotSharp) ||
        (v == Sharpness::Indeterminate && out.verdict == Sharpness::Sharp)) {
      out.verdict = v;
      out.failing = i;
    }
  }
  return out;
}

}  // namespace sharp
