#include "sharp/category.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <tuple>

#include "sharp/simplicial_set.hpp"

namespace sharp {

std::optional<int> FiniteCategory::find_object(std::string_view name) const {
  auto it = object_index_.find(std::string(name));
  if (it == object_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> FiniteCategory::find_arrow(std::string_view id) const {
  auto it = arrow_index_.find(std::string(id));
  if (it == arrow_index_.end()) return std::nullopt;
  return it->second;
}

int FiniteCategory::object_index(std::string_view name) const {
  auto i = find_object(name);
  if (!i) throw std::invalid_argument("unknown object '" + std::string(name) + "'");
  return *i;
}

int FiniteCategory::arrow_index(std::string_view id) const {
  auto i = find_arrow(id);
  if (!i) throw std::invalid_argument("unknown arrow '" + std::string(id) + "'");
  return *i;
}

int FiniteCategory::compose(int g, int f) const {
  const int r = table_[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)];
  if (r < 0) throw std::invalid_argument("arrows '" + arrow(g).id + "' and '" + arrow(f).id + "' are not composable");
  return r;
}

std::vector<int> FiniteCategory::hom(int from, int to) const {
  std::vector<int> out;
  for (int a = 0; a < arrow_count(); ++a) {
    if (arrow(a).src == from && arrow(a).dst == to) out.push_back(a);
  }
  return out;
}

std::vector<std::vector<int>> FiniteCategory::strings(int n) const {
  std::vector<std::vector<int>> out;
  if (n == 0) {
    for (int i = 0; i < object_count(); ++i) out.push_back({identity(i)});
    return out;
  }
  std::vector<int> cur;
  std::function<void(int)> extend = [&](int from) {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (int a = 0; a < arrow_count(); ++a) {
      if (from >= 0 && arrow(a).src != from) continue;
      cur.push_back(a);
      extend(arrow(a).dst);
      cur.pop_back();
    }
  };
  extend(-1);
  return out;
}

std::optional<int> FiniteCategory::nerve_dimension() const {
  // Longest path in the graph of non-identity arrows; a cycle means unbounded.
  const int n = object_count();
  std::vector<int> state(static_cast<std::size_t>(n), 0), longest(static_cast<std::size_t>(n), 0);
  bool cyclic = false;
  std::function<void(int)> visit = [&](int v) {
    state[static_cast<std::size_t>(v)] = 1;
    for (int a = 0; a < arrow_count(); ++a) {
      if (arrow(a).src != v || is_identity(a)) continue;
      const int w = arrow(a).dst;
      if (state[static_cast<std::size_t>(w)] == 1) {
        cyclic = true;
        continue;
      }
      if (state[static_cast<std::size_t>(w)] == 0) visit(w);
      longest[static_cast<std::size_t>(v)] = std::max(longest[static_cast<std::size_t>(v)], longest[static_cast<std::size_t>(w)] + 1);
    }
    state[static_cast<std::size_t>(v)] = 2;
  };
  for (int v = 0; v < n; ++v) {
    if (state[static_cast<std::size_t>(v)] == 0) visit(v);
  }
  if (cyclic) return std::nullopt;
  int best = 0;
  for (int v : longest) best = std::max(best, v);
  return best;
}

FiniteCategory FiniteCategory::opposite() const {
  FiniteCategory op = *this;
  for (auto& a : op.arrows_) std::swap(a.src, a.dst);
  const auto n = static_cast<std::size_t>(arrow_count());
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t f = 0; f < n; ++f) op.table_[g][f] = table_[f][g];
  }
  return op;
}

int FiniteCategory::Builder::add_object(std::string name) {
  if (std::find(objects_.begin(), objects_.end(), name) != objects_.end()) {
    throw std::invalid_argument("duplicate object '" + name + "'");
  }
  objects_.push_back(std::move(name));
  return static_cast<int>(objects_.size()) - 1;
}

int FiniteCategory::Builder::add_arrow(std::string id, int src, int dst) {
  if (src < 0 || dst < 0 || src >= static_cast<int>(objects_.size()) || dst >= static_cast<int>(objects_.size())) {
    throw std::invalid_argument("arrow '" + id + "' has an unknown endpoint");
  }
  for (const auto& a : arrows_) {
    if (a.id == id) throw std::invalid_argument("duplicate arrow '" + id + "'");
  }
  arrows_.push_back({std::move(id), src, dst});
  return static_cast<int>(arrows_.size()) - 1;
}

int FiniteCategory::Builder::add_arrow(std::string id, std::string_view src, std::string_view dst) {
  auto find = [&](std::string_view n) {
    auto it = std::find(objects_.begin(), objects_.end(), n);
    if (it == objects_.end()) throw std::invalid_argument("arrow '" + id + "' has unknown endpoint '" + std::string(n) + "'");
    return static_cast<int>(it - objects_.begin());
  };
  return add_arrow(id, find(src), find(dst));
}

void FiniteCategory::Builder::set_composite(std::string_view g, std::string_view f, std::string_view gf) {
  composites_.push_back({{std::string(g), std::string(f)}, std::string(gf)});
}

void FiniteCategory::Builder::compose_thin() { thin_ = true; }

FiniteCategory FiniteCategory::Builder::build() const {
  FiniteCategory c;
  c.objects_ = objects_;
  for (std::size_t i = 0; i < objects_.size(); ++i) c.object_index_.emplace(objects_[i], static_cast<int>(i));
  for (std::size_t i = 0; i < objects_.size(); ++i) {
    c.identities_.push_back(static_cast<int>(c.arrows_.size()));
    c.arrows_.push_back({"id_" + objects_[i], static_cast<int>(i), static_cast<int>(i)});
  }
  for (const auto& a : arrows_) {
    if (a.id.rfind("id_", 0) == 0 && a.src == a.dst && a.id == "id_" + objects_[static_cast<std::size_t>(a.src)]) continue;
    c.arrows_.push_back(a);
  }
  std::vector<std::string> violations;
  for (std::size_t a = 0; a < c.arrows_.size(); ++a) {
    if (!c.arrow_index_.emplace(c.arrows_[a].id, static_cast<int>(a)).second) {
      violations.push_back("duplicate arrow id '" + c.arrows_[a].id + "'");
    }
  }
  if (!violations.empty()) throw InvariantError(std::move(violations));
  const auto n = c.arrows_.size();
  c.table_.assign(n, std::vector<int>(n, -1));
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t g = 0; g < n; ++g) {
      if (c.arrows_[f].dst != c.arrows_[g].src) continue;
      if (c.is_identity(static_cast<int>(g))) c.table_[g][f] = static_cast<int>(f);
      else if (c.is_identity(static_cast<int>(f))) c.table_[g][f] = static_cast<int>(g);
    }
  }
  for (const auto& [pair, gf] : composites_) {
    auto g = c.find_arrow(pair.first), f = c.find_arrow(pair.second), h = c.find_arrow(gf);
    if (!g || !f || !h) {
      violations.push_back("composite " + pair.first + " . " + pair.second + " = " + gf + " names an unknown arrow");
      continue;
    }
    if (c.arrow(*f).dst != c.arrow(*g).src || c.arrow(*h).src != c.arrow(*f).src || c.arrow(*h).dst != c.arrow(*g).dst) {
      violations.push_back("composite " + pair.first + " . " + pair.second + " = " + gf + " has mismatched endpoints");
      continue;
    }
    auto& slot = c.table_[static_cast<std::size_t>(*g)][static_cast<std::size_t>(*f)];
    if (slot >= 0 && slot != *h) {
      violations.push_back("composite " + pair.first + " . " + pair.second + " defined twice");
      continue;
    }
    slot = *h;
  }
  if (thin_) {
    for (std::size_t f = 0; f < n; ++f) {
      for (std::size_t g = 0; g < n; ++g) {
        if (c.arrows_[f].dst != c.arrows_[g].src || c.table_[g][f] >= 0) continue;
        const auto candidates = c.hom(c.arrows_[f].src, c.arrows_[g].dst);
        if (candidates.size() == 1) c.table_[g][f] = candidates[0];
      }
    }
  }
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t g = 0; g < n; ++g) {
      if (c.arrows_[f].dst == c.arrows_[g].src && c.table_[g][f] < 0) {
        violations.push_back("missing composite " + c.arrows_[g].id + " . " + c.arrows_[f].id);
      }
    }
  }
  if (!violations.empty()) throw InvariantError(std::move(violations));
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t g = 0; g < n; ++g) {
      if (c.arrows_[f].dst != c.arrows_[g].src) continue;
      const int gf = c.table_[g][f];
      for (std::size_t h = 0; h < n; ++h) {
        if (c.arrows_[g].dst != c.arrows_[h].src) continue;
        const int hg = c.table_[h][g];
        if (c.table_[h][static_cast<std::size_t>(gf)] != c.table_[static_cast<std::size_t>(hg)][f]) {
          violations.push_back("associativity fails for " + c.arrows_[h].id + ", " + c.arrows_[g].id + ", " +
                               c.arrows_[f].id);
        }
      }
    }
  }
  if (!violations.empty()) throw InvariantError(std::move(violations));
  return c;
}

OverCategory over_category(const FiniteCategory& c, int object) {
  FiniteCategory::Builder b;
  OverCategory out;
  std::vector<int> objs;
  for (int a = 0; a < c.arrow_count(); ++a) {
    if (c.arrow(a).dst != object) continue;
    objs.push_back(a);
    b.add_object(c.arrow(a).id);
    out.forget.on_objects.push_back(c.arrow(a).src);
  }
  struct Rec {
    int u, s, t;
    std::string id;
  };
  std::vector<Rec> recs;
  std::map<std::tuple<int, int, int>, std::string> id_of;
  for (std::size_t s = 0; s < objs.size(); ++s) {
    for (std::size_t t = 0; t < objs.size(); ++t) {
      for (int u : c.hom(c.arrow(objs[s]).src, c.arrow(objs[t]).src)) {
        if (c.compose(objs[t], u) != objs[s] || (s == t && c.is_identity(u))) continue;
        Rec r{u, static_cast<int>(s), static_cast<int>(t), c.arrow(u).id + ":" + c.arrow(objs[s]).id + ">" + c.arrow(objs[t]).id};
        b.add_arrow(r.id, r.s, r.t);
        id_of[{r.u, r.s, r.t}] = r.id;
        recs.push_back(std::move(r));
      }
    }
  }
  for (const auto& f : recs) {
    for (const auto& g : recs) {
      if (f.t != g.s) continue;
      const int gu = c.compose(g.u, f.u);
      if (f.s == g.t && c.is_identity(gu)) {
        b.set_composite(g.id, f.id, "id_" + c.arrow(objs[static_cast<std::size_t>(f.s)]).id);
      } else {
        b.set_composite(g.id, f.id, id_of.at({gu, f.s, g.t}));
      }
    }
  }
  out.category = b.build();
  std::unordered_map<std::string, int> u_of;
  for (const auto& r : recs) u_of[r.id] = r.u;
  for (int a = 0; a < out.category.arrow_count(); ++a) {
    if (out.category.is_identity(a)) {
      out.forget.on_arrows.push_back(c.identity(out.forget.on_objects[static_cast<std::size_t>(out.category.arrow(a).src)]));
    } else {
      out.forget.on_arrows.push_back(u_of.at(out.category.arrow(a).id));
    }
  }
  out.terminal = out.category.object_index(c.arrow(c.identity(object)).id);
  return out;
}

Subcategory full_subcategory(const FiniteCategory& c, const std::vector<int>& objects) {
  FiniteCategory::Builder b;
  std::vector<int> local(static_cast<std::size_t>(c.object_count()), -1);
  Subcategory out;
  for (int o : objects) {
    local[static_cast<std::size_t>(o)] = b.add_object(c.object(o));
    out.inclusion.on_objects.push_back(o);
  }
  std::vector<int> kept;
  for (int a = 0; a < c.arrow_count(); ++a) {
    const auto& ar = c.arrow(a);
    if (c.is_identity(a) || local[static_cast<std::size_t>(ar.src)] < 0 || local[static_cast<std::size_t>(ar.dst)] < 0) continue;
    b.add_arrow(ar.id, local[static_cast<std::size_t>(ar.src)], local[static_cast<std::size_t>(ar.dst)]);
    kept.push_back(a);
  }
  for (int f : kept) {
    for (int g : kept) {
      if (c.arrow(f).dst != c.arrow(g).src) continue;
      b.set_composite(c.arrow(g).id, c.arrow(f).id, c.arrow(c.compose(g, f)).id);
    }
  }
  out.category = b.build();
  for (int a = 0; a < out.category.arrow_count(); ++a) out.inclusion.on_arrows.push_back(c.arrow_index(out.category.arrow(a).id));
  return out;
}

std::string subset_name(unsigned mask) {
  std::string s = "{";
  bool first = true;
  for (int v = 0; v < 31; ++v) {
    if (!(mask >> v & 1u)) continue;
    if (!first) s += ',';
    s += std::to_string(v + 1);
    first = false;
  }
  return s + "}";
}

int SubsetPoset::object_of(unsigned mask) const {
  auto it = std::find(masks.begin(), masks.end(), mask);
  if (it == masks.end()) throw std::invalid_argument("subset " + subset_name(mask) + " is not an object");
  return static_cast<int>(it - masks.begin());
}

bool SubsetPoset::contains(unsigned mask) const { return std::find(masks.begin(), masks.end(), mask) != masks.end(); }

SubsetPoset subset_poset(int n, bool proper_only) {
  if (n < 0 || n > 12) throw std::invalid_argument("subset poset size out of range");
  SubsetPoset p;
  p.n = n;
  p.proper_only = proper_only;
  const unsigned full = (1u << n) - 1u;
  for (int k = 0; k <= n; ++k) {
    for (unsigned m = 0; m <= full; ++m) {
      if (std::popcount(m) == k && !(proper_only && m == full)) p.masks.push_back(m);
    }
  }
  FiniteCategory::Builder b;
  for (unsigned m : p.masks) b.add_object(subset_name(m));
  for (std::size_t s = 0; s < p.masks.size(); ++s) {
    for (std::size_t t = 0; t < p.masks.size(); ++t) {
      if (s != t && (p.masks[s] & ~p.masks[t]) == 0) {
        b.add_arrow(subset_name(p.masks[s]) + "<" + subset_name(p.masks[t]), static_cast<int>(s), static_cast<int>(t));
      }
    }
  }
  b.compose_thin();
  p.category = b.build();
  return p;
}

FiniteCategory discrete_category(int objects) {
  FiniteCategory::Builder b;
  for (int i = 0; i < objects; ++i) b.add_object(std::to_string(i));
  return b.build();
}

FiniteCategory chain_category(int length) {
  FiniteCategory::Builder b;
  for (int i = 0; i <= length; ++i) b.add_object(std::to_string(i));
  for (int i = 0; i <= length; ++i) {
    for (int j = i + 1; j <= length; ++j) b.add_arrow(std::to_string(i) + "<" + std::to_string(j), i, j);
  }
  b.compose_thin();
  return b.build();
}

FiniteCategory span_category() {
  FiniteCategory::Builder b;
  b.add_object("a");
  b.add_object("b");
  b.add_object("c");
  b.add_arrow("f", "c", "a");
  b.add_arrow("g", "c", "b");
  return b.build();
}

FiniteCategory cospan_category() {
  FiniteCategory::Builder b;
  b.add_object("a");
  b.add_object("b");
  b.add_object("c");
  b.add_arrow("f", "a", "c");
  b.add_arrow("g", "b", "c");
  return b.build();
}

FiniteCategory parallel_pair_category() {
  FiniteCategory::Builder b;
  b.add_object("0");
  b.add_object("1");
  b.add_arrow("u", "0", "1");
  b.add_arrow("v", "0", "1");
  return b.build();
}

FiniteCategory square_category() {
  FiniteCategory::Builder b;
  for (int i = 0; i < 4; ++i) b.add_object(std::to_string(i));
  b.add_arrow("a", "0", "1");
  b.add_arrow("b", "0", "2");
  b.add_arrow("c", "1", "3");
  b.add_arrow("d", "2", "3");
  b.add_arrow("e", "0", "3");
  b.set_composite("c", "a", "e");
  b.set_composite("d", "b", "e");
  return b.build();
}

FiniteCategory arrow_category() {
  FiniteCategory::Builder b;
  b.add_object("a");
  b.add_object("b");
  b.add_arrow("f", "a", "b");
  return b.build();
}

}  // namespace sharp
