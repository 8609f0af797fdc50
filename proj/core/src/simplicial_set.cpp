#include "sharp/simplicial_set.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace sharp {

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += "; ";
    out += p;
  }
  return out;
}

std::string values_text(const SimplicialOperator& op) {
  std::string s = "[";
  for (int k = 0; k <= op.domain_dim(); ++k) {
    if (k) s += ',';
    s += std::to_string(op(k));
  }
  return s + "]";
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace

InvariantError::InvariantError(std::vector<std::string> violations)
    : std::invalid_argument(join(violations)), violations_(std::move(violations)) {}

FiniteSimplicialSet::FiniteSimplicialSet() : data_(std::make_shared<const Data>()) {}

std::optional<int> FiniteSimplicialSet::find(std::string_view id) const {
  auto it = data_->index.find(std::string(id));
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

int FiniteSimplicialSet::index_of(std::string_view id) const {
  auto i = find(id);
  if (!i) throw std::invalid_argument("no simplex with id '" + std::string(id) + "'");
  return *i;
}

std::span<const int> FiniteSimplicialSet::of_dim(int n) const {
  if (n < 0 || n >= static_cast<int>(data_->by_dim.size())) return {};
  return data_->by_dim[static_cast<std::size_t>(n)];
}

SimplexRef FiniteSimplicialSet::apply(const SimplexRef& s, const SimplicialOperator& op) const {
  if (op.codomain_dim() != s.dim()) {
    throw DimensionError("operator " + op.to_string() + " applied to a simplex of dimension " +
                         std::to_string(s.dim()));
  }
  int x = s.index;
  SimplicialOperator rho = s.degeneracy.after(op);
  std::vector<int> shifted;
  while (true) {
    const auto f = rho.factor();
    if (f.mono.is_identity()) return {x, f.epi};
    const int p = f.mono.codomain_dim();
    const int k = f.mono.domain_dim();
    int j = p;
    for (int t = k; t >= 0 && f.mono(t) == j; --t) --j;
    shifted.assign(static_cast<std::size_t>(k + 1), 0);
    for (int t = 0; t <= k; ++t) shifted[t] = f.mono(t) < j ? f.mono(t) : f.mono(t) - 1;
    const SimplexRef& fc = faces(x)[static_cast<std::size_t>(j)];
    rho = fc.degeneracy.after(SimplicialOperator(p - 1, shifted)).after(f.epi);
    x = fc.index;
  }
}

SimplexRef FiniteSimplicialSet::face(const SimplexRef& s, int k) const {
  return apply(s, SimplicialOperator::face(s.dim(), k));
}

SimplexRef FiniteSimplicialSet::degeneracy(const SimplexRef& s, int k) const {
  return {s.index, s.degeneracy.after(SimplicialOperator::degeneracy(s.dim(), k))};
}

int FiniteSimplicialSet::vertex(const SimplexRef& s, int k) const {
  return apply(s, SimplicialOperator(s.dim(), {k})).index;
}

std::vector<int> FiniteSimplicialSet::vertices(const SimplexRef& s) const {
  std::vector<int> out;
  for (int k = 0; k <= s.dim(); ++k) out.push_back(vertex(s, k));
  return out;
}

std::vector<SimplexRef> FiniteSimplicialSet::simplices(int n) const {
  std::vector<SimplexRef> out;
  for (int p = 0; p <= std::min(n, dim()); ++p) {
    if (of_dim(p).empty()) continue;
    const auto surj = surjections(n, p);
    for (int x : of_dim(p)) {
      for (const auto& s : surj) out.push_back({x, s});
    }
  }
  return out;
}

std::uint64_t FiniteSimplicialSet::simplex_count(int n) const {
  std::uint64_t total = 0;
  for (int p = 0; p <= std::min(n, dim()); ++p) total += binomial(n, p) * static_cast<std::uint64_t>(count(p));
  return total;
}

std::string FiniteSimplicialSet::ref_name(const SimplexRef& s) const {
  if (s.is_nondegenerate()) return id(s.index);
  return id(s.index) + values_text(s.degeneracy);
}

std::vector<SimplexRecord> FiniteSimplicialSet::records() const {
  std::vector<SimplexRecord> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int i = 0; i < size(); ++i) {
    SimplexRecord r{id(i), dim(i), {}};
    for (const auto& f : faces(i)) r.faces.emplace_back(id(f.index), f.degeneracy.values());
    out.push_back(std::move(r));
  }
  return out;
}

bool operator==(const FiniteSimplicialSet& a, const FiniteSimplicialSet& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->ids == b.data_->ids && a.data_->faces == b.data_->faces;
}

int FiniteSimplicialSet::Builder::add_vertex(std::string id) { return add(std::move(id), {}); }

int FiniteSimplicialSet::Builder::add(std::string id, std::vector<SimplexRef> faces) {
  const int n = faces.empty() ? 0 : static_cast<int>(faces.size()) - 1;
  if (faces.size() == 1) throw std::invalid_argument("simplex '" + id + "' has a single face");
  if (n > kMaxDegree) throw DimensionError("simplex '" + id + "' exceeds the maximal degree");
  if (index_.count(id)) throw std::invalid_argument("duplicate simplex id '" + id + "'");
  for (std::size_t k = 0; k < faces.size(); ++k) {
    const auto& f = faces[k];
    if (f.index < 0 || f.index >= size()) {
      throw std::invalid_argument("face d_" + std::to_string(k) + " of '" + id + "' is not yet defined");
    }
    if (f.dim() != n - 1 || f.degeneracy.codomain_dim() != dims_[static_cast<std::size_t>(f.index)] ||
        !f.degeneracy.is_surjective()) {
      throw std::invalid_argument("face d_" + std::to_string(k) + " of '" + id + "' has the wrong shape");
    }
  }
  const int idx = size();
  index_.emplace(id, idx);
  ids_.push_back(std::move(id));
  dims_.push_back(n);
  faces_.push_back(std::move(faces));
  return idx;
}

FiniteSimplicialSet FiniteSimplicialSet::Builder::build_unchecked() const {
  auto d = std::make_shared<Data>();
  d->ids = ids_;
  d->dims = dims_;
  d->faces = faces_;
  d->index = index_;
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    const int n = dims_[i];
    if (static_cast<int>(d->by_dim.size()) <= n) d->by_dim.resize(static_cast<std::size_t>(n + 1));
    d->by_dim[static_cast<std::size_t>(n)].push_back(static_cast<int>(i));
    d->max_dim = std::max(d->max_dim, n);
  }
  return FiniteSimplicialSet(std::move(d));
}

FiniteSimplicialSet FiniteSimplicialSet::Builder::build(int dim_cap) const {
  auto x = build_unchecked();
  if (x.dim() > dim_cap) {
    throw DimensionError("simplicial set of dimension " + std::to_string(x.dim()) + " exceeds the cap " +
                         std::to_string(dim_cap));
  }
  auto v = validate(x);
  if (!v.empty()) throw InvariantError(std::move(v));
  return x;
}

std::vector<std::string> validate(const FiniteSimplicialSet& x) {
  std::vector<std::string> out;
  for (int s = 0; s < x.size(); ++s) {
    const int n = x.dim(s);
    if (n < 2) continue;
    const auto ref = x.nondegenerate(s);
    for (int j = 1; j <= n; ++j) {
      const auto dj = x.face(ref, j);
      for (int i = 0; i < j; ++i) {
        if (x.face(dj, i) != x.face(x.face(ref, i), j - 1)) {
          out.push_back("simplicial identity d_" + std::to_string(i) + " d_" + std::to_string(j) + " = d_" +
                        std::to_string(j - 1) + " d_" + std::to_string(i) + " fails on '" + x.id(s) + "'");
        }
      }
    }
  }
  return out;
}

namespace {

struct ResolvedRecords {
  std::vector<std::string> violations;
  FiniteSimplicialSet::Builder builder;
};

ResolvedRecords resolve(const std::vector<SimplexRecord>& records) {
  ResolvedRecords out;
  std::unordered_map<std::string, std::size_t> by_id;
  for (std::size_t r = 0; r < records.size(); ++r) {
    if (!by_id.emplace(records[r].id, r).second) out.violations.push_back("duplicate simplex id '" + records[r].id + "'");
  }
  for (const auto& r : records) {
    const std::string where = "simplex '" + r.id + "'";
    if (r.dim < 0 || r.dim > kMaxDegree) {
      out.violations.push_back(where + " has invalid dimension " + std::to_string(r.dim));
      continue;
    }
    const std::size_t expected = r.dim == 0 ? 0 : static_cast<std::size_t>(r.dim + 1);
    if (r.faces.size() != expected) {
      out.violations.push_back(where + " lists " + std::to_string(r.faces.size()) + " faces, expected " +
                               std::to_string(expected));
      continue;
    }
    for (std::size_t k = 0; k < r.faces.size(); ++k) {
      const auto& [tid, vals] = r.faces[k];
      const std::string face = "face d_" + std::to_string(k) + " of " + where;
      auto it = by_id.find(tid);
      if (it == by_id.end()) {
        out.violations.push_back(face + " references unknown simplex '" + tid + "'");
        continue;
      }
      const int tdim = records[it->second].dim;
      if (tdim >= r.dim) {
        out.violations.push_back(face + " references '" + tid + "' of dimension " + std::to_string(tdim));
        continue;
      }
      if (static_cast<int>(vals.size()) != r.dim) {
        out.violations.push_back(face + " has an operator of length " + std::to_string(vals.size()) + ", expected " +
                                 std::to_string(r.dim));
        continue;
      }
      try {
        SimplicialOperator op(tdim, vals);
        if (!op.is_surjective()) out.violations.push_back(face + " has a non-surjective operator");
      } catch (const std::invalid_argument& e) {
        out.violations.push_back(face + ": " + e.what());
      }
    }
  }
  if (!out.violations.empty()) return out;
  std::vector<std::size_t> order(records.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return records[a].dim < records[b].dim; });
  std::unordered_map<std::string, int> built;
  for (std::size_t r : order) {
    std::vector<SimplexRef> faces;
    for (const auto& [tid, vals] : records[r].faces) {
      const int t = built.at(tid);
      faces.push_back({t, SimplicialOperator(out.builder.dim(t), vals)});
    }
    built[records[r].id] = out.builder.add(records[r].id, std::move(faces));
  }
  return out;
}

}  // namespace

std::vector<std::string> validate_records(const std::vector<SimplexRecord>& records) {
  auto r = resolve(records);
  if (!r.violations.empty()) return r.violations;
  return validate(r.builder.build_unchecked());
}

FiniteSimplicialSet from_records(const std::vector<SimplexRecord>& records, int dim_cap) {
  auto r = resolve(records);
  if (!r.violations.empty()) throw InvariantError(std::move(r.violations));
  return r.builder.build(dim_cap);
}

LevelTable::LevelTable(const FiniteSimplicialSet& x, int top) {
  levels_.resize(static_cast<std::size_t>(top + 1));
  lookup_.resize(static_cast<std::size_t>(top + 1));
  for (int n = 0; n <= top; ++n) {
    levels_[n] = x.simplices(n);
    for (std::size_t i = 0; i < levels_[n].size(); ++i) lookup_[n].emplace(levels_[n][i], static_cast<int>(i));
  }
}

int LevelTable::index(const SimplexRef& s) const {
  const auto& m = lookup_.at(static_cast<std::size_t>(s.dim()));
  auto it = m.find(s);
  if (it == m.end()) throw std::out_of_range("simplex not in level table");
  return it->second;
}

std::vector<std::string> map_violations(const FiniteSimplicialSet& source, const FiniteSimplicialSet& target,
                                        const std::vector<SimplexRef>& images) {
  std::vector<std::string> out;
  if (static_cast<int>(images.size()) != source.size()) {
    out.push_back("map assigns " + std::to_string(images.size()) + " images to " + std::to_string(source.size()) +
                  " simplices");
    return out;
  }
  bool shape_ok = true;
  for (int i = 0; i < source.size(); ++i) {
    const auto& im = images[static_cast<std::size_t>(i)];
    if (im.index < 0 || im.index >= target.size() || im.dim() != source.dim(i) ||
        im.degeneracy.codomain_dim() != target.dim(im.index) || !im.degeneracy.is_surjective()) {
      out.push_back("image of '" + source.id(i) + "' is not a simplex of matching dimension");
      shape_ok = false;
    }
  }
  if (!shape_ok) return out;
  for (int i = 0; i < source.size(); ++i) {
    const auto faces = source.faces(i);
    const auto& im = images[static_cast<std::size_t>(i)];
    for (std::size_t k = 0; k < faces.size(); ++k) {
      const auto& fc = faces[k];
      const auto lhs = target.apply(images[static_cast<std::size_t>(fc.index)], fc.degeneracy);
      const auto rhs = target.face(im, static_cast<int>(k));
      if (lhs != rhs) {
        out.push_back("map does not commute with d_" + std::to_string(k) + " on '" + source.id(i) + "'");
      }
    }
  }
  return out;
}

SimplicialMap::SimplicialMap(FiniteSimplicialSet source, FiniteSimplicialSet target, std::vector<SimplexRef> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  auto v = map_violations(source_, target_, images_);
  if (!v.empty()) throw InvariantError(std::move(v));
}

SimplicialMap SimplicialMap::unchecked(FiniteSimplicialSet source, FiniteSimplicialSet target,
                                       std::vector<SimplexRef> images) {
  SimplicialMap f;
  f.source_ = std::move(source);
  f.target_ = std::move(target);
  f.images_ = std::move(images);
  return f;
}

SimplexRef SimplicialMap::operator()(const SimplexRef& s) const {
  return target_.apply(images_[static_cast<std::size_t>(s.index)], s.degeneracy);
}

bool operator==(const SimplicialMap& a, const SimplicialMap& b) {
  return a.images_ == b.images_ && a.source_ == b.source_ && a.target_ == b.target_;
}

SimplicialMap identity_map(const FiniteSimplicialSet& x) {
  std::vector<SimplexRef> images;
  for (int i = 0; i < x.size(); ++i) images.push_back(x.nondegenerate(i));
  return SimplicialMap::unchecked(x, x, std::move(images));
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  if (!(f.target() == g.source())) throw std::invalid_argument("compose: maps are not composable");
  std::vector<SimplexRef> images;
  images.reserve(f.images().size());
  for (const auto& im : f.images()) images.push_back(g(im));
  return SimplicialMap::unchecked(f.source(), g.target(), std::move(images));
}

bool is_mono(const SimplicialMap& f) {
  std::vector<char> hit(static_cast<std::size_t>(f.target().size()), 0);
  for (const auto& im : f.images()) {
    if (!im.is_nondegenerate() || hit[static_cast<std::size_t>(im.index)]) return false;
    hit[static_cast<std::size_t>(im.index)] = 1;
  }
  return true;
}

bool is_epi(const SimplicialMap& f) {
  std::vector<char> hit(static_cast<std::size_t>(f.target().size()), 0);
  for (const auto& im : f.images()) {
    if (im.is_nondegenerate()) hit[static_cast<std::size_t>(im.index)] = 1;
  }
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool is_iso(const SimplicialMap& f) { return f.source().size() == f.target().size() && is_mono(f); }

SimplicialMap inverse(const SimplicialMap& f) {
  if (!is_iso(f)) throw std::invalid_argument("inverse: map is not an isomorphism");
  std::vector<SimplexRef> images(static_cast<std::size_t>(f.target().size()));
  for (int i = 0; i < f.source().size(); ++i) images[static_cast<std::size_t>(f.image(i).index)] = f.source().nondegenerate(i);
  return SimplicialMap::unchecked(f.target(), f.source(), std::move(images));
}

SimplexRef evaluate_operator(const FiniteSimplicialSet& x, const SimplexRef& s, const SimplicialOperator& op) {
  return x.apply(s, op);
}

namespace {

class MapEnumerator {
 public:
  MapEnumerator(const FiniteSimplicialSet& a, const FiniteSimplicialSet& x,
                const std::function<bool(const SimplicialMap&)>& visit, const MapSearch& search)
      : a_(a), x_(x), visit_(visit), search_(search), table_(x, std::max(a.dim(), 0)) {
    by_face0_.resize(static_cast<std::size_t>(std::max(a.dim(), 0) + 1));
    for (int n = 1; n <= a.dim(); ++n) {
      for (const auto& s : table_.level(n)) {
        if (search_.nondegenerate_images_only && !s.is_nondegenerate()) continue;
        by_face0_[n][x_.face(s, 0)].push_back(s);
      }
    }
    for (const auto& v : table_.level(0)) vertices_.push_back(v);
    images_.resize(static_cast<std::size_t>(a.size()));
    plan_order();
  }

  std::uint64_t run() {
    if (a_.empty()) {
      ++count_;
      visit_(SimplicialMap::unchecked(a_, x_, {}));
      return count_;
    }
    recurse(0);
    return count_;
  }

 private:
  bool consistent(int i, const SimplexRef& c) const {
    const auto faces = a_.faces(i);
    for (std::size_t k = 0; k < faces.size(); ++k) {
      const auto& fc = faces[k];
      if (x_.apply(images_[static_cast<std::size_t>(fc.index)], fc.degeneracy) != x_.face(c, static_cast<int>(k))) {
        return false;
      }
    }
    if (search_.injective && used_.count(c)) return false;
    if (search_.nondegenerate_images_only && !c.is_nondegenerate()) return false;
    if (search_.allow && !search_.allow(i, c)) return false;
    return true;
  }

  // Vertices one at a time, most-constrained first, each followed by every
  // simplex whose faces are now all placed, so that edges prune early.
  void plan_order() {
    const int size = a_.size();
    std::vector<char> placed(static_cast<std::size_t>(size), 0);
    std::vector<std::vector<int>> cofaces(static_cast<std::size_t>(size));
    std::vector<int> missing(static_cast<std::size_t>(size), 0);
    std::vector<std::vector<int>> neighbours(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) {
      std::vector<int> distinct;
      for (const auto& f : a_.faces(i)) distinct.push_back(f.index);
      std::sort(distinct.begin(), distinct.end());
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      missing[static_cast<std::size_t>(i)] = static_cast<int>(distinct.size());
      for (int f : distinct) cofaces[static_cast<std::size_t>(f)].push_back(i);
      if (a_.dim(i) == 1 && distinct.size() == 2) {
        neighbours[static_cast<std::size_t>(distinct[0])].push_back(distinct[1]);
        neighbours[static_cast<std::size_t>(distinct[1])].push_back(distinct[0]);
      }
    }
    std::vector<int> ready;
    auto place = [&](int i) {
      placed[static_cast<std::size_t>(i)] = 1;
      order_.push_back(i);
      for (int c : cofaces[static_cast<std::size_t>(i)]) {
        if (--missing[static_cast<std::size_t>(c)] == 0) ready.push_back(c);
      }
    };
    auto drain = [&] {
      while (!ready.empty()) {
        const int c = ready.back();
        ready.pop_back();
        place(c);
      }
    };
    auto is_fixed = [&](int i) {
      return i < static_cast<int>(search_.fixed.size()) && search_.fixed[static_cast<std::size_t>(i)].has_value();
    };
    const auto verts = a_.of_dim(0);
    std::vector<int> score(static_cast<std::size_t>(size), 0);
    for (int v : verts) {
      if (is_fixed(v)) {
        place(v);
        drain();
      }
    }
    for (;;) {
      int best = -1;
      for (int v : verts) {
        if (placed[static_cast<std::size_t>(v)]) continue;
        if (best < 0 || score[static_cast<std::size_t>(v)] > score[static_cast<std::size_t>(best)]) best = v;
      }
      if (best < 0) break;
      place(best);
      for (int w : neighbours[static_cast<std::size_t>(best)]) ++score[static_cast<std::size_t>(w)];
      drain();
    }
  }

  bool recurse(int pos) {
    if (pos == static_cast<int>(order_.size())) {
      ++count_;
      return visit_(SimplicialMap::unchecked(a_, x_, images_));
    }
    const int i = order_[static_cast<std::size_t>(pos)];
    auto try_candidate = [&](const SimplexRef& c) {
      if (!consistent(i, c)) return true;
      images_[static_cast<std::size_t>(i)] = c;
      if (search_.injective) used_.insert(c);
      const bool go_on = recurse(pos + 1);
      if (search_.injective) used_.erase(c);
      return go_on;
    };
    if (i < static_cast<int>(search_.fixed.size()) && search_.fixed[static_cast<std::size_t>(i)]) {
      return try_candidate(*search_.fixed[static_cast<std::size_t>(i)]);
    }
    const int n = a_.dim(i);
    if (n == 0) {
      for (const auto& v : vertices_) {
        if (!try_candidate(v)) return false;
      }
      return true;
    }
    const auto& f0 = a_.faces(i)[0];
    const auto key = x_.apply(images_[static_cast<std::size_t>(f0.index)], f0.degeneracy);
    auto it = by_face0_[n].find(key);
    if (it == by_face0_[n].end()) return true;
    for (const auto& c : it->second) {
      if (!try_candidate(c)) return false;
    }
    return true;
  }

  const FiniteSimplicialSet& a_;
  const FiniteSimplicialSet& x_;
  const std::function<bool(const SimplicialMap&)>& visit_;
  const MapSearch& search_;
  LevelTable table_;
  std::vector<std::unordered_map<SimplexRef, std::vector<SimplexRef>, SimplexRefHash>> by_face0_;
  std::vector<SimplexRef> vertices_;
  std::vector<SimplexRef> images_;
  std::vector<int> order_;
  std::unordered_set<SimplexRef, SimplexRefHash> used_;
  std::uint64_t count_ = 0;
};

}  // namespace

std::uint64_t enumerate_maps(const FiniteSimplicialSet& a, const FiniteSimplicialSet& x,
                             const std::function<bool(const SimplicialMap&)>& visit, const MapSearch& search) {
  return MapEnumerator(a, x, visit, search).run();
}

std::optional<SimplicialMap> find_map(const FiniteSimplicialSet& a, const FiniteSimplicialSet& x,
                                      const MapSearch& search) {
  std::optional<SimplicialMap> found;
  enumerate_maps(
      a, x,
      [&](const SimplicialMap& f) {
        found = f;
        return false;
      },
      search);
  return found;
}

std::optional<SimplicialMap> find_isomorphism(const FiniteSimplicialSet& a, const FiniteSimplicialSet& x) {
  if (a.dim() != x.dim()) return std::nullopt;
  for (int n = 0; n <= a.dim(); ++n) {
    if (a.count(n) != x.count(n)) return std::nullopt;
  }
  MapSearch search;
  search.nondegenerate_images_only = true;
  search.injective = true;
  return find_map(a, x, search);
}

}  // namespace sharp
