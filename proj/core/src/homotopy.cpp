#include "sharp/homotopy.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <queue>
#include <set>

#include "sharp/diagram.hpp"

namespace sharp {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Certified: return "certified";
    case Verdict::Refuted: return "refuted";
    case Verdict::Indeterminate: return "indeterminate";
  }
  return "?";
}

std::string to_string(Route r) {
  switch (r) {
    case Route::None: return "none";
    case Route::Isomorphism: return "isomorphism";
    case Route::Collapse: return "collapse";
    case Route::Whitehead: return "whitehead";
  }
  return "?";
}

std::string Pi1Summary::to_string() const {
  if (trivial) return "trivial";
  if (relations == 0) return "free of rank " + std::to_string(generators);
  return "unresolved: " + std::to_string(generators) + " generators, " + std::to_string(relations) + " relations";
}

bool collapses_onto(const FiniteSimplicialSet& x, const std::vector<bool>& keep) {
  const int n = x.size();
  std::vector<bool> alive(static_cast<std::size_t>(n));
  std::vector<int> occ(static_cast<std::size_t>(n), 0);
  int remaining = 0;
  for (int i = 0; i < n; ++i) {
    alive[static_cast<std::size_t>(i)] = !keep[static_cast<std::size_t>(i)];
    if (alive[static_cast<std::size_t>(i)]) ++remaining;
  }
  // who[τ] lists (ω, j) with base(d_j ω) = τ
  std::vector<std::vector<std::pair<int, int>>> who(static_cast<std::size_t>(n));
  for (int w = 0; w < n; ++w) {
    const auto faces = x.faces(w);
    for (int j = 0; j < static_cast<int>(faces.size()); ++j) who[static_cast<std::size_t>(faces[static_cast<std::size_t>(j)].index)].push_back({w, j});
    if (alive[static_cast<std::size_t>(w)]) {
      for (const auto& f : faces) ++occ[static_cast<std::size_t>(f.index)];
    }
  }
  // higher-dimensional free faces first
  std::priority_queue<std::pair<int, int>> queue;
  for (int i = 0; i < n; ++i) {
    if (alive[static_cast<std::size_t>(i)]) queue.push({x.dim(i), i});
  }
  auto remove = [&](int s) {
    alive[static_cast<std::size_t>(s)] = false;
    --remaining;
    for (const auto& f : x.faces(s)) {
      --occ[static_cast<std::size_t>(f.index)];
      if (alive[static_cast<std::size_t>(f.index)]) queue.push({x.dim(f.index), f.index});
    }
  };
  while (!queue.empty()) {
    const int tau = queue.top().second;
    queue.pop();
    if (!alive[static_cast<std::size_t>(tau)] || occ[static_cast<std::size_t>(tau)] != 1) continue;
    int sigma = -1, at = -1;
    for (const auto& [w, j] : who[static_cast<std::size_t>(tau)]) {
      if (alive[static_cast<std::size_t>(w)]) {
        sigma = w;
        at = j;
      }
    }
    if (sigma < 0 || occ[static_cast<std::size_t>(sigma)] != 0) continue;
    if (!x.faces(sigma)[static_cast<std::size_t>(at)].is_nondegenerate()) continue;
    remove(sigma);
    remove(tau);
  }
  return remaining == 0;
}

bool collapses_onto_image(const SimplicialMap& mono) {
  std::vector<bool> keep(static_cast<std::size_t>(mono.target().size()), false);
  for (const auto& im : mono.images()) {
    if (im.is_nondegenerate()) keep[static_cast<std::size_t>(im.index)] = true;
  }
  return collapses_onto(mono.target(), keep);
}

bool is_collapsible(const FiniteSimplicialSet& x) {
  const auto comps = components(x);
  std::vector<bool> keep(static_cast<std::size_t>(x.size()), false);
  std::vector<bool> seen(static_cast<std::size_t>(comps.count), false);
  for (int v : x.of_dim(0)) {
    const int c = comps.of_vertex[static_cast<std::size_t>(v)];
    if (!seen[static_cast<std::size_t>(c)]) {
      seen[static_cast<std::size_t>(c)] = true;
      keep[static_cast<std::size_t>(v)] = true;
    }
  }
  return collapses_onto(x, keep);
}

namespace {

using Word = std::vector<int>;  // generator g as g+1, its inverse as -(g+1)

void free_reduce(Word& w) {
  Word out;
  for (int l : w) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  while (out.size() >= 2 && out.front() == -out.back()) {
    out.erase(out.begin());
    out.pop_back();
  }
  w = std::move(out);
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& l : out) l = -l;
  return out;
}

constexpr std::size_t kMaxRelator = 4000;

// Tietze elimination; returns the number of surviving generators and relators.
Pi1Summary simplify(int generators, std::vector<Word> relators) {
  std::vector<bool> live(static_cast<std::size_t>(generators), true);
  int live_count = generators;
  bool progress = true;
  bool blown = false;
  while (progress && !blown) {
    progress = false;
    for (auto& r : relators) free_reduce(r);
    relators.erase(std::remove_if(relators.begin(), relators.end(), [](const Word& w) { return w.empty(); }), relators.end());
    int best = -1, best_gen = 0;
    std::size_t best_len = 0;
    for (std::size_t r = 0; r < relators.size(); ++r) {
      std::map<int, int> count;
      for (int l : relators[r]) ++count[std::abs(l)];
      for (const auto& [g, c] : count) {
        if (c == 1 && (best < 0 || relators[r].size() < best_len)) {
          best = static_cast<int>(r);
          best_gen = g;
          best_len = relators[r].size();
        }
      }
    }
    if (best < 0) break;
    // rotate so the generator leads: r = g^e w, hence g = w^{-e}
    Word r = relators[static_cast<std::size_t>(best)];
    const auto pos = std::find_if(r.begin(), r.end(), [&](int l) { return std::abs(l) == best_gen; });
    std::rotate(r.begin(), pos, r.end());
    const int e = r.front() > 0 ? 1 : -1;
    Word rest(r.begin() + 1, r.end());
    const Word value = e > 0 ? inverse(rest) : rest;
    const Word value_inv = inverse(value);
    relators.erase(relators.begin() + best);
    for (auto& w : relators) {
      Word out;
      for (int l : w) {
        if (l == best_gen) {
          out.insert(out.end(), value.begin(), value.end());
        } else if (l == -best_gen) {
          out.insert(out.end(), value_inv.begin(), value_inv.end());
        } else {
          out.push_back(l);
        }
      }
      if (out.size() > kMaxRelator) blown = true;
      w = std::move(out);
    }
    live[static_cast<std::size_t>(best_gen - 1)] = false;
    --live_count;
    progress = true;
  }
  for (auto& r : relators) free_reduce(r);
  relators.erase(std::remove_if(relators.begin(), relators.end(), [](const Word& w) { return w.empty(); }), relators.end());
  Pi1Summary s;
  s.generators = live_count;
  s.relations = static_cast<int>(relators.size());
  s.trivial = live_count == 0;
  return s;
}

}  // namespace

std::vector<Pi1Summary> fundamental_groups(const FiniteSimplicialSet& x) {
  const auto comps = components(x);
  std::vector<Pi1Summary> out;
  // spanning forest by breadth-first search over nondegenerate edges
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(x.size()));
  for (int e : x.of_dim(1)) {
    const int a = x.faces(e)[1].index, b = x.faces(e)[0].index;
    adj[static_cast<std::size_t>(a)].push_back({e, b});
    adj[static_cast<std::size_t>(b)].push_back({e, a});
  }
  std::vector<bool> tree(static_cast<std::size_t>(x.size()), false), seen(static_cast<std::size_t>(x.size()), false);
  for (int v : x.of_dim(0)) {
    if (seen[static_cast<std::size_t>(v)]) continue;
    std::deque<int> q{v};
    seen[static_cast<std::size_t>(v)] = true;
    while (!q.empty()) {
      const int u = q.front();
      q.pop_front();
      for (const auto& [e, w] : adj[static_cast<std::size_t>(u)]) {
        if (seen[static_cast<std::size_t>(w)]) continue;
        seen[static_cast<std::size_t>(w)] = true;
        tree[static_cast<std::size_t>(e)] = true;
        q.push_back(w);
      }
    }
  }
  std::vector<int> generator(static_cast<std::size_t>(x.size()), -1);
  std::vector<int> gen_count(static_cast<std::size_t>(comps.count), 0);
  for (int e : x.of_dim(1)) {
    if (tree[static_cast<std::size_t>(e)]) continue;
    const int c = comps.of_vertex[static_cast<std::size_t>(x.faces(e)[0].index)];
    generator[static_cast<std::size_t>(e)] = gen_count[static_cast<std::size_t>(c)]++;
  }
  std::vector<std::vector<Word>> relators(static_cast<std::size_t>(comps.count));
  auto word = [&](const SimplexRef& edge) -> Word {
    if (!edge.is_nondegenerate()) return {};
    const int g = generator[static_cast<std::size_t>(edge.index)];
    if (g < 0) return {};
    return {g + 1};
  };
  for (int t : x.of_dim(2)) {
    const auto f = x.faces(t);
    Word w = word(f[2]);
    const Word w0 = word(f[0]);
    w.insert(w.end(), w0.begin(), w0.end());
    const Word w1 = inverse(word(f[1]));
    w.insert(w.end(), w1.begin(), w1.end());
    const int c = comps.of_vertex[static_cast<std::size_t>(x.vertex(x.nondegenerate(t), 0))];
    relators[static_cast<std::size_t>(c)].push_back(std::move(w));
  }
  for (int c = 0; c < comps.count; ++c) {
    out.push_back(simplify(gen_count[static_cast<std::size_t>(c)], std::move(relators[static_cast<std::size_t>(c)])));
  }
  return out;
}

SimplicialMap constant_map(const FiniteSimplicialSet& x, const FiniteSimplicialSet& target, int vertex) {
  return compose(vertex_map(target, vertex), to_point(x));
}

MappingCylinder mapping_cylinder(const SimplicialMap& f, int dim_cap) {
  const auto& a = f.source();
  const auto interval = standard_simplex(1);
  const auto cyl = product(a, interval, dim_cap);
  const auto at0 = cyl.induced(identity_map(a), constant_map(a, interval, 0));
  const auto at1 = cyl.induced(identity_map(a), constant_map(a, interval, 1));
  const auto po = pushout(at1, f, dim_cap);
  MappingCylinder m;
  m.object = po.object;
  m.from_source = compose(po.from_x, at0);
  m.from_target = po.from_y;
  m.retraction = po.colimit.induced({compose(f, cyl.first()), identity_map(f.target()), f});
  return m;
}

WeakEquivalenceCertificate certify_weak_equivalence(const SimplicialMap& f, const WeOptions& options) {
  const auto& a = f.source();
  const auto& b = f.target();
  WeakEquivalenceCertificate cert;
  const int needed = std::max({a.dim(), b.dim(), 0});
  cert.degree_bound = options.degree_bound < 0 ? needed : options.degree_bound;
  cert.truncated = options.truncation.has_value();
  if (!cert.truncated && cert.degree_bound < needed) {
    throw DimensionError("degree bound " + std::to_string(cert.degree_bound) + " is below dimension " + std::to_string(needed));
  }
  if (cert.truncated && *options.truncation < 1) throw std::invalid_argument("truncation must be at least 1");

  const auto ca = components(a);
  const auto cb = components(b);
  cert.source_components = ca.count;
  cert.target_components = cb.count;
  cert.pi0_map.assign(static_cast<std::size_t>(ca.count), -1);
  for (int v : a.of_dim(0)) {
    cert.pi0_map[static_cast<std::size_t>(ca.of_vertex[static_cast<std::size_t>(v)])] = cb.of(b, f(a.nondegenerate(v)));
  }
  std::set<int> hit(cert.pi0_map.begin(), cert.pi0_map.end());
  cert.pi0_bijective = static_cast<int>(hit.size()) == ca.count && ca.count == cb.count;
  if (!cert.pi0_bijective) {
    cert.verdict = Verdict::Refuted;
    cert.detail = "pi0 is not a bijection: " + std::to_string(ca.count) + " source components, " +
                  std::to_string(cb.count) + " target components, " + std::to_string(hit.size()) + " hit";
    return cert;
  }
  if (!cert.truncated && is_iso(f)) {
    cert.verdict = Verdict::Certified;
    cert.route = Route::Isomorphism;
    cert.detail = "map is an isomorphism";
    return cert;
  }

  // Degrees whose homology is exact: all of them up to the bound, or below
  // the truncation.
  const int top = cert.truncated ? *options.truncation - 1 : cert.degree_bound;
  cert.homology.source = homology(a, cert.truncated ? top : cert.degree_bound);
  cert.homology.target = homology(b, cert.truncated ? top : cert.degree_bound);
  const int cone_top = cert.truncated ? top : cert.degree_bound + 1;
  auto cone = homology(mapping_cone(f, cone_top + 1));
  cone.resize(static_cast<std::size_t>(cone_top + 1));
  cert.homology.cone = cone;
  for (int n = 0; n <= cone_top; ++n) {
    if (!cone[static_cast<std::size_t>(n)].is_zero()) {
      cert.verdict = Verdict::Refuted;
      cert.cone_degree = n;
      // H_{n-1}(f) is onto here, and an onto map of finitely generated
      // abelian groups is an isomorphism iff the groups are isomorphic.
      auto group_at = [](const std::vector<HomologyGroup>& h, int k) {
        return k < static_cast<int>(h.size()) ? h[static_cast<std::size_t>(k)] : HomologyGroup{};
      };
      const bool lower = n > 0 && !(group_at(cert.homology.source, n - 1) == group_at(cert.homology.target, n - 1));
      cert.mismatch_degree = lower ? n - 1 : n;
      cert.detail = "mapping cone has H_" + std::to_string(n) + " = " + cone[static_cast<std::size_t>(n)].to_string() +
                    ", so H_" + std::to_string(*cert.mismatch_degree) + " of the map is not an isomorphism";
      return cert;
    }
  }
  if (cert.truncated) {
    cert.detail = "homology agrees below degree " + std::to_string(top) + " on truncated objects";
    return cert;
  }

  if (is_mono(f)) {
    if (collapses_onto_image(f)) {
      cert.verdict = Verdict::Certified;
      cert.route = Route::Collapse;
      cert.detail = "target collapses onto the image";
      return cert;
    }
  } else if (static_cast<long long>(a.size()) * 4 + b.size() <= options.cylinder_limit) {
    const auto cyl = mapping_cylinder(f);
    if (collapses_onto_image(cyl.from_source)) {
      cert.verdict = Verdict::Certified;
      cert.route = Route::Collapse;
      cert.detail = "mapping cylinder collapses onto the source";
      return cert;
    }
  }

  cert.source_pi1 = fundamental_groups(a);
  cert.target_pi1 = fundamental_groups(b);
  auto all_trivial = [](const std::vector<Pi1Summary>& v) {
    return std::all_of(v.begin(), v.end(), [](const Pi1Summary& s) { return s.trivial; });
  };
  const bool pi1_ok = all_trivial(cert.source_pi1) && all_trivial(cert.target_pi1);
  if (pi1_ok || options.simply_connected) {
    cert.verdict = Verdict::Certified;
    cert.route = Route::Whitehead;
    cert.simply_connected_assumed = !pi1_ok;
    cert.detail = pi1_ok ? "homology isomorphism between simply connected components"
                         : "homology isomorphism; simple connectivity asserted by the caller";
    return cert;
  }
  cert.detail = "homology isomorphism, but fundamental groups were not shown trivial";
  return cert;
}

}  // namespace sharp
