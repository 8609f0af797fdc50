#include "sharp/lifting.hpp"

#include <map>
#include <set>

#include "sharp/constructions.hpp"

namespace sharp {

namespace {

std::string describe(const FiniteSimplicialSet& x, const std::vector<SimplexRef>& refs) {
  std::string s = "(";
  for (std::size_t i = 0; i < refs.size(); ++i) {
    if (i) s += ", ";
    s += x.ref_name(refs[i]);
  }
  return s + ")";
}

}  // namespace

LiftReport has_horn_lifts(const SimplicialMap& f, int up_to_dim) {
  const auto& x = f.source();
  const auto& y = f.target();
  LiftReport report;
  for (int n = 1; n <= up_to_dim; ++n) {
    const auto xs = x.simplices(n);
    const auto ys = y.simplices(n);
    const auto lower = x.simplices(n - 1);
    for (int k = 0; k <= n; ++k) {
      auto open_faces = [&](const FiniteSimplicialSet& z, const SimplexRef& s) {
        std::vector<SimplexRef> out;
        for (int j = 0; j <= n; ++j) {
          if (j != k) out.push_back(z.face(s, j));
        }
        return out;
      };
      std::set<std::pair<SimplexRef, std::vector<SimplexRef>>> fillers;
      for (const auto& s : xs) fillers.insert({f(s), open_faces(x, s)});
      std::map<std::vector<SimplexRef>, std::vector<SimplexRef>> by_faces;
      for (const auto& s : ys) by_faces[open_faces(y, s)].push_back(s);

      std::vector<int> slots;
      for (int j = 0; j <= n; ++j) {
        if (j != k) slots.push_back(j);
      }
      std::vector<SimplexRef> horn(static_cast<std::size_t>(n + 1));
      bool failed = false;
      std::function<void(std::size_t)> extend = [&](std::size_t depth) {
        if (failed) return;
        if (depth == slots.size()) {
          std::vector<SimplexRef> chosen, pushed;
          for (int j : slots) {
            chosen.push_back(horn[static_cast<std::size_t>(j)]);
            pushed.push_back(f(horn[static_cast<std::size_t>(j)]));
          }
          const auto it = by_faces.find(pushed);
          if (it == by_faces.end()) return;
          for (const auto& target : it->second) {
            ++report.problems;
            if (!fillers.count({target, chosen})) {
              failed = true;
              report.holds = false;
              report.failing_dim = n;
              report.failing_horn = k;
              report.failure = "horn Λ^" + std::to_string(k) + "[" + std::to_string(n) + "] with faces " +
                               describe(x, chosen) + " over " + y.ref_name(target) + " has no filler";
              return;
            }
          }
          return;
        }
        const int j = slots[depth];
        for (const auto& c : lower) {
          bool ok = true;
          for (std::size_t e = 0; e < depth && ok; ++e) {
            const int i = slots[e];
            // i < j: d_i x_j = d_{j-1} x_i
            if (n >= 2 && x.face(c, i) != x.face(horn[static_cast<std::size_t>(i)], j - 1)) ok = false;
          }
          if (!ok) continue;
          horn[static_cast<std::size_t>(j)] = c;
          extend(depth + 1);
          if (failed) return;
        }
      };
      extend(0);
      if (failed) return report;
    }
  }
  return report;
}

LiftReport has_rlp(const SimplicialMap& f, const SimplicialMap& against) {
  const auto& x = f.source();
  const auto& y = f.target();
  const auto& a = against.source();
  const auto& b = against.target();
  LiftReport report;
  enumerate_maps(b, y, [&](const SimplicialMap& v) {
    const auto vi = compose(v, against);
    MapSearch lower;
    lower.allow = [&](int i, const SimplexRef& c) { return f(c) == vi.image(i); };
    enumerate_maps(a, x, [&](const SimplicialMap& u) {
      ++report.problems;
      MapSearch upper;
      upper.fixed.assign(static_cast<std::size_t>(b.size()), std::nullopt);
      for (int i = 0; i < a.size(); ++i) {
        const auto& im = against.image(i);
        if (im.is_nondegenerate()) upper.fixed[static_cast<std::size_t>(im.index)] = u.image(i);
      }
      upper.allow = [&](int i, const SimplexRef& c) { return f(c) == v.image(i); };
      bool found = false;
      enumerate_maps(b, x, [&](const SimplicialMap& h) {
        if (compose(h, against).images() == u.images()) {
          found = true;
          return false;
        }
        return true;
      }, upper);
      if (!found) {
        report.holds = false;
        report.failure = "square with top " + describe(x, u.images()) + " and bottom " + describe(y, v.images()) + " has no lift";
        return false;
      }
      return true;
    }, lower);
    return report.holds;
  });
  return report;
}

LiftReport is_trivial_fibration(const SimplicialMap& f, int up_to_dim) {
  LiftReport total;
  for (int n = 0; n <= up_to_dim; ++n) {
    auto r = has_rlp(f, simplex_inclusion(boundary(n), n));
    total.problems += r.problems;
    if (!r.holds) {
      r.problems = total.problems;
      r.failing_dim = n;
      r.failure = "against the boundary of Δ[" + std::to_string(n) + "]: " + r.failure;
      return r;
    }
  }
  return total;
}

}  // namespace sharp
