#pragma once

#include <string>

#include "sharp/simplicial_set.hpp"

namespace sharp {

struct LiftReport {
  bool holds = true;
  /// Number of lifting problems examined.
  std::uint64_t problems = 0;
  /// The first problem without a solution, described by ids.
  std::string failure;
  int failing_dim = -1;
  int failing_horn = -1;
};

/// Bounded Kan condition: every square Λ^k[n] -> X, Δ[n] -> Y with
/// 1 <= n <= up_to_dim is searched for a diagonal filler.
LiftReport has_horn_lifts(const SimplicialMap& f, int up_to_dim);

/// Right lifting property of f: X -> Y against i: A -> B, by exhaustive
/// search over all squares and all candidate lifts.
LiftReport has_rlp(const SimplicialMap& f, const SimplicialMap& against);

/// RLP against every ∂Δ[n] ⊂ Δ[n] with n <= up_to_dim.
LiftReport is_trivial_fibration(const SimplicialMap& f, int up_to_dim);

}  // namespace sharp
