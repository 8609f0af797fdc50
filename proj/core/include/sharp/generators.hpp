#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "sharp/boolean.hpp"
#include "sharp/category.hpp"
#include "sharp/diagram.hpp"

/// Seeded random instances for the property checks. Everything is driven by
/// one std::mt19937_64 so that a seed reproduces an instance exactly.
namespace sharp::gen {

using Rng = std::mt19937_64;

/// A random ordered simplicial complex on at most `max_vertices` vertices,
/// occasionally a non-regular fixture (circle, RP^2) or a disjoint union.
FiniteSimplicialSet complex(Rng& rng, int max_dim = 2, int max_vertices = 4);
/// Uniform among the first `cap` maps found; nullopt when there are none.
std::optional<SimplicialMap> map(Rng& rng, const FiniteSimplicialSet& a, const FiniteSimplicialSet& x,
                                 std::uint64_t cap = 4096);

/// One of the small shapes: discrete, chains, span, cospan, parallel pair,
/// commuting square, arrow, full subset poset of {1,2}. At most `max_objects`.
FiniteCategory shape(Rng& rng, int max_objects = 4);
/// A functor on a shape without non-identity loops.
Diagram diagram(Rng& rng, const FiniteCategory& shape, int max_dim = 2);

struct DistributiveInstance {
  Diagram diagram;
  Colimit colimit;
  SimplicialMap a;  // A -> colim D
};
DistributiveInstance distributive_instance(Rng& rng, int max_objects = 4, int max_dim = 2);

/// A natural map into `target`: a projection off a constant factor, a
/// pullback along a map into the colimit, a fold map, or an identity.
DiagramMap diagram_map(Rng& rng, const Diagram& target, int max_dim = 2);

/// A presheaf on the algebra of 1..max_atoms atoms: an atom family, a
/// constant presheaf, nested full subcomplexes, constant restrictions to a
/// base vertex, or the product of two of these.
BooleanPresheaf boolean_presheaf(Rng& rng, int max_atoms = 4, int max_dim = 1);

/// A valid instance of the pullback/pushout lemma on sets of size <= max_size,
/// drawn by rejection sampling.
PeculiarInstance peculiar(Rng& rng, int max_size = 5);

}  // namespace sharp::gen
