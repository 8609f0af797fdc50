#pragma once

#include "sharp/boolean.hpp"
#include "sharp/diagram.hpp"
#include "sharp/simplicial_set.hpp"

namespace sharp::fixtures {

/// Δ[1]/∂Δ[1]: one vertex "v", one edge "e".
FiniteSimplicialSet circle();
/// One vertex, one edge e, one triangle with faces (e, s0 v, e).
FiniteSimplicialSet projective_plane();
/// Two points.
FiniteSimplicialSet two_points();
/// Two triangles glued along their boundary.
FiniteSimplicialSet sphere();

/// Δ[0] <- S¹ -> Δ[0]; its colimit is a point, its homotopy colimit a 2-sphere.
Diagram suspension_span();
/// Δ[2] <- ∂Δ[2] -> Δ[2], glued along monomorphisms into a 2-sphere.
Diagram sphere_span();
/// The skeleta sk_0 Δ[2] ⊂ sk_1 Δ[2] ⊂ Δ[2] as a chain.
Diagram skeleton_chain();
/// On proper subsets T of {1,2,3}: T ↦ the face of Δ[3] spanned by {0} ∪ T.
Diagram cone_functor();
/// Pointwise projection D × K -> D.
DiagramMap product_projection(const Diagram& d, const FiniteSimplicialSet& k);
/// K at every object, identities on arrows.
Diagram constant_diagram(const FiniteCategory& c, const FiniteSimplicialSet& k);
/// The objectwise pullback square
///   X × K -> X
///     |      |
///     K   -> Δ[0]
PresheafSquare product_square(const Diagram& x, const FiniteSimplicialSet& k);

}  // namespace sharp::fixtures
