// Writes the fixture corpus: sharp_corpus <directory>
#include <filesystem>
#include <iostream>

#include "sharp/boolean.hpp"
#include "sharp/constructions.hpp"
#include "sharp/fixtures.hpp"
#include "sharp/io.hpp"
#include "sharp/sharp.hpp"

using namespace sharp;
namespace fs = std::filesystem;

namespace {

SimplicialMap edge_of(const FiniteSimplicialSet& x) { return characteristic_map(x, x.nondegenerate(x.of_dim(1).front())); }

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: sharp_corpus <directory>\n";
    return 3;
  }
  const fs::path dir = argv[1];
  fs::create_directories(dir);
  auto put = [&](const std::string& name, const io::Json& j) { io::write_file(dir / name, j); };

  const auto d0 = point();
  const auto d1 = standard_simplex(1);
  const auto d2 = standard_simplex(2);
  const auto s1 = fixtures::circle();
  const auto two = fixtures::two_points();
  put("delta0.sset", io::to_json(d0));
  put("delta1.sset", io::to_json(d1));
  put("delta2.sset", io::to_json(d2));
  put("boundary_delta2.sset", io::to_json(boundary(2)));
  put("horn_2_1.sset", io::to_json(horn(2, 1)));
  put("circle.sset", io::to_json(s1));
  put("two_points.sset", io::to_json(two));
  put("sphere.sset", io::to_json(fixtures::sphere()));
  put("projective_plane.sset", io::to_json(fixtures::projective_plane()));
  put("square.sset", io::to_json(product(d1, d1).object()));

  const auto vertex = vertex_map(d1, d1.index_of("[0]"));
  put("vertex_inclusion.smap", io::to_json(vertex));
  put("circle_projection.smap", io::to_json(product(s1, d1).second()));
  put("two_points_projection.smap", io::to_json(product(two, d2).second()));
  put("circle_to_point.smap", io::to_json(to_point(s1)));
  put("simplex_to_point.smap", io::to_json(to_point(d2)));
  put("boundary_inclusion.smap", io::to_json(simplex_inclusion(boundary(2), 2)));
  put("horn_inclusion.smap", io::to_json(simplex_inclusion(horn(2, 1), 2)));
  put("projective_plane_to_point.smap", io::to_json(to_point(fixtures::projective_plane())));
  put("sphere_edge.smap", io::to_json(edge_of(colimit(fixtures::sphere_span()).object())));

  put("circle_pullback.square", io::to_json(pullback_square(product(s1, d1).second(), vertex)));
  const FiniteSimplicialSet empty;
  const auto end0 = vertex;
  const auto end1 = vertex_map(d1, d1.index_of("[1]"));
  put("empty_path.square",
      io::to_json(Square{SimplicialMap(empty, d0, {}), SimplicialMap(empty, d0, {}), end0, end1}));

  put("suspension_span.diag", io::to_json(fixtures::suspension_span()));
  put("sphere_span.diag", io::to_json(fixtures::sphere_span()));
  put("skeleton_chain.diag", io::to_json(fixtures::skeleton_chain()));
  put("cone_functor.diag", io::to_json(fixtures::cone_functor()));
  put("circle_arrow.diag", io::to_json(chain_diagram({to_point(s1)})));

  put("sphere_span_projection.dmap", io::to_json(fixtures::product_projection(fixtures::sphere_span(), d1)));
  put("skeleton_chain_projection.dmap", io::to_json(fixtures::product_projection(fixtures::skeleton_chain(), two)));
  put("cone_functor_projection.dmap", io::to_json(fixtures::product_projection(fixtures::cone_functor(), two)));
  put("suspension_identity.dmap", io::to_json(identity_map(fixtures::suspension_span())));

  put("arrow_product.square", io::to_json(fixtures::product_square(chain_diagram({to_point(d1)}), two)));
  put("span_product.square", io::to_json(fixtures::product_square(fixtures::sphere_span(), two)));

  const auto three = BooleanAlgebra({"a", "b", "c"});
  put("atom_family.bpsh", io::to_json(atom_family(three, {s1, d1, two})));
  put("constant_delta1.bpsh", io::to_json(constant_presheaf(BooleanAlgebra({"a", "b"}), d1)));
  put("representable.bpsh", io::to_json(representable(three, three.parse("a+c"))));
  const auto pair = BooleanAlgebra({"a", "b"});
  const std::vector<FiniteSimplicialSet> values{d0, s1, d1, d0};
  put("two_atoms.bpsh", io::to_json(presheaf_from(pair, values, [&](Element b, Element c) {
        if (b != 3) return to_point(values[b]);
        return vertex_map(values[c], values[c].of_dim(0).front());
      })));
  return 0;
}
