#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sharp/constructions.hpp"
#include "sharp/diagram.hpp"
#include "sharp/harness.hpp"
#include "sharp/homotopy.hpp"
#include "sharp/lifting.hpp"
#include "sharp/sharp.hpp"

/// Sheaves of finite simplicial sets on finite atomic boolean algebras. An
/// element is the bitmask of the atoms below it.
namespace sharp {

using Element = unsigned;

class BooleanAlgebra {
 public:
  BooleanAlgebra() = default;
  /// At most kMaxAtoms distinct atom names.
  explicit BooleanAlgebra(std::vector<std::string> atoms);
  static BooleanAlgebra with_atoms(int n);
  static constexpr int kMaxAtoms = 12;

  int atom_count() const { return static_cast<int>(atoms_.size()); }
  const std::vector<std::string>& atoms() const { return atoms_; }
  int size() const { return 1 << atom_count(); }
  Element top() const { return (1u << atom_count()) - 1u; }
  Element atom(int i) const { return 1u << i; }
  Element meet(Element a, Element b) const { return a & b; }
  Element join(Element a, Element b) const { return a | b; }
  Element complement(Element b) const { return top() & ~b; }
  bool leq(Element a, Element b) const { return (a & ~b) == 0; }
  bool contains(Element b) const { return b <= top(); }
  std::vector<int> atoms_below(Element b) const;
  /// "0" or the atoms below b joined by '+'.
  std::string name(Element b) const;
  /// Inverse of name(), also accepting "1"; throws on unknown atoms.
  Element parse(const std::string& s) const;

  friend bool operator==(const BooleanAlgebra&, const BooleanAlgebra&) = default;

 private:
  std::vector<std::string> atoms_;
};

/// Exhaustive check of the lattice, distributive and complement laws.
std::vector<std::string> boolean_law_violations(const BooleanAlgebra& b);

/// Pairwise disjoint nonzero parts joining to `element`; 0 has the empty one.
struct Decomposition {
  Element element = 0;
  std::vector<Element> parts;
};
bool is_decomposition(const BooleanAlgebra& b, const Decomposition& d);
Decomposition atom_decomposition(const BooleanAlgebra& b, Element e);
/// Every decomposition of e, one per partition of its atoms.
std::vector<Decomposition> decompositions(const BooleanAlgebra& b, Element e);
std::string to_string(const BooleanAlgebra& b, const Decomposition& d);

/// A contravariant functor on the algebra. Restrictions are stored along
/// covering pairs c = b - atom; longer ones are composites.
class BooleanPresheaf {
 public:
  using Covers = std::map<std::pair<Element, Element>, SimplicialMap>;

  BooleanPresheaf() = default;
  /// Throws InvariantError on a missing or misplaced restriction or a face of
  /// the cube that does not commute.
  BooleanPresheaf(BooleanAlgebra algebra, std::vector<FiniteSimplicialSet> values, Covers covers);
  static BooleanPresheaf unchecked(BooleanAlgebra algebra, std::vector<FiniteSimplicialSet> values, Covers covers);

  const BooleanAlgebra& algebra() const { return algebra_; }
  const FiniteSimplicialSet& at(Element b) const { return values_.at(b); }
  const std::vector<FiniteSimplicialSet>& values() const { return values_; }
  const Covers& covers() const { return covers_; }
  /// X(b) -> X(c) for c <= b.
  SimplicialMap restriction(Element b, Element c) const;

 private:
  BooleanAlgebra algebra_;
  std::vector<FiniteSimplicialSet> values_;
  Covers covers_;
};

std::vector<std::string> presheaf_violations(const BooleanAlgebra& algebra, const std::vector<FiniteSimplicialSet>& values,
                                             const BooleanPresheaf::Covers& covers);

/// Builds the covering restrictions from a rule giving X(b) -> X(c).
BooleanPresheaf presheaf_from(const BooleanAlgebra& algebra, std::vector<FiniteSimplicialSet> values,
                              const std::function<SimplicialMap(Element, Element)>& restrict);
/// K everywhere, identity restrictions.
BooleanPresheaf constant_presheaf(const BooleanAlgebra& algebra, const FiniteSimplicialSet& k);
/// X(b) = ∏_{atoms a <= b} K_a with the projections as restrictions.
BooleanPresheaf atom_family(const BooleanAlgebra& algebra, const std::vector<FiniteSimplicialSet>& per_atom);
/// Δ[0] below b, empty elsewhere.
BooleanPresheaf representable(const BooleanAlgebra& algebra, Element b);
/// The sheaf K ⊗ yb: ∏_{atoms a <= c} K at c <= b, empty elsewhere.
BooleanPresheaf tensor_representable(const BooleanAlgebra& algebra, const FiniteSimplicialSet& k, Element b);
/// Objectwise product.
BooleanPresheaf product(const BooleanPresheaf& x, const BooleanPresheaf& y);

struct BooleanPresheafMap {
  BooleanPresheaf source;
  BooleanPresheaf target;
  std::vector<SimplicialMap> components;  // indexed by element
  const SimplicialMap& at(Element b) const { return components.at(b); }
};
std::vector<std::string> naturality_violations(const BooleanPresheafMap& f);
BooleanPresheafMap identity_map(const BooleanPresheaf& x);
/// The first projection x × y -> x.
BooleanPresheafMap projection(const BooleanPresheaf& x, const BooleanPresheaf& y);
bool is_iso(const BooleanPresheafMap& f);

struct SheafCheck {
  bool holds = true;
  std::optional<Decomposition> counterexample;
  std::string detail;
};
/// X(b) -> ∏ X(b_i) is an isomorphism for the atom decomposition of every b,
/// or for every decomposition when `all_decompositions` is set. Elements are
/// tried from the top down.
SheafCheck is_sheaf(const BooleanPresheaf& x, bool all_decompositions = false);

struct Sheafification {
  BooleanPresheaf sheaf;    // LX
  BooleanPresheafMap unit;  // η : X -> LX
  std::vector<FiniteProduct> products;  // indexed by element
};
/// (LX)(b) = ∏_{atoms a <= b} X(a); the colimit over decompositions is
/// reached at the atom decomposition.
Sheafification sheafify(const BooleanPresheaf& x);
/// L f, atomwise.
BooleanPresheafMap sheafify(const BooleanPresheafMap& f, const Sheafification& from, const Sheafification& to);

/// Atomwise certificates with the first undecided or refuted atom.
struct LocalCertificate {
  Verdict verdict = Verdict::Certified;
  std::optional<int> atom;
  std::vector<WeakEquivalenceCertificate> atoms;
  std::string detail;
};
LocalCertificate local_weak_equivalence(const BooleanPresheafMap& f, const WeOptions& options = {});

struct LocalLiftReport {
  bool holds = true;
  std::optional<int> atom;
  std::vector<LiftReport> atoms;
};
/// Kan fibration at every atom, horns up to `bound`.
LocalLiftReport local_fibration(const BooleanPresheafMap& f, int bound);
/// Trivial fibration at every atom, boundaries up to `bound`.
LocalLiftReport local_trivial_fibration(const BooleanPresheafMap& f, int bound);
/// f against i ⊗ yb. A square from i ⊗ yb is determined by its component at
/// b, so this is the lifting problem of f(b) against i.
LiftReport rlp_against_representable(const BooleanPresheafMap& f, const SimplicialMap& i, Element b);

struct AtomwiseSharpness {
  Sharpness verdict = Sharpness::Sharp;
  std::optional<int> failing;  // atom or object
  std::vector<SharpnessReport> reports;
};
AtomwiseSharpness is_sharp_atomwise(const BooleanPresheafMap& f, const SharpOptions& options = {});

/// A presheaf on a finite category C is a diagram on C^op. Restriction to the
/// discrete subcategory of objects is a sheaf on the subsets of ob C:
/// X(T) = ∏_{i in T} X(i).
BooleanPresheaf inverse_image_restriction(const Diagram& x);
BooleanPresheafMap inverse_image_restriction(const DiagramMap& f, const BooleanPresheaf& source, const BooleanPresheaf& target);
BooleanPresheafMap inverse_image_restriction(const DiagramMap& f);

/// A commuting square of presheaves on C:
///   A -top-> B
///   |left    |right
///   C -bot-> D
struct PresheafSquare {
  DiagramMap top, left, right, bottom;
};
std::vector<std::string> square_violations(const PresheafSquare& s);
Square at_object(const PresheafSquare& s, int object);

/// Objectwise homotopy cartesian squares of presheaves restrict to a square
/// of sheaves that is homotopy cartesian at every element.
HarnessReport verify_inverse_image_preserves_hocartesian(const PresheafSquare& s, const CartesianOptions& options = {});

/// Objectwise sharpness of a map of presheaves on C.
AtomwiseSharpness sharp_over_presheaf_site(const DiagramMap& f, const SharpOptions& options = {});

}  // namespace sharp
