#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cobcat/error.hpp"

namespace cobcat {

using ObjId = int;
using MorId = int;
using ElemId = int;

/// A finite category with every piece of structure a dense integer table.
/// Morphisms are interned: arrays indexed by MorId carry boundaries and
/// display names, comp[g][f] = g∘f with -1 for non-composable pairs.
/// Optional blocks add a strict tensor with a symmetry table, and duals
/// with bent pairs η_a: I -> a*⊗a and ε_a: a⊗a* -> I.
struct FiniteCategory {
  std::string name;
  std::vector<std::string> objects;
  std::vector<ObjId> mor_dom, mor_cod;
  std::vector<std::string> mor_name;
  std::vector<std::vector<std::vector<MorId>>> hom;  // hom[c][d]
  std::vector<MorId> identities;                     // one per object
  std::vector<std::vector<MorId>> comp;              // comp[g][f] = g∘f

  bool monoidal = false;
  ObjId unit_obj = -1;
  std::vector<std::vector<ObjId>> tensor_obj;
  std::vector<std::vector<MorId>> tensor_mor;
  std::vector<std::vector<MorId>> sym;  // sym[a][b]: a⊗b -> b⊗a

  bool compact = false;
  std::vector<ObjId> dual_obj;
  std::vector<MorId> eta, eps;

  int n_obj() const { return static_cast<int>(objects.size()); }
  int n_mor() const { return static_cast<int>(mor_dom.size()); }
};

/// Checks all category laws over the full tables; with the optional blocks
/// present also the strict tensor laws, symmetry coherence, and both
/// zig-zag triangles. Throws LawViolation with a named witness equation.
void validate_category(const FiniteCategory& c);

/// A finite two-sided module over a pair of categories: a set of interned
/// elements per object pair, with src acting contravariantly on the right
/// and dst covariantly on the left. The optional block adds a pairing ⊠
/// (total over all element pairs) and a unit element in the (I,I) cell.
struct FiniteProfunctor {
  const FiniteCategory* src = nullptr;
  const FiniteCategory* dst = nullptr;
  std::vector<std::vector<std::vector<ElemId>>> cells;  // cells[c][d]
  std::vector<ObjId> elem_src, elem_dst;
  std::vector<std::string> elem_name;
  std::vector<std::vector<ElemId>> left;   // left[g][m] = g·m, -1 if undef
  std::vector<std::vector<ElemId>> right;  // right[f][m] = m·f, -1 if undef

  bool monoidal_data = false;
  std::vector<std::vector<ElemId>> box;  // box[m1][m2] = m1 ⊠ m2, total
  ElemId unit_elem = -1;                 // lives in cells[I][I]

  int n_elem() const { return static_cast<int>(elem_src.size()); }
};

/// Checks the two-sided action laws and, when present, the pairing laws:
/// unit, associativity, action compatibility and symmetry compatibility.
void validate_profunctor(const FiniteProfunctor& m);

/// An endo module with a unit indexed by the base morphisms but no
/// multiplication; the base must carry duals before a multiplication can
/// be derived.
struct PointedEndo {
  FiniteProfunctor m;        // monoidal_data required
  std::vector<ElemId> unit;  // unit[f] = i(f)
};

void validate_pointed(const PointedEndo& p);

/// An endo module with unit and multiplication; the composition-shaped
/// mult[n2][n1] is defined exactly when the cells chain.
struct ProfMonoid {
  FiniteProfunctor m;
  std::vector<ElemId> unit;
  std::vector<std::vector<ElemId>> mult;
};

void validate_prof_monoid(const ProfMonoid& n);

/// Drops the multiplication. The base data must carry the pairing block.
PointedEndo forget_mult(const ProfMonoid& n);

/// A finite functor to sets from a monoidal base, with a lax pairing:
/// one element list per object, a covariant action table, a total pairing
/// mu into the tensor object's list, and a unit element over I.
struct FiniteCopresheaf {
  const FiniteCategory* base = nullptr;
  std::vector<std::vector<ElemId>> sets;  // sets[a]
  std::vector<ObjId> elem_at;
  std::vector<std::string> elem_name;
  std::vector<std::vector<ElemId>> action;  // action[f][e], -1 if undef
  std::vector<std::vector<ElemId>> mu;      // mu[e1][e2], total
  ElemId unit_elem = -1;                    // lives in sets[I]

  int n_elem() const { return static_cast<int>(elem_at.size()); }
};

void validate_copresheaf(const FiniteCopresheaf& m);

/// The category with the same objects whose homs are the module's cells,
/// composition the multiplication and identities the unit images, plus
/// the identity-on-objects embedding f ↦ i(f). Verifies the module laws
/// first and the resulting category laws after.
struct Collapsed {
  FiniteCategory category;
  std::vector<MorId> embed;  // base morphism -> collapsed morphism
};
Collapsed collapse(const ProfMonoid& n);

/// Closes a unit-only endo module into a monoid using the base duals:
/// n2•n1 := (ε_d⊗id_e) · (n1 ⊠ i(id_{d*}) ⊠ n2) · (id_c⊗η_d).
/// Requires dual data on the base (NotCompact otherwise).
ProfMonoid derive_mult(const PointedEndo& p);

/// The bent-pair bijection between the (a,b) cell and the (I, a*⊗b) cell:
/// forward m ↦ (i(id_{a*}) ⊠ m)·η_a, inverse m' ↦ (ε_a⊗id_b)·(i(id_a) ⊠ m').
ElemId hom_shift_forward(const PointedEndo& p, ElemId m);
ElemId hom_shift_inverse(const PointedEndo& p, ObjId a, ObjId b, ElemId m2);

/// Spreads a set-valued functor into an endo module: the (a,b) cell is the
/// carrier over a*⊗b, actions conjugate through duals, the unit is
/// i(f) := ((id_{c*}⊗f)∘η_c)·I, and the multiplication is then derived.
/// origin_* map each new element back to its cell pair and carrier element.
struct SpreadResult {
  PointedEndo pointed;
  ProfMonoid monoid;
  std::vector<ObjId> origin_a, origin_b;
  std::vector<ElemId> origin_elem;
};
SpreadResult copresheaf_to_monoid(const FiniteCopresheaf& m);

/// Restricts an endo module to its unit-source column: the carrier over a
/// is the (I,a) cell, with the covariant action and the pairing as given.
/// origin_elem maps each new element to the module element it came from.
struct RestrictResult {
  FiniteCopresheaf copresheaf;
  std::vector<ElemId> origin_elem;
};
RestrictResult monoid_to_copresheaf(const PointedEndo& n);

/// f*: Y* -> X*, the composite of η_X⊗id, id⊗f⊗id, id⊗ε_Y. Requires dual
/// data (NotCompact).
MorId dual_morphism(const FiniteCategory& c, MorId f);

// Built-in instances.

/// The cyclic group of order n as a one-morphism-per-object category:
/// objects are group elements, tensor is addition, duals are inverses.
FiniteCategory cyclic_group_category(int n);

/// Finite relations between sets of size 0 and 1: two objects, relations
/// as morphisms, tensor by product, every object self-dual.
FiniteCategory finrel01_category();

/// True when the relation morphism relates anything.
bool finrel01_nonempty(const FiniteCategory& c, MorId f);

/// The hom module of a category over itself: cells are homs, actions are
/// composition, unit the identity map, multiplication composition again.
ProfMonoid hom_monoid(const FiniteCategory& c);

/// A subset of object pairs as an at-most-one-point endo module over a
/// one-morphism-per-object base; carries the pairing block exactly when
/// the subset is closed under the tensor and contains the diagonal.
/// pairs[c*nobj+d] selects the (c,d) cell.
PointedEndo relation_pointed(const FiniteCategory& g,
                             const std::vector<bool>& pairs);

/// All diagonal-containing, tensor-closed pair subsets, as masks indexed
/// like relation_pointed's input.
std::vector<std::vector<bool>> reflexive_multiplicative_relations(
    const FiniteCategory& g);

}  // namespace cobcat
