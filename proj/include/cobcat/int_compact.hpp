#pragma once

#include <vector>

#include "cobcat/cobordism.hpp"
#include "cobcat/error.hpp"
#include "cobcat/matrix_instance.hpp"
#include "cobcat/traced.hpp"

namespace cobcat {

/// An object of the doubled category over a word-indexed instance: a pair
/// of words, one flowing forward (neg) and one flowing backward (pos).
struct IntObject {
  Word neg, pos;
  bool operator==(const IntObject&) const = default;
};

/// Componentwise swap; involutive.
IntObject int_dual(const IntObject& a);
/// Componentwise concatenation.
IntObject int_tensor_obj(const IntObject& a, const IntObject& b);

/// A morphism (X⁻,X⁺) -> (Y⁻,Y⁺) of the doubled category: bending the
/// backward components around turns it into the single instance morphism
/// X⁻·Y⁺ -> X⁺·Y⁻ stored as the payload.
struct IntMorphism {
  IntObject source, target;
  Mor payload;
};

/// Validates the payload boundaries against the hom formula.
IntMorphism make_int(const TracedInstance& t, IntObject source,
                     IntObject target, Mor payload);

/// Identity: the block swap of the two components.
IntMorphism int_identity(const TracedInstance& t, const IntObject& a);

/// Composition: wire the two payload boxes into one diagram — forward
/// boundaries straight through, middle components fed back between the
/// boxes — flatten it, and push the juxtaposed payloads through the
/// flattened diagram's action.
IntMorphism int_compose(const TracedInstance& t, const IntMorphism& f,
                        const IntMorphism& g);

/// Independent composition oracle: conjugate the juxtaposed payloads by
/// explicit block shuffles and close the middle pair with the instance
/// feedback. Must agree with int_compose everywhere.
IntMorphism int_compose_formula(const TracedInstance& t, const IntMorphism& f,
                                const IntMorphism& g);

/// Tensor: componentwise, with block shuffles interleaving the payloads.
IntMorphism int_tensor(const TracedInstance& t, const IntMorphism& f,
                       const IntMorphism& g);

/// The crossing a⊗b -> b⊗a: full reversal of the four boundary blocks.
IntMorphism int_symmetry(const TracedInstance& t, const IntObject& a,
                         const IntObject& b);

/// Bent-up pair I -> a*⊗a and bent-down pair a⊗a* -> I; both payloads are
/// the block swap of a's components.
IntMorphism int_eta(const TracedInstance& t, const IntObject& a);
IntMorphism int_eps(const TracedInstance& t, const IntObject& a);

bool int_equal(const TracedInstance& t, const IntMorphism& f,
               const IntMorphism& g);

/// Embeds an instance morphism w -> v as (w,ε) -> (v,ε); the hom sets
/// agree literally, so the payload is f itself. Functorial.
IntMorphism unit_embed(const TracedInstance& t, const Mor& f);

/// Block-rearranging morphism: the source word is the blocks concatenated
/// in the given order; order[j] names the source block landing at target
/// slot j.
Mor block_perm_mor(const TracedInstance& t, const std::vector<Word>& blocks,
                   const std::vector<int>& order);

/// The feedback every dual-pair structure induces: bend up a new copy of
/// u, run f across it, cross the pair back, and close it. The ops bundle
/// supplies objects, duals, bent pairs and the monoidal structure.
template <typename Ops>
typename Ops::M compact_trace(const Ops& o, const typename Ops::Obj& u,
                              const typename Ops::Obj& x,
                              const typename Ops::Obj& y,
                              const typename Ops::M& f) {
  require(o.obj_eq(o.dom(f), o.tensor_obj(u, x)) &&
              o.obj_eq(o.cod(f), o.tensor_obj(u, y)),
          Errc::type_mismatch,
          "boundaries do not split as u-then-x and u-then-y");
  auto ud = o.dual(u);
  auto s1 = o.tensor(o.eta(u), o.identity(x));
  auto s2 = o.tensor(o.identity(ud), f);
  auto s3 = o.tensor(o.symmetry(ud, u), o.identity(y));
  auto s4 = o.tensor(o.eps(u), o.identity(y));
  return o.compose(o.compose(o.compose(s1, s2), s3), s4);
}

/// Cobordisms with cup/cap as the bent pairs.
struct CobOps {
  using Obj = SignedSet;
  using M = Cobordism;
  Obj dual(const Obj& x) const { return cobcat::dual(x); }
  Obj tensor_obj(const Obj& x, const Obj& y) const { return concat(x, y); }
  bool obj_eq(const Obj& x, const Obj& y) const { return x == y; }
  Obj dom(const M& f) const { return f.dom; }
  Obj cod(const M& f) const { return f.cod; }
  M identity(const Obj& x) const { return cobcat::identity(x); }
  M compose(const M& f, const M& g) const { return cobcat::compose(f, g); }
  M tensor(const M& f, const M& g) const { return cobcat::tensor(f, g); }
  M eta(const Obj& x) const { return cup(x); }
  M eps(const Obj& x) const { return cap(x); }
  M symmetry(const Obj& x, const Obj& y) const {
    return cobcat::symmetry(x, y);
  }
};

/// A matrix instance with its bent-wire vectors as the bent pairs.
template <typename S>
struct MatrixOps {
  const MatrixInstance<S>* t;
  using Obj = Word;
  using M = Mor;
  Obj dual(const Obj& x) const { return t->dual_word(x); }
  Obj tensor_obj(const Obj& x, const Obj& y) const { return concat(x, y); }
  bool obj_eq(const Obj& x, const Obj& y) const { return x == y; }
  Obj dom(const M& f) const { return f.dom; }
  Obj cod(const M& f) const { return f.cod; }
  M identity(const Obj& x) const { return t->identity_mor(x); }
  M compose(const M& f, const M& g) const { return t->compose(f, g); }
  M tensor(const M& f, const M& g) const { return t->tensor_mor(f, g); }
  M eta(const Obj& x) const { return t->eta(x); }
  M eps(const Obj& x) const { return t->eps(x); }
  M symmetry(const Obj& x, const Obj& y) const {
    return t->symmetry_mor(x, y);
  }
};

/// The doubled category of any instance, with its built-in duality.
struct IntOps {
  const TracedInstance* t;
  using Obj = IntObject;
  using M = IntMorphism;
  Obj dual(const Obj& a) const { return int_dual(a); }
  Obj tensor_obj(const Obj& a, const Obj& b) const {
    return int_tensor_obj(a, b);
  }
  bool obj_eq(const Obj& a, const Obj& b) const { return a == b; }
  Obj dom(const M& f) const { return f.source; }
  Obj cod(const M& f) const { return f.target; }
  M identity(const Obj& a) const { return int_identity(*t, a); }
  M compose(const M& f, const M& g) const { return int_compose(*t, f, g); }
  M tensor(const M& f, const M& g) const { return int_tensor(*t, f, g); }
  M eta(const Obj& a) const { return int_eta(*t, a); }
  M eps(const Obj& a) const { return int_eps(*t, a); }
  M symmetry(const Obj& a, const Obj& b) const {
    return int_symmetry(*t, a, b);
  }
};

}  // namespace cobcat
