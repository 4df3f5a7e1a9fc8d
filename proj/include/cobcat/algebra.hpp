#pragma once

#include <any>
#include <string>

#include "cobcat/cobordism.hpp"
#include "cobcat/traced.hpp"

namespace cobcat {

/// An element of a box carrier: opaque payload plus the box boundary.
struct Elem {
  std::any payload;
  SignedSet shape;
};

/// Box-indexed carriers with a unit element, a juxtaposition pairing, and
/// an action of cobordisms — the functional presentation equivalent to a
/// word-indexed instance.
class Algebra {
 public:
  virtual ~Algebra() = default;
  virtual std::string describe() const = 0;
  /// The distinguished element of the empty box.
  virtual Elem unit() const = 0;
  /// Transports a filling of phi.dom to a filling of phi.cod.
  virtual Elem act(const Cobordism& phi, const Elem& e) const = 0;
  /// Pairing: fillings of X and Y give a filling of X ⊗ Y.
  virtual Elem mult(const Elem& a, const Elem& b) const = 0;
  virtual bool equal(const Elem& a, const Elem& b) const = 0;
  virtual Elem sample(Rng& r, const SignedSet& shape) const = 0;
};

/// A word-indexed instance seen through its boxes: the carrier of X is
/// hom(inp X, outp X), the action is the split-conjugate-close pipeline.
class TracedAsAlgebra final : public Algebra {
 public:
  explicit TracedAsAlgebra(const TracedInstance& t) : t_(&t) {}

  std::string describe() const override;
  Elem unit() const override;
  Elem act(const Cobordism& phi, const Elem& e) const override;
  Elem mult(const Elem& a, const Elem& b) const override;
  bool equal(const Elem& a, const Elem& b) const override;
  Elem sample(Rng& r, const SignedSet& shape) const override;

  Mor to_mor(const Elem& e) const;
  Elem to_elem(const Mor& f, const SignedSet& shape) const;

 private:
  const TracedInstance* t_;
};

/// Carriers seen as a word-indexed instance: hom(w,v) is the carrier of
/// the box listing w with minus signs then v with plus signs, and every
/// structural operation is the action of a plumbing cobordism.
class AlgebraAsTraced final : public TracedInstance {
 public:
  explicit AlgebraAsTraced(const Algebra& p) : p_(&p) {}

  std::string describe() const override;
  Mor identity_mor(const Word& w) const override;
  Mor compose(const Mor& f, const Mor& g) const override;
  Mor tensor_mor(const Mor& f, const Mor& g) const override;
  Mor trace(int k, const Mor& f) const override;
  Mor permutation_mor(const Word& w,
                      const std::vector<int>& tgt) const override;
  bool equal(const Mor& f, const Mor& g) const override;
  Mor sample(Rng& r, const Word& dom, const Word& cod) const override;

 private:
  Elem to_elem(const Mor& f) const;
  Mor to_mor(const Elem& e, Word dom, Word cod) const;
  const Algebra* p_;
};

}  // namespace cobcat
