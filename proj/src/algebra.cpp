#include "cobcat/algebra.hpp"

#include "cobcat/error.hpp"
#include "cobcat/eval.hpp"
#include "cobcat/gadgets.hpp"

namespace cobcat {

std::string TracedAsAlgebra::describe() const {
  return "boxes over " + t_->describe();
}

Mor TracedAsAlgebra::to_mor(const Elem& e) const {
  return Mor{e.payload, inp(e.shape), outp(e.shape)};
}

Elem TracedAsAlgebra::to_elem(const Mor& f, const SignedSet& shape) const {
  return Elem{f.payload, shape};
}

Elem TracedAsAlgebra::unit() const {
  return Elem{t_->identity_mor({}).payload, SignedSet{}};
}

Elem TracedAsAlgebra::act(const Cobordism& phi, const Elem& e) const {
  require(e.shape == phi.dom, Errc::type_mismatch,
          "element shape does not match the dom boundary");
  Mor g = action(*t_, phi, to_mor(e));
  return Elem{g.payload, phi.cod};
}

Elem TracedAsAlgebra::mult(const Elem& a, const Elem& b) const {
  Mor m = t_->tensor_mor(to_mor(a), to_mor(b));
  return Elem{m.payload, concat(a.shape, b.shape)};
}

bool TracedAsAlgebra::equal(const Elem& a, const Elem& b) const {
  return a.shape == b.shape && t_->equal(to_mor(a), to_mor(b));
}

Elem TracedAsAlgebra::sample(Rng& r, const SignedSet& shape) const {
  return Elem{t_->sample(r, inp(shape), outp(shape)).payload, shape};
}

std::string AlgebraAsTraced::describe() const {
  return "words over " + p_->describe();
}

Elem AlgebraAsTraced::to_elem(const Mor& f) const {
  return Elem{f.payload, minus_plus_shape(f.dom, f.cod)};
}

Mor AlgebraAsTraced::to_mor(const Elem& e, Word dom, Word cod) const {
  return Mor{e.payload, std::move(dom), std::move(cod)};
}

Mor AlgebraAsTraced::identity_mor(const Word& w) const {
  return to_mor(p_->act(name_of_identity(w), p_->unit()), w, w);
}

Mor AlgebraAsTraced::compose(const Mor& f, const Mor& g) const {
  require(f.cod == g.dom, Errc::type_mismatch,
          "composition boundary mismatch");
  Elem paired = p_->mult(to_elem(f), to_elem(g));
  Elem out = p_->act(gamma_compose(f.dom, f.cod, g.cod), paired);
  return to_mor(out, f.dom, g.cod);
}

Mor AlgebraAsTraced::tensor_mor(const Mor& f, const Mor& g) const {
  Elem paired = p_->mult(to_elem(f), to_elem(g));
  Elem out = p_->act(gamma_tensor(f.dom, f.cod, g.dom, g.cod), paired);
  return to_mor(out, concat(f.dom, g.dom), concat(f.cod, g.cod));
}

Mor AlgebraAsTraced::trace(int k, const Mor& f) const {
  require(k >= 0 && k <= static_cast<int>(f.dom.size()) &&
              k <= static_cast<int>(f.cod.size()),
          Errc::prefix_mismatch, "feedback prefix longer than a boundary");
  for (int i = 0; i < k; ++i)
    require(f.dom[static_cast<size_t>(i)] == f.cod[static_cast<size_t>(i)],
            Errc::prefix_mismatch, "feedback prefix must agree");
  Word u(f.dom.begin(), f.dom.begin() + k);
  Word w(f.dom.begin() + k, f.dom.end());
  Word v(f.cod.begin() + k, f.cod.end());
  Elem out = p_->act(gamma_trace(u, w, v), to_elem(f));
  return to_mor(out, w, v);
}

Mor AlgebraAsTraced::permutation_mor(const Word& w,
                                     const std::vector<int>& tgt) const {
  Elem out = p_->act(name_of_permutation(w, tgt), p_->unit());
  return to_mor(out, w, permute_word(w, tgt));
}

bool AlgebraAsTraced::equal(const Mor& f, const Mor& g) const {
  return f.dom == g.dom && f.cod == g.cod &&
         p_->equal(to_elem(f), to_elem(g));
}

Mor AlgebraAsTraced::sample(Rng& r, const Word& dom, const Word& cod) const {
  return to_mor(p_->sample(r, minus_plus_shape(dom, cod)), dom, cod);
}

}  // namespace cobcat
