#include "cobcat/cob_instance.hpp"

#include "cobcat/error.hpp"

namespace cobcat {

SignedPoint CobInstance::to_point(const Label& letter) {
  bool ok = letter.size() >= 2 &&
            (letter.back() == '+' || letter.back() == '-');
  require(ok, Errc::unknown_label,
          "letter lacks a sign suffix: '" + letter + "'");
  return {letter.substr(0, letter.size() - 1),
          letter.back() == '+' ? Sign::plus : Sign::minus};
}

SignedSet CobInstance::to_sset(const Word& w) {
  SignedSet x;
  x.points.reserve(w.size());
  for (const Label& l : w) x.points.push_back(to_point(l));
  return x;
}

Word CobInstance::to_word(const SignedSet& x) {
  Word w;
  w.reserve(x.points.size());
  for (const SignedPoint& p : x.points)
    w.push_back(p.label + sign_char(p.sign));
  return w;
}

Mor CobInstance::make_mor(const Cobordism& c) const {
  return Mor{std::any(c), to_word(c.dom), to_word(c.cod)};
}

const Cobordism& CobInstance::cob(const Mor& f) const {
  const Cobordism* c = std::any_cast<Cobordism>(&f.payload);
  require(c != nullptr, Errc::type_mismatch,
          "payload is not a cobordism of this instance");
  return *c;
}

std::string CobInstance::describe() const {
  return "cobordisms over signed-letter words";
}

Mor CobInstance::identity_mor(const Word& w) const {
  return make_mor(identity(to_sset(w)));
}

Mor CobInstance::compose(const Mor& f, const Mor& g) const {
  return make_mor(cobcat::compose(cob(f), cob(g)));
}

Mor CobInstance::tensor_mor(const Mor& f, const Mor& g) const {
  return make_mor(tensor(cob(f), cob(g)));
}

Mor CobInstance::trace(int k, const Mor& f) const {
  return make_mor(trace_cob(cob(f), k));
}

Mor CobInstance::permutation_mor(const Word& w,
                                 const std::vector<int>& tgt) const {
  return make_mor(permutation(to_sset(w), tgt));
}

bool CobInstance::equal(const Mor& f, const Mor& g) const {
  return cob(f) == cob(g);
}

Mor CobInstance::sample(Rng&, const Word&, const Word&) const {
  fail(Errc::internal,
       "the cobordism instance cannot sample arbitrary boundary pairs");
}

}  // namespace cobcat
