#pragma once

#include <string>
#include <vector>

#include "cobcat/cobordism.hpp"
#include "cobcat/traced.hpp"

namespace cobcat {

/// Cobordisms presented as a word-indexed instance: each word letter is a
/// signed point spelled "a+" or "a-", and payloads are whole cobordisms.
/// The dual of a word under this spelling matches the boundary dual, so
/// the instance carries its own bent-wire structure (cup/cap).
///
/// Boundary pairs here rarely admit any morphism at all, so arbitrary
/// sampling is not available; use the canonical-form law checks instead.
class CobInstance final : public TracedInstance {
 public:
  static SignedPoint to_point(const Label& letter);
  static SignedSet to_sset(const Word& w);
  static Word to_word(const SignedSet& x);

  Mor make_mor(const Cobordism& c) const;
  const Cobordism& cob(const Mor& f) const;

  std::string describe() const override;
  Mor identity_mor(const Word& w) const override;
  Mor compose(const Mor& f, const Mor& g) const override;
  Mor tensor_mor(const Mor& f, const Mor& g) const override;
  Mor trace(int k, const Mor& f) const override;
  Mor permutation_mor(const Word& w,
                      const std::vector<int>& tgt) const override;
  bool equal(const Mor& f, const Mor& g) const override;
  Mor sample(Rng& r, const Word& dom, const Word& cod) const override;
};

}  // namespace cobcat
