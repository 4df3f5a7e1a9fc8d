#pragma once

#include <any>
#include <string>
#include <vector>

#include "cobcat/random.hpp"
#include "cobcat/signed_set.hpp"

namespace cobcat {

/// A morphism of a word-indexed instance: an opaque payload owned by the
/// instance that produced it, plus its boundary words.
struct Mor {
  std::any payload;
  Word dom, cod;
};

/// A strict monoidal category whose objects are words over a label
/// alphabet, with a feedback operator closing a leading boundary prefix.
/// Implementations must satisfy the category/monoidal laws and the seven
/// feedback laws; the law checker in axioms.hpp verifies this on samples.
class TracedInstance {
 public:
  virtual ~TracedInstance() = default;

  virtual std::string describe() const = 0;

  virtual Mor identity_mor(const Word& w) const = 0;
  /// Diagrammatic order: f first, then g. Requires f.cod == g.dom.
  virtual Mor compose(const Mor& f, const Mor& g) const = 0;
  virtual Mor tensor_mor(const Mor& f, const Mor& g) const = 0;
  /// Feedback over the first k letters; dom and cod must share that prefix.
  virtual Mor trace(int k, const Mor& f) const = 0;
  /// Wire shuffle w -> w' where w'[tgt[i]] = w[i] (0-based).
  virtual Mor permutation_mor(const Word& w,
                              const std::vector<int>& tgt) const = 0;
  virtual bool equal(const Mor& f, const Mor& g) const = 0;
  /// Draws a morphism with the given boundary words.
  virtual Mor sample(Rng& r, const Word& dom, const Word& cod) const = 0;

  /// Block swap x·y -> y·x, derived from permutation_mor.
  Mor symmetry_mor(const Word& x, const Word& y) const;
};

/// inv[p[i]] = i. Throws if p is not a permutation of 0..n-1.
std::vector<int> inverse_perm(const std::vector<int>& p);

/// Applies a 0-based target-position permutation to a word.
Word permute_word(const Word& w, const std::vector<int>& tgt);

}  // namespace cobcat
