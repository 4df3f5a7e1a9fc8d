#pragma once

#include <map>
#include <vector>

#include "cobcat/cobordism.hpp"
#include "cobcat/signed_set.hpp"

namespace cobcat {

/// A target letter of a relabeling, optionally marked with the involution.
struct KLetter {
  Label label;
  bool involution = false;

  bool operator==(const KLetter&) const = default;
  auto operator<=>(const KLetter&) const = default;
};

using KWord = std::vector<KLetter>;

/// Finite label universe with a fixed order of distinct labels.
struct LabelSet {
  std::vector<Label> labels;

  bool contains(const Label& l) const;
  bool operator==(const LabelSet&) const = default;
};

LabelSet make_label_set(std::vector<Label> labels);

/// A map into words-with-involution over the target labels; one word per
/// source label. This is the relabeling data a cobordism is pushed along.
struct KleisliMap {
  LabelSet source, target;
  std::map<Label, KWord> assignment;

  const KWord& at(const Label& l) const;
};

/// Validates totality on source and membership of targets (UnknownLabel).
KleisliMap make_kleisli(LabelSet source, LabelSet target,
                        std::map<Label, KWord> assignment);

KleisliMap kleisli_identity(LabelSet s);

/// Anti-homomorphic involution on a word: reverse and flip every bit.
KWord kword_involution(const KWord& w);

/// Composite map: expand every letter of f's words through g, splicing the
/// involuted expansion where the letter carries the involution mark.
KleisliMap kleisli_compose(const KleisliMap& f, const KleisliMap& g);

/// A point (a,s) expands to the word assigned to a, signs multiplied by s
/// and by each involution bit; minus points splice their block reversed so
/// that expansion commutes with taking duals.
SignedSet relabel(const SignedSet& x, const KleisliMap& k);

/// Functorial expansion: every arc splits letterwise into parallel strands,
/// every loop into one loop per letter (involution ignored on loops).
Cobordism relabel(const Cobordism& c, const KleisliMap& k);

}  // namespace cobcat
