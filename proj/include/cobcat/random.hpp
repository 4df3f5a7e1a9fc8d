#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cobcat/cobordism.hpp"
#include "cobcat/wiring.hpp"

namespace cobcat {

/// Seeded generator with hand-rolled bounded sampling, so identical seeds
/// give identical streams regardless of standard library build.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }
  int below(int n);  // uniform on [0, n)
  bool coin() { return (next() & 1) != 0; }

  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<size_t>(below(static_cast<int>(v.size())))];
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i)
      std::swap(v[static_cast<size_t>(i)],
                v[static_cast<size_t>(below(i + 1))]);
  }

  std::vector<int> permutation(int n);

 private:
  std::mt19937_64 gen_;
};

Word random_word(Rng& r, const std::vector<Label>& labels, int max_len);
SignedSet random_signed_set(Rng& r, const std::vector<Label>& labels,
                            int max_len);

/// Uniform-ish valid cobordism with at most max_points boundary points in
/// total, built from random pass-through, turn-back and loop data followed
/// by random boundary shuffles.
Cobordism random_cobordism(Rng& r, const std::vector<Label>& labels,
                           int max_points, int max_loops = 2);

/// Random cobordism with the given dom, for building composable chains.
Cobordism random_cobordism_from(Rng& r, const SignedSet& dom,
                                const std::vector<Label>& labels,
                                int max_extra_pairs = 2, int max_loops = 2);

/// Random perfect matching between the two given boundaries. The effective
/// sign counts must balance per label; callers obtain such pairs from
/// existing cobordisms.
Cobordism random_cobordism_between(Rng& r, const SignedSet& dom,
                                   const SignedSet& cod, int max_loops = 2);

WiringDiagram random_wiring(Rng& r, const std::vector<Label>& labels,
                            int max_boxes, int max_points);

}  // namespace cobcat
