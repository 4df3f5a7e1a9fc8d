#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "cobcat/signed_set.hpp"

namespace cobcat {

enum class Side : unsigned char { dom = 0, cod = 1 };

/// A boundary endpoint: which side of the cobordism and the 1-based position
/// within that side. Default ordering is dom positions before cod positions,
/// each side in increasing position; this is the canonical endpoint order.
struct Endpoint {
  Side side = Side::dom;
  int pos = 1;

  bool operator==(const Endpoint&) const = default;
  auto operator<=>(const Endpoint&) const = default;
};

inline Endpoint dom_pt(int pos1) { return {Side::dom, pos1}; }
inline Endpoint cod_pt(int pos1) { return {Side::cod, pos1}; }

/// An unordered pair of endpoints, stored with a <= b.
struct Arc {
  Endpoint a, b;

  bool operator==(const Arc&) const = default;
  auto operator<=>(const Arc&) const = default;
};

Arc make_arc(Endpoint x, Endpoint y);

using Loops = std::map<Label, std::int64_t>;

/// Effective orientation of a point seen from inside the cobordism: dom side
/// points contribute with flipped sign, cod side points with their own sign.
/// Every arc joins one effective-plus endpoint to one effective-minus
/// endpoint with equal labels.
inline Sign eff_sign(Side side, Sign s) {
  return side == Side::dom ? flip(s) : s;
}

/// A labeled oriented cobordism between signed sets, in canonical form:
/// arcs are a perfect matching on the boundary points, stored sorted; loops
/// are per-label counts of closed components, positive entries only.
/// Structural equality coincides with equality of diffeomorphism classes.
struct Cobordism {
  SignedSet dom, cod;
  std::vector<Arc> arcs;
  Loops loops;

  const SignedPoint& at(Endpoint e) const;

  bool operator==(const Cobordism&) const = default;
};

/// Validates and canonicalizes. Throws NotPerfectMatching, OrientationClash,
/// LabelMismatch or IndexOutOfRange on bad input.
Cobordism make_cobordism(SignedSet dom, SignedSet cod, std::vector<Arc> arcs,
                         Loops loops = {});

Cobordism identity(const SignedSet& x);

/// X ⊗ Y -> Y ⊗ X, wires crossing over.
Cobordism symmetry(const SignedSet& x, const SignedSet& y);

/// Unit of the duality: ∅ -> X* ⊗ X with nested arcs pairing position k
/// with position 2n+1-k on the cod side.
Cobordism cup(const SignedSet& x);

/// Counit of the duality: X ⊗ X* -> ∅, nested arcs on the dom side.
Cobordism cap(const SignedSet& x);

/// Gluing along a shared boundary. First argument applies first.
/// Throws BoundaryMismatch unless cod of f equals dom of g.
Cobordism compose(const Cobordism& f, const Cobordism& g);

/// Side by side juxtaposition, boundary words concatenated.
Cobordism tensor(const Cobordism& f, const Cobordism& g);

/// Glues dom position i to cod position i for i <= k. Requires the first k
/// points of dom and cod to agree as signed words (PrefixMismatch).
Cobordism trace_cob(const Cobordism& f, int k);

/// Wire-only cobordism X -> X', where X' places point i of X at position
/// tgt_pos[i] (0-based within tgt_pos, positions 0-based too).
Cobordism permutation(const SignedSet& x, const std::vector<int>& tgt_pos);

/// Reverses a wire-only cobordism (no loops, every arc dom-to-cod).
Cobordism inverse_permutation(const Cobordism& p);

std::string to_string(const Cobordism& c);

}  // namespace cobcat
