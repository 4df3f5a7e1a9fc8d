#pragma once

#include <compare>
#include <vector>

#include "cobcat/cobordism.hpp"

namespace cobcat {

/// One end of a wire: an inner box (0-based index) or the outer boundary,
/// plus a 1-based position on that boundary. Inner ends order before the
/// outer end; this drives canonical wire sorting.
struct WireEnd {
  static constexpr int outer = -1;
  int box = outer;
  int pos = 1;

  bool is_outer() const { return box == outer; }
  bool operator==(const WireEnd&) const = default;
};

bool operator<(const WireEnd& x, const WireEnd& y);

struct Wire {
  WireEnd a, b;  // stored with a < b
  bool operator==(const Wire&) const = default;
};

bool operator<(const Wire& x, const Wire& y);

/// A one-layer wiring diagram: inner boxes wired to each other and to the
/// outer boundary. Inner box points carry the flipped effective sign, outer
/// points their own sign; wires join opposite effective signs with equal
/// labels, exactly as cobordism arcs do.
struct WiringDiagram {
  std::vector<SignedSet> inner;
  SignedSet outer;
  std::vector<Wire> wires;
  Loops loops;

  bool operator==(const WiringDiagram&) const = default;
};

WiringDiagram make_wiring(std::vector<SignedSet> inner, SignedSet outer,
                          std::vector<Wire> wires, Loops loops = {});

/// One box, wires straight through. Substitution unit.
WiringDiagram identity_wiring(const SignedSet& x);

/// Flattening: the cobordism inner[0] ⊗ ... ⊗ inner[n-1] -> outer with the
/// wires as arcs. Bijective on canonical forms for a fixed box list.
Cobordism wd_to_cobordism(const WiringDiagram& w);

/// Splits the dom of a cobordism into consecutive boxes of the given sizes.
/// Inverse of flattening for that box structure.
WiringDiagram boxes_from_cobordism(const Cobordism& c,
                                   const std::vector<int>& box_sizes);

/// Operadic substitution: plugs v into slot (0-based) of w. Requires
/// v.outer to equal the slot boundary (SlotMismatch). Wires crossing the
/// shared boundary are glued; cycles trapped there become loops.
WiringDiagram wd_substitute(const WiringDiagram& w, int slot,
                            const WiringDiagram& v);

}  // namespace cobcat
