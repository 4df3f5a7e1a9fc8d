#pragma once

#include "cobcat/cobordism.hpp"

namespace cobcat {

/// Arc classification of a cobordism X -> Y by endpoint sides and signs:
///   A: minus dom point to minus cod point (passes through, input side)
///   B: plus dom point to plus cod point (passes through, output side)
///   C: two dom points (turn-back on the input boundary)
///   D: two cod points (turn-back on the output boundary)
///   E: closed loops.
/// Words A..D list arc labels; A, B and C are ordered by the earliest dom
/// endpoint of each arc, D by the minus cod endpoint. perm_dom rearranges X
/// into the layout [C- A- C+ B+] and perm_cod takes [A- D- B+ D+] back to Y,
/// where the i-th minus and i-th plus occurrence of C (and of D) belong to
/// the same arc.
struct StandardDecomposition {
  Word A, B, C, D;
  Loops E;
  Cobordism perm_dom;  // X -> layout_dom
  Cobordism perm_cod;  // layout_cod -> Y
};

StandardDecomposition decompose(const Cobordism& c);

SignedSet layout_dom(const StandardDecomposition& d);
SignedSet layout_cod(const StandardDecomposition& d);

/// The cobordism layout_dom -> layout_cod fixed by the words alone.
Cobordism standard_form(const StandardDecomposition& d);

/// perm_dom ; standard_form ; perm_cod. Equals the decomposed cobordism.
Cobordism reassemble(const StandardDecomposition& d);

}  // namespace cobcat
