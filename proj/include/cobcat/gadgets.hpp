#pragma once

#include "cobcat/cobordism.hpp"

namespace cobcat {

// State-shaped and plumbing cobordisms over minus-then-plus box shapes
// X_{w,v} = minus_plus_shape(w, v). These drive the correspondence between
// traced structures and cobordism actions: composition, juxtaposition and
// feedback on boxed morphisms are all applications of these gadgets.

/// ∅ -> X_{w,w}, straight pairing of the i-th minus and i-th plus point.
Cobordism name_of_identity(const Word& w);

/// ∅ -> X_{w, w'}, where w'[tgt_pos[i]] = w[i]; pairs letter i with its
/// permuted copy.
Cobordism name_of_permutation(const Word& w, const std::vector<int>& tgt_pos);

/// ∅ -> X_{w·v, v·w}, the name of the block swap.
Cobordism name_of_symmetry(const Word& w, const Word& v);

/// X_{w,v} ⊗ X_{v,u} -> X_{w,u}: feeds the middle v outputs into the middle
/// v inputs, passes w and u through.
Cobordism gamma_compose(const Word& w, const Word& v, const Word& u);

/// X_{w1,v1} ⊗ X_{w2,v2} -> X_{w1·w2, v1·v2}: regroups two boxes side by
/// side into one box.
Cobordism gamma_tensor(const Word& w1, const Word& v1, const Word& w2,
                       const Word& v2);

/// X_{u·w, u·v} -> X_{w,v}: closes the u prefix into feedback.
Cobordism gamma_trace(const Word& u, const Word& w, const Word& v);

}  // namespace cobcat
