#include "cobcat/eval.hpp"

#include "cobcat/decompose.hpp"

namespace cobcat {

namespace {

// For a wire-only cobordism p and a sign s: the 0-based permutation taking
// the i-th s-signed dom point to its matching s-signed cod point. Wires
// preserve the stored sign, so this is well defined.
std::vector<int> induced_subperm(const Cobordism& p, Sign s) {
  auto order_index = [&](const SignedSet& x) {
    std::vector<int> idx(x.points.size(), -1);
    int n = 0;
    for (size_t i = 0; i < x.points.size(); ++i)
      if (x.points[i].sign == s) idx[i] = n++;
    return idx;
  };
  std::vector<int> dom_idx = order_index(p.dom);
  std::vector<int> cod_idx = order_index(p.cod);
  int count = 0;
  for (int v : dom_idx)
    if (v >= 0) ++count;
  std::vector<int> out(static_cast<size_t>(count), -1);
  for (const Arc& a : p.arcs) {
    require(a.a.side == Side::dom && a.b.side == Side::cod, Errc::internal,
            "expected a wire-only cobordism");
    int di = dom_idx[static_cast<size_t>(a.a.pos - 1)];
    int ci = cod_idx[static_cast<size_t>(a.b.pos - 1)];
    require((di >= 0) == (ci >= 0), Errc::internal,
            "wire endpoints disagree about the sign");
    if (di >= 0) out[static_cast<size_t>(di)] = ci;
  }
  return out;
}

}  // namespace

Mor action(const TracedInstance& t, const Cobordism& phi, const Mor& f) {
  require(f.dom == inp(phi.dom) && f.cod == outp(phi.dom),
          Errc::type_mismatch,
          "box filling does not match the dom boundary");
  StandardDecomposition d = decompose(phi);

  // Conjugate into the split layout: minus points to C·A, plus to C·B.
  Word ca = concat(d.C, d.A), cb = concat(d.C, d.B);
  std::vector<int> in_dom = induced_subperm(d.perm_dom, Sign::minus);
  std::vector<int> out_dom = induced_subperm(d.perm_dom, Sign::plus);
  Mor from_layout = t.permutation_mor(f.cod, out_dom);         // outp X -> C·B
  Mor undo = t.permutation_mor(ca, inverse_perm(in_dom));      // C·A -> inp X
  Mor f1 = t.compose(t.compose(undo, f), from_layout);

  // Close the feedback prefix, pass the untouched bent wires through, and
  // multiply in one closed-loop scalar per loop.
  Mor g = t.trace(static_cast<int>(d.C.size()), f1);           // A -> B
  g = t.tensor_mor(g, t.identity_mor(d.D));                    // A·D -> B·D
  for (const auto& [l, k] : d.E) {
    Mor s = t.trace(1, t.identity_mor(Word{l}));
    for (std::int64_t i = 0; i < k; ++i) g = t.tensor_mor(g, s);
  }

  // Conjugate out of the cod layout A·D / B·D into the cod boundary.
  Word ad = concat(d.A, d.D), bd = concat(d.B, d.D);
  std::vector<int> in_cod = induced_subperm(d.perm_cod, Sign::minus);
  std::vector<int> out_cod = induced_subperm(d.perm_cod, Sign::plus);
  Word iny = permute_word(ad, in_cod);
  Mor undo_cod = t.permutation_mor(iny, inverse_perm(in_cod));  // inp Y -> A·D
  Mor to_cod = t.permutation_mor(bd, out_cod);                  // B·D -> outp Y
  return t.compose(t.compose(undo_cod, g), to_cod);
}

}  // namespace cobcat
