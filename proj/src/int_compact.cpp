#include "cobcat/int_compact.hpp"

#include "cobcat/algebra.hpp"
#include "cobcat/wiring.hpp"

namespace cobcat {

IntObject int_dual(const IntObject& a) { return {a.pos, a.neg}; }

IntObject int_tensor_obj(const IntObject& a, const IntObject& b) {
  return {concat(a.neg, b.neg), concat(a.pos, b.pos)};
}

static void check_int(const IntMorphism& f) {
  require(f.payload.dom == concat(f.source.neg, f.target.pos) &&
              f.payload.cod == concat(f.source.pos, f.target.neg),
          Errc::type_mismatch,
          "payload boundaries do not match the object pair");
}

IntMorphism make_int(const TracedInstance&, IntObject source,
                     IntObject target, Mor payload) {
  IntMorphism f{std::move(source), std::move(target), std::move(payload)};
  check_int(f);
  return f;
}

Mor block_perm_mor(const TracedInstance& t, const std::vector<Word>& blocks,
                   const std::vector<int>& order) {
  require(order.size() == blocks.size(), Errc::index_out_of_range,
          "one order entry per block required");
  std::vector<int> src_off(blocks.size());
  Word source;
  int n = 0;
  for (size_t i = 0; i < blocks.size(); ++i) {
    src_off[i] = n;
    n += static_cast<int>(blocks[i].size());
    source.insert(source.end(), blocks[i].begin(), blocks[i].end());
  }
  std::vector<int> tgt(static_cast<size_t>(n), -1);
  std::vector<char> seen(blocks.size(), 0);
  int at = 0;
  for (int b : order) {
    require(b >= 0 && b < static_cast<int>(blocks.size()) && !seen[b],
            Errc::index_out_of_range, "order is not a block permutation");
    seen[static_cast<size_t>(b)] = 1;
    for (size_t j = 0; j < blocks[static_cast<size_t>(b)].size(); ++j)
      tgt[static_cast<size_t>(src_off[static_cast<size_t>(b)]) + j] = at++;
  }
  return t.permutation_mor(source, tgt);
}

IntMorphism int_identity(const TracedInstance& t, const IntObject& a) {
  return {a, a, t.symmetry_mor(a.neg, a.pos)};
}

IntMorphism int_compose(const TracedInstance& t, const IntMorphism& f,
                        const IntMorphism& g) {
  check_int(f);
  check_int(g);
  require(f.target == g.source, Errc::composition_type_mismatch,
          "middle objects differ");
  const Word &an = f.source.neg, &ap = f.source.pos;
  const Word &bn = f.target.neg, &bp = f.target.pos;
  const Word &cn = g.target.neg, &cp = g.target.pos;
  const int na = static_cast<int>(an.size()), nap = static_cast<int>(ap.size());
  const int nbn = static_cast<int>(bn.size()), nbp = static_cast<int>(bp.size());
  const int ncn = static_cast<int>(cn.size()), ncp = static_cast<int>(cp.size());
  SignedSet xf = minus_plus_shape(concat(an, bp), concat(ap, bn));
  SignedSet xg = minus_plus_shape(concat(bn, cp), concat(bp, cn));
  SignedSet outer = minus_plus_shape(concat(an, cp), concat(ap, cn));
  std::vector<Wire> wires;
  auto wire = [&wires](int box1, int pos1, int box2, int pos2) {
    wires.push_back(Wire{WireEnd{box1, pos1}, WireEnd{box2, pos2}});
  };
  const int kOuter = WireEnd::outer;
  // Forward boundary straight into the first box.
  for (int i = 1; i <= na; ++i) wire(kOuter, i, 0, i);
  // Backward boundary straight into the second box.
  for (int j = 1; j <= ncp; ++j) wire(kOuter, na + j, 1, nbn + j);
  // First box's forward output out to the boundary.
  for (int i = 1; i <= nap; ++i)
    wire(0, na + nbp + i, kOuter, na + ncp + i);
  // Second box's backward output out to the boundary.
  for (int j = 1; j <= ncn; ++j)
    wire(1, nbn + ncp + nbp + j, kOuter, na + ncp + nap + j);
  // Feedback: second box's forward middle back into the first box.
  for (int k = 1; k <= nbp; ++k) wire(1, nbn + ncp + k, 0, na + k);
  // Feedback: first box's backward middle into the second box.
  for (int k = 1; k <= nbn; ++k) wire(0, na + nbp + nap + k, 1, k);
  Cobordism flat = wd_to_cobordism(make_wiring({xf, xg}, outer, wires));
  TracedAsAlgebra alg(t);
  Elem res = alg.act(flat, alg.mult(Elem{f.payload.payload, xf},
                                    Elem{g.payload.payload, xg}));
  return {f.source, g.target, alg.to_mor(res)};
}

IntMorphism int_compose_formula(const TracedInstance& t, const IntMorphism& f,
                                const IntMorphism& g) {
  check_int(f);
  check_int(g);
  require(f.target == g.source, Errc::composition_type_mismatch,
          "middle objects differ");
  const Word &an = f.source.neg, &ap = f.source.pos;
  const Word &bn = f.target.neg, &bp = f.target.pos;
  const Word &cn = g.target.neg, &cp = g.target.pos;
  Mor fg = t.tensor_mor(f.payload, g.payload);
  Mor p = block_perm_mor(t, {bp, bn, an, cp}, {2, 0, 1, 3});
  Mor q = block_perm_mor(t, {ap, bn, bp, cn}, {2, 1, 0, 3});
  Mor h = t.trace(static_cast<int>(bp.size() + bn.size()),
                  t.compose(t.compose(p, fg), q));
  return {f.source, g.target, std::move(h)};
}

IntMorphism int_tensor(const TracedInstance& t, const IntMorphism& f,
                       const IntMorphism& g) {
  check_int(f);
  check_int(g);
  const Word &an = f.source.neg, &ap = f.source.pos;
  const Word &cn = f.target.neg, &cp = f.target.pos;
  const Word &bn = g.source.neg, &bp = g.source.pos;
  const Word &dn = g.target.neg, &dp = g.target.pos;
  Mor p = block_perm_mor(t, {an, bn, cp, dp}, {0, 2, 1, 3});
  Mor mid = t.tensor_mor(f.payload, g.payload);
  Mor q = block_perm_mor(t, {ap, cn, bp, dn}, {0, 2, 1, 3});
  return {int_tensor_obj(f.source, g.source),
          int_tensor_obj(f.target, g.target),
          t.compose(t.compose(p, mid), q)};
}

IntMorphism int_symmetry(const TracedInstance& t, const IntObject& a,
                         const IntObject& b) {
  Mor payload = block_perm_mor(t, {a.neg, b.neg, b.pos, a.pos}, {3, 2, 1, 0});
  return {int_tensor_obj(a, b), int_tensor_obj(b, a), std::move(payload)};
}

IntMorphism int_eta(const TracedInstance& t, const IntObject& a) {
  return {IntObject{}, int_tensor_obj(int_dual(a), a),
          t.symmetry_mor(a.neg, a.pos)};
}

IntMorphism int_eps(const TracedInstance& t, const IntObject& a) {
  return {int_tensor_obj(a, int_dual(a)), IntObject{},
          t.symmetry_mor(a.neg, a.pos)};
}

bool int_equal(const TracedInstance& t, const IntMorphism& f,
               const IntMorphism& g) {
  return f.source == g.source && f.target == g.target &&
         t.equal(f.payload, g.payload);
}

IntMorphism unit_embed(const TracedInstance&, const Mor& f) {
  return {IntObject{f.dom, {}}, IntObject{f.cod, {}}, f};
}

}  // namespace cobcat
