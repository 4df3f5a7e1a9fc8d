#include "cobcat/gadgets.hpp"

#include "cobcat/error.hpp"

namespace cobcat {

Cobordism name_of_identity(const Word& w) {
  int n = static_cast<int>(w.size());
  std::vector<Arc> arcs;
  for (int i = 1; i <= n; ++i)
    arcs.push_back(make_arc(cod_pt(i), cod_pt(n + i)));
  return make_cobordism({}, minus_plus_shape(w, w), std::move(arcs));
}

Cobordism name_of_permutation(const Word& w, const std::vector<int>& tgt_pos) {
  int n = static_cast<int>(w.size());
  require(static_cast<int>(tgt_pos.size()) == n, Errc::index_out_of_range,
          "permutation length mismatch");
  Word out(w.size());
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) {
    int t = tgt_pos[static_cast<size_t>(i)];
    require(t >= 0 && t < n, Errc::index_out_of_range, "not a permutation");
    out[static_cast<size_t>(t)] = w[static_cast<size_t>(i)];
    arcs.push_back(make_arc(cod_pt(i + 1), cod_pt(n + t + 1)));
  }
  return make_cobordism({}, minus_plus_shape(w, out), std::move(arcs));
}

Cobordism name_of_symmetry(const Word& w, const Word& v) {
  int n = static_cast<int>(w.size()), m = static_cast<int>(v.size());
  std::vector<int> tgt(static_cast<size_t>(n + m));
  for (int i = 0; i < n; ++i) tgt[static_cast<size_t>(i)] = m + i;
  for (int j = 0; j < m; ++j) tgt[static_cast<size_t>(n + j)] = j;
  return name_of_permutation(concat(w, v), tgt);
}

Cobordism gamma_compose(const Word& w, const Word& v, const Word& u) {
  int nw = static_cast<int>(w.size()), nv = static_cast<int>(v.size());
  int nu = static_cast<int>(u.size());
  std::vector<Arc> arcs;
  for (int i = 1; i <= nw; ++i)
    arcs.push_back(make_arc(dom_pt(i), cod_pt(i)));
  for (int i = 1; i <= nv; ++i)
    arcs.push_back(make_arc(dom_pt(nw + i), dom_pt(nw + nv + i)));
  for (int i = 1; i <= nu; ++i)
    arcs.push_back(make_arc(dom_pt(nw + 2 * nv + i), cod_pt(nw + i)));
  return make_cobordism(
      concat(minus_plus_shape(w, v), minus_plus_shape(v, u)),
      minus_plus_shape(w, u), std::move(arcs));
}

Cobordism gamma_tensor(const Word& w1, const Word& v1, const Word& w2,
                       const Word& v2) {
  int n1 = static_cast<int>(w1.size()), m1 = static_cast<int>(v1.size());
  int n2 = static_cast<int>(w2.size()), m2 = static_cast<int>(v2.size());
  std::vector<Arc> arcs;
  for (int i = 1; i <= n1; ++i)
    arcs.push_back(make_arc(dom_pt(i), cod_pt(i)));
  for (int j = 1; j <= m1; ++j)
    arcs.push_back(make_arc(dom_pt(n1 + j), cod_pt(n1 + n2 + j)));
  for (int i = 1; i <= n2; ++i)
    arcs.push_back(make_arc(dom_pt(n1 + m1 + i), cod_pt(n1 + i)));
  for (int j = 1; j <= m2; ++j)
    arcs.push_back(make_arc(dom_pt(n1 + m1 + n2 + j), cod_pt(n1 + n2 + m1 + j)));
  return make_cobordism(
      concat(minus_plus_shape(w1, v1), minus_plus_shape(w2, v2)),
      minus_plus_shape(concat(w1, w2), concat(v1, v2)), std::move(arcs));
}

Cobordism gamma_trace(const Word& u, const Word& w, const Word& v) {
  int k = static_cast<int>(u.size()), n = static_cast<int>(w.size());
  int m = static_cast<int>(v.size());
  std::vector<Arc> arcs;
  for (int i = 1; i <= k; ++i)
    arcs.push_back(make_arc(dom_pt(i), dom_pt(k + n + i)));
  for (int i = 1; i <= n; ++i)
    arcs.push_back(make_arc(dom_pt(k + i), cod_pt(i)));
  for (int j = 1; j <= m; ++j)
    arcs.push_back(make_arc(dom_pt(2 * k + n + j), cod_pt(n + j)));
  return make_cobordism(minus_plus_shape(concat(u, w), concat(u, v)),
                        minus_plus_shape(w, v), std::move(arcs));
}

}  // namespace cobcat
