#include "cobcat/decompose.hpp"

#include <algorithm>

#include "cobcat/error.hpp"

namespace cobcat {

namespace {

struct ClassifiedArc {
  Arc arc;
  Label label;
};

}  // namespace

StandardDecomposition decompose(const Cobordism& c) {
  std::vector<ClassifiedArc> a, b, cc, d;
  for (const auto& arc : c.arcs) {
    const SignedPoint& p = c.at(arc.a);
    ClassifiedArc ca{arc, p.label};
    if (arc.a.side == Side::dom && arc.b.side == Side::dom)
      cc.push_back(ca);
    else if (arc.a.side == Side::cod && arc.b.side == Side::cod)
      d.push_back(ca);
    else if (p.sign == Sign::minus)
      a.push_back(ca);  // arc.a is the dom endpoint since arcs store dom first
    else
      b.push_back(ca);
  }
  // Arcs are already sorted by smaller endpoint, which is the dom-side
  // endpoint for A, B, C and the minus cod endpoint for D (cod turn-backs
  // join a minus point to a later plus point? not necessarily; sort D by
  // its minus endpoint explicitly).
  std::sort(d.begin(), d.end(), [&](const ClassifiedArc& x, const ClassifiedArc& y) {
    auto minus_ep = [&](const ClassifiedArc& z) {
      return c.at(z.arc.a).sign == Sign::minus ? z.arc.a : z.arc.b;
    };
    return minus_ep(x) < minus_ep(y);
  });

  StandardDecomposition out;
  for (const auto& x : a) out.A.push_back(x.label);
  for (const auto& x : b) out.B.push_back(x.label);
  for (const auto& x : cc) out.C.push_back(x.label);
  for (const auto& x : d) out.D.push_back(x.label);
  out.E = c.loops;

  int nc = static_cast<int>(cc.size()), na = static_cast<int>(a.size());
  int nb = static_cast<int>(b.size()), nd = static_cast<int>(d.size());

  std::vector<int> dom_tgt(static_cast<size_t>(c.dom.size()), -1);
  for (int j = 0; j < nc; ++j) {
    const Arc& arc = cc[static_cast<size_t>(j)].arc;
    bool a_minus = c.at(arc.a).sign == Sign::minus;
    dom_tgt[static_cast<size_t>((a_minus ? arc.a : arc.b).pos - 1)] = j;
    dom_tgt[static_cast<size_t>((a_minus ? arc.b : arc.a).pos - 1)] = nc + na + j;
  }
  for (int j = 0; j < na; ++j)
    dom_tgt[static_cast<size_t>(a[static_cast<size_t>(j)].arc.a.pos - 1)] = nc + j;
  for (int j = 0; j < nb; ++j)
    dom_tgt[static_cast<size_t>(b[static_cast<size_t>(j)].arc.a.pos - 1)] =
        nc + na + nc + j;
  out.perm_dom = permutation(c.dom, dom_tgt);

  std::vector<int> cod_tgt(static_cast<size_t>(c.cod.size()), -1);
  for (int j = 0; j < na; ++j)
    cod_tgt[static_cast<size_t>(a[static_cast<size_t>(j)].arc.b.pos - 1)] = j;
  for (int j = 0; j < nb; ++j)
    cod_tgt[static_cast<size_t>(b[static_cast<size_t>(j)].arc.b.pos - 1)] =
        na + nd + j;
  for (int j = 0; j < nd; ++j) {
    const Arc& arc = d[static_cast<size_t>(j)].arc;
    bool a_minus = c.at(arc.a).sign == Sign::minus;
    cod_tgt[static_cast<size_t>((a_minus ? arc.a : arc.b).pos - 1)] = na + j;
    cod_tgt[static_cast<size_t>((a_minus ? arc.b : arc.a).pos - 1)] =
        na + nd + nb + j;
  }
  out.perm_cod = inverse_permutation(permutation(c.cod, cod_tgt));
  return out;
}

SignedSet layout_dom(const StandardDecomposition& d) {
  return concat(concat(all_minus(d.C), all_minus(d.A)),
                concat(all_plus(d.C), all_plus(d.B)));
}

SignedSet layout_cod(const StandardDecomposition& d) {
  return concat(concat(all_minus(d.A), all_minus(d.D)),
                concat(all_plus(d.B), all_plus(d.D)));
}

Cobordism standard_form(const StandardDecomposition& d) {
  int nc = static_cast<int>(d.C.size()), na = static_cast<int>(d.A.size());
  int nb = static_cast<int>(d.B.size()), nd = static_cast<int>(d.D.size());
  std::vector<Arc> arcs;
  for (int j = 1; j <= nc; ++j)
    arcs.push_back(make_arc(dom_pt(j), dom_pt(nc + na + j)));
  for (int j = 1; j <= na; ++j)
    arcs.push_back(make_arc(dom_pt(nc + j), cod_pt(j)));
  for (int j = 1; j <= nb; ++j)
    arcs.push_back(make_arc(dom_pt(nc + na + nc + j), cod_pt(na + nd + j)));
  for (int j = 1; j <= nd; ++j)
    arcs.push_back(make_arc(cod_pt(na + j), cod_pt(na + nd + nb + j)));
  return make_cobordism(layout_dom(d), layout_cod(d), std::move(arcs), d.E);
}

Cobordism reassemble(const StandardDecomposition& d) {
  return compose(compose(d.perm_dom, standard_form(d)), d.perm_cod);
}

}  // namespace cobcat
