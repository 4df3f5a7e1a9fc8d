#include "cobcat/random.hpp"

#include <algorithm>
#include <map>

#include "cobcat/error.hpp"

namespace cobcat {

int Rng::below(int n) {
  require(n > 0, Errc::internal, "Rng::below needs a positive bound");
  // Rejection sampling keeps the draw unbiased and stream-stable.
  std::uint64_t un = static_cast<std::uint64_t>(n);
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % un;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return static_cast<int>(x % un);
}

std::vector<int> Rng::permutation(int n) {
  std::vector<int> p(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i;
  shuffle(p);
  return p;
}

Word random_word(Rng& r, const std::vector<Label>& labels, int max_len) {
  Word w;
  int n = r.below(max_len + 1);
  for (int i = 0; i < n; ++i) w.push_back(r.pick(labels));
  return w;
}

SignedSet random_signed_set(Rng& r, const std::vector<Label>& labels,
                            int max_len) {
  SignedSet x;
  int n = r.below(max_len + 1);
  for (int i = 0; i < n; ++i)
    x.points.push_back({r.pick(labels), r.coin() ? Sign::plus : Sign::minus});
  return x;
}

namespace {

Loops random_loops(Rng& r, const std::vector<Label>& labels, int max_loops) {
  Loops l;
  if (max_loops <= 0 || labels.empty()) return l;
  int n = r.below(max_loops + 1);
  for (int i = 0; i < n; ++i) ++l[r.pick(labels)];
  return l;
}

}  // namespace

Cobordism random_cobordism(Rng& r, const std::vector<Label>& labels,
                           int max_points, int max_loops) {
  // Pass-through strands (one dom point, one cod point each), dom and cod
  // turn-backs (two points on one side), then shuffle both boundaries.
  int na = 0, nb = 0, nc = 0, nd = 0;
  for (int tries = 0; tries < 64; ++tries) {
    na = r.below(3);
    nb = r.below(3);
    nc = r.below(3);
    nd = r.below(3);
    if (2 * (na + nb + nc + nd) <= max_points) break;
    na = nb = nc = nd = 0;
  }
  SignedSet dom, cod;
  std::vector<Arc> arcs;
  for (int i = 0; i < na; ++i) {
    Label l = r.pick(labels);
    dom.points.push_back({l, Sign::minus});
    cod.points.push_back({l, Sign::minus});
    arcs.push_back(make_arc(dom_pt(dom.size()), cod_pt(cod.size())));
  }
  for (int i = 0; i < nb; ++i) {
    Label l = r.pick(labels);
    dom.points.push_back({l, Sign::plus});
    cod.points.push_back({l, Sign::plus});
    arcs.push_back(make_arc(dom_pt(dom.size()), cod_pt(cod.size())));
  }
  for (int i = 0; i < nc; ++i) {
    Label l = r.pick(labels);
    dom.points.push_back({l, Sign::minus});
    dom.points.push_back({l, Sign::plus});
    arcs.push_back(make_arc(dom_pt(dom.size() - 1), dom_pt(dom.size())));
  }
  for (int i = 0; i < nd; ++i) {
    Label l = r.pick(labels);
    cod.points.push_back({l, Sign::minus});
    cod.points.push_back({l, Sign::plus});
    arcs.push_back(make_arc(cod_pt(cod.size() - 1), cod_pt(cod.size())));
  }
  Cobordism base = make_cobordism(dom, cod, std::move(arcs),
                                  random_loops(r, labels, max_loops));
  Cobordism pd = permutation(base.dom, r.permutation(base.dom.size()));
  Cobordism pc = permutation(base.cod, r.permutation(base.cod.size()));
  return compose(compose(inverse_permutation(pd), base), pc);
}

Cobordism random_cobordism_from(Rng& r, const SignedSet& dom,
                                const std::vector<Label>& labels,
                                int max_extra_pairs, int max_loops) {
  // Decide which dom points close among themselves; the rest pass through.
  std::map<Label, std::vector<int>> eff_plus, eff_minus;
  for (int i = 1; i <= dom.size(); ++i) {
    const SignedPoint& p = dom.at(i);
    (eff_sign(Side::dom, p.sign) == Sign::plus ? eff_plus : eff_minus)[p.label]
        .push_back(i);
  }
  std::vector<Arc> arcs;
  std::vector<char> closed(static_cast<size_t>(dom.size()) + 1, 0);
  for (auto& [l, plus] : eff_plus) {
    auto mi = eff_minus.find(l);
    if (mi == eff_minus.end()) continue;
    auto& minus = mi->second;
    int m = std::min(static_cast<int>(plus.size()),
                     static_cast<int>(minus.size()));
    int k = m > 0 ? r.below(m + 1) : 0;
    r.shuffle(plus);
    r.shuffle(minus);
    for (int j = 0; j < k; ++j) {
      arcs.push_back(make_arc(dom_pt(plus[static_cast<size_t>(j)]),
                              dom_pt(minus[static_cast<size_t>(j)])));
      closed[static_cast<size_t>(plus[static_cast<size_t>(j)])] = 1;
      closed[static_cast<size_t>(minus[static_cast<size_t>(j)])] = 1;
    }
  }
  // Cod points: one partner per open dom point, plus extra cod turn-backs.
  struct PendingPoint {
    SignedPoint p;
    int dom_partner;  // 0 when part of a cod turn-back
    int pair_id;      // turn-back pairing
  };
  std::vector<PendingPoint> cod_pts;
  for (int i = 1; i <= dom.size(); ++i)
    if (!closed[static_cast<size_t>(i)])
      cod_pts.push_back({dom.at(i), i, 0});
  int extra = max_extra_pairs > 0 ? r.below(max_extra_pairs + 1) : 0;
  for (int j = 1; j <= extra; ++j) {
    Label l = r.pick(labels);
    cod_pts.push_back({{l, Sign::minus}, 0, j});
    cod_pts.push_back({{l, Sign::plus}, 0, j});
  }
  r.shuffle(cod_pts);
  SignedSet cod;
  std::map<int, std::vector<int>> pair_pos;
  for (int i = 0; i < static_cast<int>(cod_pts.size()); ++i) {
    const auto& cp = cod_pts[static_cast<size_t>(i)];
    cod.points.push_back(cp.p);
    if (cp.dom_partner > 0)
      arcs.push_back(make_arc(dom_pt(cp.dom_partner), cod_pt(i + 1)));
    else
      pair_pos[cp.pair_id].push_back(i + 1);
  }
  for (const auto& [id, ps] : pair_pos)
    arcs.push_back(make_arc(cod_pt(ps[0]), cod_pt(ps[1])));
  return make_cobordism(dom, std::move(cod), std::move(arcs),
                        random_loops(r, labels, max_loops));
}

Cobordism random_cobordism_between(Rng& r, const SignedSet& dom,
                                   const SignedSet& cod, int max_loops) {
  std::map<Label, std::vector<Endpoint>> eff_plus, eff_minus;
  auto add = [&](Side side, const SignedSet& x) {
    for (int i = 1; i <= x.size(); ++i) {
      const SignedPoint& p = x.at(i);
      (eff_sign(side, p.sign) == Sign::plus ? eff_plus : eff_minus)[p.label]
          .push_back({side, i});
    }
  };
  add(Side::dom, dom);
  add(Side::cod, cod);
  std::vector<Arc> arcs;
  for (auto& [l, plus] : eff_plus) {
    auto& minus = eff_minus[l];
    require(plus.size() == minus.size(), Errc::orientation_clash,
            "no matching exists between these boundaries");
    r.shuffle(minus);
    for (size_t j = 0; j < plus.size(); ++j)
      arcs.push_back(make_arc(plus[j], minus[j]));
  }
  for (const auto& [l, minus] : eff_minus)
    require(minus.empty() || eff_plus.count(l) > 0, Errc::orientation_clash,
            "no matching exists between these boundaries");
  std::vector<Label> labels;
  for (const auto& [l, v] : eff_plus) labels.push_back(l);
  Loops loops =
      labels.empty() ? Loops{} : random_loops(r, labels, max_loops);
  return make_cobordism(dom, cod, std::move(arcs), std::move(loops));
}

WiringDiagram random_wiring(Rng& r, const std::vector<Label>& labels,
                            int max_boxes, int max_points) {
  Cobordism c = random_cobordism(r, labels, max_points);
  int n = c.dom.size();
  int boxes = 1 + r.below(max_boxes);
  std::vector<int> sizes(static_cast<size_t>(boxes), 0);
  for (int i = 0; i < n; ++i) ++sizes[static_cast<size_t>(r.below(boxes))];
  return boxes_from_cobordism(c, sizes);
}

}  // namespace cobcat
