#include "cobcat/kleisli.hpp"

#include <algorithm>
#include <set>

#include "cobcat/error.hpp"

namespace cobcat {

bool LabelSet::contains(const Label& l) const {
  return std::find(labels.begin(), labels.end(), l) != labels.end();
}

LabelSet make_label_set(std::vector<Label> labels) {
  std::set<Label> seen;
  for (const auto& l : labels)
    require(seen.insert(l).second, Errc::label_mismatch,
            "duplicate label in label set");
  return LabelSet{std::move(labels)};
}

const KWord& KleisliMap::at(const Label& l) const {
  auto it = assignment.find(l);
  require(it != assignment.end(), Errc::unknown_label,
          "label missing from relabeling map");
  return it->second;
}

KleisliMap make_kleisli(LabelSet source, LabelSet target,
                        std::map<Label, KWord> assignment) {
  for (const auto& l : source.labels)
    require(assignment.count(l) == 1, Errc::unknown_label,
            "relabeling map not total on source labels");
  for (const auto& [l, w] : assignment) {
    require(source.contains(l), Errc::unknown_label,
            "relabeling map defined on non-source label");
    for (const auto& kl : w)
      require(target.contains(kl.label), Errc::unknown_label,
              "relabeling target letter outside target label set");
  }
  return KleisliMap{std::move(source), std::move(target),
                    std::move(assignment)};
}

KleisliMap kleisli_identity(LabelSet s) {
  std::map<Label, KWord> a;
  for (const auto& l : s.labels) a[l] = {KLetter{l, false}};
  LabelSet t = s;
  return make_kleisli(std::move(s), std::move(t), std::move(a));
}

KWord kword_involution(const KWord& w) {
  KWord r;
  r.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    r.push_back({it->label, !it->involution});
  return r;
}

KleisliMap kleisli_compose(const KleisliMap& f, const KleisliMap& g) {
  require(f.target == g.source, Errc::label_set_mismatch,
          "relabeling maps not composable");
  std::map<Label, KWord> a;
  for (const auto& l : f.source.labels) {
    KWord w;
    for (const auto& kl : f.at(l)) {
      KWord block = g.at(kl.label);
      if (kl.involution) block = kword_involution(block);
      w.insert(w.end(), block.begin(), block.end());
    }
    a[l] = std::move(w);
  }
  return make_kleisli(f.source, g.target, std::move(a));
}

namespace {

Sign expanded_sign(Sign point_sign, bool involution) {
  return involution ? flip(point_sign) : point_sign;
}

// Start offsets (0-based) of each point's expansion block within a side.
std::vector<int> block_offsets(const SignedSet& x, const KleisliMap& k) {
  std::vector<int> off;
  off.reserve(x.points.size());
  int pos = 0;
  for (const auto& p : x.points) {
    off.push_back(pos);
    pos += static_cast<int>(k.at(p.label).size());
  }
  return off;
}

}  // namespace

SignedSet relabel(const SignedSet& x, const KleisliMap& k) {
  SignedSet r;
  for (const auto& p : x.points) {
    const KWord& block = k.at(p.label);
    if (p.sign == Sign::plus) {
      for (const auto& kl : block)
        r.points.push_back({kl.label, expanded_sign(Sign::plus, kl.involution)});
    } else {
      for (auto it = block.rbegin(); it != block.rend(); ++it)
        r.points.push_back({it->label, expanded_sign(Sign::minus, it->involution)});
    }
  }
  return r;
}

Cobordism relabel(const Cobordism& c, const KleisliMap& k) {
  for (const auto& p : c.dom.points)
    require(k.source.contains(p.label), Errc::unknown_label,
            "cobordism label outside relabeling source");
  for (const auto& p : c.cod.points)
    require(k.source.contains(p.label), Errc::unknown_label,
            "cobordism label outside relabeling source");
  for (const auto& [l, n] : c.loops)
    require(k.source.contains(l), Errc::unknown_label,
            "loop label outside relabeling source");

  std::vector<int> dom_off = block_offsets(c.dom, k);
  std::vector<int> cod_off = block_offsets(c.cod, k);
  // Letter j of a block sits at offset j for plus points and mirrored at
  // offset m-1-j for minus points; arcs pair equal letter indices, which
  // keeps labels aligned and commutes with duals.
  auto letter_pos = [&](Endpoint e, int j, int m) {
    const SignedPoint& p = e.side == Side::dom ? c.dom.at(e.pos) : c.cod.at(e.pos);
    const auto& off = e.side == Side::dom ? dom_off : cod_off;
    int base = off[static_cast<size_t>(e.pos - 1)];
    int k_in = p.sign == Sign::plus ? j : m - 1 - j;
    return Endpoint{e.side, base + k_in + 1};
  };

  std::vector<Arc> arcs;
  for (const auto& a : c.arcs) {
    int m = static_cast<int>(k.at(c.at(a.a).label).size());
    for (int j = 0; j < m; ++j)
      arcs.push_back(make_arc(letter_pos(a.a, j, m), letter_pos(a.b, j, m)));
  }
  Loops loops;
  for (const auto& [l, n] : c.loops)
    for (const auto& kl : k.at(l)) loops[kl.label] += n;
  return make_cobordism(relabel(c.dom, k), relabel(c.cod, k), std::move(arcs),
                        std::move(loops));
}

}  // namespace cobcat
