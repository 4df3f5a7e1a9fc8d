#include "cobcat/wiring.hpp"

#include <algorithm>
#include <tuple>

#include "cobcat/detail/glue.hpp"
#include "cobcat/error.hpp"

namespace cobcat {

bool operator<(const WireEnd& x, const WireEnd& y) {
  return std::tuple(x.is_outer(), x.box, x.pos) <
         std::tuple(y.is_outer(), y.box, y.pos);
}

bool operator<(const Wire& x, const Wire& y) {
  return std::tuple(x.a, x.b) < std::tuple(y.a, y.b);
}

namespace {

const SignedPoint& point_at(const WiringDiagram& w, const WireEnd& e) {
  const SignedSet& side =
      e.is_outer() ? w.outer : [&]() -> const SignedSet& {
        require(e.box >= 0 && e.box < static_cast<int>(w.inner.size()),
                Errc::index_out_of_range, "wire references missing box");
        return w.inner[static_cast<size_t>(e.box)];
      }();
  return side.at(e.pos);
}

Sign wire_eff(const WiringDiagram& w, const WireEnd& e) {
  return eff_sign(e.is_outer() ? Side::cod : Side::dom, point_at(w, e).sign);
}

}  // namespace

WiringDiagram make_wiring(std::vector<SignedSet> inner, SignedSet outer,
                          std::vector<Wire> wires, Loops loops) {
  WiringDiagram w{std::move(inner), std::move(outer), {}, {}};
  for (auto& x : wires)
    if (x.b < x.a) std::swap(x.a, x.b);
  std::sort(wires.begin(), wires.end());

  std::vector<std::vector<char>> seen_inner;
  for (const auto& b : w.inner)
    seen_inner.emplace_back(static_cast<size_t>(b.size()), 0);
  std::vector<char> seen_outer(static_cast<size_t>(w.outer.size()), 0);
  auto touch = [&](const WireEnd& e) {
    const SignedPoint& p = point_at(w, e);  // validates box and position
    (void)p;
    auto& seen = e.is_outer() ? seen_outer
                              : seen_inner[static_cast<size_t>(e.box)];
    require(!seen[static_cast<size_t>(e.pos - 1)], Errc::not_perfect_matching,
            "boundary point used by more than one wire");
    seen[static_cast<size_t>(e.pos - 1)] = 1;
  };
  for (const auto& x : wires) {
    touch(x.a);
    touch(x.b);
    require(point_at(w, x.a).label == point_at(w, x.b).label,
            Errc::label_mismatch, "wire ends carry different labels");
    require(wire_eff(w, x.a) != wire_eff(w, x.b), Errc::orientation_clash,
            "wire ends have equal effective orientation");
  }
  auto all = [](const std::vector<char>& v) {
    return std::all_of(v.begin(), v.end(), [](char c) { return c != 0; });
  };
  require(all(seen_outer) && std::all_of(seen_inner.begin(), seen_inner.end(), all),
          Errc::not_perfect_matching, "unwired boundary point");

  for (auto it = loops.begin(); it != loops.end();) {
    require(it->second >= 0, Errc::index_out_of_range, "negative loop count");
    it = it->second == 0 ? loops.erase(it) : std::next(it);
  }
  w.wires = std::move(wires);
  w.loops = std::move(loops);
  return w;
}

WiringDiagram identity_wiring(const SignedSet& x) {
  std::vector<Wire> wires;
  for (int i = 1; i <= x.size(); ++i)
    wires.push_back({{0, i}, {WireEnd::outer, i}});
  return make_wiring({x}, x, std::move(wires));
}

Cobordism wd_to_cobordism(const WiringDiagram& w) {
  std::vector<int> offset;
  int pos = 0;
  SignedSet dom;
  for (const auto& b : w.inner) {
    offset.push_back(pos);
    pos += b.size();
    dom = concat(dom, b);
  }
  auto ep = [&](const WireEnd& e) {
    return e.is_outer() ? cod_pt(e.pos)
                        : dom_pt(offset[static_cast<size_t>(e.box)] + e.pos);
  };
  std::vector<Arc> arcs;
  for (const auto& x : w.wires) arcs.push_back(make_arc(ep(x.a), ep(x.b)));
  return make_cobordism(std::move(dom), w.outer, std::move(arcs), w.loops);
}

WiringDiagram boxes_from_cobordism(const Cobordism& c,
                                   const std::vector<int>& box_sizes) {
  std::vector<SignedSet> inner;
  std::vector<int> offset;
  int pos = 0;
  for (int s : box_sizes) {
    require(s >= 0 && pos + s <= c.dom.size(), Errc::index_out_of_range,
            "box sizes do not partition the boundary");
    offset.push_back(pos);
    SignedSet b;
    b.points.assign(c.dom.points.begin() + pos, c.dom.points.begin() + pos + s);
    inner.push_back(std::move(b));
    pos += s;
  }
  require(pos == c.dom.size(), Errc::index_out_of_range,
          "box sizes do not partition the boundary");
  auto wend = [&](Endpoint e) {
    if (e.side == Side::cod) return WireEnd{WireEnd::outer, e.pos};
    int b = static_cast<int>(std::upper_bound(offset.begin(), offset.end(),
                                              e.pos - 1) -
                             offset.begin()) - 1;
    return WireEnd{b, e.pos - offset[static_cast<size_t>(b)]};
  };
  std::vector<Wire> wires;
  for (const auto& a : c.arcs) wires.push_back({wend(a.a), wend(a.b)});
  return make_wiring(std::move(inner), c.cod, std::move(wires), c.loops);
}

WiringDiagram wd_substitute(const WiringDiagram& w, int slot,
                            const WiringDiagram& v) {
  require(slot >= 0 && slot < static_cast<int>(w.inner.size()),
          Errc::slot_mismatch, "substitution slot out of range");
  require(v.outer == w.inner[static_cast<size_t>(slot)], Errc::slot_mismatch,
          "inner diagram boundary differs from the slot boundary");

  // Result box list: w's boxes with the slot replaced by v's boxes.
  std::vector<SignedSet> boxes;
  for (int b = 0; b < static_cast<int>(w.inner.size()); ++b) {
    if (b == slot)
      boxes.insert(boxes.end(), v.inner.begin(), v.inner.end());
    else
      boxes.push_back(w.inner[static_cast<size_t>(b)]);
  }

  // Glue nodes: result box points and the outer boundary are terminals,
  // the shared slot boundary is internal.
  int n_outer = w.outer.size();
  std::vector<int> box_base;
  int next = n_outer;
  for (const auto& b : boxes) {
    box_base.push_back(next);
    next += b.size();
  }
  int shared_base = next;
  int total = next + v.outer.size();

  // Box renumbering from w's and v's box spaces into the result space.
  auto w_box = [&](int b) { return b < slot ? b : b - 1 + static_cast<int>(v.inner.size()); };
  auto v_box = [&](int b) { return slot + b; };

  auto w_node = [&](const WireEnd& e) {
    if (e.is_outer()) return e.pos - 1;
    if (e.box == slot) return shared_base + e.pos - 1;
    return box_base[static_cast<size_t>(w_box(e.box))] + e.pos - 1;
  };
  auto v_node = [&](const WireEnd& e) {
    if (e.is_outer()) return shared_base + e.pos - 1;
    return box_base[static_cast<size_t>(v_box(e.box))] + e.pos - 1;
  };

  std::vector<std::pair<int, int>> edges;
  for (const auto& x : w.wires) edges.emplace_back(w_node(x.a), w_node(x.b));
  for (const auto& x : v.wires) edges.emplace_back(v_node(x.a), v_node(x.b));
  std::vector<char> terminal(static_cast<size_t>(total), 1);
  for (int i = shared_base; i < total; ++i) terminal[static_cast<size_t>(i)] = 0;

  auto glued = detail::glue_matching(total, edges, terminal);

  auto to_end = [&](int n) {
    if (n < n_outer) return WireEnd{WireEnd::outer, n + 1};
    for (int b = static_cast<int>(boxes.size()) - 1; b >= 0; --b)
      if (n >= box_base[static_cast<size_t>(b)])
        return WireEnd{b, n - box_base[static_cast<size_t>(b)] + 1};
    fail(Errc::internal, "substitution node mapping");
  };
  std::vector<Wire> wires;
  for (auto [x, y] : glued.paths) {
    WireEnd a = to_end(x), b = to_end(y);
    wires.push_back({a, b});
  }
  Loops loops = w.loops;
  for (const auto& [l, k] : v.loops) loops[l] += k;
  for (int rep : glued.cycles)
    ++loops[v.outer.at(rep - shared_base + 1).label];
  return make_wiring(std::move(boxes), w.outer, std::move(wires),
                     std::move(loops));
}

}  // namespace cobcat
