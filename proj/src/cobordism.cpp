#include "cobcat/cobordism.hpp"

#include <algorithm>
#include <utility>

#include "cobcat/detail/glue.hpp"
#include "cobcat/error.hpp"

namespace cobcat {

Arc make_arc(Endpoint x, Endpoint y) {
  return x <= y ? Arc{x, y} : Arc{y, x};
}

const SignedPoint& Cobordism::at(Endpoint e) const {
  return (e.side == Side::dom ? dom : cod).at(e.pos);
}

Cobordism make_cobordism(SignedSet dom, SignedSet cod, std::vector<Arc> arcs,
                         Loops loops) {
  Cobordism c{std::move(dom), std::move(cod), {}, {}};
  for (auto& a : arcs) a = make_arc(a.a, a.b);
  std::sort(arcs.begin(), arcs.end());

  std::vector<char> seen_dom(static_cast<size_t>(c.dom.size()), 0);
  std::vector<char> seen_cod(static_cast<size_t>(c.cod.size()), 0);
  auto touch = [&](Endpoint e) {
    auto& side = e.side == Side::dom ? c.dom : c.cod;
    auto& seen = e.side == Side::dom ? seen_dom : seen_cod;
    require(e.pos >= 1 && e.pos <= side.size(), Errc::index_out_of_range,
            "arc endpoint position out of range");
    require(!seen[static_cast<size_t>(e.pos - 1)], Errc::not_perfect_matching,
            "boundary point used by more than one arc");
    seen[static_cast<size_t>(e.pos - 1)] = 1;
  };
  for (const auto& a : arcs) {
    touch(a.a);
    touch(a.b);
    const SignedPoint& p = c.at(a.a);
    const SignedPoint& q = c.at(a.b);
    require(p.label == q.label, Errc::label_mismatch,
            "arc endpoints carry different labels");
    require(eff_sign(a.a.side, p.sign) != eff_sign(a.b.side, q.sign),
            Errc::orientation_clash,
            "arc endpoints have equal effective orientation");
  }
  require(std::all_of(seen_dom.begin(), seen_dom.end(),
                      [](char x) { return x != 0; }) &&
              std::all_of(seen_cod.begin(), seen_cod.end(),
                          [](char x) { return x != 0; }),
          Errc::not_perfect_matching, "unmatched boundary point");

  for (auto it = loops.begin(); it != loops.end();) {
    require(it->second >= 0, Errc::index_out_of_range,
            "negative loop count");
    it = it->second == 0 ? loops.erase(it) : std::next(it);
  }
  c.arcs = std::move(arcs);
  c.loops = std::move(loops);
  return c;
}

Cobordism identity(const SignedSet& x) {
  std::vector<Arc> arcs;
  for (int i = 1; i <= x.size(); ++i)
    arcs.push_back(make_arc(dom_pt(i), cod_pt(i)));
  return make_cobordism(x, x, std::move(arcs));
}

Cobordism symmetry(const SignedSet& x, const SignedSet& y) {
  std::vector<Arc> arcs;
  for (int i = 1; i <= x.size(); ++i)
    arcs.push_back(make_arc(dom_pt(i), cod_pt(y.size() + i)));
  for (int j = 1; j <= y.size(); ++j)
    arcs.push_back(make_arc(dom_pt(x.size() + j), cod_pt(j)));
  return make_cobordism(concat(x, y), concat(y, x), std::move(arcs));
}

Cobordism cup(const SignedSet& x) {
  int n = x.size();
  std::vector<Arc> arcs;
  for (int k = 1; k <= n; ++k)
    arcs.push_back(make_arc(cod_pt(k), cod_pt(2 * n + 1 - k)));
  return make_cobordism({}, concat(dual(x), x), std::move(arcs));
}

Cobordism cap(const SignedSet& x) {
  int n = x.size();
  std::vector<Arc> arcs;
  for (int k = 1; k <= n; ++k)
    arcs.push_back(make_arc(dom_pt(k), dom_pt(2 * n + 1 - k)));
  return make_cobordism(concat(x, dual(x)), {}, std::move(arcs));
}

namespace {

// Shared finishing step: turn glue output back into arcs and loops.
// node_to_endpoint maps terminal node ids to endpoints of the result;
// node_label gives the label of any node for loop labeling and the
// single-label-per-component sanity check.
template <typename ToEndpoint, typename NodeLabel>
Cobordism from_glued(SignedSet dom, SignedSet cod, const detail::Glued& g,
                     ToEndpoint to_endpoint, NodeLabel node_label,
                     Loops loops) {
  std::vector<Arc> arcs;
  arcs.reserve(g.paths.size());
  for (auto [u, v] : g.paths) arcs.push_back(make_arc(to_endpoint(u), to_endpoint(v)));
  for (int rep : g.cycles) ++loops[node_label(rep)];
  return make_cobordism(std::move(dom), std::move(cod), std::move(arcs),
                        std::move(loops));
}

}  // namespace

Cobordism compose(const Cobordism& f, const Cobordism& g) {
  require(f.cod == g.dom, Errc::boundary_mismatch,
          "cod of first factor differs from dom of second");
  int nx = f.dom.size(), ny = f.cod.size(), nz = g.cod.size();
  int total = nx + ny + nz;
  // Nodes: [0,nx) dom of f, [nx,nx+ny) shared boundary, rest cod of g.
  auto fnode = [&](Endpoint e) {
    return e.side == Side::dom ? e.pos - 1 : nx + e.pos - 1;
  };
  auto gnode = [&](Endpoint e) {
    return e.side == Side::dom ? nx + e.pos - 1 : nx + ny + e.pos - 1;
  };
  std::vector<std::pair<int, int>> edges;
  for (const auto& a : f.arcs) edges.emplace_back(fnode(a.a), fnode(a.b));
  for (const auto& a : g.arcs) edges.emplace_back(gnode(a.a), gnode(a.b));
  std::vector<char> terminal(static_cast<size_t>(total), 1);
  for (int i = nx; i < nx + ny; ++i) terminal[static_cast<size_t>(i)] = 0;

  auto glued = detail::glue_matching(total, edges, terminal);
  Loops loops = f.loops;
  for (const auto& [l, k] : g.loops) loops[l] += k;
  auto to_endpoint = [&](int n) {
    return n < nx ? dom_pt(n + 1) : cod_pt(n - nx - ny + 1);
  };
  auto node_label = [&](int n) { return f.cod.at(n - nx + 1).label; };
  return from_glued(f.dom, g.cod, glued, to_endpoint, node_label,
                    std::move(loops));
}

Cobordism tensor(const Cobordism& f, const Cobordism& g) {
  std::vector<Arc> arcs = f.arcs;
  auto shift = [&](Endpoint e) {
    return Endpoint{e.side, e.pos + (e.side == Side::dom ? f.dom.size()
                                                         : f.cod.size())};
  };
  for (const auto& a : g.arcs) arcs.push_back(make_arc(shift(a.a), shift(a.b)));
  Loops loops = f.loops;
  for (const auto& [l, k] : g.loops) loops[l] += k;
  return make_cobordism(concat(f.dom, g.dom), concat(f.cod, g.cod),
                        std::move(arcs), std::move(loops));
}

Cobordism trace_cob(const Cobordism& f, int k) {
  require(k >= 0 && k <= f.dom.size() && k <= f.cod.size(),
          Errc::prefix_mismatch, "traced prefix longer than a boundary");
  for (int i = 1; i <= k; ++i)
    require(f.dom.at(i) == f.cod.at(i), Errc::prefix_mismatch,
            "traced prefix of dom and cod must agree");
  int nd = f.dom.size() - k, nc = f.cod.size() - k;
  // Nodes: [0,k) merged feedback points, then remaining dom, then
  // remaining cod.
  auto node = [&](Endpoint e) {
    if (e.pos <= k) return e.pos - 1;
    return e.side == Side::dom ? k + e.pos - k - 1 : k + nd + e.pos - k - 1;
  };
  std::vector<std::pair<int, int>> edges;
  for (const auto& a : f.arcs) edges.emplace_back(node(a.a), node(a.b));
  std::vector<char> terminal(static_cast<size_t>(k + nd + nc), 1);
  for (int i = 0; i < k; ++i) terminal[static_cast<size_t>(i)] = 0;

  auto glued = detail::glue_matching(k + nd + nc, edges, terminal);
  SignedSet rd{{f.dom.points.begin() + k, f.dom.points.end()}};
  SignedSet rc{{f.cod.points.begin() + k, f.cod.points.end()}};
  auto to_endpoint = [&](int n) {
    return n < k + nd ? dom_pt(n - k + 1) : cod_pt(n - k - nd + 1);
  };
  auto node_label = [&](int n) { return f.dom.at(n + 1).label; };
  return from_glued(std::move(rd), std::move(rc), glued, to_endpoint,
                    node_label, f.loops);
}

Cobordism permutation(const SignedSet& x, const std::vector<int>& tgt_pos) {
  require(static_cast<int>(tgt_pos.size()) == x.size(), Errc::index_out_of_range,
          "permutation length mismatch");
  SignedSet out;
  out.points.resize(x.points.size());
  std::vector<char> used(tgt_pos.size(), 0);
  std::vector<Arc> arcs;
  for (int i = 0; i < x.size(); ++i) {
    int t = tgt_pos[static_cast<size_t>(i)];
    require(t >= 0 && t < x.size() && !used[static_cast<size_t>(t)],
            Errc::index_out_of_range, "not a permutation");
    used[static_cast<size_t>(t)] = 1;
    out.points[static_cast<size_t>(t)] = x.points[static_cast<size_t>(i)];
    arcs.push_back(make_arc(dom_pt(i + 1), cod_pt(t + 1)));
  }
  return make_cobordism(x, std::move(out), std::move(arcs));
}

Cobordism inverse_permutation(const Cobordism& p) {
  require(p.loops.empty(), Errc::internal,
          "inverse_permutation expects a wire-only cobordism");
  std::vector<Arc> arcs;
  for (const auto& a : p.arcs) {
    require(a.a.side == Side::dom && a.b.side == Side::cod, Errc::internal,
            "inverse_permutation expects dom-to-cod wires only");
    arcs.push_back(make_arc(dom_pt(a.b.pos), cod_pt(a.a.pos)));
  }
  return make_cobordism(p.cod, p.dom, std::move(arcs));
}

std::string to_string(const Cobordism& c) {
  std::string s = to_string(c.dom) + " -> " + to_string(c.cod) + " arcs{";
  bool first = true;
  for (const auto& a : c.arcs) {
    if (!first) s += ' ';
    first = false;
    auto ep = [](Endpoint e) {
      return std::string(e.side == Side::dom ? "D." : "C.") +
             std::to_string(e.pos);
    };
    s += ep(a.a) + "-" + ep(a.b);
  }
  s += "}";
  if (!c.loops.empty()) {
    s += " loops{";
    first = true;
    for (const auto& [l, k] : c.loops) {
      if (!first) s += ' ';
      first = false;
      s += l + ":" + std::to_string(k);
    }
    s += "}";
  }
  return s;
}

}  // namespace cobcat
