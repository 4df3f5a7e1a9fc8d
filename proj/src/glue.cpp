#include "cobcat/detail/glue.hpp"

#include <algorithm>

#include "cobcat/error.hpp"

namespace cobcat::detail {

Glued glue_matching(int node_count,
                    const std::vector<std::pair<int, int>>& edges,
                    const std::vector<char>& is_terminal) {
  std::vector<std::vector<int>> adj(static_cast<size_t>(node_count));
  for (size_t e = 0; e < edges.size(); ++e) {
    auto [u, v] = edges[e];
    require(u >= 0 && u < node_count && v >= 0 && v < node_count,
            Errc::internal, "glue edge endpoint out of range");
    adj[static_cast<size_t>(u)].push_back(static_cast<int>(e));
    adj[static_cast<size_t>(v)].push_back(static_cast<int>(e));
  }
  for (int n = 0; n < node_count; ++n) {
    size_t deg = adj[static_cast<size_t>(n)].size();
    require(deg == (is_terminal[static_cast<size_t>(n)] ? 1u : 2u),
            Errc::internal, "glue degree invariant violated");
  }

  Glued out;
  std::vector<char> edge_done(edges.size(), 0);
  auto other_end = [&](int e, int from) {
    return edges[static_cast<size_t>(e)].first == from
               ? edges[static_cast<size_t>(e)].second
               : edges[static_cast<size_t>(e)].first;
  };
  auto next_edge = [&](int node, int arrived_by) {
    for (int e : adj[static_cast<size_t>(node)])
      if (e != arrived_by && !edge_done[static_cast<size_t>(e)]) return e;
    return -1;
  };

  for (int t = 0; t < node_count; ++t) {
    if (!is_terminal[static_cast<size_t>(t)]) continue;
    int e = adj[static_cast<size_t>(t)][0];
    if (edge_done[static_cast<size_t>(e)]) continue;
    int cur = t;
    while (true) {
      edge_done[static_cast<size_t>(e)] = 1;
      cur = other_end(e, cur);
      if (is_terminal[static_cast<size_t>(cur)]) break;
      e = next_edge(cur, e);
      require(e >= 0, Errc::internal, "glue path walk dead end");
    }
    out.paths.emplace_back(t, cur);
  }

  for (int n = 0; n < node_count; ++n) {
    if (is_terminal[static_cast<size_t>(n)]) continue;
    int e = next_edge(n, -1);
    if (e < 0) continue;  // already consumed by a path or earlier cycle
    out.cycles.push_back(n);
    int cur = n;
    while (e >= 0) {
      edge_done[static_cast<size_t>(e)] = 1;
      // A self-edge returns to the same node and the cycle closes there.
      int nxt = other_end(e, cur);
      cur = nxt;
      e = next_edge(cur, e);
      if (cur == n && e < 0) break;
    }
  }
  require(std::all_of(edge_done.begin(), edge_done.end(),
                      [](char c) { return c != 0; }),
          Errc::internal, "glue left unvisited edges");
  return out;
}

}  // namespace cobcat::detail
