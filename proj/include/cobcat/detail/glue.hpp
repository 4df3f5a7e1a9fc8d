#pragma once

#include <utility>
#include <vector>

namespace cobcat::detail {

// Shared path-walking core used by composition, partial trace and wiring
// substitution. Nodes are integers; edges form a multigraph in which every
// terminal node has degree exactly 1 and every internal node degree exactly
// 2. Self-edges are allowed on internal nodes and count twice.
struct Glued {
  // One entry per maximal path, as the two terminal node ids in walk order
  // (walks start from the smallest-id unvisited terminal).
  std::vector<std::pair<int, int>> paths;
  // Smallest node id of each remaining closed cycle, in increasing order.
  std::vector<int> cycles;
};

Glued glue_matching(int node_count,
                    const std::vector<std::pair<int, int>>& edges,
                    const std::vector<char>& is_terminal);

}  // namespace cobcat::detail
