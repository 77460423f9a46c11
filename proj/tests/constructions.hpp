#pragma once

// Small hand-built graphs that steer the dispatch into specific branches,
// shared by the unit tests and the acceptance run.

#include <algorithm>
#include <numeric>
#include <vector>

#include "totalchoose/generators.hpp"
#include "totalchoose/multigraph.hpp"

namespace tc_test {

using namespace totalchoose;
using EdgeVec = std::vector<std::pair<VertexId, VertexId>>;

// Two copies of `piece` on disjoint labels, plus `links` between copy 0 and copy 1.
inline Multigraph two_copies(int k, const EdgeVec& piece, const EdgeVec& links) {
  EdgeVec edges;
  for (int c = 0; c < 2; ++c)
    for (auto [a, b] : piece) edges.emplace_back(a + c * k, b + c * k);
  for (auto [a, b] : links) edges.emplace_back(a, b + k);
  return build_multigraph(2 * k, edges);
}

// Double edge 0=1, both ends joined to 2; two copies linked 2-2'.
// Cubic; the double edge's other edges share their far end.
inline Multigraph double_edge_thick_graph() {
  return two_copies(3, {{0, 1}, {0, 1}, {0, 2}, {1, 2}}, {{2, 2}});
}

// Cubic; double edge 0=1 whose other edges end at distinct vertices 2 and 3.
inline Multigraph double_edge_thin_graph() {
  return build_multigraph(6, {{0, 1}, {0, 1}, {0, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});
}

// Diamond p q c x (K4 minus cx) with stubs at c and x; two copies cross-linked.
inline Multigraph diamond_pair() {
  return two_copies(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}, {{2, 3}, {3, 2}});
}

// 4-cycle 0123, 4 ~ 0,2 and 5 ~ 1,3; two copies joined 4-4' and 5-5'.
inline Multigraph four_cycle_pair() {
  return two_copies(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 2}, {5, 1}, {5, 3}}, {{4, 4}, {5, 5}});
}

// K2,3 on {0,2} x {1,3,4} plus 5 ~ 3,4; stubs at 1 and 5; two copies
// cross-linked 1-5' and 5-1'.
inline Multigraph replacement_pair() {
  return two_copies(6, {{0, 1}, {0, 3}, {0, 4}, {2, 1}, {2, 3}, {2, 4}, {5, 3}, {5, 4}}, {{1, 5}, {5, 1}});
}

// Triangle with one side doubled: a deficient vertex at once.
inline Multigraph doubled_triangle() { return build_multigraph(3, {{0, 1}, {0, 1}, {1, 2}, {2, 0}}); }

// Same graph with vertex labels permuted by a seeded shuffle; edge order shuffled too.
inline Multigraph relabel(const Multigraph& g, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<VertexId> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = static_cast<int>(perm.size()) - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
  EdgeVec edges;
  for (auto [a, b] : g.edge_list()) edges.emplace_back(perm[a], perm[b]);
  for (int i = static_cast<int>(edges.size()) - 1; i > 0; --i) std::swap(edges[i], edges[rng.below(i + 1)]);
  return build_multigraph(g.vertex_count(), edges);
}

inline std::vector<Color> range_list(int size, Color first = 0) {
  std::vector<Color> out(size);
  std::iota(out.begin(), out.end(), first);
  return out;
}

}  // namespace tc_test
