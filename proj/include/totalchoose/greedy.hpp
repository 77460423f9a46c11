#pragma once

#include <span>
#include <vector>

#include "totalchoose/gadget_plan.hpp"
#include "totalchoose/multigraph.hpp"

namespace totalchoose {

inline constexpr int kSkipped = -1;

/// Distances in the subdivision graph S(G) (every edge replaced by a path of
/// length 2) from a set of root vertices. Vertices get even distances, edges
/// odd ones. Skipped elements carry kSkipped.
struct SubdivisionDistanceMap {
  std::vector<int> dist;  // by dense element index
  std::vector<VertexId> roots;

  int operator()(const Multigraph& g, ElementId x) const { return dist[g.dense(x)]; }
  bool skipped(int dense_index) const { return dist[dense_index] == kSkipped; }
};

/// BFS over S(G) minus `skip`. A root may itself be skipped, in which case it
/// seeds the search but keeps kSkipped. Throws StructuralError if some
/// non-skipped element is unreachable.
SubdivisionDistanceMap subdivision_distances(const Multigraph& g, std::span<const VertexId> roots,
                                             const ElementMask& skip);
SubdivisionDistanceMap subdivision_distances(const Multigraph& g, VertexId root, const ElementMask& skip);
SubdivisionDistanceMap subdivision_distances(const Multigraph& g, VertexId root);

/// Greedy order: non-increasing distance, ascending element id within a
/// distance. With `heavy_edge` (>= 3 parallel copies at the single root) those
/// copies are the last distance-1 elements. Non-skipped roots come last.
///
/// Preconditions, checked: every non-skipped root is incident to the heavy
/// edge or has fewer than `delta` non-skipped incident edges. `delta` defaults
/// to the graph's maximum degree.
std::vector<ElementId> distance_order(const Multigraph& g, const SubdivisionDistanceMap& f,
                                    std::span<const EdgeId> heavy_edge = {}, int delta = 0);

/// Colors the elements of `order` in turn with the smallest list color unused
/// by already-colored total neighbors. Throws NoAvailableColor on a dead end.
/// When `f` is given, also asserts that every element at distance >= 2 still
/// has two uncolored total neighbors when it is colored.
PartialTotalColoring greedy_extend(const Multigraph& g, const ListAssignment& lists,
                                   std::span<const ElementId> order, PartialTotalColoring fixed,
                                   const SubdivisionDistanceMap* f = nullptr);

/// Colors everything outside `skip`. BFS starts from `anchors` (the vertices
/// of H, all skipped); parts of G - skip that the anchors cannot reach are
/// rooted at their lowest vertex incident to a skipped edge.
void color_outside(const Multigraph& g, const ListAssignment& lists, const ElementMask& skip,
                   std::span<const VertexId> anchors, PartialTotalColoring& coloring, int delta);

struct ResidualLists {
  std::vector<ElementId> elements;  // plan slot order
  std::vector<std::vector<Color>> lists;
  std::vector<SlotRole> roles;
};

/// Lists of the plan's elements with colors of colored total neighbors removed.
/// Requires `partial` to color exactly the elements outside the plan. Throws
/// MinimumViolated if a list falls short of its role minimum.
ResidualLists residual_lists(const Multigraph& g, const ListAssignment& lists,
                             const PartialTotalColoring& partial, const GadgetPlan& plan);

}  // namespace totalchoose
