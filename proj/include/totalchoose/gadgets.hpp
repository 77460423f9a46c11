#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "totalchoose/gadget_plan.hpp"
#include "totalchoose/multigraph.hpp"

namespace totalchoose {

/// Abstract gadget: a small multigraph whose halfedges have one endpoint.
/// Slots are numbered vertices first, then full edges, then halfedges.
///
/// Slot layouts per kind:
///   Ring(m)           v0..v(m-1); e_i = v_i v_(i+1); h_i at v_i
///   DoubleEdgeThick   v1 v2; two parallel edges; h at v1, h at v2 (both thick)
///   DoubleEdgeThin    same, both thin
///   TriangleTwoThick  v0 v1 v2; e01 e12 e20; h0 h1 thick, h2 thin
///   FourCycleTwoThick v0..v3; e01 e12 e23 e30; h0 h2 thick, h1 h3 thin
///   K4                v0..v3; edges 01 02 03 12 13 23
///   K33               a0 a1 a2 b0 b1 b2; edges a_i b_j, i-major
struct GadgetShape {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> halfedge_at;
  std::vector<bool> halfedge_thick;

  int slot_count() const { return vertex_count + static_cast<int>(edges.size() + halfedge_at.size()); }
  std::vector<SlotRole> roles() const;
  std::vector<std::size_t> minima() const;
  /// Slots that must receive distinct colors. The two thick halfedges conflict
  /// with each other: they stand for edges meeting at a colored vertex.
  std::vector<std::vector<int>> conflicts() const;
};

GadgetShape gadget_shape(GadgetKind kind, int ring_length = 0);

/// Ring: a cycle of length >= 3 with one halfedge per vertex.
struct RingGadget {
  std::vector<std::vector<Color>> vertex_lists;
  std::vector<std::vector<Color>> edge_lists;  // edge i joins position i and i+1
  std::vector<std::vector<Color>> halfedge_lists;

  int length() const { return static_cast<int>(vertex_lists.size()); }
};

struct FixedGadget {
  GadgetKind kind = GadgetKind::K4;
  std::vector<std::vector<Color>> lists;  // slot order of gadget_shape(kind)
};

/// Keeps the smallest `minima[i]` colors of list i. Throws StructuralError if a
/// list is already shorter than its minimum.
std::vector<std::vector<Color>> prune_lists(std::vector<std::vector<Color>> lists,
                                            std::span<const std::size_t> minima);

/// Colors all 3m ring slots (vertices, edges, halfedges). Cuts the cycle at
/// position 0 and runs a DP over (vertex, forward edge) color pairs; each
/// halfedge only needs one free color given its vertex and two cycle edges.
/// Throws Infeasible if no coloring exists.
std::vector<Color> solve_ring(const RingGadget& ring);

/// Colors a constant-size gadget. DoubleEdgeThin uses the constructive
/// procedure below; every other kind is solved by backtracking over the pruned
/// lists (slots ascending, colors ascending). Throws Infeasible.
std::vector<Color> solve_fixed(const FixedGadget& gadget);

/// v1 and e4 share a color, or one of them takes a color missing from L(e1);
/// then e3, v2, e2 greedily and e1 last.
std::vector<Color> solve_double_edge_thin(const FixedGadget& gadget);

/// True when every slot has a color from its list and no conflicting slots share one.
bool is_valid_gadget_coloring(const GadgetShape& shape, const std::vector<std::vector<Color>>& lists,
                              std::span<const Color> colors);

RingGadget ring_from_slots(int length, const std::vector<std::vector<Color>>& slot_lists);
std::vector<std::vector<Color>> ring_slot_lists(const RingGadget& ring);

}  // namespace totalchoose
