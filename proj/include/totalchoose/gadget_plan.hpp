#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "totalchoose/multigraph.hpp"

namespace totalchoose {

/// Shapes of the uncolored subgraph H. Ring is a cycle with one halfedge per
/// vertex; the rest are the six constant-size shapes.
enum class GadgetKind {
  Ring,
  DoubleEdgeThick,    // double edge, thick halfedge at each end
  TriangleTwoThick,   // triangle, two thick halfedges and one thin
  FourCycleTwoThick,  // 4-cycle, thick at two opposite vertices, thin at the others
  DoubleEdgeThin,     // double edge, thin halfedge at each end
  K4,
  K33,
};

std::string_view kind_name(GadgetKind kind);
/// Parses the names produced by kind_name (plus a few short aliases); throws InputError.
GadgetKind parse_kind(std::string_view name);

enum class SlotRole { FullVertex, FullEdge, ThickHalfedge, ThinHalfedge };

/// Smallest residual list a role is guaranteed: vertex 4, edge 5, thick 3, thin 2.
constexpr std::size_t role_minimum(SlotRole role) {
  switch (role) {
    case SlotRole::FullVertex: return 4;
    case SlotRole::FullEdge: return 5;
    case SlotRole::ThickHalfedge: return 3;
    case SlotRole::ThinHalfedge: return 2;
  }
  return 0;
}

struct PlannedHalfedge {
  EdgeId edge = 0;
  VertexId inner = 0;  // the endpoint inside H
  bool thick = false;
};

/// The subgraph H left uncolored by the greedy pass. Vertices, edges and
/// halfedges are listed in the slot order of the matching gadget template
/// (see gadgets.hpp), so slot i of the solver is element i of elements().
struct GadgetPlan {
  GadgetKind kind = GadgetKind::Ring;
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  std::vector<PlannedHalfedge> halfedges;
  VertexId root = 0;

  std::vector<ElementId> elements() const;
  std::vector<SlotRole> roles() const;
  ElementMask mask(const Multigraph& g) const;
};

}  // namespace totalchoose
