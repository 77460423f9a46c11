#pragma once

#include <optional>
#include <span>
#include <vector>

#include "totalchoose/multigraph.hpp"

namespace totalchoose {

/// A cycle given by its cyclic vertex sequence; edges[i] joins vertices[i] and
/// vertices[(i + 1) % length]. A double edge is a cycle of length 2.
struct CycleWitness {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  int length() const { return static_cast<int>(vertices.size()); }
};

/// A pair of parallel edges as a 2-cycle, or nullopt if G is simple.
std::optional<CycleWitness> find_multi_edge(const Multigraph& g);

/// Minimum-length cycle through v in a simple graph, by BFS from v. Throws
/// NoCycleThrough when v lies on no cycle. The result is checked to be chordless.
CycleWitness shortest_cycle_through(const Multigraph& g, VertexId v);

/// If two vertices w, x of D share a neighbor y off D, returns the triangle
/// {w, x, y} (w ~ x) or the 4-cycle w y x z with z their common neighbor on D
/// (a triangle instead if that 4-cycle has the chord y z). Otherwise D.
CycleWitness specialize_cycle(const Multigraph& g, const CycleWitness& d);

/// Induced cycle C such that |C| <= 4 or no two vertices of C have a common
/// neighbor off C. G must be connected and regular; `start` seeds the BFS.
CycleWitness find_special_cycle(const Multigraph& g, VertexId start = 0);

/// Structural checks used by tests and assertions.
bool is_valid_cycle(const Multigraph& g, const CycleWitness& c);
bool is_induced_cycle(const Multigraph& g, const CycleWitness& c);

}  // namespace totalchoose
