#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "totalchoose/cycle_finder.hpp"
#include "totalchoose/gadget_plan.hpp"
#include "totalchoose/multigraph.hpp"

namespace totalchoose {

/// How often each branch of the case dispatch ran.
struct DispatchStats {
  std::size_t components = 0;
  std::size_t deficient = 0;               // some degree < Delta, or multiplicity >= 3
  std::size_t double_edge_thick = 0;
  std::size_t triangle_two_thick = 0;
  std::size_t four_cycle_two_thick = 0;
  std::size_t double_edge_thin = 0;
  std::size_t k4 = 0;
  std::size_t k33 = 0;
  std::size_t ring3 = 0;
  std::size_t ring4 = 0;
  std::size_t ring_long = 0;
  std::size_t four_cycle_replacement = 0;
  std::size_t triangle_restart = 0;        // 4-cycle with an adjacent pair sharing a neighbor
  std::size_t selection_failures = 0;      // replacement cycle still had two shared pairs

  DispatchStats& operator+=(const DispatchStats& other);
  /// (name, count) for every dispatch branch that must be reachable.
  std::vector<std::pair<std::string, std::size_t>> branches() const;
};

struct TotalColoringResult {
  PartialTotalColoring coloring;
  DispatchStats stats;
  std::uint64_t probes = 0;
};

/// Proper total coloring of G from lists of size >= 2 * Delta(G) - 1.
/// Throws DeltaTooSmall when Delta(G) < 3 and ListTooSmall for a short list.
/// The result has already passed verify_total_coloring.
PartialTotalColoring total_color(const Multigraph& g, const ListAssignment& lists);
TotalColoringResult total_color_with_stats(const Multigraph& g, const ListAssignment& lists);

/// H for a double edge uv in a regular graph of multiplicity <= 2: u, v, both
/// copies, and one further edge at each of u and v as halfedges (thick when
/// they share their other endpoint).
GadgetPlan plan_double_edge(const Multigraph& g, const CycleWitness& two_cycle);

/// H for an induced cycle from find_special_cycle in a regular simple graph.
/// Resolves triangle restarts and the 4-cycle replacement before returning.
GadgetPlan plan_from_cycle(const Multigraph& g, const CycleWitness& c, DispatchStats* stats = nullptr);

/// Fails with StructuralError unless the total-graph adjacency among the
/// plan's elements is exactly the conflict relation of its gadget template.
void check_plan_structure(const Multigraph& g, const GadgetPlan& plan);

/// Given a coloring of everything outside the plan, colors the plan's
/// elements through the matching gadget solver.
void complete_plan(const Multigraph& g, const ListAssignment& lists, const GadgetPlan& plan,
                   PartialTotalColoring& coloring);

}  // namespace totalchoose
