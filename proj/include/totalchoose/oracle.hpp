#pragma once

#include <cstdint>
#include <vector>

#include "totalchoose/multigraph.hpp"

namespace totalchoose {

enum class OracleStatus { Found, Infeasible, BudgetExceeded };

struct OracleResult {
  OracleStatus status = OracleStatus::BudgetExceeded;
  PartialTotalColoring coloring;  // complete when status == Found
  std::uint64_t nodes = 0;
};

struct CspResult {
  OracleStatus status = OracleStatus::BudgetExceeded;
  std::vector<Color> colors;  // by node when status == Found
  std::uint64_t nodes = 0;
};

/// Exact list coloring of an arbitrary conflict graph (symmetric adjacency
/// lists), most constrained node first, colors ascending.
CspResult oracle_list_color(const std::vector<std::vector<int>>& adjacency,
                            const std::vector<std::vector<Color>>& lists, std::uint64_t node_budget = 10'000'000);

/// Exact list total coloring by backtracking on an explicitly built total
/// graph, choosing the most constrained element first. Infeasible is exact
/// when the node budget was not exhausted. Shares no code with the pipeline.
OracleResult oracle_total_color(const Multigraph& g, const ListAssignment& lists,
                                std::uint64_t node_budget = 10'000'000);

}  // namespace totalchoose
