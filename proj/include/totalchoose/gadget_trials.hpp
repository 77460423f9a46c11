#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "totalchoose/gadget_plan.hpp"

namespace totalchoose {

struct GadgetTrialReport {
  GadgetKind kind = GadgetKind::Ring;
  int ring_length = 0;
  int trials = 0;
  int solved = 0;            // solver returned a valid coloring
  int oracle_feasible = 0;
  int mismatches = 0;        // solver and oracle disagree on feasibility
  std::vector<std::string> failures;  // first few, human readable

  bool clean() const { return solved == trials && mismatches == 0; }
};

/// Random list assignments of exactly the role minima drawn from
/// {0, ..., palette - 1}; each is solved by the dedicated solver and
/// cross-checked against the generic backtracking oracle.
GadgetTrialReport run_gadget_trials(GadgetKind kind, int trials, std::uint64_t seed, int palette = 12,
                                    int ring_length = 0);

}  // namespace totalchoose
