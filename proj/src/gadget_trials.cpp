#include "totalchoose/gadget_trials.hpp"

#include <algorithm>

#include "totalchoose/errors.hpp"
#include "totalchoose/gadgets.hpp"
#include "totalchoose/generators.hpp"
#include "totalchoose/oracle.hpp"

namespace totalchoose {

namespace {

std::vector<Color> sample(Rng& rng, std::size_t size, int palette) {
  std::vector<Color> out;
  for (int j = palette - static_cast<int>(size); j < palette; ++j) {
    const Color t = static_cast<Color>(rng.below(static_cast<std::uint64_t>(j) + 1));
    out.push_back(std::find(out.begin(), out.end(), t) == out.end() ? t : j);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string describe(const std::vector<std::vector<Color>>& lists) {
  std::string s;
  for (const auto& l : lists) {
    s += '{';
    for (std::size_t i = 0; i < l.size(); ++i) s += (i ? "," : "") + std::to_string(l[i]);
    s += '}';
  }
  return s;
}

}  // namespace

GadgetTrialReport run_gadget_trials(GadgetKind kind, int trials, std::uint64_t seed, int palette, int ring_length) {
  const GadgetShape shape = gadget_shape(kind, ring_length);
  const auto minima = shape.minima();
  for (std::size_t m : minima)
    if (static_cast<int>(m) > palette) throw InputError("palette smaller than a slot minimum");
  const auto conflicts = shape.conflicts();

  GadgetTrialReport report;
  report.kind = kind;
  report.ring_length = ring_length;
  report.trials = trials;
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    std::vector<std::vector<Color>> lists;
    for (std::size_t m : minima) lists.push_back(sample(rng, m, palette));

    bool solved = false;
    std::string why;
    try {
      const std::vector<Color> colors = kind == GadgetKind::Ring
                                            ? solve_ring(ring_from_slots(ring_length, lists))
                                            : solve_fixed(FixedGadget{kind, lists});
      solved = is_valid_gadget_coloring(shape, lists, colors);
      if (!solved) why = "invalid coloring";
    } catch (const Infeasible& e) {
      why = e.what();
    }
    const bool feasible = oracle_list_color(conflicts, lists).status == OracleStatus::Found;
    report.solved += solved;
    report.oracle_feasible += feasible;
    if (solved != feasible) ++report.mismatches;
    if ((!solved || solved != feasible) && report.failures.size() < 5)
      report.failures.push_back("trial " + std::to_string(t) + ": " + describe(lists) + " " + why);
  }
  return report;
}

}  // namespace totalchoose
