#include "totalchoose/bench.hpp"

#include <algorithm>
#include <chrono>
#include <json.hpp>

#include "totalchoose/errors.hpp"
#include "totalchoose/generators.hpp"
#include "totalchoose/orchestrator.hpp"

namespace totalchoose {

namespace {

template <class Get>
double ratio(const std::vector<BenchRow>& rows, Get get) {
  if (rows.empty()) return 1.0;
  double lo = get(rows.front()), hi = lo;
  for (const auto& r : rows) {
    lo = std::min(lo, get(r));
    hi = std::max(hi, get(r));
  }
  return lo > 0 ? hi / lo : 1.0;
}

}  // namespace

double BenchReport::probe_ratio() const {
  return ratio(rows, [](const BenchRow& r) { return r.probes_per_element(); });
}

double BenchReport::time_ratio() const {
  return ratio(rows, [](const BenchRow& r) { return r.seconds_per_element(); });
}

std::string BenchReport::to_json() const {
  nlohmann::ordered_json j;
  j["delta"] = delta;
  j["seed"] = seed;
  auto& arr = j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    arr.push_back({{"n", r.n},
                   {"elements", r.elements},
                   {"seconds", r.seconds},
                   {"probes", r.probes},
                   {"seconds_per_element", r.seconds_per_element()},
                   {"probes_per_element", r.probes_per_element()}});
  }
  j["probe_ratio"] = probe_ratio();
  j["time_ratio"] = time_ratio();
  return j.dump(2);
}

BenchReport run_bench(int delta, const std::vector<int>& sizes, std::uint64_t seed, int repetitions) {
  if (sizes.empty()) throw InputError("bench needs at least one size");
  for (std::size_t i = 1; i < sizes.size(); ++i)
    if (sizes[i] <= sizes[i - 1]) throw InputError("bench sizes must be strictly increasing");
  if (repetitions < 1) throw InputError("bench needs at least one repetition");

  BenchReport report;
  report.delta = delta;
  report.seed = seed;
  std::vector<Color> uniform;
  for (Color c = 0; c < 2 * delta - 1; ++c) uniform.push_back(c);

  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const Multigraph g = gen_random_regular(sizes[i], delta, seed + i);
    const ListAssignment lists(g, uniform);
    BenchRow row;
    row.n = sizes[i];
    row.elements = g.element_count();
    row.seconds = 1e300;
    for (int rep = 0; rep < repetitions; ++rep) {
      const auto start = std::chrono::steady_clock::now();
      const TotalColoringResult result = total_color_with_stats(g, lists);
      const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
      row.seconds = std::min(row.seconds, took.count());
      row.probes = result.probes;
    }
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace totalchoose
