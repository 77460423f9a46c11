#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace totalchoose {

struct BenchRow {
  int n = 0;
  long long elements = 0;
  double seconds = 0;          // best of the repetitions
  std::uint64_t probes = 0;
  double seconds_per_element() const { return seconds / static_cast<double>(elements); }
  double probes_per_element() const { return static_cast<double>(probes) / static_cast<double>(elements); }
};

struct BenchReport {
  int delta = 0;
  std::uint64_t seed = 0;
  std::vector<BenchRow> rows;  // sizes strictly increasing

  /// max / min over the rows.
  double probe_ratio() const;
  double time_ratio() const;
  std::string to_json() const;
};

/// Colors a random delta-regular graph of each size from uniform lists
/// {0, ..., 2 delta - 2}; timing is the best of `repetitions` runs and covers
/// only the coloring (including its final verification), not generation.
/// Sizes must be strictly increasing.
BenchReport run_bench(int delta, const std::vector<int>& sizes, std::uint64_t seed, int repetitions = 3);

}  // namespace totalchoose
