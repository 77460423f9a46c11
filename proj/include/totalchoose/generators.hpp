#pragma once

#include <cstdint>
#include <random>

#include "totalchoose/multigraph.hpp"

namespace totalchoose {

/// Seeded randomness with a fully specified output stream: std::mt19937_64
/// seeded with the raw seed, bounded draws by rejection sampling (no
/// implementation-defined std distributions), so corpora reproduce anywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Uniform-ish random simple d-regular graph by the pairing model, pairing
/// points one at a time and restarting when stuck. InputError if n*d is odd
/// or d >= n.
Multigraph gen_random_regular(int n, int d, std::uint64_t seed);

/// Random simple d-regular graph minus one edge: two vertices of degree d - 1.
Multigraph gen_deficient(int n, int d, std::uint64_t seed);

/// Random multigraph with maximum degree <= delta. A first pass joins random
/// pairs of vertices by double edges (each vertex tried with probability
/// `double_edge_prob`; triple edges with `triple_edge_prob`); remaining
/// degree is filled by simple random pairing. Loopless; usually regular.
Multigraph gen_random_multigraph(int n, int delta, double double_edge_prob, std::uint64_t seed,
                                 double triple_edge_prob = 0.0);

/// Every element gets exactly `size` distinct colors from {0, ..., palette - 1}.
ListAssignment gen_lists(const Multigraph& g, int size, int palette, std::uint64_t seed);

bool is_connected(const Multigraph& g);

Multigraph complete_graph(int n);
Multigraph complete_bipartite_graph(int a, int b);
Multigraph cycle_graph(int n);
Multigraph petersen_graph();
/// d-dimensional hypercube.
Multigraph hypercube_graph(int d);

}  // namespace totalchoose
