#include "totalchoose/generators.hpp"

#include <algorithm>
#include <numeric>

#include "totalchoose/errors.hpp"

namespace totalchoose {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw InputError("Rng::below needs a positive bound");
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t r = engine_();
    if (r >= threshold) return r % bound;
  }
}

namespace {

// Pairs up the free stubs in `points` without loops or repeated pairs.
// `adj` holds current neighbor lists and is extended. Returns false when
// stuck (some stubs could not be paired).
bool pair_points(std::vector<VertexId>& points, std::vector<std::vector<VertexId>>& adj,
                 std::vector<std::pair<VertexId, VertexId>>& edges, Rng& rng) {
  auto joined = [&](VertexId a, VertexId b) {
    return std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end();
  };
  auto take = [&](std::size_t i) {
    points[i] = points.back();
    points.pop_back();
  };
  while (points.size() >= 2) {
    bool paired = false;
    for (int attempt = 0; attempt < 64 && !paired; ++attempt) {
      const std::size_t i = rng.below(points.size());
      const std::size_t j = rng.below(points.size());
      const VertexId a = points[i], b = points[j];
      if (i == j || a == b || joined(a, b)) continue;
      adj[a].push_back(b);
      adj[b].push_back(a);
      edges.emplace_back(std::min(a, b), std::max(a, b));
      take(std::max(i, j));
      take(std::min(i, j));
      paired = true;
    }
    if (paired) continue;
    // Random probing keeps failing: look for any admissible pair.
    bool any = false;
    for (std::size_t i = 0; i < points.size() && !any; ++i)
      for (std::size_t j = i + 1; j < points.size() && !any; ++j)
        any = points[i] != points[j] && !joined(points[i], points[j]);
    if (!any) return false;
  }
  return points.empty();
}

}  // namespace

Multigraph gen_random_regular(int n, int d, std::uint64_t seed) {
  if (n < 0 || d < 0) throw InputError("negative size or degree");
  if ((static_cast<long long>(n) * d) % 2 != 0) throw InputError("n * d must be even for a regular graph");
  if (d > 0 && d >= n) throw InputError("degree must be below the vertex count");
  Rng rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<VertexId> points;
    points.reserve(static_cast<std::size_t>(n) * d);
    for (VertexId v = 0; v < n; ++v) points.insert(points.end(), d, v);
    std::vector<std::vector<VertexId>> adj(n);
    std::vector<std::pair<VertexId, VertexId>> edges;
    if (pair_points(points, adj, edges, rng)) return build_multigraph(n, edges);
  }
  throw InputError("could not generate a regular graph with these parameters");
}

Multigraph gen_deficient(int n, int d, std::uint64_t seed) {
  const Multigraph g = gen_random_regular(n, d, seed);
  if (g.edge_count() == 0) return g;
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  const std::size_t drop = rng.below(static_cast<std::uint64_t>(g.edge_count()));
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (std::size_t j = 0; j < g.edge_list().size(); ++j)
    if (j != drop) edges.push_back(g.edge_list()[j]);
  return build_multigraph(n, edges);
}

Multigraph gen_random_multigraph(int n, int delta, double double_edge_prob, std::uint64_t seed,
                                 double triple_edge_prob) {
  if (n < 0 || delta < 0) throw InputError("negative size or degree");
  if (double_edge_prob < 0 || double_edge_prob > 1 || triple_edge_prob < 0 || triple_edge_prob > 1)
    throw InputError("probabilities must lie in [0, 1]");
  Rng rng(seed);
  std::vector<int> free(n, delta);
  std::vector<std::vector<VertexId>> adj(n);
  std::vector<std::pair<VertexId, VertexId>> base;

  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(order[i], order[rng.below(i + 1)]);
  for (VertexId u : order) {
    int copies = 0;
    if (free[u] >= 3 && rng.unit() < triple_edge_prob)
      copies = 3;
    else if (free[u] >= 2 && rng.unit() < double_edge_prob)
      copies = 2;
    if (copies == 0) continue;
    // Random partner with room, scanning from a random offset.
    const int offset = n > 0 ? static_cast<int>(rng.below(n)) : 0;
    VertexId partner = -1;
    for (int k = 0; k < n && partner < 0; ++k) {
      const VertexId w = (offset + k) % n;
      if (w != u && free[w] >= copies && std::find(adj[u].begin(), adj[u].end(), w) == adj[u].end()) partner = w;
    }
    if (partner < 0) continue;
    adj[u].push_back(partner);
    adj[partner].push_back(u);
    for (int c = 0; c < copies; ++c) base.emplace_back(std::min(u, partner), std::max(u, partner));
    free[u] -= copies;
    free[partner] -= copies;
  }

  // Fill the remaining degree; keep the best of a few attempts.
  std::vector<std::pair<VertexId, VertexId>> best;
  std::size_t best_left = static_cast<std::size_t>(-1);
  for (int attempt = 0; attempt < 20 && best_left != 0; ++attempt) {
    std::vector<VertexId> points;
    for (VertexId v = 0; v < n; ++v) points.insert(points.end(), free[v], v);
    auto adj_try = adj;
    std::vector<std::pair<VertexId, VertexId>> extra;
    pair_points(points, adj_try, extra, rng);
    if (points.size() < best_left) {
      best_left = points.size();
      best = std::move(extra);
    }
  }
  base.insert(base.end(), best.begin(), best.end());
  return build_multigraph(n, base);
}

ListAssignment gen_lists(const Multigraph& g, int size, int palette, std::uint64_t seed) {
  if (size < 0 || palette < size) throw InputError("palette must be at least the list size");
  Rng rng(seed);
  ListAssignment lists(g);
  std::vector<Color> chosen;
  for (int i = 0; i < g.element_count(); ++i) {
    // Floyd's sampling of `size` distinct values.
    chosen.clear();
    for (int j = palette - size; j < palette; ++j) {
      const Color t = static_cast<Color>(rng.below(static_cast<std::uint64_t>(j) + 1));
      chosen.push_back(std::find(chosen.begin(), chosen.end(), t) == chosen.end() ? t : j);
    }
    lists.set(g, g.element_at(i), chosen);
  }
  return lists;
}

bool is_connected(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (EdgeId e : g.incident_edges(v)) {
      const VertexId w = g.other_endpoint(e, v);
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

Multigraph complete_graph(int n) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  return build_multigraph(n, edges);
}

Multigraph complete_bipartite_graph(int a, int b) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  return build_multigraph(a + b, edges);
}

Multigraph cycle_graph(int n) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return build_multigraph(n, edges);
}

Multigraph petersen_graph() {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer 5-cycle
    edges.emplace_back(i, 5 + i);                // spokes
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return build_multigraph(10, edges);
}

Multigraph hypercube_graph(int d) {
  const int n = 1 << d;
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int v = 0; v < n; ++v)
    for (int bit = 0; bit < d; ++bit)
      if (!(v & (1 << bit))) edges.emplace_back(v, v | (1 << bit));
  return build_multigraph(n, edges);
}

}  // namespace totalchoose
