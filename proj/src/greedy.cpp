#include "totalchoose/greedy.hpp"

#include <algorithm>
#include <deque>

#include "totalchoose/errors.hpp"

namespace totalchoose {

namespace {

// Plain BFS over S(G) - skip from `seeds`, writing depths into `depth`
// (-1 = not reached). Seeds may be skipped. Returns the newly reached
// elements in visit order.
std::vector<int> bfs_subdivision(const Multigraph& g, std::span<const VertexId> seeds, const ElementMask& skip,
                                 std::vector<int>& depth) {
  std::vector<int> reached;
  std::deque<int> queue;
  for (VertexId r : seeds) {
    if (depth[r] != -1) continue;
    depth[r] = 0;
    queue.push_back(r);
    reached.push_back(r);
  }
  const int n = g.vertex_count();
  while (!queue.empty()) {
    const int i = queue.front();
    queue.pop_front();
    auto visit = [&](int j) {
      if (depth[j] != -1 || skip.test(j)) return;
      depth[j] = depth[i] + 1;
      queue.push_back(j);
      reached.push_back(j);
    };
    if (i < n) {
      auto inc = g.incident_edges(i);
      add_probes(inc.size());
      for (EdgeId e : inc) visit(n + e);
    } else {
      auto [a, b] = g.endpoints(i - n);
      add_probes(2);
      visit(a);
      visit(b);
    }
  }
  return reached;
}

int free_degree(const Multigraph& g, VertexId v, const ElementMask& skip) {
  int d = 0;
  for (EdgeId e : g.incident_edges(v))
    if (!skip.contains(g, ElementId::edge(e))) ++d;
  return d;
}

}  // namespace

SubdivisionDistanceMap subdivision_distances(const Multigraph& g, std::span<const VertexId> roots,
                                             const ElementMask& skip) {
  const int total = g.element_count();
  if (static_cast<int>(skip.size()) != total) throw StructuralError("skip mask does not match the graph");
  for (VertexId r : roots)
    if (r < 0 || r >= g.vertex_count()) throw InputError("root vertex out of range");
  std::vector<int> depth(total, -1);
  bfs_subdivision(g, roots, skip, depth);
  SubdivisionDistanceMap f;
  f.roots.assign(roots.begin(), roots.end());
  f.dist.resize(total);
  for (int i = 0; i < total; ++i) {
    if (skip.test(i)) {
      f.dist[i] = kSkipped;
    } else if (depth[i] < 0) {
      throw StructuralError(to_string(g.element_at(i)) + " is unreachable from the roots after skipping");
    } else {
      f.dist[i] = depth[i];
    }
  }
  return f;
}

SubdivisionDistanceMap subdivision_distances(const Multigraph& g, VertexId root, const ElementMask& skip) {
  if (root >= 0 && root < g.vertex_count() && skip.test(root))
    throw StructuralError("root " + to_string(ElementId::vertex(root)) + " is skipped");
  const VertexId roots[] = {root};
  return subdivision_distances(g, roots, skip);
}

SubdivisionDistanceMap subdivision_distances(const Multigraph& g, VertexId root) {
  return subdivision_distances(g, root, ElementMask(g));
}

std::vector<ElementId> distance_order(const Multigraph& g, const SubdivisionDistanceMap& f,
                                    std::span<const EdgeId> heavy_edge, int delta) {
  if (delta <= 0) delta = g.max_degree();
  const int total = g.element_count();
  if (static_cast<int>(f.dist.size()) != total) throw StructuralError("distance map does not match the graph");

  ElementMask skip(g);
  for (int i = 0; i < total; ++i)
    if (f.skipped(i)) skip.insert(g, g.element_at(i));

  std::vector<EdgeId> heavy(heavy_edge.begin(), heavy_edge.end());
  std::sort(heavy.begin(), heavy.end());
  if (!heavy.empty()) {
    if (heavy.size() < 3) throw StructuralError("heavy edge needs at least 3 parallel copies");
    if (f.roots.size() != 1 || f.skipped(f.roots.front()))
      throw StructuralError("heavy edge requires a single colored root");
    const VertexId root = f.roots.front();
    const auto ends = g.endpoints(heavy.front());
    if (ends.first != root && ends.second != root) throw StructuralError("heavy edge is not incident to the root");
    for (EdgeId e : heavy) {
      auto [a, b] = g.endpoints(e);
      if (std::minmax(a, b) != std::minmax(ends.first, ends.second))
        throw StructuralError("heavy edge copies are not parallel");
      if (f.skipped(g.dense(ElementId::edge(e)))) throw StructuralError("heavy edge copy is skipped");
    }
  } else {
    for (VertexId r : f.roots) {
      if (f.skipped(r)) continue;
      if (free_degree(g, r, skip) >= delta)
        throw StructuralError("root " + to_string(ElementId::vertex(r)) + " has full degree and no heavy edge");
    }
  }

  int max_dist = 0;
  for (int d : f.dist) max_dist = std::max(max_dist, d);
  std::vector<std::vector<int>> buckets(max_dist + 1);
  for (int i = 0; i < total; ++i)
    if (!f.skipped(i)) buckets[f.dist[i]].push_back(i);

  if (!heavy.empty() && max_dist >= 1) {
    auto& ones = buckets[1];
    std::stable_partition(ones.begin(), ones.end(), [&](int i) {
      return !std::binary_search(heavy.begin(), heavy.end(), i - g.vertex_count());
    });
  }

  std::vector<ElementId> order;
  order.reserve(total);
  for (int d = max_dist; d >= 0; --d)
    for (int i : buckets[d]) order.push_back(g.element_at(i));
  return order;
}

PartialTotalColoring greedy_extend(const Multigraph& g, const ListAssignment& lists,
                                   std::span<const ElementId> order, PartialTotalColoring coloring,
                                   const SubdivisionDistanceMap* f) {
  std::vector<Color> blocked;
  for (ElementId x : order) {
    if (coloring.is_colored(g, x))
      throw StructuralError(to_string(x) + " is already colored; order must be disjoint from the fixed part");
    blocked.clear();
    int uncolored = 0;
    for_each_total_neighbor(g, x, [&](ElementId y) {
      if (auto c = coloring.get(g, y))
        blocked.push_back(*c);
      else
        ++uncolored;
    });
    if (f != nullptr && (*f)(g, x) >= 2 && uncolored < 2)
      throw OrderInvariantViolated(to_string(x) + " at distance " + std::to_string((*f)(g, x)) +
                            " has fewer than two uncolored total neighbors");
    Color chosen = kUncolored;
    for (Color c : lists(g, x)) {
      if (std::find(blocked.begin(), blocked.end(), c) == blocked.end()) {
        chosen = c;
        break;
      }
    }
    if (chosen == kUncolored)
      throw NoAvailableColor(to_string(x), "no available color for " + to_string(x));
    coloring.set(g, x, chosen);
  }
  return coloring;
}

void color_outside(const Multigraph& g, const ListAssignment& lists, const ElementMask& skip,
                   std::span<const VertexId> anchors, PartialTotalColoring& coloring, int delta) {
  const int total = g.element_count();
  std::vector<int> depth(total, -1);
  bfs_subdivision(g, anchors, skip, depth);

  std::vector<VertexId> roots(anchors.begin(), anchors.end());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (depth[v] != -1 || skip.test(v)) continue;
    // v's part of G - skip is cut off from H except through skipped edges.
    const VertexId seed[] = {v};
    VertexId root = -1;
    for (int i : bfs_subdivision(g, seed, skip, depth))
      if (i < g.vertex_count() && (root < 0 || i < root) && free_degree(g, i, skip) < g.degree(i)) root = i;
    if (root < 0)
      throw StructuralError("a part of G - H containing " + to_string(ElementId::vertex(v)) +
                            " touches no removed edge");
    roots.push_back(root);
  }
  for (int i = 0; i < total; ++i)
    if (depth[i] == -1 && !skip.test(i))
      throw StructuralError(to_string(g.element_at(i)) + " is not reachable from any root");

  const auto f = subdivision_distances(g, roots, skip);
  const auto order = distance_order(g, f, {}, delta);
  coloring = greedy_extend(g, lists, order, std::move(coloring), &f);
}

ResidualLists residual_lists(const Multigraph& g, const ListAssignment& lists,
                             const PartialTotalColoring& partial, const GadgetPlan& plan) {
  const ElementMask in_plan = plan.mask(g);
  for (int i = 0; i < g.element_count(); ++i) {
    const bool colored = partial.raw(i) != kUncolored;
    if (colored == in_plan.test(i))
      throw StructuralError(to_string(g.element_at(i)) +
                            (colored ? " belongs to H but is colored" : " lies outside H but is uncolored"));
  }
  ResidualLists out;
  out.elements = plan.elements();
  out.roles = plan.roles();
  out.lists.reserve(out.elements.size());
  std::vector<Color> blocked;
  for (std::size_t s = 0; s < out.elements.size(); ++s) {
    const ElementId x = out.elements[s];
    blocked.clear();
    for_each_total_neighbor(g, x, [&](ElementId y) {
      if (auto c = partial.get(g, y)) blocked.push_back(*c);
    });
    std::vector<Color> residual;
    for (Color c : lists(g, x))
      if (std::find(blocked.begin(), blocked.end(), c) == blocked.end()) residual.push_back(c);
    const std::size_t need = role_minimum(out.roles[s]);
    if (residual.size() < need) throw MinimumViolated(to_string(x), residual.size(), need);
    out.lists.push_back(std::move(residual));
  }
  return out;
}

}  // namespace totalchoose
