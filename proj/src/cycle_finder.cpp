#include "totalchoose/cycle_finder.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <unordered_map>

#include "totalchoose/errors.hpp"

namespace totalchoose {

namespace {

EdgeId edge_between(const Multigraph& g, VertexId a, VertexId b) {
  auto inc = g.incident_edges(a);
  add_probes(inc.size());
  for (EdgeId e : inc)
    if (g.other_endpoint(e, a) == b) return e;
  return -1;
}

CycleWitness cycle_from(const Multigraph& g, std::vector<VertexId> vertices) {
  CycleWitness c;
  const int len = static_cast<int>(vertices.size());
  for (int i = 0; i < len; ++i) {
    const EdgeId e = edge_between(g, vertices[i], vertices[(i + 1) % len]);
    if (e < 0) throw StructuralError("cycle vertices are not joined by an edge");
    c.edges.push_back(e);
  }
  c.vertices = std::move(vertices);
  return c;
}

}  // namespace

std::optional<CycleWitness> find_multi_edge(const Multigraph& g) {
  std::vector<EdgeId> seen(g.vertex_count(), -1);
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    auto inc = g.incident_edges(u);
    add_probes(2 * inc.size());
    std::optional<CycleWitness> found;
    for (EdgeId e : inc) {
      const VertexId w = g.other_endpoint(e, u);
      if (seen[w] >= 0) {
        found = CycleWitness{{u, w}, {seen[w], e}};
        break;
      }
      seen[w] = e;
    }
    for (EdgeId e : inc) seen[g.other_endpoint(e, u)] = -1;
    if (found) return found;
  }
  return std::nullopt;
}

CycleWitness shortest_cycle_through(const Multigraph& g, VertexId v) {
  const int n = g.vertex_count();
  if (v < 0 || v >= n) throw InputError("vertex out of range");
  std::vector<int> depth(n, -1);
  std::vector<EdgeId> parent_edge(n, -1);
  std::vector<VertexId> branch(n, -1);
  depth[v] = 0;
  branch[v] = v;
  std::deque<VertexId> queue{v};

  int best = std::numeric_limits<int>::max();
  VertexId best_x = -1, best_y = -1;
  EdgeId best_edge = -1;
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    if (best <= 2 * depth[x] + 1) break;
    auto inc = g.incident_edges(x);
    add_probes(inc.size());
    for (EdgeId e : inc) {
      const VertexId y = g.other_endpoint(e, x);
      if (depth[y] == -1) {
        depth[y] = depth[x] + 1;
        parent_edge[y] = e;
        branch[y] = x == v ? y : branch[x];
        queue.push_back(y);
      } else if (e != parent_edge[x] && e != parent_edge[y] && x != v && y != v && branch[x] != branch[y]) {
        const int len = depth[x] + depth[y] + 1;
        if (len < best) {
          best = len;
          best_x = x;
          best_y = y;
          best_edge = e;
        }
      }
    }
  }
  if (best_edge < 0) throw NoCycleThrough("no cycle passes through " + to_string(ElementId::vertex(v)));

  CycleWitness c;
  // v ... x along the tree, then y ... back towards v.
  std::vector<VertexId> up_x;
  std::vector<EdgeId> up_x_edges;
  for (VertexId t = best_x; t != v; t = g.other_endpoint(parent_edge[t], t)) {
    up_x.push_back(t);
    up_x_edges.push_back(parent_edge[t]);
  }
  c.vertices.push_back(v);
  for (auto it = up_x.rbegin(); it != up_x.rend(); ++it) c.vertices.push_back(*it);
  for (auto it = up_x_edges.rbegin(); it != up_x_edges.rend(); ++it) c.edges.push_back(*it);
  c.edges.push_back(best_edge);
  for (VertexId t = best_y; t != v; t = g.other_endpoint(parent_edge[t], t)) {
    c.vertices.push_back(t);
    c.edges.push_back(parent_edge[t]);
  }

  // A chord would close a strictly shorter cycle through v.
  if (!is_induced_cycle(g, c))
    throw StructuralError("shortest cycle through " + to_string(ElementId::vertex(v)) + " has a chord");
  return c;
}

CycleWitness specialize_cycle(const Multigraph& g, const CycleWitness& d) {
  const int len = d.length();
  if (len < 3) return d;
  std::unordered_map<VertexId, int> position;
  for (int i = 0; i < len; ++i) position.emplace(d.vertices[i], i);
  std::unordered_map<VertexId, int> owner;  // off-cycle neighbor -> first cycle position seeing it

  int xi = -1, wi = -1;
  VertexId y = -1;
  for (int i = 0; i < len && y < 0; ++i) {
    const VertexId w = d.vertices[i];
    auto inc = g.incident_edges(w);
    add_probes(inc.size());
    for (EdgeId e : inc) {
      const VertexId t = g.other_endpoint(e, w);
      if (position.count(t)) continue;
      auto [it, inserted] = owner.emplace(t, i);
      if (!inserted && it->second != i) {
        xi = it->second;
        wi = i;
        y = t;
        break;
      }
    }
  }
  if (y < 0) return d;

  const VertexId x = d.vertices[xi];
  const VertexId w = d.vertices[wi];
  const int forward = (wi - xi + len) % len;
  if (forward == 1 || forward == len - 1) return cycle_from(g, {x, w, y});

  VertexId z;
  if (forward == 2)
    z = d.vertices[(xi + 1) % len];
  else if (len - forward == 2)
    z = d.vertices[(wi + 1) % len];
  else
    throw StructuralError("cycle is not a shortest cycle: shared neighbor of distant vertices");
  if (edge_between(g, y, z) >= 0) return cycle_from(g, {x, y, z});
  return cycle_from(g, {x, y, w, z});
}

CycleWitness find_special_cycle(const Multigraph& g, VertexId start) {
  if (auto two = find_multi_edge(g)) return *two;
  return specialize_cycle(g, shortest_cycle_through(g, start));
}

bool is_valid_cycle(const Multigraph& g, const CycleWitness& c) {
  const int len = c.length();
  if (len < 2 || static_cast<int>(c.edges.size()) != len) return false;
  std::vector<VertexId> sorted = c.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  std::vector<EdgeId> edges = c.edges;
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) return false;
  for (int i = 0; i < len; ++i) {
    const EdgeId e = c.edges[i];
    if (e < 0 || e >= g.edge_count()) return false;
    auto [a, b] = g.endpoints(e);
    const VertexId u = c.vertices[i], w = c.vertices[(i + 1) % len];
    if (std::minmax(a, b) != std::minmax(u, w)) return false;
  }
  return true;
}

bool is_induced_cycle(const Multigraph& g, const CycleWitness& c) {
  if (!is_valid_cycle(g, c)) return false;
  std::unordered_map<VertexId, int> position;
  for (int i = 0; i < c.length(); ++i) position.emplace(c.vertices[i], i);
  std::vector<EdgeId> cycle_edges = c.edges;
  std::sort(cycle_edges.begin(), cycle_edges.end());
  for (VertexId v : c.vertices) {
    add_probes(g.incident_edges(v).size());
    for (EdgeId e : g.incident_edges(v))
      if (position.count(g.other_endpoint(e, v)) && !std::binary_search(cycle_edges.begin(), cycle_edges.end(), e))
        return false;
  }
  return true;
}

}  // namespace totalchoose
