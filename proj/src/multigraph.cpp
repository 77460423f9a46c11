#include "totalchoose/multigraph.hpp"

#include <algorithm>

#include "totalchoose/errors.hpp"

namespace totalchoose {

namespace {
thread_local std::uint64_t g_probes = 0;
}

std::uint64_t probe_count() { return g_probes; }
void reset_probe_count() { g_probes = 0; }
void add_probes(std::uint64_t n) { g_probes += n; }

std::string to_string(ElementId x) {
  return (x.is_vertex() ? "v" : "e") + std::to_string(x.index + 1);
}

Multigraph build_multigraph(int n, std::span<const std::pair<VertexId, VertexId>> edges) {
  if (n < 0) throw InputError("negative vertex count");
  Multigraph g;
  g.vertex_count_ = n;
  g.endpoints_.assign(edges.begin(), edges.end());
  std::vector<int> degree(n, 0);
  for (std::size_t j = 0; j < edges.size(); ++j) {
    auto [a, b] = edges[j];
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw InputError("edge " + std::to_string(j + 1) + " has an endpoint out of range");
    if (a == b) throw InputError("edge " + std::to_string(j + 1) + " is a loop");
    ++degree[a];
    ++degree[b];
  }
  g.offsets_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.incidence_.resize(g.offsets_[n]);
  std::vector<int> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (std::size_t j = 0; j < edges.size(); ++j) {
    g.incidence_[fill[edges[j].first]++] = static_cast<EdgeId>(j);
    g.incidence_[fill[edges[j].second]++] = static_cast<EdgeId>(j);
  }
  g.max_degree_ = degree.empty() ? 0 : *std::max_element(degree.begin(), degree.end());
  return g;
}

int Multigraph::multiplicity(VertexId u, VertexId v) const {
  int count = 0;
  for (EdgeId e : incident_edges(u))
    if (other_endpoint(e, u) == v) ++count;
  return count;
}

int Multigraph::max_multiplicity() const {
  int best = 0;
  std::vector<int> seen(vertex_count_, 0);
  for (VertexId v = 0; v < vertex_count_; ++v) {
    for (EdgeId e : incident_edges(v)) best = std::max(best, ++seen[other_endpoint(e, v)]);
    for (EdgeId e : incident_edges(v)) seen[other_endpoint(e, v)] = 0;
  }
  return best;
}

std::vector<ElementId> total_neighbors(const Multigraph& g, ElementId x) {
  if (!g.contains(x)) throw InputError("element " + to_string(x) + " is not in the graph");
  std::vector<ElementId> out;
  for_each_total_neighbor(g, x, [&](ElementId y) { out.push_back(y); });
  std::sort(out.begin(), out.end());
  return out;
}

ListAssignment::ListAssignment(const Multigraph& g, std::vector<Color> uniform) {
  std::sort(uniform.begin(), uniform.end());
  uniform.erase(std::unique(uniform.begin(), uniform.end()), uniform.end());
  lists_.assign(g.element_count(), uniform);
}

void ListAssignment::set(const Multigraph& g, ElementId x, std::vector<Color> colors) {
  std::sort(colors.begin(), colors.end());
  colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
  if (!colors.empty() && colors.front() < 0) throw InputError("negative color in list of " + to_string(x));
  lists_[g.dense(x)] = std::move(colors);
}

bool ListAssignment::contains(const Multigraph& g, ElementId x, Color c) const {
  auto l = (*this)(g, x);
  return std::binary_search(l.begin(), l.end(), c);
}

std::size_t ListAssignment::min_list_size() const {
  std::size_t best = lists_.empty() ? 0 : lists_.front().size();
  for (const auto& l : lists_) best = std::min(best, l.size());
  return best;
}

std::size_t PartialTotalColoring::colored_count() const {
  return static_cast<std::size_t>(std::count_if(colors_.begin(), colors_.end(),
                                                [](Color c) { return c != kUncolored; }));
}

VerifyResult verify_total_coloring(const Multigraph& g, const ListAssignment& lists,
                                   const PartialTotalColoring& coloring, bool require_complete) {
  const int total = g.element_count();
  if (static_cast<int>(coloring.size()) != total || static_cast<int>(lists.size()) != total)
    return {false, "coloring or list assignment does not match the graph size", {}, {}};
  for (int i = 0; i < total; ++i) {
    const ElementId x = g.element_at(i);
    const Color c = coloring.raw(i);
    if (c == kUncolored) {
      if (require_complete) return {false, to_string(x) + " is uncolored", x, {}};
      continue;
    }
    if (!lists.contains(g, x, c))
      return {false, to_string(x) + " has color " + std::to_string(c) + " outside its list", x, {}};
  }
  for (int i = 0; i < total; ++i) {
    const Color c = coloring.raw(i);
    if (c == kUncolored) continue;
    const ElementId x = g.element_at(i);
    std::optional<ElementId> clash;
    for_each_total_neighbor(g, x, [&](ElementId y) {
      if (!clash && g.dense(y) > i && coloring.raw(g.dense(y)) == c) clash = y;
    });
    if (clash)
      return {false, to_string(x) + " conflicts with " + to_string(*clash) + " (color " + std::to_string(c) + ")",
              x, clash};
  }
  return {};
}

}  // namespace totalchoose
