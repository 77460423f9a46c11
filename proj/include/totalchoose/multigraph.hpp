#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace totalchoose {

using VertexId = int;
using EdgeId = int;
using Color = int;

enum class ElementKind : std::uint8_t { Vertex, Edge };

/// A vertex or one edge instance of a multigraph. Parallel copies are
/// distinct elements. Vertices order before edges.
struct ElementId {
  ElementKind kind = ElementKind::Vertex;
  int index = 0;

  static constexpr ElementId vertex(VertexId v) { return {ElementKind::Vertex, v}; }
  static constexpr ElementId edge(EdgeId e) { return {ElementKind::Edge, e}; }
  constexpr bool is_vertex() const { return kind == ElementKind::Vertex; }
  constexpr bool is_edge() const { return kind == ElementKind::Edge; }

  friend constexpr auto operator<=>(const ElementId&, const ElementId&) = default;
};

/// File-style label: "v<i>" / "e<j>", 1-indexed.
std::string to_string(ElementId x);

/// Loopless multigraph, immutable after construction.
class Multigraph {
 public:
  Multigraph() = default;

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(endpoints_.size()); }
  int element_count() const { return vertex_count_ + edge_count(); }

  std::pair<VertexId, VertexId> endpoints(EdgeId e) const { return endpoints_[e]; }
  VertexId other_endpoint(EdgeId e, VertexId v) const {
    auto [a, b] = endpoints_[e];
    return a == v ? b : a;
  }
  bool incident(EdgeId e, VertexId v) const {
    auto [a, b] = endpoints_[e];
    return a == v || b == v;
  }

  std::span<const EdgeId> incident_edges(VertexId v) const {
    return {incidence_.data() + offsets_[v], incidence_.data() + offsets_[v + 1]};
  }
  int degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  int max_degree() const { return max_degree_; }

  /// Number of parallel copies joining u and v. O(degree(u)).
  int multiplicity(VertexId u, VertexId v) const;
  bool adjacent(VertexId u, VertexId v) const { return multiplicity(u, v) > 0; }
  /// Largest multiplicity over all vertex pairs; 0 for an edgeless graph.
  int max_multiplicity() const;
  bool is_simple() const { return max_multiplicity() <= 1; }

  /// Dense numbering of elements: vertices [0, n), edges [n, n + m).
  int dense(ElementId x) const { return x.is_vertex() ? x.index : vertex_count_ + x.index; }
  ElementId element_at(int dense_index) const {
    return dense_index < vertex_count_ ? ElementId::vertex(dense_index)
                                       : ElementId::edge(dense_index - vertex_count_);
  }
  bool contains(ElementId x) const {
    return x.index >= 0 && x.index < (x.is_vertex() ? vertex_count_ : edge_count());
  }

  const std::vector<std::pair<VertexId, VertexId>>& edge_list() const { return endpoints_; }

  friend Multigraph build_multigraph(int n, std::span<const std::pair<VertexId, VertexId>> edges);

 private:
  int vertex_count_ = 0;
  int max_degree_ = 0;
  std::vector<std::pair<VertexId, VertexId>> endpoints_;
  std::vector<int> offsets_{0};
  std::vector<EdgeId> incidence_;
};

/// Edge ids follow input order. Throws InputError on loops or out-of-range endpoints.
Multigraph build_multigraph(int n, std::span<const std::pair<VertexId, VertexId>> edges);
inline Multigraph build_multigraph(int n, std::initializer_list<std::pair<VertexId, VertexId>> edges) {
  return build_multigraph(n, std::span<const std::pair<VertexId, VertexId>>(edges.begin(), edges.size()));
}

/// Work counter for the linear-time checks: every incidence-list entry an
/// algorithm touches counts as one probe. Per thread.
std::uint64_t probe_count();
void reset_probe_count();
void add_probes(std::uint64_t n);

/// Calls fn(ElementId) once for every element adjacent to x in the total graph:
/// for a vertex, its distinct neighbors and incident edges; for an edge, its
/// endpoints and every other edge sharing an endpoint.
template <class Fn>
void for_each_total_neighbor(const Multigraph& g, ElementId x, Fn&& fn) {
  if (x.is_vertex()) {
    const VertexId v = x.index;
    auto inc = g.incident_edges(v);
    add_probes(inc.size());
    for (std::size_t j = 0; j < inc.size(); ++j) {
      const VertexId u = g.other_endpoint(inc[j], v);
      bool repeated = false;
      for (std::size_t i = 0; i < j && !repeated; ++i) repeated = g.other_endpoint(inc[i], v) == u;
      if (!repeated) fn(ElementId::vertex(u));
      fn(ElementId::edge(inc[j]));
    }
    return;
  }
  const EdgeId e = x.index;
  auto [a, b] = g.endpoints(e);
  fn(ElementId::vertex(a));
  fn(ElementId::vertex(b));
  auto inc_a = g.incident_edges(a);
  auto inc_b = g.incident_edges(b);
  add_probes(inc_a.size() + inc_b.size());
  for (EdgeId f : inc_a)
    if (f != e) fn(ElementId::edge(f));
  for (EdgeId f : inc_b)
    if (f != e && g.other_endpoint(f, b) != a) fn(ElementId::edge(f));
}

std::vector<ElementId> total_neighbors(const Multigraph& g, ElementId x);

/// Per-element color sets; sorted and duplicate-free.
class ListAssignment {
 public:
  ListAssignment() = default;
  explicit ListAssignment(const Multigraph& g) : lists_(g.element_count()) {}
  /// Every element gets the same list.
  ListAssignment(const Multigraph& g, std::vector<Color> uniform);

  void set(const Multigraph& g, ElementId x, std::vector<Color> colors);
  std::span<const Color> operator()(const Multigraph& g, ElementId x) const { return lists_[g.dense(x)]; }
  std::span<const Color> at_dense(int i) const { return lists_[i]; }
  bool contains(const Multigraph& g, ElementId x, Color c) const;
  std::size_t size() const { return lists_.size(); }
  /// Smallest list length; 0 when there are no elements.
  std::size_t min_list_size() const;

 private:
  std::vector<std::vector<Color>> lists_;
};

/// Set of elements by dense index. Used as a skip-set instead of mutating graphs.
class ElementMask {
 public:
  ElementMask() = default;
  explicit ElementMask(const Multigraph& g) : bits_(g.element_count(), 0) {}

  void insert(const Multigraph& g, ElementId x) { bits_[g.dense(x)] = 1; }
  bool contains(const Multigraph& g, ElementId x) const { return bits_[g.dense(x)] != 0; }
  bool test(int dense_index) const { return bits_[dense_index] != 0; }
  std::size_t size() const { return bits_.size(); }

 private:
  std::vector<std::uint8_t> bits_;
};

inline constexpr Color kUncolored = -1;

/// Evolving solution: an optional color per element.
class PartialTotalColoring {
 public:
  PartialTotalColoring() = default;
  explicit PartialTotalColoring(const Multigraph& g) : colors_(g.element_count(), kUncolored) {}

  std::optional<Color> get(const Multigraph& g, ElementId x) const {
    Color c = colors_[g.dense(x)];
    return c == kUncolored ? std::nullopt : std::optional<Color>(c);
  }
  Color raw(int dense_index) const { return colors_[dense_index]; }
  bool is_colored(const Multigraph& g, ElementId x) const { return colors_[g.dense(x)] != kUncolored; }
  void set(const Multigraph& g, ElementId x, Color c) { colors_[g.dense(x)] = c; }
  void clear(const Multigraph& g, ElementId x) { colors_[g.dense(x)] = kUncolored; }
  std::size_t size() const { return colors_.size(); }
  std::size_t colored_count() const;

 private:
  std::vector<Color> colors_;
};

struct VerifyResult {
  bool ok = true;
  std::string message;
  /// Offending element(s); second is set for a conflicting pair.
  std::optional<ElementId> first;
  std::optional<ElementId> second;

  explicit operator bool() const { return ok; }
};

/// Checks list membership, properness on the total graph, and (optionally)
/// completeness. A violation is a value, not an exception.
VerifyResult verify_total_coloring(const Multigraph& g, const ListAssignment& lists,
                                   const PartialTotalColoring& coloring, bool require_complete);

}  // namespace totalchoose
