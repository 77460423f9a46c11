#include "totalchoose/orchestrator.hpp"

#include <algorithm>
#include <unordered_map>

#include "totalchoose/errors.hpp"
#include "totalchoose/gadgets.hpp"
#include "totalchoose/greedy.hpp"

namespace totalchoose {

DispatchStats& DispatchStats::operator+=(const DispatchStats& o) {
  components += o.components;
  deficient += o.deficient;
  double_edge_thick += o.double_edge_thick;
  triangle_two_thick += o.triangle_two_thick;
  four_cycle_two_thick += o.four_cycle_two_thick;
  double_edge_thin += o.double_edge_thin;
  k4 += o.k4;
  k33 += o.k33;
  ring3 += o.ring3;
  ring4 += o.ring4;
  ring_long += o.ring_long;
  four_cycle_replacement += o.four_cycle_replacement;
  triangle_restart += o.triangle_restart;
  selection_failures += o.selection_failures;
  return *this;
}

std::vector<std::pair<std::string, std::size_t>> DispatchStats::branches() const {
  return {
      {"deficient", deficient},
      {"double-edge-thick", double_edge_thick},
      {"triangle-two-thick", triangle_two_thick},
      {"four-cycle-two-thick", four_cycle_two_thick},
      {"double-edge-thin", double_edge_thin},
      {"k4", k4},
      {"k33", k33},
      {"ring-m3", ring3},
      {"ring-m4", ring4},
      {"ring-long", ring_long},
      {"four-cycle-replacement", four_cycle_replacement},
  };
}

namespace {

EdgeId edge_between(const Multigraph& g, VertexId a, VertexId b) {
  for (EdgeId e : g.incident_edges(a))
    if (g.other_endpoint(e, a) == b) return e;
  throw StructuralError("expected an edge between " + to_string(ElementId::vertex(a)) + " and " +
                        to_string(ElementId::vertex(b)));
}

struct Selection {
  std::vector<EdgeId> edges;
  std::vector<VertexId> outer;
  int shared_pairs = 0;
};

int count_shared(const std::vector<VertexId>& outer) {
  int pairs = 0;
  for (std::size_t i = 0; i < outer.size(); ++i)
    for (std::size_t j = i + 1; j < outer.size(); ++j)
      if (outer[i] == outer[j]) ++pairs;
  return pairs;
}

// One non-cycle edge per cycle vertex, minimizing pairs with a common far
// endpoint; ties go to the lexicographically first choice. At most
// (Delta - 2)^4 candidates.
Selection best_selection(const Multigraph& g, const CycleWitness& c) {
  const int len = c.length();
  std::vector<std::vector<EdgeId>> candidates(len);
  for (int i = 0; i < len; ++i) {
    const VertexId v = c.vertices[i];
    for (EdgeId e : g.incident_edges(v))
      if (std::find(c.vertices.begin(), c.vertices.end(), g.other_endpoint(e, v)) == c.vertices.end())
        candidates[i].push_back(e);
    std::sort(candidates[i].begin(), candidates[i].end());
    if (candidates[i].empty())
      throw StructuralError("cycle vertex " + to_string(ElementId::vertex(v)) + " has no edge leaving the cycle");
  }
  Selection best;
  best.shared_pairs = -1;
  std::vector<std::size_t> pick(len, 0);
  while (true) {
    Selection s;
    for (int i = 0; i < len; ++i) {
      s.edges.push_back(candidates[i][pick[i]]);
      s.outer.push_back(g.other_endpoint(s.edges.back(), c.vertices[i]));
    }
    s.shared_pairs = count_shared(s.outer);
    if (best.shared_pairs < 0 || s.shared_pairs < best.shared_pairs) best = std::move(s);
    if (best.shared_pairs == 0) break;
    int i = len - 1;
    while (i >= 0 && ++pick[i] == candidates[i].size()) pick[i--] = 0;
    if (i < 0) break;
  }
  add_probes(static_cast<std::uint64_t>(len) * 8);
  return best;
}

GadgetPlan ring_plan(const CycleWitness& c, const Selection& sel) {
  GadgetPlan p;
  p.kind = GadgetKind::Ring;
  p.vertices = c.vertices;
  p.edges = c.edges;
  for (int i = 0; i < c.length(); ++i) p.halfedges.push_back({sel.edges[i], c.vertices[i], false});
  p.root = c.vertices.front();
  return p;
}

GadgetPlan long_ring_plan(const Multigraph& g, const CycleWitness& c) {
  std::vector<VertexId> on_cycle = c.vertices;
  std::sort(on_cycle.begin(), on_cycle.end());
  Selection sel;
  for (VertexId v : c.vertices) {
    EdgeId pick = -1;
    auto inc = g.incident_edges(v);
    add_probes(inc.size());
    for (EdgeId e : inc)
      if (!std::binary_search(on_cycle.begin(), on_cycle.end(), g.other_endpoint(e, v)) && (pick < 0 || e < pick))
        pick = e;
    if (pick < 0) throw StructuralError("cycle vertex " + to_string(ElementId::vertex(v)) + " has no edge leaving the cycle");
    sel.edges.push_back(pick);
    sel.outer.push_back(g.other_endpoint(pick, v));
  }
  std::vector<VertexId> outer = sel.outer;
  std::sort(outer.begin(), outer.end());
  if (std::adjacent_find(outer.begin(), outer.end()) != outer.end())
    throw StructuralError("long cycle has two vertices with a common neighbor off the cycle");
  return ring_plan(c, sel);
}

GadgetPlan triangle_plan(const Multigraph& g, const CycleWitness& c, DispatchStats& stats) {
  const Selection sel = best_selection(g, c);
  if (sel.shared_pairs == 0) {
    ++stats.ring3;
    return ring_plan(c, sel);
  }
  GadgetPlan p;
  if (sel.shared_pairs == 1) {
    ++stats.triangle_two_thick;
    int thin = 0;
    for (int t = 0; t < 3; ++t)
      if (sel.outer[t] != sel.outer[(t + 1) % 3] && sel.outer[t] != sel.outer[(t + 2) % 3]) thin = t;
    p.kind = GadgetKind::TriangleTwoThick;
    for (int k = 1; k <= 3; ++k) {
      const int i = (thin + k) % 3;
      p.vertices.push_back(c.vertices[i]);
      p.edges.push_back(c.edges[i]);
      p.halfedges.push_back({sel.edges[i], c.vertices[i], k != 3});
    }
  } else {
    ++stats.k4;
    p.kind = GadgetKind::K4;
    const VertexId apex = sel.outer[0];
    p.vertices = {c.vertices[0], c.vertices[1], c.vertices[2], apex};
    // 01 02 03 12 13 23
    p.edges = {c.edges[0], c.edges[2], sel.edges[0], c.edges[1], sel.edges[1], sel.edges[2]};
  }
  p.root = p.vertices.front();
  return p;
}

// Triangle formed by an adjacent pair of the 4-cycle and a common neighbor off it.
std::optional<CycleWitness> adjacent_pair_triangle(const Multigraph& g, const CycleWitness& c) {
  for (int i = 0; i < 4; ++i) {
    const VertexId a = c.vertices[i], b = c.vertices[(i + 1) % 4];
    for (EdgeId e : g.incident_edges(a)) {
      const VertexId y = g.other_endpoint(e, a);
      if (std::find(c.vertices.begin(), c.vertices.end(), y) != c.vertices.end()) continue;
      for (EdgeId f : g.incident_edges(b)) {
        if (g.other_endpoint(f, b) == y) {
          add_probes(static_cast<std::uint64_t>(g.degree(a)) * g.degree(b));
          return CycleWitness{{a, b, y}, {c.edges[i], f, e}};
        }
      }
    }
  }
  add_probes(64);
  return std::nullopt;
}

}  // namespace

GadgetPlan plan_double_edge(const Multigraph& g, const CycleWitness& two_cycle) {
  if (two_cycle.length() != 2) throw StructuralError("plan_double_edge needs a 2-cycle");
  const VertexId u = two_cycle.vertices[0], v = two_cycle.vertices[1];
  if (g.multiplicity(u, v) != 2) throw StructuralError("double edge must have multiplicity exactly 2");
  std::vector<EdgeId> at_u, at_v;
  for (EdgeId e : g.incident_edges(u))
    if (g.other_endpoint(e, u) != v) at_u.push_back(e);
  for (EdgeId e : g.incident_edges(v))
    if (g.other_endpoint(e, v) != u) at_v.push_back(e);
  if (at_u.empty() || at_v.empty()) throw StructuralError("double edge endpoint has no further edge");
  std::sort(at_u.begin(), at_u.end());
  std::sort(at_v.begin(), at_v.end());
  EdgeId e1 = at_u.front(), e2 = at_v.front();
  bool thick = g.other_endpoint(e1, u) == g.other_endpoint(e2, v);
  for (std::size_t i = 0; i < at_u.size() && thick; ++i)
    for (std::size_t j = 0; j < at_v.size() && thick; ++j)
      if (g.other_endpoint(at_u[i], u) != g.other_endpoint(at_v[j], v)) {
        e1 = at_u[i];
        e2 = at_v[j];
        thick = false;
      }
  add_probes(static_cast<std::uint64_t>(g.degree(u) + g.degree(v)));
  GadgetPlan p;
  p.kind = thick ? GadgetKind::DoubleEdgeThick : GadgetKind::DoubleEdgeThin;
  p.vertices = {u, v};
  p.edges = {std::min(two_cycle.edges[0], two_cycle.edges[1]), std::max(two_cycle.edges[0], two_cycle.edges[1])};
  p.halfedges = {{e1, u, thick}, {e2, v, thick}};
  p.root = u;
  return p;
}

GadgetPlan plan_from_cycle(const Multigraph& g, const CycleWitness& c, DispatchStats* stats_out) {
  DispatchStats local;
  DispatchStats& stats = stats_out ? *stats_out : local;
  if (c.length() == 2) {
    GadgetPlan p = plan_double_edge(g, c);
    ++(p.kind == GadgetKind::DoubleEdgeThick ? stats.double_edge_thick : stats.double_edge_thin);
    return p;
  }
  if (!is_induced_cycle(g, c)) throw StructuralError("plan_from_cycle needs an induced cycle");

  CycleWitness cur = c;
  bool replaced = false;
  constexpr int kMaxRevisions = 3;
  for (int revision = 0; revision <= kMaxRevisions; ++revision) {
    if (cur.length() == 3) return triangle_plan(g, cur, stats);
    if (cur.length() > 4) {
      ++stats.ring_long;
      return long_ring_plan(g, cur);
    }
    if (auto tri = adjacent_pair_triangle(g, cur)) {
      ++stats.triangle_restart;
      cur = *tri;
      continue;
    }
    const Selection sel = best_selection(g, cur);
    if (sel.shared_pairs == 0) {
      ++stats.ring4;
      return ring_plan(cur, sel);
    }
    if (sel.shared_pairs == 1) {
      ++stats.four_cycle_two_thick;
      const int r = sel.outer[0] == sel.outer[2] ? 0 : 1;
      if (sel.outer[r] != sel.outer[r + 2]) throw StructuralError("shared pair of a 4-cycle is not opposite");
      GadgetPlan p;
      p.kind = GadgetKind::FourCycleTwoThick;
      for (int k = 0; k < 4; ++k) {
        const int i = (r + k) % 4;
        p.vertices.push_back(cur.vertices[i]);
        p.edges.push_back(cur.edges[i]);
        p.halfedges.push_back({sel.edges[i], cur.vertices[i], k % 2 == 0});
      }
      p.root = p.vertices.front();
      return p;
    }
    const VertexId u = sel.outer[0], v = sel.outer[1];
    if (sel.shared_pairs != 2 || sel.outer[2] != u || sel.outer[3] != v || u == v)
      throw StructuralError("unexpected sharing pattern on a 4-cycle");
    if (g.adjacent(u, v)) {
      ++stats.k33;
      GadgetPlan p;
      p.kind = GadgetKind::K33;
      p.vertices = {cur.vertices[0], cur.vertices[2], v, cur.vertices[1], cur.vertices[3], u};
      for (int a = 0; a < 3; ++a)
        for (int b = 3; b < 6; ++b) p.edges.push_back(edge_between(g, p.vertices[a], p.vertices[b]));
      p.root = p.vertices.front();
      return p;
    }
    // u ~ C0, C2 and u is not adjacent to C1; swap C1 for u.
    ++stats.four_cycle_replacement;
    if (replaced) ++stats.selection_failures;
    replaced = true;
    CycleWitness next{{cur.vertices[0], u, cur.vertices[2], cur.vertices[3]},
                      {sel.edges[0], sel.edges[2], cur.edges[2], cur.edges[3]}};
    if (!is_induced_cycle(g, next)) throw StructuralError("replacement 4-cycle is not induced");
    cur = std::move(next);
  }
  throw PlanLoopExceeded("cycle plan did not settle after " + std::to_string(kMaxRevisions) + " revisions");
}

void check_plan_structure(const Multigraph& g, const GadgetPlan& plan) {
  const auto elements = plan.elements();
  const GadgetShape shape = gadget_shape(plan.kind, plan.kind == GadgetKind::Ring
                                                        ? static_cast<int>(plan.vertices.size())
                                                        : 0);
  if (static_cast<int>(elements.size()) != shape.slot_count() ||
      static_cast<int>(plan.vertices.size()) != shape.vertex_count)
    throw StructuralError(std::string("plan has the wrong element counts for ") + std::string(kind_name(plan.kind)));
  const auto roles = plan.roles();
  const auto expected_roles = shape.roles();
  if (roles != expected_roles) throw StructuralError("plan roles do not match the gadget template");
  for (const auto& h : plan.halfedges)
    if (!g.incident(h.edge, h.inner)) throw StructuralError("halfedge is not incident to its inner vertex");

  std::unordered_map<int, int> slot_of;
  for (std::size_t s = 0; s < elements.size(); ++s)
    if (!slot_of.emplace(g.dense(elements[s]), static_cast<int>(s)).second)
      throw StructuralError("plan lists an element twice");
  const auto expected = shape.conflicts();
  std::vector<int> seen;
  for (std::size_t s = 0; s < elements.size(); ++s) {
    seen.clear();
    for_each_total_neighbor(g, elements[s], [&](ElementId y) {
      auto it = slot_of.find(g.dense(y));
      if (it != slot_of.end()) seen.push_back(it->second);
    });
    std::sort(seen.begin(), seen.end());
    if (seen != expected[s])
      throw StructuralError("adjacency of " + to_string(elements[s]) + " in H differs from the " +
                            std::string(kind_name(plan.kind)) + " template");
  }
}

void complete_plan(const Multigraph& g, const ListAssignment& lists, const GadgetPlan& plan,
                   PartialTotalColoring& coloring) {
  check_plan_structure(g, plan);
  const ResidualLists residual = residual_lists(g, lists, coloring, plan);
  const std::vector<Color> colors =
      plan.kind == GadgetKind::Ring
          ? solve_ring(ring_from_slots(static_cast<int>(plan.vertices.size()), residual.lists))
          : solve_fixed(FixedGadget{plan.kind, residual.lists});
  for (std::size_t s = 0; s < residual.elements.size(); ++s) coloring.set(g, residual.elements[s], colors[s]);
}

namespace {

// Deficient vertex or a heavy edge: the whole component goes through the
// greedy pass. Returns false if neither exists.
bool try_deficient(const Multigraph& g, const ListAssignment& lists, int delta, PartialTotalColoring& coloring) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) < delta) {
      const auto f = subdivision_distances(g, v);
      const auto order = distance_order(g, f, {}, delta);
      coloring = greedy_extend(g, lists, order, std::move(coloring), &f);
      return true;
    }
  }
  std::vector<int> count(g.vertex_count(), 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto inc = g.incident_edges(v);
    add_probes(2 * inc.size());
    VertexId heavy_to = -1;
    for (EdgeId e : inc)
      if (++count[g.other_endpoint(e, v)] >= 3) heavy_to = g.other_endpoint(e, v);
    for (EdgeId e : inc) count[g.other_endpoint(e, v)] = 0;
    if (heavy_to < 0) continue;
    std::vector<EdgeId> copies;
    for (EdgeId e : inc)
      if (g.other_endpoint(e, v) == heavy_to) copies.push_back(e);
    const auto f = subdivision_distances(g, v);
    const auto order = distance_order(g, f, copies, delta);
    coloring = greedy_extend(g, lists, order, std::move(coloring), &f);
    return true;
  }
  return false;
}

PartialTotalColoring color_component(const Multigraph& g, const ListAssignment& lists, int delta,
                                     DispatchStats& stats) {
  ++stats.components;
  PartialTotalColoring coloring(g);
  add_probes(static_cast<std::uint64_t>(g.vertex_count()));
  if (try_deficient(g, lists, delta, coloring)) {
    ++stats.deficient;
  } else {
    GadgetPlan plan;
    if (auto two = find_multi_edge(g)) {
      plan = plan_double_edge(g, *two);
      ++(plan.kind == GadgetKind::DoubleEdgeThick ? stats.double_edge_thick : stats.double_edge_thin);
    } else {
      plan = plan_from_cycle(g, find_special_cycle(g, 0), &stats);
    }
    color_outside(g, lists, plan.mask(g), plan.vertices, coloring, delta);
    complete_plan(g, lists, plan, coloring);
  }
  return coloring;
}

}  // namespace

TotalColoringResult total_color_with_stats(const Multigraph& g, const ListAssignment& lists) {
  const int delta = g.max_degree();
  if (delta < 3) throw DeltaTooSmall(delta);
  if (static_cast<int>(lists.size()) != g.element_count())
    throw InputError("list assignment does not cover the graph");
  const std::size_t need = 2 * static_cast<std::size_t>(delta) - 1;
  for (int i = 0; i < g.element_count(); ++i)
    if (lists.at_dense(i).size() < need) throw ListTooSmall(to_string(g.element_at(i)), lists.at_dense(i).size(), need);

  const std::uint64_t probes_before = probe_count();
  TotalColoringResult result;
  const int n = g.vertex_count();

  // Components by union of incidence lists.
  std::vector<int> comp(n, -1);
  std::vector<std::vector<VertexId>> comp_vertices;
  for (VertexId s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(comp_vertices.size());
    comp_vertices.emplace_back();
    std::vector<VertexId> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      comp_vertices[id].push_back(v);
      auto inc = g.incident_edges(v);
      add_probes(inc.size());
      for (EdgeId e : inc) {
        const VertexId w = g.other_endpoint(e, v);
        if (comp[w] < 0) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
  }
  for (auto& vs : comp_vertices) std::sort(vs.begin(), vs.end());

  if (comp_vertices.size() == 1) {
    result.coloring = color_component(g, lists, delta, result.stats);
  } else {
    std::vector<std::vector<EdgeId>> comp_edges(comp_vertices.size());
    for (EdgeId e = 0; e < g.edge_count(); ++e) comp_edges[comp[g.endpoints(e).first]].push_back(e);
    std::vector<int> local(n, -1);
    result.coloring = PartialTotalColoring(g);
    for (std::size_t c = 0; c < comp_vertices.size(); ++c) {
      const auto& vs = comp_vertices[c];
      const auto& es = comp_edges[c];
      for (std::size_t i = 0; i < vs.size(); ++i) local[vs[i]] = static_cast<int>(i);
      std::vector<std::pair<VertexId, VertexId>> edges;
      edges.reserve(es.size());
      for (EdgeId e : es) edges.emplace_back(local[g.endpoints(e).first], local[g.endpoints(e).second]);
      const Multigraph sub = build_multigraph(static_cast<int>(vs.size()), edges);
      ListAssignment sub_lists(sub);
      for (std::size_t i = 0; i < vs.size(); ++i) {
        auto l = lists(g, ElementId::vertex(vs[i]));
        sub_lists.set(sub, ElementId::vertex(static_cast<int>(i)), {l.begin(), l.end()});
      }
      for (std::size_t j = 0; j < es.size(); ++j) {
        auto l = lists(g, ElementId::edge(es[j]));
        sub_lists.set(sub, ElementId::edge(static_cast<int>(j)), {l.begin(), l.end()});
      }
      const PartialTotalColoring sub_coloring = color_component(sub, sub_lists, delta, result.stats);
      for (std::size_t i = 0; i < vs.size(); ++i)
        result.coloring.set(g, ElementId::vertex(vs[i]), *sub_coloring.get(sub, ElementId::vertex(static_cast<int>(i))));
      for (std::size_t j = 0; j < es.size(); ++j)
        result.coloring.set(g, ElementId::edge(es[j]), *sub_coloring.get(sub, ElementId::edge(static_cast<int>(j))));
    }
  }

  result.probes = probe_count() - probes_before;
  const VerifyResult check = verify_total_coloring(g, lists, result.coloring, true);
  if (!check) throw StructuralError("pipeline produced an invalid coloring: " + check.message);
  return result;
}

PartialTotalColoring total_color(const Multigraph& g, const ListAssignment& lists) {
  return total_color_with_stats(g, lists).coloring;
}

}  // namespace totalchoose
