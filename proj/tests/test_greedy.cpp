#include <doctest.h>

#include "brute.hpp"
#include "constructions.hpp"
#include "totalchoose/errors.hpp"
#include "totalchoose/generators.hpp"
#include "totalchoose/greedy.hpp"
#include "totalchoose/oracle.hpp"

using namespace totalchoose;
using namespace tc_test;

TEST_CASE("subdivision distances, small graphs") {
  const Multigraph star = complete_bipartite_graph(1, 3);  // center 0, edges 0..2
  const auto f = subdivision_distances(star, 0);
  CHECK(f.dist == std::vector<int>{0, 2, 2, 2, 1, 1, 1});

  const Multigraph path = build_multigraph(3, {{0, 1}, {1, 2}});
  CHECK(subdivision_distances(path, 0).dist == std::vector<int>{0, 2, 4, 1, 3});

  // K4 rooted at 3 without the triangle 012: every remaining element reachable.
  const Multigraph k4 = complete_graph(4);  // 01 02 03 12 13 23
  ElementMask skip(k4);
  for (EdgeId e : {0, 1, 3}) skip.insert(k4, ElementId::edge(e));
  const auto g = subdivision_distances(k4, 3, skip);
  for (int i = 0; i < k4.element_count(); ++i) CHECK((g.skipped(i) == skip.test(i)));
  CHECK(g(k4, ElementId::vertex(0)) == 2);

  // Cutting the path disconnects c.
  ElementMask cut(path);
  cut.insert(path, ElementId::edge(1));
  CHECK_THROWS_AS(subdivision_distances(path, 0, cut), StructuralError);
}

TEST_CASE("subdivision distances match explicit BFS and parity") {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int delta = 3 + trial % 3;
    const Multigraph g = gen_random_multigraph(20, delta, 0.3, trial);
    if (!is_connected(g)) continue;
    const VertexId root = static_cast<VertexId>(rng.below(g.vertex_count()));
    const auto f = subdivision_distances(g, root);
    CHECK(f.dist == bfs(subdivision_graph(g), {root}));
    for (int i = 0; i < g.element_count(); ++i) CHECK(f.dist[i] % 2 == (i < g.vertex_count() ? 0 : 1));
  }
}

TEST_CASE("distance_order examples") {
  const Multigraph path = build_multigraph(3, {{0, 1}, {1, 2}});
  CHECK(distance_order(path, subdivision_distances(path, 0)) ==
        std::vector<ElementId>{ElementId::vertex(2), ElementId::edge(1), ElementId::vertex(1), ElementId::edge(0),
                               ElementId::vertex(0)});

  // Star rooted at a leaf, Delta taken from the graph.
  const Multigraph star = complete_bipartite_graph(1, 3);
  const auto order = distance_order(star, subdivision_distances(star, 1));
  CHECK(order.back() == ElementId::vertex(1));
  CHECK(order[order.size() - 2] == ElementId::edge(0));

  // Triple edge 0-1 plus 1-2, 0-3 (Delta 4 at the ends); root 0 with the heavy edge.
  const Multigraph heavy = build_multigraph(4, {{0, 1}, {0, 3}, {0, 1}, {1, 2}, {0, 1}});
  const std::vector<EdgeId> copies{0, 2, 4};
  const auto h = distance_order(heavy, subdivision_distances(heavy, 0), copies);
  REQUIRE(h.size() == 9);
  CHECK(std::vector<ElementId>(h.end() - 4, h.end()) ==
        std::vector<ElementId>{ElementId::edge(0), ElementId::edge(2), ElementId::edge(4), ElementId::vertex(0)});

  // Full-degree root with no heavy edge is rejected.
  const Multigraph k4 = complete_graph(4);
  CHECK_THROWS_AS(distance_order(k4, subdivision_distances(k4, 0)), StructuralError);
  // Two copies are not heavy.
  const Multigraph dbl = build_multigraph(3, {{0, 1}, {0, 1}, {1, 2}, {0, 2}});
  CHECK_THROWS_AS(distance_order(dbl, subdivision_distances(dbl, 0), std::vector<EdgeId>{0, 1}), StructuralError);
}

TEST_CASE("triple edge in a cubic graph: copies then the root") {
  const Multigraph t = build_multigraph(2, {{0, 1}, {0, 1}, {0, 1}});
  const auto order = distance_order(t, subdivision_distances(t, 1), std::vector<EdgeId>{0, 1, 2});
  CHECK(order == std::vector<ElementId>{ElementId::vertex(0), ElementId::edge(0), ElementId::edge(1),
                                        ElementId::edge(2), ElementId::vertex(1)});
  const ListAssignment lists(t, range_list(5));
  const auto f = subdivision_distances(t, 1);
  const PartialTotalColoring c = greedy_extend(t, lists, order, PartialTotalColoring(t), &f);
  CHECK(verify_total_coloring(t, lists, c, true));
}

TEST_CASE("greedy_extend examples") {
  const Multigraph e = build_multigraph(2, {{0, 1}});
  ListAssignment l(e);
  l.set(e, ElementId::vertex(0), {1});
  l.set(e, ElementId::edge(0), {2});
  l.set(e, ElementId::vertex(1), {3});
  const std::vector<ElementId> any{ElementId::vertex(1), ElementId::vertex(0), ElementId::edge(0)};
  const auto c = greedy_extend(e, l, any, PartialTotalColoring(e));
  CHECK(c.get(e, ElementId::vertex(0)) == 1);
  CHECK(c.get(e, ElementId::edge(0)) == 2);
  CHECK(c.get(e, ElementId::vertex(1)) == 3);

  const Multigraph star = complete_bipartite_graph(1, 3);
  const ListAssignment five(star, range_list(5, 1));
  const auto f = subdivision_distances(star, 1);
  const auto sc = greedy_extend(star, five, distance_order(star, f), PartialTotalColoring(star), &f);
  CHECK(verify_total_coloring(star, five, sc, true));
  CHECK(oracle_total_color(star, five).status == OracleStatus::Found);

  // K4 minus a triangle's edges, rooted at a triangle vertex.
  const Multigraph k4 = complete_graph(4);
  const ListAssignment k4l(k4, range_list(5, 1));
  ElementMask skip(k4);
  for (EdgeId j : {0, 1, 3}) skip.insert(k4, ElementId::edge(j));
  const auto fk = subdivision_distances(k4, 0, skip);
  const auto part = greedy_extend(k4, k4l, distance_order(k4, fk), PartialTotalColoring(k4), &fk);
  CHECK(part.colored_count() == 7);
  CHECK(verify_total_coloring(k4, k4l, part, false));

  // Dead end is reported, never skipped.
  ListAssignment tight(e, {7});
  CHECK_THROWS_AS(greedy_extend(e, tight, any, PartialTotalColoring(e)), NoAvailableColor);

  // Elements of the order may not be precolored.
  PartialTotalColoring pre(e);
  pre.set(e, ElementId::vertex(1), 3);
  CHECK_THROWS_AS(greedy_extend(e, l, any, pre), StructuralError);
}

TEST_CASE("greedy pass never gets stuck under its hypothesis") {
  for (int trial = 0; trial < 300; ++trial) {
    const int delta = 3 + trial % 4;
    const bool heavy = trial % 3 == 0 && delta >= 4;
    Multigraph g = heavy ? gen_random_multigraph(16 + trial % 30, delta, 0.3, trial, 0.4)
                         : gen_deficient(2 * (8 + trial % 20), delta, trial);
    if (!is_connected(g) || g.max_degree() != delta) continue;
    VertexId root = -1;
    std::vector<EdgeId> copies;
    for (VertexId v = 0; v < g.vertex_count() && root < 0; ++v) {
      if (!heavy && g.degree(v) < delta) root = v;
      if (!heavy) continue;
      for (EdgeId e : g.incident_edges(v))
        if (g.multiplicity(v, g.other_endpoint(e, v)) >= 3) {
          root = v;
          for (EdgeId x : g.incident_edges(v))
            if (g.other_endpoint(x, v) == g.other_endpoint(e, v)) copies.push_back(x);
          break;
        }
    }
    if (root < 0) continue;
    const ListAssignment lists = gen_lists(g, 2 * delta - 1, 3 * delta, trial);
    const auto f = subdivision_distances(g, root);
    const auto order = distance_order(g, f, copies, delta);
    REQUIRE(order.size() == static_cast<std::size_t>(g.element_count()));
    for (std::size_t i = 1; i < order.size(); ++i) CHECK(f(g, order[i - 1]) >= f(g, order[i]));
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    PartialTotalColoring c;
    REQUIRE_NOTHROW(c = greedy_extend(g, lists, order, PartialTotalColoring(g), &f));
    CHECK(verify_total_coloring(g, lists, c, true));
  }
}

TEST_CASE("residual lists") {
  // Cubic graph with a double edge 0=1 whose other edges share vertex 2.
  const Multigraph g = double_edge_thick_graph();
  GadgetPlan plan;
  plan.kind = GadgetKind::DoubleEdgeThick;
  plan.vertices = {0, 1};
  plan.edges = {0, 1};
  plan.halfedges = {{2, 0, true}, {3, 1, true}};
  const ListAssignment lists(g, range_list(5));

  PartialTotalColoring partial(g);
  const ElementMask in_plan = plan.mask(g);
  // Everything outside H gets a distinct color well away from the lists.
  for (int i = 0; i < g.element_count(); ++i)
    if (!in_plan.test(i)) partial.set(g, g.element_at(i), 100 + i);
  const ResidualLists r = residual_lists(g, lists, partial, plan);
  REQUIRE(r.lists.size() == 6);
  for (const auto& l : r.lists) CHECK(l == range_list(5));
  CHECK(r.roles[4] == SlotRole::ThickHalfedge);

  // Colors on the shared far end and its third edge cut the thick halfedges down.
  partial.set(g, ElementId::vertex(2), 0);
  const ResidualLists s = residual_lists(g, lists, partial, plan);
  CHECK(s.lists[4] == std::vector<Color>{1, 2, 3, 4});

  PartialTotalColoring wrong = partial;
  wrong.set(g, ElementId::vertex(0), 1);
  CHECK_THROWS_AS(residual_lists(g, lists, wrong, plan), StructuralError);

  ListAssignment small(g, range_list(5));
  small.set(g, ElementId::edge(2), {0, 1, 2});
  partial.set(g, ElementId::edge(8), 1);  // the link at vertex 2
  CHECK_THROWS_AS(residual_lists(g, small, partial, plan), MinimumViolated);
}
