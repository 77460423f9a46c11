#include <doctest.h>

#include "brute.hpp"
#include "constructions.hpp"
#include "totalchoose/errors.hpp"
#include "totalchoose/generators.hpp"

using namespace totalchoose;
using namespace tc_test;

namespace {

std::vector<int> dense_neighbors(const Multigraph& g, ElementId x) {
  std::vector<int> out;
  for (ElementId y : total_neighbors(g, x)) out.push_back(g.dense(y));
  return out;
}

// Small random loopless multigraphs, some parallel edges.
Multigraph small_random(Rng& rng, int max_n) {
  const int n = 1 + static_cast<int>(rng.below(max_n));
  std::vector<std::pair<VertexId, VertexId>> edges;
  if (n >= 2) {
    const int m = static_cast<int>(rng.below(2 * n + 1));
    for (int i = 0; i < m; ++i) {
      const VertexId a = static_cast<VertexId>(rng.below(n));
      VertexId b = static_cast<VertexId>(rng.below(n - 1));
      if (b >= a) ++b;
      edges.emplace_back(a, b);
    }
  }
  return build_multigraph(n, edges);
}

}  // namespace

TEST_CASE("build_multigraph basics") {
  const Multigraph d = build_multigraph(2, {{0, 1}, {0, 1}});
  CHECK(d.multiplicity(0, 1) == 2);
  CHECK(d.max_degree() == 2);
  CHECK_FALSE(d.is_simple());

  const Multigraph k4 = complete_graph(4);
  CHECK(k4.max_degree() == 3);
  CHECK(k4.edge_count() == 6);
  CHECK(k4.endpoints(5) == std::pair<VertexId, VertexId>{2, 3});

  CHECK_THROWS_AS(build_multigraph(3, {{0, 0}}), InputError);
  CHECK_THROWS_AS(build_multigraph(3, {{0, 3}}), InputError);
  CHECK_THROWS_AS(build_multigraph(3, {{-1, 2}}), InputError);

  const Multigraph empty = build_multigraph(0, {});
  CHECK(empty.max_degree() == 0);
  CHECK(empty.element_count() == 0);
  CHECK(build_multigraph(3, {}).max_multiplicity() == 0);
}

TEST_CASE("dense numbering and labels") {
  const Multigraph g = cycle_graph(4);
  CHECK(g.dense(ElementId::vertex(3)) == 3);
  CHECK(g.dense(ElementId::edge(0)) == 4);
  CHECK(g.element_at(7) == ElementId::edge(3));
  CHECK(to_string(ElementId::vertex(0)) == "v1");
  CHECK(to_string(ElementId::edge(2)) == "e3");
  CHECK_FALSE(g.contains(ElementId::edge(4)));
}

TEST_CASE("total_neighbors examples") {
  const Multigraph k3 = cycle_graph(3);  // edges 0:01 1:12 2:20
  // uv = e0 -> u, v, and the two other edges.
  CHECK(total_neighbors(k3, ElementId::edge(0)) ==
        std::vector<ElementId>{ElementId::vertex(0), ElementId::vertex(1), ElementId::edge(1), ElementId::edge(2)});

  const Multigraph one = build_multigraph(1, {});
  CHECK(total_neighbors(one, ElementId::vertex(0)).empty());

  const Multigraph d = build_multigraph(2, {{0, 1}, {0, 1}});
  CHECK(total_neighbors(d, ElementId::edge(0)) ==
        std::vector<ElementId>{ElementId::vertex(0), ElementId::vertex(1), ElementId::edge(1)});
  // A vertex sees its neighbor once however many copies join them.
  CHECK(total_neighbors(d, ElementId::vertex(0)) ==
        std::vector<ElementId>{ElementId::vertex(1), ElementId::edge(0), ElementId::edge(1)});

  CHECK_THROWS_AS(total_neighbors(k3, ElementId::edge(3)), InputError);
}

TEST_CASE("total_neighbors matches the subdivision-graph definition") {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Multigraph g = small_random(rng, 8);
    const auto t = total_graph(g);
    for (int x = 0; x < g.element_count(); ++x) {
      const auto mine = dense_neighbors(g, g.element_at(x));
      const std::vector<int> ref(t[x].begin(), t[x].end());
      REQUIRE(mine == ref);
      CHECK(mine.size() <= 2 * static_cast<std::size_t>(g.max_degree()));
      for (int y : mine) {
        const auto back = dense_neighbors(g, g.element_at(y));
        CHECK(std::binary_search(back.begin(), back.end(), x));
      }
    }
    for (int j = 0; j < g.edge_count(); ++j) {
      auto [a, b] = g.endpoints(j);
      if (g.multiplicity(a, b) == 1)
        CHECK(dense_neighbors(g, ElementId::edge(j)).size() ==
              static_cast<std::size_t>(g.degree(a) + g.degree(b)));
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      bool has_parallel = false;
      for (EdgeId e : g.incident_edges(v)) has_parallel |= g.multiplicity(v, g.other_endpoint(e, v)) > 1;
      const auto size = dense_neighbors(g, ElementId::vertex(v)).size();
      if (has_parallel)
        CHECK(size < 2 * static_cast<std::size_t>(g.degree(v)));
      else
        CHECK(size == 2 * static_cast<std::size_t>(g.degree(v)));
    }
  }
}

TEST_CASE("ListAssignment normalizes") {
  const Multigraph g = build_multigraph(2, {{0, 1}});
  ListAssignment l(g);
  l.set(g, ElementId::edge(0), {5, 1, 5, 3});
  auto e = l(g, ElementId::edge(0));
  CHECK(std::vector<Color>(e.begin(), e.end()) == std::vector<Color>{1, 3, 5});
  CHECK(l.contains(g, ElementId::edge(0), 3));
  CHECK_FALSE(l.contains(g, ElementId::edge(0), 2));
  CHECK(l.min_list_size() == 0);
  CHECK_THROWS_AS(l.set(g, ElementId::vertex(0), {-1, 2}), InputError);
  CHECK(ListAssignment(g, {4, 2, 2}).min_list_size() == 2);
}

TEST_CASE("verify_total_coloring examples") {
  const Multigraph k3 = cycle_graph(3);  // u=0 v=1 w=2, uv=e0 vw=e1 wu=e2
  const ListAssignment lists(k3, range_list(5, 1));
  PartialTotalColoring c(k3);
  CHECK(verify_total_coloring(k3, lists, c, false));
  CHECK_FALSE(verify_total_coloring(k3, lists, c, true));

  c.set(k3, ElementId::vertex(0), 1);
  c.set(k3, ElementId::vertex(1), 2);
  c.set(k3, ElementId::vertex(2), 3);
  c.set(k3, ElementId::edge(0), 4);
  c.set(k3, ElementId::edge(2), 5);
  c.set(k3, ElementId::edge(1), 1);
  CHECK(verify_total_coloring(k3, lists, c, true));

  c.set(k3, ElementId::edge(0), 1);
  const VerifyResult bad = verify_total_coloring(k3, lists, c, true);
  CHECK_FALSE(bad);
  CHECK(bad.first == ElementId::vertex(0));
  CHECK(bad.second == ElementId::edge(0));

  c.set(k3, ElementId::edge(0), 9);
  const VerifyResult off = verify_total_coloring(k3, lists, c, true);
  CHECK_FALSE(off);
  CHECK(off.first == ElementId::edge(0));
  CHECK_FALSE(off.second.has_value());
}

TEST_CASE("verifier agrees with an explicit total-graph check") {
  Rng rng(5);
  int accepted = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const Multigraph g = small_random(rng, 7);
    const ListAssignment lists = gen_lists(g, 3, 6, trial);
    std::vector<Color> colors(g.element_count(), kUncolored);
    PartialTotalColoring c(g);
    const bool complete = rng.below(2) == 0;
    for (int i = 0; i < g.element_count(); ++i) {
      if (!complete && rng.below(3) == 0) continue;
      // Mostly list colors, occasionally one from outside.
      auto l = lists.at_dense(i);
      colors[i] = rng.below(10) == 0 ? static_cast<Color>(rng.below(7)) : l[rng.below(l.size())];
      c.set(g, g.element_at(i), colors[i]);
    }
    const bool require = rng.below(2) == 0;
    const bool mine = static_cast<bool>(verify_total_coloring(g, lists, c, require));
    REQUIRE(mine == proper(g, lists, colors, require));
    accepted += mine;
  }
  CHECK(accepted > 20);
}

TEST_CASE("partial coloring bookkeeping") {
  const Multigraph g = cycle_graph(3);
  PartialTotalColoring c(g);
  CHECK(c.colored_count() == 0);
  c.set(g, ElementId::edge(1), 4);
  CHECK(c.get(g, ElementId::edge(1)) == 4);
  CHECK(c.colored_count() == 1);
  c.clear(g, ElementId::edge(1));
  CHECK_FALSE(c.get(g, ElementId::edge(1)).has_value());
}

TEST_CASE("probe counter") {
  reset_probe_count();
  const Multigraph g = complete_graph(4);
  total_neighbors(g, ElementId::edge(0));
  CHECK(probe_count() == 6);
  reset_probe_count();
  CHECK(probe_count() == 0);
}
