#include <doctest.h>

#include "constructions.hpp"
#include "totalchoose/errors.hpp"
#include "totalchoose/gadget_trials.hpp"
#include "totalchoose/gadgets.hpp"
#include "totalchoose/oracle.hpp"

using namespace totalchoose;
using tc_test::range_list;

namespace {

const GadgetKind kFixed[] = {GadgetKind::DoubleEdgeThick, GadgetKind::TriangleTwoThick,
                             GadgetKind::FourCycleTwoThick, GadgetKind::DoubleEdgeThin, GadgetKind::K4,
                             GadgetKind::K33};

bool has_conflict(const GadgetShape& s, int a, int b) {
  const auto adj = s.conflicts();
  return std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end();
}

}  // namespace

TEST_CASE("gadget shapes") {
  const GadgetShape ring = gadget_shape(GadgetKind::Ring, 5);
  CHECK(ring.slot_count() == 15);
  // Halfedge 0 (slot 10) meets vertex 0, edge 0 and edge 4, nothing else.
  const auto adj = ring.conflicts();
  CHECK(adj[10] == std::vector<int>{0, 5, 9});
  // Halfedges never conflict in a ring.
  for (int i = 10; i < 15; ++i)
    for (int j = 10; j < 15; ++j) CHECK_FALSE(has_conflict(ring, i, j));
  CHECK_THROWS_AS(gadget_shape(GadgetKind::Ring, 2), StructuralError);

  const GadgetShape det = gadget_shape(GadgetKind::DoubleEdgeThick);
  CHECK(has_conflict(det, 4, 5));
  CHECK_FALSE(has_conflict(gadget_shape(GadgetKind::DoubleEdgeThin), 4, 5));
  CHECK(det.minima() == std::vector<std::size_t>{4, 4, 5, 5, 3, 3});

  const GadgetShape ttt = gadget_shape(GadgetKind::TriangleTwoThick);
  CHECK(ttt.minima() == std::vector<std::size_t>{4, 4, 4, 5, 5, 5, 3, 3, 2});
  CHECK(has_conflict(ttt, 6, 7));
  CHECK_FALSE(has_conflict(ttt, 6, 8));

  const GadgetShape fc = gadget_shape(GadgetKind::FourCycleTwoThick);
  CHECK(fc.minima() == std::vector<std::size_t>{4, 4, 4, 4, 5, 5, 5, 5, 3, 2, 3, 2});
  CHECK(has_conflict(fc, 8, 10));

  CHECK(gadget_shape(GadgetKind::K4).slot_count() == 10);
  const GadgetShape k33 = gadget_shape(GadgetKind::K33);
  CHECK(k33.slot_count() == 15);
  CHECK_FALSE(has_conflict(k33, 0, 1));  // a0, a1
  CHECK(has_conflict(k33, 0, 3));        // a0, b0
}

TEST_CASE("kind names round-trip") {
  for (GadgetKind k : kFixed) CHECK(parse_kind(kind_name(k)) == k);
  CHECK(parse_kind("ring") == GadgetKind::Ring);
  CHECK(parse_kind("K33") == GadgetKind::K33);
  CHECK_THROWS_AS(parse_kind("pentagon"), InputError);
}

TEST_CASE("prune_lists") {
  const std::vector<std::size_t> minima{4, 2};
  const auto p = prune_lists({{1, 2, 3, 4, 5, 6}, {7, 9}}, minima);
  CHECK(p[0] == std::vector<Color>{1, 2, 3, 4});
  CHECK(p[1] == std::vector<Color>{7, 9});
  const std::vector<std::size_t> five{5};
  CHECK_THROWS_AS(prune_lists({{1, 2, 3, 4}}, five), StructuralError);
}

TEST_CASE("solve_ring examples") {
  RingGadget r;
  for (int i = 0; i < 3; ++i) {
    r.vertex_lists.push_back({1, 2, 3, 4});
    r.edge_lists.push_back({1, 2, 3, 4, 5});
    r.halfedge_lists.push_back({6, 7});
  }
  const auto colors = solve_ring(r);
  CHECK(is_valid_gadget_coloring(gadget_shape(GadgetKind::Ring, 3), ring_slot_lists(r), colors));

  RingGadget d;
  for (int i = 0; i < 5; ++i) {
    d.vertex_lists.push_back(range_list(4, 0));
    d.edge_lists.push_back(range_list(5, 10));
    d.halfedge_lists.push_back(range_list(2, 20));
  }
  CHECK(is_valid_gadget_coloring(gadget_shape(GadgetKind::Ring, 5), ring_slot_lists(d), solve_ring(d)));

  // Identical lists everywhere: the tightest overlap the sizes allow.
  for (int m = 3; m <= 9; ++m) {
    RingGadget s;
    for (int i = 0; i < m; ++i) {
      s.vertex_lists.push_back(range_list(4));
      s.edge_lists.push_back(range_list(5));
      s.halfedge_lists.push_back(range_list(2));
    }
    CHECK(is_valid_gadget_coloring(gadget_shape(GadgetKind::Ring, m), ring_slot_lists(s), solve_ring(s)));
  }
}

TEST_CASE("solve_ring agrees with the oracle, including below the minima") {
  // Below the minima the solver's pruning refuses, so compare the DP on
  // exact-size lists with the oracle, and separately check that the oracle
  // does find infeasible rings once lists shrink, i.e. it is not vacuous.
  for (int m = 3; m <= 8; ++m) {
    const GadgetTrialReport r = run_gadget_trials(GadgetKind::Ring, 200, 500 + m, 7, m);
    CHECK(r.clean());
    CHECK(r.oracle_feasible == r.trials);
  }
  const GadgetShape shape = gadget_shape(GadgetKind::Ring, 3);
  std::vector<std::vector<Color>> tiny(9, {0, 1});
  CHECK(oracle_list_color(shape.conflicts(), tiny).status == OracleStatus::Infeasible);
}

TEST_CASE("solve_fixed on every kind, random pruned lists") {
  std::uint64_t seed = 1;
  for (GadgetKind k : kFixed) {
    for (int palette : {6, 8, 12}) {
      const GadgetTrialReport r = run_gadget_trials(k, 300, seed++, palette);
      INFO(kind_name(k), " palette ", palette);
      CHECK(r.clean());
    }
  }
  CHECK_THROWS_AS(solve_fixed(FixedGadget{GadgetKind::Ring, {}}), StructuralError);
}

TEST_CASE("four-cycle gadget keeps the thick pair apart") {
  std::vector<std::vector<Color>> lists(4, range_list(4));
  for (int i = 0; i < 4; ++i) lists.push_back(range_list(5));
  lists.push_back({1, 2, 3});
  lists.push_back({4, 5});
  lists.push_back({1, 2, 3});
  lists.push_back({4, 5});
  const auto c = solve_fixed(FixedGadget{GadgetKind::FourCycleTwoThick, lists});
  CHECK(c[8] != c[10]);
  CHECK(is_valid_gadget_coloring(gadget_shape(GadgetKind::FourCycleTwoThick), lists, c));
}

TEST_CASE("K4 completes every greedy vertex coloring with 3 colors per edge") {
  // Vertex colors fixed first; each edge keeps 3 colors after removing its ends.
  int checked = 0;
  for (Color a = 0; a < 4; ++a)
    for (Color b = 0; b < 4; ++b)
      for (Color c = 0; c < 4; ++c)
        for (Color d = 0; d < 4; ++d) {
          const std::vector<Color> vs{a, b, c, d};
          std::vector<Color> sorted = vs;
          std::sort(sorted.begin(), sorted.end());
          if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
          std::vector<std::vector<Color>> lists;
          for (Color v : vs) lists.push_back({v});
          const GadgetShape k4 = gadget_shape(GadgetKind::K4);
          for (auto [x, y] : k4.edges) {
            std::vector<Color> l;
            for (Color col = 0; col < 5; ++col)
              if (col != vs[x] && col != vs[y]) l.push_back(col);
            lists.push_back(l);
          }
          CHECK(oracle_list_color(k4.conflicts(), lists).status == OracleStatus::Found);
          ++checked;
        }
  CHECK(checked == 24);
}

TEST_CASE("double edge with thin halfedges, constructive procedure") {
  // Slots: v1 v2 e1 e2 (parallel) e3 (at v1) e4 (at v2).
  const GadgetShape shape = gadget_shape(GadgetKind::DoubleEdgeThin);
  std::vector<std::vector<Color>> a{{1, 2, 3, 4}, {1, 2, 3, 4}, {1, 2, 3, 4, 5}, {1, 2, 3, 4, 5}, {1, 2}, {5, 6}};
  const auto ca = solve_double_edge_thin(FixedGadget{GadgetKind::DoubleEdgeThin, a});
  CHECK(ca[5] == 6);  // the color missing from L(e1)
  CHECK(is_valid_gadget_coloring(shape, a, ca));

  std::vector<std::vector<Color>> b{{9, 10, 11, 12}, {1, 2, 3, 4}, {1, 2, 3, 4, 5}, {1, 2, 3, 4, 5}, {1, 2}, {9, 13}};
  const auto cb = solve_double_edge_thin(FixedGadget{GadgetKind::DoubleEdgeThin, b});
  CHECK(cb[0] == 9);
  CHECK(cb[5] == 9);
  CHECK(is_valid_gadget_coloring(shape, b, cb));

  CHECK_THROWS_AS(solve_double_edge_thin(FixedGadget{GadgetKind::K4, {}}), StructuralError);
}
