#include "totalchoose/gadgets.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

#include "totalchoose/errors.hpp"

namespace totalchoose {

std::vector<SlotRole> GadgetShape::roles() const {
  std::vector<SlotRole> out(vertex_count, SlotRole::FullVertex);
  out.insert(out.end(), edges.size(), SlotRole::FullEdge);
  for (bool thick : halfedge_thick) out.push_back(thick ? SlotRole::ThickHalfedge : SlotRole::ThinHalfedge);
  return out;
}

std::vector<std::size_t> GadgetShape::minima() const {
  std::vector<std::size_t> out;
  for (SlotRole r : roles()) out.push_back(role_minimum(r));
  return out;
}

std::vector<std::vector<int>> GadgetShape::conflicts() const {
  const int edge_base = vertex_count;
  const int half_base = vertex_count + static_cast<int>(edges.size());
  std::vector<std::vector<int>> adj(slot_count());
  auto link = [&](int a, int b) {
    if (std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end()) return;
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  // Endpoint lists; a halfedge has one.
  std::vector<std::vector<int>> ends;
  for (auto [a, b] : edges) ends.push_back({a, b});
  for (int v : halfedge_at) ends.push_back({v});
  for (std::size_t i = 0; i < ends.size(); ++i) {
    const int si = edge_base + static_cast<int>(i);
    for (int v : ends[i]) link(v, si);
    if (ends[i].size() == 2) link(ends[i][0], ends[i][1]);
    for (std::size_t j = i + 1; j < ends.size(); ++j) {
      bool share = false;
      for (int a : ends[i])
        for (int b : ends[j]) share = share || a == b;
      if (share) link(si, edge_base + static_cast<int>(j));
    }
  }
  std::vector<int> thick;
  for (std::size_t h = 0; h < halfedge_thick.size(); ++h)
    if (halfedge_thick[h]) thick.push_back(half_base + static_cast<int>(h));
  for (std::size_t i = 0; i < thick.size(); ++i)
    for (std::size_t j = i + 1; j < thick.size(); ++j) link(thick[i], thick[j]);
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

GadgetShape gadget_shape(GadgetKind kind, int ring_length) {
  GadgetShape s;
  auto cycle = [&](int m) {
    s.vertex_count = m;
    for (int i = 0; i < m; ++i) s.edges.emplace_back(i, (i + 1) % m);
  };
  switch (kind) {
    case GadgetKind::Ring:
      if (ring_length < 3) throw StructuralError("ring gadget needs length >= 3");
      cycle(ring_length);
      for (int i = 0; i < ring_length; ++i) s.halfedge_at.push_back(i);
      s.halfedge_thick.assign(ring_length, false);
      break;
    case GadgetKind::DoubleEdgeThick:
    case GadgetKind::DoubleEdgeThin:
      s.vertex_count = 2;
      s.edges = {{0, 1}, {0, 1}};
      s.halfedge_at = {0, 1};
      s.halfedge_thick.assign(2, kind == GadgetKind::DoubleEdgeThick);
      break;
    case GadgetKind::TriangleTwoThick:
      cycle(3);
      s.halfedge_at = {0, 1, 2};
      s.halfedge_thick = {true, true, false};
      break;
    case GadgetKind::FourCycleTwoThick:
      cycle(4);
      s.halfedge_at = {0, 1, 2, 3};
      s.halfedge_thick = {true, false, true, false};
      break;
    case GadgetKind::K4:
      s.vertex_count = 4;
      s.edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
      break;
    case GadgetKind::K33:
      s.vertex_count = 6;
      for (int a = 0; a < 3; ++a)
        for (int b = 3; b < 6; ++b) s.edges.emplace_back(a, b);
      break;
  }
  return s;
}

std::vector<std::vector<Color>> prune_lists(std::vector<std::vector<Color>> lists,
                                            std::span<const std::size_t> minima) {
  if (lists.size() != minima.size()) throw StructuralError("prune_lists: size mismatch");
  for (std::size_t i = 0; i < lists.size(); ++i) {
    auto& l = lists[i];
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
    if (l.size() < minima[i])
      throw StructuralError("list " + std::to_string(i) + " has " + std::to_string(l.size()) + " colors, minimum is " +
                            std::to_string(minima[i]));
    l.resize(minima[i]);
  }
  return lists;
}

RingGadget ring_from_slots(int length, const std::vector<std::vector<Color>>& slot_lists) {
  if (static_cast<int>(slot_lists.size()) != 3 * length) throw StructuralError("ring slot count mismatch");
  RingGadget r;
  r.vertex_lists.assign(slot_lists.begin(), slot_lists.begin() + length);
  r.edge_lists.assign(slot_lists.begin() + length, slot_lists.begin() + 2 * length);
  r.halfedge_lists.assign(slot_lists.begin() + 2 * length, slot_lists.end());
  return r;
}

std::vector<std::vector<Color>> ring_slot_lists(const RingGadget& ring) {
  std::vector<std::vector<Color>> out(ring.vertex_lists);
  out.insert(out.end(), ring.edge_lists.begin(), ring.edge_lists.end());
  out.insert(out.end(), ring.halfedge_lists.begin(), ring.halfedge_lists.end());
  return out;
}

namespace {

Color first_free(const std::vector<Color>& list, std::initializer_list<Color> used) {
  for (Color c : list)
    if (std::find(used.begin(), used.end(), c) == used.end()) return c;
  return kUncolored;
}

}  // namespace

std::vector<Color> solve_ring(const RingGadget& input) {
  const int m = input.length();
  if (m < 3 || static_cast<int>(input.edge_lists.size()) != m || static_cast<int>(input.halfedge_lists.size()) != m)
    throw StructuralError("malformed ring gadget");
  const auto shape = gadget_shape(GadgetKind::Ring, m);
  const auto minima = shape.minima();
  const RingGadget ring = ring_from_slots(m, prune_lists(ring_slot_lists(input), minima));
  const auto& vl = ring.vertex_lists;
  const auto& el = ring.edge_lists;
  const auto& hl = ring.halfedge_lists;

  auto halfedge_ok = [&](int i, Color v, Color e_prev, Color e_next) {
    return first_free(hl[i], {v, e_prev, e_next}) != kUncolored;
  };

  // State at position i: (index into vl[i], index into el[i]); 4 x 5 at most.
  constexpr int kStates = 32;
  auto state = [](int vi, int ei) { return vi * 8 + ei; };
  std::vector<std::array<int, kStates>> back(m);

  for (std::size_t a = 0; a < vl[0].size(); ++a) {
    for (std::size_t b = 0; b < el[0].size(); ++b) {
      const Color v0 = vl[0][a];
      const Color e0 = el[0][b];
      if (v0 == e0) continue;
      for (auto& row : back) row.fill(-1);
      back[0][state(a, b)] = state(a, b);
      for (int i = 1; i < m; ++i) {
        for (int ps = 0; ps < kStates; ++ps) {
          if (back[i - 1][ps] < 0) continue;
          const Color pv = vl[i - 1][ps / 8];
          const Color pe = el[i - 1][ps % 8];
          for (std::size_t x = 0; x < vl[i].size(); ++x) {
            const Color v = vl[i][x];
            if (v == pv || v == pe) continue;
            for (std::size_t y = 0; y < el[i].size(); ++y) {
              const int s = state(x, y);
              if (back[i][s] >= 0) continue;
              const Color e = el[i][y];
              if (e == v || e == pe) continue;
              if (!halfedge_ok(i, v, pe, e)) continue;
              if (i == m - 1 && (v == v0 || e == e0 || e == v0 || !halfedge_ok(0, v0, e, e0))) continue;
              back[i][s] = ps;
            }
          }
        }
      }
      int last = -1;
      for (int s = 0; s < kStates && last < 0; ++s)
        if (back[m - 1][s] >= 0) last = s;
      if (last < 0) continue;

      std::vector<Color> out(3 * m, kUncolored);
      for (int i = m - 1, s = last; i >= 0; --i) {
        out[i] = vl[i][s / 8];
        out[m + i] = el[i][s % 8];
        s = back[i][s];
      }
      for (int i = 0; i < m; ++i)
        out[2 * m + i] = first_free(hl[i], {out[i], out[m + (i + m - 1) % m], out[m + i]});
      return out;
    }
  }
  throw Infeasible("ring gadget of length " + std::to_string(m) + " has no coloring");
}

namespace {

// Backtracking with forward checking over at most 32 slots.
class FixedSearch {
 public:
  FixedSearch(const std::vector<std::vector<Color>>& lists, const std::vector<std::vector<int>>& conflicts)
      : lists_(lists), conflicts_(conflicts), colors_(lists.size(), kUncolored) {}

  bool run() { return assign(0); }
  const std::vector<Color>& colors() const { return colors_; }

 private:
  bool allowed(std::size_t slot, Color c) const {
    for (int j : conflicts_[slot])
      if (colors_[j] == c) return false;
    return true;
  }

  bool assign(std::size_t slot) {
    if (slot == lists_.size()) return true;
    for (Color c : lists_[slot]) {
      if (!allowed(slot, c)) continue;
      colors_[slot] = c;
      if (lookahead(slot) && assign(slot + 1)) return true;
      colors_[slot] = kUncolored;
    }
    return false;
  }

  // Every unassigned neighbor of `slot` must keep at least one usable color.
  bool lookahead(std::size_t slot) const {
    for (int j : conflicts_[slot]) {
      if (colors_[j] != kUncolored) continue;
      bool any = false;
      for (Color c : lists_[j]) {
        if (allowed(j, c)) {
          any = true;
          break;
        }
      }
      if (!any) return false;
    }
    return true;
  }

  const std::vector<std::vector<Color>>& lists_;
  const std::vector<std::vector<int>>& conflicts_;
  std::vector<Color> colors_;
};

}  // namespace

std::vector<Color> solve_fixed(const FixedGadget& gadget) {
  if (gadget.kind == GadgetKind::Ring) throw StructuralError("ring gadgets go through solve_ring");
  if (gadget.kind == GadgetKind::DoubleEdgeThin) return solve_double_edge_thin(gadget);
  const auto shape = gadget_shape(gadget.kind);
  if (static_cast<int>(gadget.lists.size()) != shape.slot_count())
    throw StructuralError(std::string("wrong slot count for ") + std::string(kind_name(gadget.kind)));
  const auto minima = shape.minima();
  const auto lists = prune_lists(gadget.lists, minima);
  const auto conflicts = shape.conflicts();
  FixedSearch search(lists, conflicts);
  if (!search.run()) throw Infeasible(std::string(kind_name(gadget.kind)) + " gadget has no coloring");
  return search.colors();
}

std::vector<Color> solve_double_edge_thin(const FixedGadget& gadget) {
  if (gadget.kind != GadgetKind::DoubleEdgeThin) throw StructuralError("not a thin double-edge gadget");
  const auto shape = gadget_shape(gadget.kind);
  if (static_cast<int>(gadget.lists.size()) != shape.slot_count())
    throw StructuralError("wrong slot count for double-edge-thin");
  const auto minima = shape.minima();
  const auto l = prune_lists(gadget.lists, minima);
  enum { V1, V2, E1, E2, E3, E4 };

  Color v1 = kUncolored;
  Color e4 = kUncolored;
  for (Color c : l[V1]) {
    if (std::find(l[E4].begin(), l[E4].end(), c) != l[E4].end()) {
      v1 = e4 = c;
      break;
    }
  }
  if (v1 == kUncolored) {
    // |L(v1)| + |L(e4)| > |L(e1)|, so some color of v1 or e4 is missing from L(e1).
    auto missing = [&](Color c) { return std::find(l[E1].begin(), l[E1].end(), c) == l[E1].end(); };
    auto in_v1 = std::find_if(l[V1].begin(), l[V1].end(), missing);
    auto in_e4 = std::find_if(l[E4].begin(), l[E4].end(), missing);
    if (in_v1 != l[V1].end() && (in_e4 == l[E4].end() || *in_v1 <= *in_e4)) {
      v1 = *in_v1;
      e4 = l[E4].front();
    } else if (in_e4 != l[E4].end()) {
      e4 = *in_e4;
      v1 = l[V1].front();
    } else {
      throw Infeasible("double-edge-thin: no color of v1 or e4 avoids L(e1)");
    }
  }
  std::vector<Color> out(6, kUncolored);
  out[V1] = v1;
  out[E4] = e4;
  out[E3] = first_free(l[E3], {v1});
  out[V2] = first_free(l[V2], {v1, e4});
  out[E2] = first_free(l[E2], {v1, out[V2], out[E3], e4});
  out[E1] = first_free(l[E1], {v1, out[V2], out[E2], out[E3], e4});
  if (std::find(out.begin(), out.end(), kUncolored) != out.end())
    throw Infeasible("double-edge-thin: greedy completion got stuck");
  return out;
}

bool is_valid_gadget_coloring(const GadgetShape& shape, const std::vector<std::vector<Color>>& lists,
                              std::span<const Color> colors) {
  const int slots = shape.slot_count();
  if (static_cast<int>(colors.size()) != slots || static_cast<int>(lists.size()) != slots) return false;
  for (int s = 0; s < slots; ++s)
    if (std::find(lists[s].begin(), lists[s].end(), colors[s]) == lists[s].end()) return false;
  const auto adj = shape.conflicts();
  for (int s = 0; s < slots; ++s)
    for (int t : adj[s])
      if (colors[s] == colors[t]) return false;
  return true;
}

}  // namespace totalchoose
