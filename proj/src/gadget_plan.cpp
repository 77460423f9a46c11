#include "totalchoose/gadget_plan.hpp"

#include <array>

#include "totalchoose/errors.hpp"

namespace totalchoose {

namespace {
constexpr std::array<std::pair<GadgetKind, std::string_view>, 7> kNames{{
    {GadgetKind::Ring, "ring"},
    {GadgetKind::DoubleEdgeThick, "double-edge-thick"},
    {GadgetKind::TriangleTwoThick, "triangle-two-thick"},
    {GadgetKind::FourCycleTwoThick, "four-cycle-two-thick"},
    {GadgetKind::DoubleEdgeThin, "double-edge-thin"},
    {GadgetKind::K4, "k4"},
    {GadgetKind::K33, "k33"},
}};

constexpr std::array<std::pair<std::string_view, GadgetKind>, 6> kAliases{{
    {"det", GadgetKind::DoubleEdgeThick},
    {"ttt", GadgetKind::TriangleTwoThick},
    {"fctt", GadgetKind::FourCycleTwoThick},
    {"dethin", GadgetKind::DoubleEdgeThin},
    {"K4", GadgetKind::K4},
    {"K33", GadgetKind::K33},
}};
}  // namespace

std::string_view kind_name(GadgetKind kind) {
  for (auto [k, name] : kNames)
    if (k == kind) return name;
  return "unknown";
}

GadgetKind parse_kind(std::string_view name) {
  for (auto [k, n] : kNames)
    if (n == name) return k;
  for (auto [n, k] : kAliases)
    if (n == name) return k;
  throw InputError("unknown gadget kind '" + std::string(name) + "'");
}

std::vector<ElementId> GadgetPlan::elements() const {
  std::vector<ElementId> out;
  out.reserve(vertices.size() + edges.size() + halfedges.size());
  for (VertexId v : vertices) out.push_back(ElementId::vertex(v));
  for (EdgeId e : edges) out.push_back(ElementId::edge(e));
  for (const auto& h : halfedges) out.push_back(ElementId::edge(h.edge));
  return out;
}

std::vector<SlotRole> GadgetPlan::roles() const {
  std::vector<SlotRole> out(vertices.size(), SlotRole::FullVertex);
  out.insert(out.end(), edges.size(), SlotRole::FullEdge);
  for (const auto& h : halfedges) out.push_back(h.thick ? SlotRole::ThickHalfedge : SlotRole::ThinHalfedge);
  return out;
}

ElementMask GadgetPlan::mask(const Multigraph& g) const {
  ElementMask m(g);
  for (ElementId x : elements()) m.insert(g, x);
  return m;
}

}  // namespace totalchoose
