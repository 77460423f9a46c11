#include "totalchoose/oracle.hpp"

#include <algorithm>

#include "totalchoose/errors.hpp"

namespace totalchoose {

namespace {

class Backtracker {
 public:
  Backtracker(const std::vector<std::vector<int>>& adj, const std::vector<std::vector<Color>>& lists,
              std::uint64_t budget)
      : adj_(adj), lists_(lists), budget_(budget), colors_(adj.size(), kUncolored) {}

  OracleStatus run() {
    if (search(static_cast<int>(colors_.size()))) return OracleStatus::Found;
    return exhausted_ ? OracleStatus::BudgetExceeded : OracleStatus::Infeasible;
  }
  const std::vector<Color>& colors() const { return colors_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool usable(int x, Color c) const {
    for (int y : adj_[x])
      if (colors_[y] == c) return false;
    return true;
  }

  int options(int x) const {
    int count = 0;
    for (Color c : lists_[x])
      if (usable(x, c)) ++count;
    return count;
  }

  bool search(int remaining) {
    if (remaining == 0) return true;
    int pick = -1, fewest = 0;
    for (int x = 0; x < static_cast<int>(colors_.size()); ++x) {
      if (colors_[x] != kUncolored) continue;
      const int k = options(x);
      if (k == 0) return false;
      if (pick < 0 || k < fewest) {
        pick = x;
        fewest = k;
      }
    }
    for (Color c : lists_[pick]) {
      if (!usable(pick, c)) continue;
      if (++nodes_ > budget_) {
        exhausted_ = true;
        return false;
      }
      colors_[pick] = c;
      if (search(remaining - 1)) return true;
      colors_[pick] = kUncolored;
      if (exhausted_) return false;
    }
    return false;
  }

  const std::vector<std::vector<int>>& adj_;
  const std::vector<std::vector<Color>>& lists_;
  std::uint64_t budget_;
  std::vector<Color> colors_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

CspResult oracle_list_color(const std::vector<std::vector<int>>& adjacency,
                            const std::vector<std::vector<Color>>& lists, std::uint64_t node_budget) {
  if (adjacency.size() != lists.size()) throw InputError("adjacency and lists differ in size");
  Backtracker bt(adjacency, lists, node_budget);
  CspResult result;
  result.status = bt.run();
  result.nodes = bt.nodes();
  if (result.status == OracleStatus::Found) result.colors = bt.colors();
  return result;
}

// Total graph built straight from the edge list, O(m^2).
OracleResult oracle_total_color(const Multigraph& g, const ListAssignment& lists, std::uint64_t node_budget) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  std::vector<std::vector<int>> adj(n + m);
  auto link = [&](int a, int b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  const auto& edges = g.edge_list();
  for (int j = 0; j < m; ++j) {
    auto [a, b] = edges[j];
    link(a, n + j);
    link(b, n + j);
    link(a, b);
    for (int k = j + 1; k < m; ++k) {
      auto [c, d] = edges[k];
      if (a == c || a == d || b == c || b == d) link(n + j, n + k);
    }
  }
  for (auto& row : adj) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  std::vector<std::vector<Color>> l(n + m);
  for (int i = 0; i < n + m && i < static_cast<int>(lists.size()); ++i)
    l[i].assign(lists.at_dense(i).begin(), lists.at_dense(i).end());

  const CspResult csp = oracle_list_color(adj, l, node_budget);
  OracleResult result;
  result.status = csp.status;
  result.nodes = csp.nodes;
  result.coloring = PartialTotalColoring(g);
  if (csp.status == OracleStatus::Found)
    for (int i = 0; i < n + m; ++i) result.coloring.set(g, g.element_at(i), csp.colors[i]);
  return result;
}

}  // namespace totalchoose
