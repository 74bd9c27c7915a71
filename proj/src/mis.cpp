#include "udgdom/mis.hpp"

#include <algorithm>
#include <map>

namespace udgdom {

IndependentSet maximal_independent_set(const UnitDiskGraph& g) {
  // Selected members per non-empty cell; at most 3 per cell.
  std::map<Cell, std::vector<Vertex>> selected;
  IndependentSet out;

  for (Vertex v = 0; v < g.size(); ++v) {
    const Point2D& p = g.point(v);
    const Cell home = g.cell(v);
    bool blocked = false;
    for (const Cell& c : cell_block(home)) {
      auto it = selected.find(c);
      if (it == selected.end()) continue;
      for (Vertex q : it->second) {
        if (g.within_radius(p, g.point(q))) {
          blocked = true;
          break;
        }
      }
      if (blocked) break;
    }
    if (!blocked) {
      selected[home].push_back(v);
      out.members.push_back(v);
    }
  }
  return out;
}

bool check_independent_maximal(const UnitDiskGraph& g, const IndependentSet& s) {
  std::vector<char> in_set(g.size(), 0);
  for (Vertex v : s.members) {
    if (v >= g.size() || in_set[v]) return false;
    in_set[v] = 1;
  }
  for (Vertex v = 0; v < g.size(); ++v) {
    bool has_member_neighbor = false;
    for (Vertex u : g.neighbors(v)) {
      if (in_set[u]) {
        has_member_neighbor = true;
        break;
      }
    }
    if (in_set[v] && has_member_neighbor) return false;   // not independent
    if (!in_set[v] && !has_member_neighbor) return false;  // not maximal
  }
  return true;
}

PackingStats packing_stats(const UnitDiskGraph& g, const IndependentSet& s) {
  std::vector<char> in_set(g.size(), 0);
  std::map<Cell, std::size_t> per_cell;
  PackingStats stats;
  for (Vertex v : s.members) {
    in_set[v] = 1;
    stats.max_members_per_cell =
        std::max(stats.max_members_per_cell, ++per_cell[g.cell(v)]);
  }
  for (Vertex u = 0; u < g.size(); ++u) {
    if (in_set[u]) continue;
    auto nb = g.neighbors(u);
    const auto count = static_cast<std::size_t>(
        std::count_if(nb.begin(), nb.end(), [&](Vertex w) { return in_set[w]; }));
    stats.max_members_adjacent_to_outsider =
        std::max(stats.max_members_adjacent_to_outsider, count);
  }
  return stats;
}

}  // namespace udgdom
