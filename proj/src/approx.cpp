#include "udgdom/approx.hpp"

#include <algorithm>
#include <iterator>

namespace udgdom {

std::int64_t RomanAssignment::weight() const {
  std::int64_t w = 0;
  for (auto v : values) w += v;
  return w;
}

std::size_t RomanAssignment::count(std::uint8_t label) const {
  return static_cast<std::size_t>(std::count(values.begin(), values.end(), label));
}

TdsTrace tds_udg_sc_trace(const UnitDiskGraph& g) {
  require_no_isolated(g);
  TdsTrace t;
  t.independent = maximal_independent_set(g);
  t.cover_instance = build_cover_instance(g, t.independent);
  t.cover = greedy_set_cover(t.cover_instance);

  auto& members = t.result.members;
  std::merge(t.independent.members.begin(), t.independent.members.end(),
             t.cover.owners.begin(), t.cover.owners.end(), std::back_inserter(members));
  return t;
}

TotalDominatingSet tds_udg_sc(const UnitDiskGraph& g) {
  return tds_udg_sc_trace(g).result;
}

RomanAssignment trdf_udg_sc(const UnitDiskGraph& g) {
  require_no_isolated(g);
  const IndependentSet twos = maximal_independent_set(g);
  const CoverSelection ones = greedy_set_cover(build_cover_instance(g, twos));

  RomanAssignment f;
  f.values.assign(g.size(), 0);
  for (Vertex v : twos.members) f.values[v] = 2;
  for (Vertex v : ones.owners) f.values[v] = 1;
  return f;
}

namespace {

std::vector<char> membership(const UnitDiskGraph& g, const std::vector<Vertex>& members) {
  std::vector<char> in(g.size(), 0);
  for (Vertex v : members) {
    if (v < g.size()) in[v] = 1;
  }
  return in;
}

bool all_in_range(const UnitDiskGraph& g, const std::vector<Vertex>& members) {
  return std::all_of(members.begin(), members.end(), [&](Vertex v) { return v < g.size(); });
}

bool any_neighbor(const UnitDiskGraph& g, Vertex v, auto&& pred) {
  auto nb = g.neighbors(v);
  return std::any_of(nb.begin(), nb.end(), pred);
}

}  // namespace

bool is_dominating_set(const UnitDiskGraph& g, const std::vector<Vertex>& members) {
  if (!all_in_range(g, members)) return false;
  const auto in = membership(g, members);
  for (Vertex v = 0; v < g.size(); ++v) {
    if (!in[v] && !any_neighbor(g, v, [&](Vertex u) { return in[u] != 0; })) return false;
  }
  return true;
}

bool verify_tds(const UnitDiskGraph& g, const TotalDominatingSet& s) {
  if (!all_in_range(g, s.members)) return false;
  // Domination plus totality is the same as: every vertex has a neighbor in s.
  const auto in = membership(g, s.members);
  for (Vertex v = 0; v < g.size(); ++v) {
    if (!any_neighbor(g, v, [&](Vertex u) { return in[u] != 0; })) return false;
  }
  return true;
}

bool is_roman_dominating(const UnitDiskGraph& g, const RomanAssignment& f) {
  if (f.values.size() != g.size()) return false;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (f.values[v] > 2) return false;
    if (f.values[v] == 0 &&
        !any_neighbor(g, v, [&](Vertex u) { return f.values[u] == 2; })) {
      return false;
    }
  }
  return true;
}

bool verify_trdf(const UnitDiskGraph& g, const RomanAssignment& f) {
  if (!is_roman_dominating(g, f)) return false;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (f.values[v] >= 1 &&
        !any_neighbor(g, v, [&](Vertex u) { return f.values[u] >= 1; })) {
      return false;
    }
  }
  return true;
}

}  // namespace udgdom
