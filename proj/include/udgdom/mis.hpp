#pragma once

#include <vector>

#include "udgdom/geometry.hpp"

namespace udgdom {

struct IndependentSet {
  std::vector<Vertex> members;  // sorted ascending
};

// Greedy maximal independent set, scanning vertices in ascending index.
// A candidate is accepted unless an already-selected member within the
// radius sits in one of the nine cells around it.
IndependentSet maximal_independent_set(const UnitDiskGraph& g);

// True iff s is pairwise non-adjacent and every other vertex has a neighbor
// in s. Indices must be < g.size().
bool check_independent_maximal(const UnitDiskGraph& g, const IndependentSet& s);

// Packing statistics of an independent set. For an independent set of a unit
// disk graph, a non-member sees at most 5 members and a radius x radius cell
// holds at most 3 members.
struct PackingStats {
  std::size_t max_members_adjacent_to_outsider = 0;
  std::size_t max_members_per_cell = 0;
};

PackingStats packing_stats(const UnitDiskGraph& g, const IndependentSet& s);

inline constexpr std::size_t kMaxIndependentNeighbors = 5;
inline constexpr std::size_t kMaxIndependentPerCell = 3;

}  // namespace udgdom
