#pragma once

#include <cstdint>
#include <vector>

#include "udgdom/approx.hpp"
#include "udgdom/geometry.hpp"

namespace udgdom {

// Exponential-time oracles for small graphs. Each call is independent.

inline constexpr std::size_t kDefaultSetOracleLimit = 20;    // gamma, gamma_t
inline constexpr std::size_t kDefaultRomanOracleLimit = 14;  // gamma_R, gamma_tR

struct ExactResult {
  std::int64_t objective = 0;
  std::vector<Vertex> members;  // set problems (ds, tds)
  RomanAssignment assignment;   // labelling problems (rds, trds)
  std::uint64_t explored = 0;   // search nodes visited
};

// Minimum dominating set. Branches on the lowest undominated vertex; among
// minimum sets returns the lexicographically smallest sorted member list.
ExactResult exact_min_ds(const UnitDiskGraph& g, std::size_t limit = kDefaultSetOracleLimit);

// Minimum total dominating set, same search with open neighborhoods.
// Throws IsolatedVertexError.
ExactResult exact_min_tds(const UnitDiskGraph& g, std::size_t limit = kDefaultSetOracleLimit);

// Minimum-weight total Roman dominating function. Labels are fixed vertex by
// vertex in ascending order, trying 0, 1, 2, so the first optimum found is
// the lexicographically smallest label vector. With tie_break_min_v1 the
// search minimises (weight, |V1|) instead of weight alone.
// Throws IsolatedVertexError.
ExactResult exact_min_trdf(const UnitDiskGraph& g, bool tie_break_min_v1 = false,
                           std::size_t limit = kDefaultRomanOracleLimit);

// Minimum-weight Roman dominating function (no totality constraint).
ExactResult exact_min_rdf(const UnitDiskGraph& g, std::size_t limit = kDefaultRomanOracleLimit);

}  // namespace udgdom
