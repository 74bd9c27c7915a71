#pragma once

#include <cstdint>
#include <vector>

#include "udgdom/geometry.hpp"
#include "udgdom/mis.hpp"

namespace udgdom {

struct CoverSubset {
  Vertex owner = 0;             // vertex u_i outside the independent set
  std::vector<Vertex> members;  // N(u_i) intersected with the universe, sorted
};

struct SetCoverInstance {
  std::vector<Vertex> universe;
  std::vector<CoverSubset> subsets;

  std::size_t max_subset_size() const;
};

struct CoverSelection {
  std::vector<std::size_t> chosen;  // subset positions, ascending
  std::vector<Vertex> owners;       // owner of each chosen subset

  std::size_t size() const { return chosen.size(); }
};

// Universe = members of d; one subset per vertex u outside d, ascending u,
// holding N(u) intersected with d. Throws IsolatedMemberError if a member of
// d has no neighbor at all.
SetCoverInstance build_cover_instance(const UnitDiskGraph& g, const IndependentSet& d);

// Classic greedy: repeatedly take the subset covering the most uncovered
// elements, lowest position on ties. Throws UncoverableError when the union
// of the subsets misses part of the universe.
CoverSelection greedy_set_cover(const SetCoverInstance& inst);

inline constexpr std::size_t kDefaultExactCoverLimit = 20;

// Minimum-cardinality cover by branch and bound; among minimum covers the
// lexicographically smallest position list. Throws SizeLimitError when the
// instance has more than max_subsets subsets, UncoverableError if infeasible.
CoverSelection exact_set_cover(const SetCoverInstance& inst,
                               std::size_t max_subsets = kDefaultExactCoverLimit);

// True iff the chosen subsets jointly cover the universe.
bool covers_universe(const SetCoverInstance& inst, const std::vector<std::size_t>& chosen);

struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

// H(m) = 1 + 1/2 + ... + 1/m in lowest terms. H(5) = 137/60.
Fraction harmonic_number(unsigned m);

}  // namespace udgdom
