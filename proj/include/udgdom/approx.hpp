#pragma once

#include <cstdint>
#include <vector>

#include "udgdom/geometry.hpp"
#include "udgdom/mis.hpp"
#include "udgdom/setcover.hpp"

namespace udgdom {

struct TotalDominatingSet {
  std::vector<Vertex> members;  // sorted ascending
};

// f : V -> {0, 1, 2}.
struct RomanAssignment {
  std::vector<std::uint8_t> values;

  // 2|V2| + |V1|
  std::int64_t weight() const;
  std::size_t count(std::uint8_t label) const;
};

// Approximation factors as exact rationals. 1291/180 = 44/9 + 137/60 and
// 2171/360 = 44/9 + 137/120.
inline constexpr Fraction kTdsBound{1291, 180};
inline constexpr Fraction kTrdsBound{2171, 360};

// value <= bound * optimum, evaluated on integers.
inline bool within_bound(std::int64_t value, std::int64_t optimum, Fraction bound) {
  return value * bound.den <= bound.num * optimum;
}

// Both halves of the total dominating set construction, exposed so callers can
// check the decomposition D_t = D + T.
struct TdsTrace {
  IndependentSet independent;
  SetCoverInstance cover_instance;
  CoverSelection cover;
  TotalDominatingSet result;
};

// Maximal independent set D, then a greedy cover of D by neighborhoods of
// vertices outside D. Throws IsolatedVertexError.
TdsTrace tds_udg_sc_trace(const UnitDiskGraph& g);
TotalDominatingSet tds_udg_sc(const UnitDiskGraph& g);

// Label 2 on a maximal independent set, label 1 on the owners of a greedy
// cover of it, 0 elsewhere. Throws IsolatedVertexError.
RomanAssignment trdf_udg_sc(const UnitDiskGraph& g);

bool is_dominating_set(const UnitDiskGraph& g, const std::vector<Vertex>& members);
bool verify_tds(const UnitDiskGraph& g, const TotalDominatingSet& s);
bool is_roman_dominating(const UnitDiskGraph& g, const RomanAssignment& f);
bool verify_trdf(const UnitDiskGraph& g, const RomanAssignment& f);

}  // namespace udgdom
