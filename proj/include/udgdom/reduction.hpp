#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "udgdom/approx.hpp"
#include "udgdom/exact.hpp"
#include "udgdom/geometry.hpp"

namespace udgdom {

struct LatticePoint {
  std::int64_t ix = 0;
  std::int64_t iy = 0;

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

struct GridEdge {
  Vertex i = 0;  // i < j
  Vertex j = 0;

  friend auto operator<=>(const GridEdge&, const GridEdge&) = default;
};

// Induced subgraph of the integer lattice: vertices at lattice distance 1 are
// adjacent. Vertex order is input order; edges are sorted (i, j) with i < j.
class GridGraph {
 public:
  // Throws InvalidInputError on duplicate coordinates.
  explicit GridGraph(std::vector<LatticePoint> vertices);

  std::size_t size() const { return vertices_.size(); }
  const std::vector<LatticePoint>& vertices() const { return vertices_; }
  const std::vector<GridEdge>& edges() const { return edges_; }
  std::vector<Vertex> isolated() const;

  // Same graph as a radius-1 unit disk graph over the lattice points.
  UnitDiskGraph as_udg() const;

 private:
  std::vector<LatticePoint> vertices_;
  std::vector<GridEdge> edges_;
};

struct GadgetRole {
  enum class Kind { kOriginal, kMid, kPendant };
  Kind kind = Kind::kOriginal;
  Vertex source = 0;  // grid vertex, for kOriginal
  GridEdge edge{};    // grid edge, for kMid / kPendant

  friend bool operator==(const GadgetRole&, const GadgetRole&) = default;
};

// Gadget graph: vertex i < n mirrors grid vertex i; grid edge k owns the mid
// vertex n + 2k and the pendant n + 2k + 1.
struct GadgetUdg {
  UnitDiskGraph udg;
  std::vector<GadgetRole> roles;
  std::vector<GridEdge> edges;
  std::size_t originals = 0;

  Vertex mid(std::size_t edge) const { return static_cast<Vertex>(originals + 2 * edge); }
  Vertex pendant(std::size_t edge) const { return static_cast<Vertex>(originals + 2 * edge + 1); }
  std::int64_t weight_offset() const { return 2 * static_cast<std::int64_t>(edges.size()); }
};

// Mid vertex at the segment midpoint, pendant 0.1 above (horizontal segment)
// or to the right (vertical segment); edge threshold 0.5. With scale2 every
// coordinate is doubled and the threshold is 1. Throws IsolatedVertexError.
GadgetUdg grid_to_gadget(const GridGraph& g, bool scale2 = false);

// Label v_i with 1 for members of d; a mid vertex gets 2 when an endpoint is in
// d, otherwise mid and pendant both get 1. Weight is |d| + 2m.
// Throws NotDominatingError if d does not dominate g.
RomanAssignment ds_to_trdf(const GridGraph& g, const std::vector<Vertex>& d,
                           const GadgetUdg& gadget);

// Weight-preserving rewrites that never increase |V1|:
//   mid = pendant = 1 with a positive endpoint  ->  mid = 2, pendant = 0
//   mid = 1, pendant = 2                        ->  mid = 2, pendant = 1
// Afterwards every original labelled 1 has all its mid vertices labelled 2.
// Throws InvalidAssignmentError if f is not a TRDF of the gadget.
RomanAssignment canonicalize_trdf(const GadgetUdg& gadget, const RomanAssignment& f);

// True iff every original vertex labelled 1 has all incident mid vertices at 2.
bool ones_force_twos(const GadgetUdg& gadget, const RomanAssignment& f);

// D = {i : f(v_i) = 1} + {j : f(x_ij) = 2 and f(y_ij) = 1}, sorted.
// Throws InvalidAssignmentError if f is not a TRDF of the gadget and
// NotDominatingError if D fails to dominate g.
std::vector<Vertex> trdf_to_ds(const GridGraph& g, const GadgetUdg& gadget,
                               const RomanAssignment& f);

// Outcome of checking the domination / total Roman domination equivalence
// on one grid graph with the exact oracles.
struct ClaimCheck {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t gadget_vertices = 0;
  std::int64_t gamma = 0;           // of the grid graph
  std::int64_t gamma_tr = 0;        // of the gadget
  bool equivalence_all_k = false;   // (gamma <= k) == (gamma_tr <= k + 2m), k = 1..n
  bool necessity_weight = false;    // ds_to_trdf(min DS) has weight gamma + 2m
  bool sufficiency = false;         // trdf_to_ds(canonical optimum) dominates, size <= W - 2m
  bool ones_force_twos_holds = false;

  bool passed() const {
    return equivalence_all_k && necessity_weight && sufficiency && ones_force_twos_holds;
  }
};

// Throws SizeLimitError when the gadget exceeds the TRDF oracle limit.
ClaimCheck check_claim(const GridGraph& g, std::size_t roman_limit = kDefaultRomanOracleLimit);

// (gamma(g) <= k) == (gamma_tR(gadget) <= k + 2m) via exact oracles.
bool verify_claim(const GridGraph& g, std::int64_t k,
                  std::size_t roman_limit = kDefaultRomanOracleLimit);

// Connected vertex sets of the lattice (fixed polyominoes) with min_n..max_n
// cells, translated so the minimum x and y are 0, ordered by size then by
// sorted coordinate list.
std::vector<GridGraph> enumerate_lattice_animals(std::size_t max_n, std::size_t min_n = 2);

}  // namespace udgdom
