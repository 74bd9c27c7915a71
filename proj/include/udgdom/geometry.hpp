#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "udgdom/errors.hpp"

namespace udgdom {

struct Point2D {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2D&, const Point2D&) = default;
};

inline double squared_distance(const Point2D& a, const Point2D& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

// Disk centers plus the edge threshold. Vertex i is points[i].
struct PointSet {
  std::vector<Point2D> points;
  double radius = 1.0;
};

// Integer index of a radius x radius grid cell.
struct Cell {
  std::int64_t ix = 0;
  std::int64_t iy = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

using CellBuckets = std::map<Cell, std::vector<Vertex>>;

Cell cell_of(const Point2D& p, double cell_size);

// The nine cells of the 3x3 block centred on c, row-major from (ix-1, iy-1).
std::vector<Cell> cell_block(const Cell& c);

// Unit disk graph over a point set: i ~ j iff i != j and |p_i - p_j| <= radius.
// Immutable once built.
class UnitDiskGraph {
 public:
  explicit UnitDiskGraph(PointSet pointset);

  std::size_t size() const { return pointset_.points.size(); }
  double radius() const { return pointset_.radius; }
  const PointSet& pointset() const { return pointset_; }
  const Point2D& point(Vertex v) const;

  // Sorted ascending. Throws std::out_of_range for v >= size().
  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;
  std::size_t edge_count() const { return edge_count_; }

  // Closed-disk test on squared distances, no epsilon.
  bool within_radius(const Point2D& a, const Point2D& b) const {
    return squared_distance(a, b) <= radius_sq_;
  }

  Cell cell(Vertex v) const { return cell_of(point(v), radius()); }
  const CellBuckets& buckets() const { return buckets_; }

 private:
  PointSet pointset_;
  double radius_sq_;
  std::vector<std::vector<Vertex>> adjacency_;
  CellBuckets buckets_;
  std::size_t edge_count_ = 0;
};

// Validates the point set (non-empty, finite coordinates, positive finite
// radius) and builds the graph via 3x3 cell probes.
UnitDiskGraph build_udg(PointSet pointset);

struct DegenerateVertexReport {
  std::vector<Vertex> isolated;

  bool empty() const { return isolated.empty(); }
};

DegenerateVertexReport isolated_vertices(const UnitDiskGraph& g);

// Throws IsolatedVertexError listing every degree-0 vertex, if any.
void require_no_isolated(const UnitDiskGraph& g);

}  // namespace udgdom
