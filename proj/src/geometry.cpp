#include "udgdom/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace udgdom {

Cell cell_of(const Point2D& p, double cell_size) {
  return Cell{static_cast<std::int64_t>(std::floor(p.x / cell_size)),
              static_cast<std::int64_t>(std::floor(p.y / cell_size))};
}

std::vector<Cell> cell_block(const Cell& c) {
  std::vector<Cell> out;
  out.reserve(9);
  for (std::int64_t dy = -1; dy <= 1; ++dy) {
    for (std::int64_t dx = -1; dx <= 1; ++dx) {
      out.push_back(Cell{c.ix + dx, c.iy + dy});
    }
  }
  return out;
}

namespace {

void validate(const PointSet& ps) {
  if (ps.points.empty()) {
    throw InvalidInputError("point set is empty");
  }
  if (!std::isfinite(ps.radius) || ps.radius <= 0.0) {
    throw InvalidInputError("radius must be positive and finite");
  }
  for (std::size_t i = 0; i < ps.points.size(); ++i) {
    const auto& p = ps.points[i];
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw InvalidInputError("point " + std::to_string(i) +
                              " has a non-finite coordinate");
    }
  }
}

}  // namespace

UnitDiskGraph::UnitDiskGraph(PointSet pointset)
    : pointset_(std::move(pointset)),
      radius_sq_(pointset_.radius * pointset_.radius) {
  validate(pointset_);
  const auto n = static_cast<Vertex>(pointset_.points.size());
  for (Vertex v = 0; v < n; ++v) {
    buckets_[cell_of(pointset_.points[v], radius())].push_back(v);
  }

  adjacency_.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    const Point2D& p = pointset_.points[v];
    auto& adj = adjacency_[v];
    for (const Cell& c : cell_block(cell_of(p, radius()))) {
      auto it = buckets_.find(c);
      if (it == buckets_.end()) continue;
      for (Vertex u : it->second) {
        if (u != v && within_radius(p, pointset_.points[u])) adj.push_back(u);
      }
    }
    std::sort(adj.begin(), adj.end());
    edge_count_ += adj.size();
  }
  edge_count_ /= 2;
}

const Point2D& UnitDiskGraph::point(Vertex v) const {
  if (v >= size()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  }
  return pointset_.points[v];
}

std::span<const Vertex> UnitDiskGraph::neighbors(Vertex v) const {
  if (v >= size()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  }
  return adjacency_[v];
}

bool UnitDiskGraph::adjacent(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

UnitDiskGraph build_udg(PointSet pointset) {
  return UnitDiskGraph(std::move(pointset));
}

DegenerateVertexReport isolated_vertices(const UnitDiskGraph& g) {
  DegenerateVertexReport report;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (g.degree(v) == 0) report.isolated.push_back(v);
  }
  return report;
}

void require_no_isolated(const UnitDiskGraph& g) {
  auto report = isolated_vertices(g);
  if (!report.empty()) throw IsolatedVertexError(std::move(report.isolated));
}

}  // namespace udgdom
