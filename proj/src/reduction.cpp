#include "udgdom/reduction.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace udgdom {

GridGraph::GridGraph(std::vector<LatticePoint> vertices) : vertices_(std::move(vertices)) {
  std::map<LatticePoint, Vertex> index;
  for (Vertex i = 0; i < vertices_.size(); ++i) {
    if (!index.emplace(vertices_[i], i).second) {
      throw InvalidInputError("duplicate lattice point (" + std::to_string(vertices_[i].ix) +
                              ", " + std::to_string(vertices_[i].iy) + ")");
    }
  }
  for (Vertex i = 0; i < vertices_.size(); ++i) {
    const auto& p = vertices_[i];
    for (LatticePoint q : {LatticePoint{p.ix + 1, p.iy}, LatticePoint{p.ix, p.iy + 1},
                           LatticePoint{p.ix - 1, p.iy}, LatticePoint{p.ix, p.iy - 1}}) {
      auto it = index.find(q);
      if (it != index.end() && i < it->second) edges_.push_back({i, it->second});
    }
  }
  std::sort(edges_.begin(), edges_.end());
}

std::vector<Vertex> GridGraph::isolated() const {
  std::vector<char> touched(size(), 0);
  for (const auto& e : edges_) touched[e.i] = touched[e.j] = 1;
  std::vector<Vertex> out;
  for (Vertex v = 0; v < size(); ++v) {
    if (!touched[v]) out.push_back(v);
  }
  return out;
}

UnitDiskGraph GridGraph::as_udg() const {
  PointSet ps;
  ps.radius = 1.0;
  for (const auto& p : vertices_) {
    ps.points.push_back({static_cast<double>(p.ix), static_cast<double>(p.iy)});
  }
  return build_udg(std::move(ps));
}

namespace {

void check_gadget_shape(const GadgetUdg& gadget) {
  const auto& udg = gadget.udg;
  for (std::size_t k = 0; k < gadget.edges.size(); ++k) {
    const auto& e = gadget.edges[k];
    std::vector<Vertex> expect{e.i, e.j, gadget.pendant(k)};
    std::sort(expect.begin(), expect.end());
    auto mid_nb = udg.neighbors(gadget.mid(k));
    auto pend_nb = udg.neighbors(gadget.pendant(k));
    if (!std::equal(mid_nb.begin(), mid_nb.end(), expect.begin(), expect.end()) ||
        pend_nb.size() != 1 || pend_nb[0] != gadget.mid(k) || udg.adjacent(e.i, e.j)) {
      throw std::logic_error("gadget adjacency broken at grid edge " + std::to_string(k));
    }
  }
}

void require_valid_trdf(const GadgetUdg& gadget, const RomanAssignment& f) {
  if (!verify_trdf(gadget.udg, f)) {
    throw InvalidAssignmentError("assignment is not a total Roman dominating function of the gadget");
  }
}

}  // namespace

GadgetUdg grid_to_gadget(const GridGraph& g, bool scale2) {
  if (g.size() == 0) throw InvalidInputError("grid graph is empty");
  if (auto iso = g.isolated(); !iso.empty()) throw IsolatedVertexError(std::move(iso));

  const double scale = scale2 ? 2.0 : 1.0;
  const double offset = 0.1 * scale;
  PointSet ps;
  ps.radius = 0.5 * scale;
  std::vector<GadgetRole> roles;

  for (Vertex i = 0; i < g.size(); ++i) {
    const auto& p = g.vertices()[i];
    ps.points.push_back({scale * static_cast<double>(p.ix), scale * static_cast<double>(p.iy)});
    roles.push_back({GadgetRole::Kind::kOriginal, i, {}});
  }
  for (const auto& e : g.edges()) {
    const auto& a = g.vertices()[e.i];
    const auto& b = g.vertices()[e.j];
    const Point2D mid{scale * static_cast<double>(a.ix + b.ix) / 2.0,
                      scale * static_cast<double>(a.iy + b.iy) / 2.0};
    const bool horizontal = a.iy == b.iy;
    const Point2D pendant = horizontal ? Point2D{mid.x, mid.y + offset}
                                       : Point2D{mid.x + offset, mid.y};
    ps.points.push_back(mid);
    ps.points.push_back(pendant);
    roles.push_back({GadgetRole::Kind::kMid, 0, e});
    roles.push_back({GadgetRole::Kind::kPendant, 0, e});
  }

  GadgetUdg gadget{build_udg(std::move(ps)), std::move(roles), g.edges(), g.size()};
  check_gadget_shape(gadget);
  return gadget;
}

RomanAssignment ds_to_trdf(const GridGraph& g, const std::vector<Vertex>& d,
                           const GadgetUdg& gadget) {
  if (!is_dominating_set(g.as_udg(), d)) {
    throw NotDominatingError("vertex set does not dominate the grid graph");
  }
  std::vector<char> in_d(g.size(), 0);
  for (Vertex v : d) in_d[v] = 1;

  RomanAssignment f;
  f.values.assign(gadget.udg.size(), 0);
  for (Vertex v = 0; v < g.size(); ++v) {
    if (in_d[v]) f.values[v] = 1;
  }
  for (std::size_t k = 0; k < gadget.edges.size(); ++k) {
    const auto& e = gadget.edges[k];
    if (in_d[e.i] || in_d[e.j]) {
      f.values[gadget.mid(k)] = 2;
    } else {
      f.values[gadget.mid(k)] = 1;
      f.values[gadget.pendant(k)] = 1;
    }
  }
  return f;
}

RomanAssignment canonicalize_trdf(const GadgetUdg& gadget, const RomanAssignment& f) {
  require_valid_trdf(gadget, f);
  RomanAssignment out = f;
  auto& val = out.values;
  for (std::size_t k = 0; k < gadget.edges.size(); ++k) {
    const auto& e = gadget.edges[k];
    auto& x = val[gadget.mid(k)];
    auto& y = val[gadget.pendant(k)];
    if (x == 1 && y == 1 && (val[e.i] >= 1 || val[e.j] >= 1)) {
      x = 2;
      y = 0;
    } else if (x == 1 && y == 2) {
      x = 2;
      y = 1;
    }
  }
  return out;
}

bool ones_force_twos(const GadgetUdg& gadget, const RomanAssignment& f) {
  for (std::size_t k = 0; k < gadget.edges.size(); ++k) {
    const auto& e = gadget.edges[k];
    if ((f.values[e.i] == 1 || f.values[e.j] == 1) && f.values[gadget.mid(k)] != 2) return false;
  }
  return true;
}

std::vector<Vertex> trdf_to_ds(const GridGraph& g, const GadgetUdg& gadget,
                               const RomanAssignment& f) {
  require_valid_trdf(gadget, f);
  std::set<Vertex> d;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (f.values[v] == 1) d.insert(v);
  }
  for (std::size_t k = 0; k < gadget.edges.size(); ++k) {
    if (f.values[gadget.mid(k)] == 2 && f.values[gadget.pendant(k)] == 1) {
      d.insert(gadget.edges[k].j);
    }
  }
  std::vector<Vertex> out(d.begin(), d.end());
  if (!is_dominating_set(g.as_udg(), out)) {
    throw NotDominatingError("mapped vertex set does not dominate the grid graph");
  }
  return out;
}

ClaimCheck check_claim(const GridGraph& g, std::size_t roman_limit) {
  const GadgetUdg gadget = grid_to_gadget(g);
  if (gadget.udg.size() > roman_limit) throw SizeLimitError(gadget.udg.size(), roman_limit);

  ClaimCheck c;
  c.n = g.size();
  c.m = g.edges().size();
  c.gadget_vertices = gadget.udg.size();

  const ExactResult ds = exact_min_ds(g.as_udg(), std::max(g.size(), kDefaultSetOracleLimit));
  const ExactResult trdf = exact_min_trdf(gadget.udg, /*tie_break_min_v1=*/true, roman_limit);
  c.gamma = ds.objective;
  c.gamma_tr = trdf.objective;

  const std::int64_t offset = gadget.weight_offset();
  c.equivalence_all_k = true;
  for (std::int64_t k = 1; k <= static_cast<std::int64_t>(c.n); ++k) {
    c.equivalence_all_k &= (c.gamma <= k) == (c.gamma_tr <= k + offset);
  }

  const RomanAssignment forward = ds_to_trdf(g, ds.members, gadget);
  c.necessity_weight = verify_trdf(gadget.udg, forward) && forward.weight() == c.gamma + offset;

  const RomanAssignment canonical = canonicalize_trdf(gadget, trdf.assignment);
  c.ones_force_twos_holds =
      ones_force_twos(gadget, trdf.assignment) && ones_force_twos(gadget, canonical);
  try {
    const auto back = trdf_to_ds(g, gadget, canonical);
    c.sufficiency = static_cast<std::int64_t>(back.size()) <= trdf.objective - offset;
  } catch (const NotDominatingError&) {
    c.sufficiency = false;
  }
  return c;
}

bool verify_claim(const GridGraph& g, std::int64_t k, std::size_t roman_limit) {
  const GadgetUdg gadget = grid_to_gadget(g);
  if (gadget.udg.size() > roman_limit) throw SizeLimitError(gadget.udg.size(), roman_limit);
  const std::int64_t gamma =
      exact_min_ds(g.as_udg(), std::max(g.size(), kDefaultSetOracleLimit)).objective;
  const std::int64_t gamma_tr = exact_min_trdf(gadget.udg, false, roman_limit).objective;
  return (gamma <= k) == (gamma_tr <= k + gadget.weight_offset());
}

namespace {

using Animal = std::vector<LatticePoint>;

Animal normalized(Animal cells) {
  std::int64_t min_x = cells.front().ix;
  std::int64_t min_y = cells.front().iy;
  for (const auto& c : cells) {
    min_x = std::min(min_x, c.ix);
    min_y = std::min(min_y, c.iy);
  }
  for (auto& c : cells) {
    c.ix -= min_x;
    c.iy -= min_y;
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

}  // namespace

std::vector<GridGraph> enumerate_lattice_animals(std::size_t max_n, std::size_t min_n) {
  std::vector<GridGraph> out;
  if (max_n == 0) return out;
  std::set<Animal> level{Animal{{0, 0}}};
  for (std::size_t size = 1;; ++size) {
    if (size >= min_n) {
      for (const auto& a : level) out.emplace_back(a);
    }
    if (size == max_n) break;
    std::set<Animal> next;
    for (const auto& a : level) {
      for (const auto& c : a) {
        for (LatticePoint q : {LatticePoint{c.ix + 1, c.iy}, LatticePoint{c.ix - 1, c.iy},
                               LatticePoint{c.ix, c.iy + 1}, LatticePoint{c.ix, c.iy - 1}}) {
          if (std::binary_search(a.begin(), a.end(), q)) continue;
          Animal grown = a;
          grown.push_back(q);
          next.insert(normalized(std::move(grown)));
        }
      }
    }
    level = std::move(next);
  }
  return out;
}

}  // namespace udgdom
