#include "udgdom/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace udgdom::io {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidInputError(std::string("malformed JSON: ") + e.what());
  }
}

// Runs f, turning nlohmann type/key errors into InvalidInputError.
template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw InvalidInputError(std::string("invalid ") + what + ": " + e.what());
  }
}

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json edge_json(const GridEdge& e) { return json::array({e.i, e.j}); }

}  // namespace

PointSet parse_instance(const std::string& text) {
  const json j = parse_json(text);
  return guarded("instance", [&] {
    PointSet ps;
    if (!j.is_object()) throw InvalidInputError("instance must be a JSON object");
    ps.radius = j.value("radius", 1.0);
    for (const auto& p : j.at("points")) {
      if (!p.is_array() || p.size() != 2) {
        throw InvalidInputError("each point must be an [x, y] pair");
      }
      ps.points.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
    }
    return ps;
  });
}

std::string format_instance(const PointSet& ps) {
  std::ostringstream os;
  os << "{\n  \"radius\": " << format_real(ps.radius) << ",\n  \"points\": [";
  for (std::size_t i = 0; i < ps.points.size(); ++i) {
    os << (i ? ",\n    " : "\n    ") << '[' << format_real(ps.points[i].x) << ", "
       << format_real(ps.points[i].y) << ']';
  }
  os << (ps.points.empty() ? "]\n}\n" : "\n  ]\n}\n");
  return os.str();
}

GridGraph parse_grid(const std::string& text) {
  const json j = parse_json(text);
  return guarded("grid graph", [&] {
    std::vector<LatticePoint> pts;
    for (const auto& p : j.at("vertices")) {
      if (!p.is_array() || p.size() != 2) {
        throw InvalidInputError("each grid vertex must be an [ix, iy] pair");
      }
      pts.push_back({p.at(0).get<std::int64_t>(), p.at(1).get<std::int64_t>()});
    }
    return GridGraph(std::move(pts));
  });
}

std::string format_grid(const GridGraph& g) {
  json vs = json::array();
  for (const auto& p : g.vertices()) vs.push_back({p.ix, p.iy});
  return json{{"vertices", vs}}.dump() + "\n";
}

std::vector<GadgetRole> parse_roles(const std::string& text) {
  const json j = parse_json(text);
  return guarded("roles", [&] {
    std::vector<GadgetRole> roles;
    for (const auto& r : j.at("roles")) {
      const auto kind = r.at("kind").get<std::string>();
      if (kind == "original") {
        roles.push_back({GadgetRole::Kind::kOriginal, r.at("src").get<Vertex>(), {}});
        continue;
      }
      const auto& e = r.at("edge");
      const GridEdge edge{e.at(0).get<Vertex>(), e.at(1).get<Vertex>()};
      if (kind == "mid") {
        roles.push_back({GadgetRole::Kind::kMid, 0, edge});
      } else if (kind == "pendant") {
        roles.push_back({GadgetRole::Kind::kPendant, 0, edge});
      } else {
        throw InvalidInputError("unknown role kind '" + kind + "'");
      }
    }
    return roles;
  });
}

std::string format_roles(const std::vector<GadgetRole>& roles) {
  json arr = json::array();
  for (const auto& r : roles) {
    switch (r.kind) {
      case GadgetRole::Kind::kOriginal:
        arr.push_back({{"kind", "original"}, {"src", r.source}});
        break;
      case GadgetRole::Kind::kMid:
        arr.push_back({{"kind", "mid"}, {"edge", edge_json(r.edge)}});
        break;
      case GadgetRole::Kind::kPendant:
        arr.push_back({{"kind", "pendant"}, {"edge", edge_json(r.edge)}});
        break;
    }
  }
  return json{{"roles", arr}}.dump() + "\n";
}

std::string format_set_solution(const std::string& problem, const std::vector<Vertex>& members) {
  return json{{"problem", problem}, {"members", members}}.dump() + "\n";
}

std::string format_labelling_solution(const std::string& problem, const RomanAssignment& f) {
  std::vector<int> values(f.values.begin(), f.values.end());
  return json{{"problem", problem}, {"values", values}, {"weight", f.weight()}}.dump() + "\n";
}

Solution parse_solution(const std::string& text) {
  const json j = parse_json(text);
  return guarded("solution", [&] {
    Solution s;
    s.problem = j.at("problem").get<std::string>();
    if (j.contains("values")) {
      s.is_labelling = true;
      for (const auto& v : j.at("values")) {
        const int label = v.get<int>();
        if (label < 0 || label > 2) throw InvalidInputError("label outside {0, 1, 2}");
        s.assignment.values.push_back(static_cast<std::uint8_t>(label));
      }
      if (j.contains("weight") && j.at("weight").get<std::int64_t>() != s.assignment.weight()) {
        throw InvalidInputError("stated weight does not match the labels");
      }
    } else {
      s.members = j.at("members").get<std::vector<Vertex>>();
    }
    return s;
  });
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInputError("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << contents;
}

}  // namespace udgdom::io
