#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "udgdom/approx.hpp"
#include "udgdom/geometry.hpp"
#include "udgdom/reduction.hpp"

namespace udgdom::io {

// All parse functions throw InvalidInputError on malformed text.

// {"radius": r, "points": [[x, y], ...]}; radius defaults to 1.
// Coordinates are written with 17 significant digits.
PointSet parse_instance(const std::string& text);
std::string format_instance(const PointSet& ps);

// {"vertices": [[ix, iy], ...]}
GridGraph parse_grid(const std::string& text);
std::string format_grid(const GridGraph& g);

// {"roles": [{"kind": "original", "src": i} | {"kind": "mid", "edge": [i, j]} |
//            {"kind": "pendant", "edge": [i, j]}, ...]}
std::vector<GadgetRole> parse_roles(const std::string& text);
std::string format_roles(const std::vector<GadgetRole>& roles);

// Set problems:     {"problem": "tds", "members": [...]}
// Labelling problems: {"problem": "trds", "values": [...], "weight": W}
struct Solution {
  std::string problem;
  std::vector<Vertex> members;
  RomanAssignment assignment;
  bool is_labelling = false;
};

std::string format_set_solution(const std::string& problem, const std::vector<Vertex>& members);
std::string format_labelling_solution(const std::string& problem, const RomanAssignment& f);
Solution parse_solution(const std::string& text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace udgdom::io
