#include "udgdom/errors.hpp"

namespace udgdom {

namespace {

std::string join_vertices(const std::vector<Vertex>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(vs[i]);
  }
  return out;
}

}  // namespace

IsolatedVertexError::IsolatedVertexError(std::vector<Vertex> vertices)
    : Error("isolated vertices: " + join_vertices(vertices)),
      vertices_(std::move(vertices)) {}

IsolatedMemberError::IsolatedMemberError(Vertex member)
    : Error("independent-set member " + std::to_string(member) +
            " has no neighbor; total domination is undefined"),
      member_(member) {}

SizeLimitError::SizeLimitError(std::size_t size, std::size_t limit)
    : Error("instance size " + std::to_string(size) + " exceeds limit " +
            std::to_string(limit)),
      size_(size),
      limit_(limit) {}

}  // namespace udgdom
