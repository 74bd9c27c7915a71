#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace udgdom {

using Vertex = std::uint32_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: non-finite coordinates, bad radius, parse failures,
// duplicate lattice points.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

// Raised when an operation needs a graph without degree-0 vertices.
class IsolatedVertexError : public Error {
 public:
  explicit IsolatedVertexError(std::vector<Vertex> vertices);
  const std::vector<Vertex>& vertices() const { return vertices_; }

 private:
  std::vector<Vertex> vertices_;
};

// A member of the independent set has no neighbor, so no subset can cover it.
class IsolatedMemberError : public Error {
 public:
  explicit IsolatedMemberError(Vertex member);
  Vertex member() const { return member_; }

 private:
  Vertex member_;
};

class UncoverableError : public Error {
 public:
  using Error::Error;
};

class SizeLimitError : public Error {
 public:
  SizeLimitError(std::size_t size, std::size_t limit);
  std::size_t size() const { return size_; }
  std::size_t limit() const { return limit_; }

 private:
  std::size_t size_;
  std::size_t limit_;
};

class NotDominatingError : public Error {
 public:
  using Error::Error;
};

class InvalidAssignmentError : public Error {
 public:
  using Error::Error;
};

class RetryExhaustedError : public Error {
 public:
  using Error::Error;
};

}  // namespace udgdom
