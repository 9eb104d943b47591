#pragma once

#include <stdexcept>
#include <string>

#include "capzip/geom.hpp"

namespace capzip {

// Base class for all library errors. Callers that only care about
// "computation failed" can catch this one.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid user-supplied parameters (cap shape, grid values, indices).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Zero-length segments, non-planar faces, non-manifold meshes, ...
class GeometryError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// A straight development would have to pass through a mesh vertex.
class BlockedByVertexError : public GeometryError {
 public:
  BlockedByVertexError(int vertex, const std::string& what)
      : GeometryError(what), vertex_(vertex) {}
  int vertex() const noexcept { return vertex_; }

 private:
  int vertex_;
};

// A traced curve ran off the surface boundary.
class LeavesSurfaceError : public GeometryError {
 public:
  LeavesSurfaceError(Point3 where, const std::string& what)
      : GeometryError(what), where_(where) {}
  const Point3& where() const noexcept { return where_; }

 private:
  Point3 where_;
};

}  // namespace capzip
