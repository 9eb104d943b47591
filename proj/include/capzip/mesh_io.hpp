#pragma once

// Wavefront OBJ reading and writing (vertices and polygonal faces only).

#include <iosfwd>
#include <string>

#include "capzip/surface.hpp"

namespace capzip {

// Throws ParseError on malformed input and GeometryError when the faces do
// not form a valid surface.
Surface read_obj(std::istream& in);
Surface read_obj_file(const std::string& path);

std::string write_obj(const Surface& s, const std::string& comment = {});

}  // namespace capzip
