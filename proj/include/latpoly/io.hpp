#pragma once

#include <string>
#include <utility>

#include "latpoly/geometry.hpp"

namespace latpoly {

struct NamedPolygon {
  std::string name;
  Polygon polygon;
};

// Two accepted formats. Text: an optional name line followed by one vertex
// per line, "num/den num/den" with "/den" omitted for integers. JSON:
// {"name": "...", "vertices": [["3/2","0"], ...]}. Vertices may come in any
// order; the polygon is their hull and must be two-dimensional.
NamedPolygon parse_polygon(const std::string& content);
NamedPolygon read_polygon_file(const std::string& path);

// Writers emit the JSON form.
std::string write_polygon(const Polygon& p, const std::string& name = {});

}  // namespace latpoly
