#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "latpoly/geometry.hpp"

namespace latpoly {

struct PointCounts {
  Int interior = 0;
  // Lattice polygons only; empty for polygons with non-integral vertices.
  std::optional<Int> boundary;
  // h -> number of interior lattice points on the line {x = h}. Covers every
  // integral line meeting the open strip, including lines with count zero.
  std::map<long long, Int> per_line;
};

// [y_lo, y_hi] of P cut with the vertical line {x = t}; empty outside the
// x-range of P.
std::optional<std::pair<Rat, Rat>> slice_at(const Polygon& p, const Rat& t);

// Strict interior lattice points, counted per integral vertical line.
// Works for rational polygons; no Pick shortcut anywhere.
PointCounts count_interior(const Polygon& p);

std::vector<Point> interior_lattice_points(const Polygon& p);

// Boundary lattice points of a lattice polygon, via the gcd of each edge.
// Throws on non-integral vertices.
Int count_boundary(const Polygon& p);

// Lattice points on the boundary of an arbitrary rational polygon, by
// explicit edge scan.
Int boundary_lattice_points(const Polygon& p);

// Hull of the interior lattice points; empty when there are none.
std::optional<Hull> interior_hull(const Polygon& p);

// k + b/2 - 1. Requires b >= 3.
Rat pick_area(const Int& k, const Int& b);

}  // namespace latpoly
