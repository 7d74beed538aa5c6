#pragma once

#include <string>
#include <vector>

#include "latpoly/geometry.hpp"

namespace latpoly {

// Exact vertical slicing profile: piecewise linear and concave, with
// breakpoints at the vertex x-coordinates.
struct SliceProfile {
  std::vector<Rat> breakpoints;  // sorted, distinct
  std::vector<Rat> lengths;      // slice length at each breakpoint
  Rat argmax_lo, argmax_hi;      // exact maximizer interval
};

// max v - min v over the polygon. Throws on the zero vector.
Rat width_in_direction(const Polygon& p, const IntVec& v);

struct WidthResult {
  Rat width;
  // All primitive minimizing directions up to sign, lexicographically
  // positive representatives, sorted.
  std::vector<IntVec> directions;
};

// Minimum width over nonzero integer directions. The candidate box is
// derived from the longest horizontal and vertical chords: a direction
// (p, q) satisfies width >= |p|*Lx and width >= |q|*Ly, so any minimizer
// fits under min(width_x, width_y).
WidthResult lattice_width(const Polygon& p);

SliceProfile slice_profile(const Polygon& p);

// Midpoint of the interval where the vertical slice length is maximal.
Rat plvsl(const Polygon& p);

// Width coordinates for one width direction: the image polygon has (1, 0)
// as a width direction, 0 <= x_l < 1, and the profile maximum sits in the
// left half, 2*plvsl <= ceil(x_l) + floor(x_r), with the reflection tie
// broken by ceil(x_l) - x_l <= x_r - floor(x_r). The pair ([x_l, x_r],
// plvsl) depends only on the polygon and the direction.
struct LatticeWidthData {
  IntVec direction;  // lexicographically positive representative
  UnimodularMap map;
  Rat x_l, x_r;
  Rat plvsl_pos;
  long long interior_vertical_lines = 0;
};

// Throws "not a lattice width direction" when w does not attain the
// lattice width.
LatticeWidthData width_normalize(const Polygon& p, const IntVec& w);

struct SymmetricLwd {
  bool symmetric = false;
  IntVec witness{0, 0};  // meaningful only when symmetric
};

// True iff some width direction gives data ([1-a, n+a], (n+1)/2) with n odd
// and 0 < a <= 1 (a = 1 shows up as x_l = 0).
SymmetricLwd is_symmetric_lwd(const Polygon& p);

// Checks the slice-length lower bound min((x_r-x_l)/2, distance to the near
// end) at every breakpoint and integral line, and the matching interior
// point lower bound on integral lines. Requires (1, 0) to attain the
// lattice width; returns violation descriptions (expected none).
std::vector<std::string> check_slicing_bounds(const Polygon& p);

}  // namespace latpoly
