#pragma once

#include <vector>

#include "latpoly/geometry.hpp"

namespace latpoly {

// Strictly convex rational cone spanned by two primitive generators with
// cross(u, v) > 0.
struct Cone {
  IntVec u, v;
  Int det;  // cross(u, v)

  static Cone make(IntVec u, IntVec v);
};

// Outer edge normals of a lattice polygon, cyclically ordered; the cones
// are the consecutive ray pairs.
struct NormalFan {
  std::vector<IntVec> rays;
  std::vector<Cone> cones;
};

NormalFan normal_fan(const Polygon& p);

// Primitive generators strictly between u and v on the bounded boundary of
// conv(cone \cap Z^2 \ {0}), in angular order. Computed by reducing the
// cone to the form ((0,1), (d,-q)) and expanding d/q as a minus-sign
// continued fraction.
std::vector<IntVec> resolve_cone(const Cone& c);

// Ray count of the smooth refinement: edges of p plus all inserted rays.
Int n_smooth(const Polygon& p);

// Dual of a polygon whose unique interior lattice point is the origin:
// vertex -n/c per edge, n the primitive outer normal and c = max n.x > 0.
Polygon dual_polygon(const Polygon& p);

struct TwelveResult {
  Int b_p, b_dual, sum;
};

// b(P) + b(P*) for a reflexive polygon; the sum is reported, the caller
// asserts it equals 12. Throws on non-reflexive input.
TwelveResult check_twelve(const Polygon& p);

struct AreaIdentity {
  Rat lhs, rhs;
  bool holds = false;
};

// area(P) versus 2(k+1) + 2 - n_smooth/2 - area(interior hull), with the
// hull area read as 0 below dimension 2. Requires a lattice polygon with
// k >= 1.
AreaIdentity area_identity(const Polygon& p);

}  // namespace latpoly
