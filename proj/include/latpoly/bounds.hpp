#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latpoly/lattice_points.hpp"
#include "latpoly/width.hpp"

namespace latpoly {

struct BoundVerdict {
  std::string name;
  bool applicable = false;
  // Empty bound on an applicable verdict means no finite bound exists.
  std::optional<Rat> bound;
  Rat actual = 0;
  bool satisfied = true;
  bool sharp = false;
  std::string note;
};

// 2(k+1) - floor(max(lw/2 - 3, 0)) * floor(lw/2 - 2). Requires k >= 1.
Rat bound_big_width(const Int& k, const Rat& lw);

// lw <= 1: no finite bound (empty). lw in (1,2]: lw^2/(2(lw-1)) * (k+1).
// lw in (2,5]: 2(k+1) + 1/2. Throws "use bound_big_width" for lw > 5.
std::optional<Rat> bound_small_width(const Int& k, const Rat& lw);

// 2(k+1) + 1/2 for lattice polygons, k >= 1.
Rat bound_scott(const Int& k);

// (l+1)^2/(2l) * (k+1) for denominator l >= 2.
Rat bound_rational(const Int& k, const Int& l);

// 2k + 4 - n/2 - (3/8)(lw-2)^2, for lw >= 3.
Rat bound_coleman_refined(const Int& k, const Int& n_vertices, const Rat& lw);

// Per-strip bounds in width coordinates, branching on the number of interior
// vertical lines (1, 2 or >= 3), the profile maximum position and the strip
// overhangs, exactly as each case requires. `counts` must match the
// normalized polygon; everything else is re-derived from it.
std::vector<BoundVerdict> bound_fine(const Polygon& p, const LatticeWidthData& lwd,
                                     const PointCounts& counts);

// Extremal triangle (0,0), (1 + 1/l, 0), (0, (l+1)(k+1)): k interior lattice
// points, denominator l, area (l+1)^2/(2l) * (k+1). Self-checked.
Polygon gen_T(const Int& k, const Int& l);

// m * conv{(0,0),(1,0),(0,1)}.
Polygon gen_delta(const Int& m);

enum class QVariant { paper, reflexive };

// m * Q. The `paper` variant is conv{(1,0),(0,1),(-1,1)} (area 1/2); the
// `reflexive` variant is conv{(1,0),(0,1),(-1,-1)} (area 3/2), the one that
// actually realizes the sharp 3/8 * lw^2 family.
Polygon gen_Q(const Int& m, QVariant variant);

// All reflexive polygons with vertices in [-4,4]^2, one canonical
// representative per class. Expected cardinality 16.
std::vector<Polygon> enumerate_reflexive();

}  // namespace latpoly
