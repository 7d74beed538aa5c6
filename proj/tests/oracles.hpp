// Brute-force reference implementations used only by tests. Each one takes
// the dumbest correct route so that agreement with the library is meaningful.
#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "latpoly/geometry.hpp"
#include "latpoly/harness.hpp"

namespace oracles {

using namespace latpoly;

// Point location by edge signs: positive on every edge = strictly inside,
// zero on some edge with the rest nonnegative = on the boundary.
inline int side_of(const Polygon& p, const Point& q) {
  bool boundary = false;
  const auto& vs = p.verts();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    Rat c = cross(vs[i], vs[(i + 1) % vs.size()], q);
    if (c < 0) return -1;
    if (c == 0) boundary = true;
  }
  return boundary ? 0 : 1;
}

// Full bounding-box scan.
inline Int grid_interior_count(const Polygon& p) {
  Rat xmin = p.verts()[0].x, xmax = xmin, ymin = p.verts()[0].y, ymax = ymin;
  for (const Point& v : p.verts()) {
    xmin = rat_min(xmin, v.x);
    xmax = rat_max(xmax, v.x);
    ymin = rat_min(ymin, v.y);
    ymax = rat_max(ymax, v.y);
  }
  Int count = 0;
  for (Int x = rat_floor(xmin); Rat(x) <= xmax; ++x)
    for (Int y = rat_floor(ymin); Rat(y) <= ymax; ++y)
      if (side_of(p, {Rat(x), Rat(y)}) > 0) ++count;
  return count;
}

inline Int grid_boundary_count(const Polygon& p) {
  Rat xmin = p.verts()[0].x, xmax = xmin, ymin = p.verts()[0].y, ymax = ymin;
  for (const Point& v : p.verts()) {
    xmin = rat_min(xmin, v.x);
    xmax = rat_max(xmax, v.x);
    ymin = rat_min(ymin, v.y);
    ymax = rat_max(ymax, v.y);
  }
  Int count = 0;
  for (Int x = rat_floor(xmin); Rat(x) <= xmax; ++x)
    for (Int y = rat_floor(ymin); Rat(y) <= ymax; ++y)
      if (side_of(p, {Rat(x), Rat(y)}) == 0) ++count;
  return count;
}

// Exhaustive lattice width: any direction (a, b) moves a horizontal chord by
// |a| * Lx and a vertical one by |b| * Ly, and area <= w01 * Lx (the body
// sits in a horizontal strip of height w01), so |a| <= w0 * w01 / area and
// |b| <= w0 * w10 / area for every minimizer.
struct WidthOracle {
  Rat width;
  std::vector<IntVec> directions;
};

inline Rat oracle_width_dir(const Polygon& p, long a, long b) {
  Rat lo = Rat(a) * p.verts()[0].x + Rat(b) * p.verts()[0].y, hi = lo;
  for (const Point& v : p.verts()) {
    Rat val = Rat(a) * v.x + Rat(b) * v.y;
    lo = rat_min(lo, val);
    hi = rat_max(hi, val);
  }
  return hi - lo;
}

inline WidthOracle width_oracle(const Polygon& p) {
  Rat w10 = oracle_width_dir(p, 1, 0);
  Rat w01 = oracle_width_dir(p, 0, 1);
  Rat w0 = rat_min(w10, w01);
  Rat ar = area(p);
  long amax = static_cast<long>(to_ll(rat_floor(w0 * w01 / ar)));
  long bmax = static_cast<long>(to_ll(rat_floor(w0 * w10 / ar)));
  amax = std::max(amax, 1L);
  bmax = std::max(bmax, 1L);

  WidthOracle best;
  best.width = w0;
  best.directions = {};
  for (long a = 0; a <= amax; ++a)
    for (long b = (a == 0 ? 1 : -bmax); b <= bmax; ++b) {
      if (std::gcd(std::abs(a), std::abs(b)) != 1) continue;
      Rat w = oracle_width_dir(p, a, b);
      if (w < best.width) {
        best.width = w;
        best.directions = {IntVec{a, b}};
      } else if (w == best.width) {
        best.directions.push_back(IntVec{a, b});
      }
    }
  std::sort(best.directions.begin(), best.directions.end());
  return best;
}

// Resolution rays by the hull recipe: lattice points of the cone inside the
// triangle {0, M*u, M*v}, hull of them, then the lattice points on the hull
// edges between u and v that avoid the cutoff corners.
inline std::vector<IntVec> cone_hull_oracle(const IntVec& u, const IntVec& v) {
  long ux = static_cast<long>(to_ll(u.x)), uy = static_cast<long>(to_ll(u.y));
  long vx = static_cast<long>(to_ll(v.x)), vy = static_cast<long>(to_ll(v.y));
  long long det = (long long)ux * vy - (long long)uy * vx;
  long long m = det + 2;

  auto crs = [](long long ax, long long ay, long long bx, long long by) {
    return ax * by - ay * bx;
  };

  // Points with cone coordinates alpha, beta >= 0, alpha + beta <= m.
  std::vector<std::pair<long long, long long>> pts;
  long long xlo = std::min({0LL, m * ux, m * vx}), xhi = std::max({0LL, m * ux, m * vx});
  long long ylo = std::min({0LL, m * uy, m * vy}), yhi = std::max({0LL, m * uy, m * vy});
  for (long long x = xlo; x <= xhi; ++x)
    for (long long y = ylo; y <= yhi; ++y) {
      if (x == 0 && y == 0) continue;
      long long alpha = crs(x, y, vx, vy);   // det * coefficient of u
      long long beta = crs(ux, uy, x, y);    // det * coefficient of v
      if (alpha < 0 || beta < 0 || alpha + beta > m * det) continue;
      pts.push_back({x, y});
    }

  std::sort(pts.begin(), pts.end());
  std::vector<std::pair<long long, long long>> lo, hi2;
  auto turn = [&](const std::pair<long long, long long>& a,
                  const std::pair<long long, long long>& b,
                  const std::pair<long long, long long>& c) {
    return crs(b.first - a.first, b.second - a.second, c.first - a.first,
               c.second - a.second);
  };
  for (const auto& q : pts) {
    while (lo.size() >= 2 && turn(lo[lo.size() - 2], lo.back(), q) <= 0) lo.pop_back();
    lo.push_back(q);
  }
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
    while (hi2.size() >= 2 && turn(hi2[hi2.size() - 2], hi2.back(), *it) <= 0) hi2.pop_back();
    hi2.push_back(*it);
  }
  lo.pop_back();
  hi2.pop_back();
  lo.insert(lo.end(), hi2.begin(), hi2.end());

  // Walk the hull cycle from u to v avoiding the path through the cutoff
  // points M*u and M*v, collecting every lattice point on the way.
  std::size_t iu = 0, iv = 0;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (lo[i] == std::pair<long long, long long>{ux, uy}) iu = i;
    if (lo[i] == std::pair<long long, long long>{vx, vy}) iv = i;
  }
  auto far_point = [&](const std::pair<long long, long long>& q) {
    return q == std::pair<long long, long long>{m * ux, m * uy} ||
           q == std::pair<long long, long long>{m * vx, m * vy};
  };
  // Try both walk directions; the bounded side never touches the cutoffs.
  for (int dir : {1, -1}) {
    std::vector<IntVec> rays;
    bool ok = true;
    std::size_t i = iu;
    while (i != iv) {
      std::size_t j = (i + lo.size() + dir) % lo.size();
      if (far_point(lo[j])) {
        ok = false;
        break;
      }
      // Lattice points interior to the edge, plus its far endpoint.
      long long dx = lo[j].first - lo[i].first, dy = lo[j].second - lo[i].second;
      long long g = std::gcd(std::abs(dx), std::abs(dy));
      for (long long s = 1; s <= g; ++s)
        rays.push_back(IntVec{static_cast<long>(lo[i].first + s * (dx / g)),
                              static_cast<long>(lo[i].second + s * (dy / g))});
      i = j;
    }
    if (ok) {
      if (!rays.empty()) rays.pop_back();  // drop v itself
      return rays;
    }
  }
  return {};
}

// Equivalence by exhaustive small-matrix search, aligning the image lexmin
// vertex with the target lexmin vertex.
inline bool brute_equivalent(const Polygon& a, const Polygon& b, long entry_bound = 3) {
  if (a.size() != b.size()) return false;
  for (long a11 = -entry_bound; a11 <= entry_bound; ++a11)
    for (long a12 = -entry_bound; a12 <= entry_bound; ++a12)
      for (long a21 = -entry_bound; a21 <= entry_bound; ++a21)
        for (long a22 = -entry_bound; a22 <= entry_bound; ++a22) {
          long det = a11 * a22 - a12 * a21;
          if (det != 1 && det != -1) continue;
          UnimodularMap u = UnimodularMap::make(a11, a12, a21, a22);
          Polygon img = apply_map(u, a);
          const Point& src = img.verts()[0];
          const Point& dst = b.verts()[0];
          Rat dx = dst.x - src.x, dy = dst.y - src.y;
          if (!is_integer(dx) || !is_integer(dy)) continue;
          if (translate(img, dx, dy) == b) return true;
        }
  return false;
}

// Deterministic random unimodular maps with entries and translations in
// [-5, 5].
inline UnimodularMap random_unimodular(Rng& rng) {
  for (;;) {
    long e[4];
    for (auto& x : e) x = static_cast<long>(rng.below(11)) - 5;
    long det = e[0] * e[3] - e[1] * e[2];
    if (det != 1 && det != -1) continue;
    long b1 = static_cast<long>(rng.below(11)) - 5;
    long b2 = static_cast<long>(rng.below(11)) - 5;
    return UnimodularMap::make(e[0], e[1], e[2], e[3], b1, b2);
  }
}

}  // namespace oracles
