#include "latpoly/lattice_points.hpp"

#include <stdexcept>

namespace latpoly {

std::optional<std::pair<Rat, Rat>> slice_at(const Polygon& p, const Rat& t) {
  const auto& vs = p.verts();
  std::optional<Rat> lo, hi;
  auto take = [&](const Rat& y) {
    if (!lo || y < *lo) lo = y;
    if (!hi || y > *hi) hi = y;
  };
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const Point& a = vs[i];
    const Point& b = vs[(i + 1) % vs.size()];
    if (a.x == b.x) {
      if (a.x == t) {
        take(a.y);
        take(b.y);
      }
      continue;
    }
    const Rat& xmin = a.x < b.x ? a.x : b.x;
    const Rat& xmax = a.x < b.x ? b.x : a.x;
    if (t < xmin || t > xmax) continue;
    Rat s = (t - a.x) / (b.x - a.x);
    take(a.y + s * (b.y - a.y));
  }
  if (!lo) return std::nullopt;
  return std::make_pair(*lo, *hi);
}

namespace {

// Integers strictly inside the open interval (lo, hi).
Int open_count(const Rat& lo, const Rat& hi) {
  Int c = rat_ceil(hi) - rat_floor(lo) - 1;
  return c > 0 ? c : Int(0);
}

void x_range(const Polygon& p, Rat& xmin, Rat& xmax) {
  xmin = p.verts()[0].x;
  xmax = xmin;
  for (const Point& v : p.verts()) {
    xmin = rat_min(xmin, v.x);
    xmax = rat_max(xmax, v.x);
  }
}

}  // namespace

PointCounts count_interior(const Polygon& p) {
  Rat xmin, xmax;
  x_range(p, xmin, xmax);
  PointCounts counts;
  // Interior points have x strictly between xmin and xmax.
  for (Int h = rat_floor(xmin) + 1; Rat(h) < xmax; ++h) {
    auto seg = slice_at(p, Rat(h));
    Int c = seg ? open_count(seg->first, seg->second) : Int(0);
    counts.per_line[to_ll(h)] = c;
    counts.interior += c;
  }
  if (is_lattice(p)) counts.boundary = count_boundary(p);
  return counts;
}

std::vector<Point> interior_lattice_points(const Polygon& p) {
  Rat xmin, xmax;
  x_range(p, xmin, xmax);
  std::vector<Point> pts;
  for (Int h = rat_floor(xmin) + 1; Rat(h) < xmax; ++h) {
    auto seg = slice_at(p, Rat(h));
    if (!seg) continue;
    for (Int y = rat_floor(seg->first) + 1; Rat(y) < seg->second; ++y)
      pts.push_back({Rat(h), Rat(y)});
  }
  return pts;
}

Int count_boundary(const Polygon& p) {
  if (!is_lattice(p)) throw std::invalid_argument("requires lattice polygon");
  Int b = 0;
  const auto& vs = p.verts();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    Point e = vs[(i + 1) % vs.size()] - vs[i];
    b += gcd(abs(Int(e.x.get_num())), abs(Int(e.y.get_num())));
  }
  return b;
}

Int boundary_lattice_points(const Polygon& p) {
  Int count = 0;
  const auto& vs = p.verts();
  // Half-open edges [a, b) so each boundary point is counted once.
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const Point& a = vs[i];
    const Point& b = vs[(i + 1) % vs.size()];
    if (a.x == b.x) {
      if (!is_integer(a.x)) continue;
      Rat ylo = rat_min(a.y, b.y), yhi = rat_max(a.y, b.y);
      for (Int y = rat_ceil(ylo); Rat(y) <= yhi; ++y) {
        if (Point{a.x, Rat(y)} == b) continue;
        ++count;
      }
      continue;
    }
    Rat xlo = rat_min(a.x, b.x), xhi = rat_max(a.x, b.x);
    for (Int x = rat_ceil(xlo); Rat(x) <= xhi; ++x) {
      Rat s = (Rat(x) - a.x) / (b.x - a.x);
      Rat y = a.y + s * (b.y - a.y);
      if (!is_integer(y)) continue;
      if (Point{Rat(x), y} == b) continue;
      ++count;
    }
  }
  return count;
}

std::optional<Hull> interior_hull(const Polygon& p) {
  std::vector<Point> pts = interior_lattice_points(p);
  if (pts.empty()) return std::nullopt;
  return convex_hull(pts);
}

Rat pick_area(const Int& k, const Int& b) {
  if (k < 0) throw std::invalid_argument("interior count must be nonnegative");
  if (b < 3) throw std::invalid_argument("a lattice polygon has at least 3 boundary points");
  return Rat(k) + Rat(b) / 2 - 1;
}

}  // namespace latpoly
