#include "latpoly/width.hpp"

#include <algorithm>
#include <stdexcept>

#include "latpoly/lattice_points.hpp"

namespace latpoly {

Rat width_in_direction(const Polygon& p, const IntVec& v) {
  if (v.x == 0 && v.y == 0) throw std::invalid_argument("zero direction");
  Rat lo = eval(v, p.verts()[0]), hi = lo;
  for (const Point& vert : p.verts()) {
    Rat val = eval(v, vert);
    lo = rat_min(lo, val);
    hi = rat_max(hi, val);
  }
  return hi - lo;
}

namespace {

Polygon transpose(const Polygon& p) {
  std::vector<Point> v;
  v.reserve(p.size());
  for (const Point& q : p.verts()) v.push_back({q.y, q.x});
  return Polygon::make(std::move(v));
}

Rat max_slice_length(const Polygon& p) {
  SliceProfile prof = slice_profile(p);
  Rat m = prof.lengths[0];
  for (const Rat& l : prof.lengths) m = rat_max(m, l);
  return m;
}

}  // namespace

WidthResult lattice_width(const Polygon& p) {
  Rat w10 = width_in_direction(p, {1, 0});
  Rat w01 = width_in_direction(p, {0, 1});
  Rat w0 = rat_min(w10, w01);
  Rat lx = max_slice_length(transpose(p));  // longest horizontal chord
  Rat ly = max_slice_length(p);             // longest vertical chord
  long pmax = static_cast<long>(to_ll(rat_floor(w0 / lx)));
  long qmax = static_cast<long>(to_ll(rat_floor(w0 / ly)));

  WidthResult best;
  best.width = w0;
  for (long pp = 0; pp <= pmax; ++pp) {
    for (long qq = (pp == 0 ? 1 : -qmax); qq <= qmax; ++qq) {
      IntVec v{pp, qq};
      if (gcd(abs(v.x), abs(v.y)) != 1) continue;
      Rat w = width_in_direction(p, v);
      if (w < best.width) {
        best.width = w;
        best.directions.clear();
        best.directions.push_back(v);
      } else if (w == best.width) {
        best.directions.push_back(v);
      }
    }
  }
  // The axis directions may realize the minimum while sitting outside the
  // scan ranges (pmax or qmax can be zero), so fold them in explicitly.
  for (IntVec v : {IntVec{1, 0}, IntVec{0, 1}}) {
    Rat w = width_in_direction(p, v);
    if (w < best.width) {
      best.width = w;
      best.directions = {v};
    } else if (w == best.width &&
               std::find(best.directions.begin(), best.directions.end(), v) ==
                   best.directions.end()) {
      best.directions.push_back(v);
    }
  }
  std::sort(best.directions.begin(), best.directions.end());
  return best;
}

SliceProfile slice_profile(const Polygon& p) {
  std::vector<Rat> xs;
  for (const Point& v : p.verts()) xs.push_back(v.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  SliceProfile prof;
  prof.breakpoints = xs;
  for (const Rat& t : xs) {
    auto seg = slice_at(p, t);
    prof.lengths.push_back(seg->second - seg->first);
  }
  Rat best = prof.lengths[0];
  for (const Rat& l : prof.lengths) best = rat_max(best, l);
  // Concavity makes the maximizer set an interval with breakpoint endpoints.
  std::size_t lo = xs.size(), hi = 0;
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (prof.lengths[i] == best) {
      if (lo == xs.size()) lo = i;
      hi = i;
    }
  prof.argmax_lo = xs[lo];
  prof.argmax_hi = xs[hi];
  return prof;
}

Rat plvsl(const Polygon& p) {
  SliceProfile prof = slice_profile(p);
  return (prof.argmax_lo + prof.argmax_hi) / 2;
}

namespace {

struct NormalizedFrame {
  Polygon image;
  UnimodularMap map;
  Rat x_l, x_r, pl;
};

NormalizedFrame build_frame(const Polygon& p, const Int& a11, const Int& a12,
                            const Int& a21, const Int& a22) {
  Rat xmin, xmax, ymin;
  bool first = true;
  for (const Point& v : p.verts()) {
    Rat fx = a11 * v.x + a12 * v.y;
    Rat fy = a21 * v.x + a22 * v.y;
    if (first) {
      xmin = xmax = fx;
      ymin = fy;
      first = false;
    } else {
      xmin = rat_min(xmin, fx);
      xmax = rat_max(xmax, fx);
      ymin = rat_min(ymin, fy);
    }
  }
  Int b1 = -rat_floor(xmin);
  Int b2 = -rat_floor(ymin);
  UnimodularMap u = UnimodularMap::make(a11, a12, a21, a22, b1, b2);
  NormalizedFrame f{apply_map(u, p), u, xmin + b1, xmax + b1, 0};
  f.pl = plvsl(f.image);
  return f;
}

// 2*pl <= ceil(x_l) + floor(x_r), ties broken toward the left fringe.
bool frame_ok(const NormalizedFrame& f) {
  Rat rhs = Rat(rat_ceil(f.x_l)) + Rat(rat_floor(f.x_r));
  if (2 * f.pl < rhs) return true;
  if (2 * f.pl > rhs) return false;
  return Rat(rat_ceil(f.x_l)) - f.x_l <= f.x_r - Rat(rat_floor(f.x_r));
}

}  // namespace

LatticeWidthData width_normalize(const Polygon& p, const IntVec& w0) {
  if (w0.x == 0 && w0.y == 0) throw std::invalid_argument("zero direction");
  IntVec w = primitive(w0);
  WidthResult lw = lattice_width(p);
  if (width_in_direction(p, w) != lw.width)
    throw std::invalid_argument("not a lattice width direction");

  // Complete w to a basis: second row from the extended gcd, so that
  // det = w.x*a22 - w.y*a21 = 1.
  Int g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), w.x.get_mpz_t(),
             w.y.get_mpz_t());
  NormalizedFrame f = build_frame(p, w.x, w.y, -t, s);
  if (!frame_ok(f)) {
    f = build_frame(p, -w.x, -w.y, t, -s);
    if (!frame_ok(f)) throw std::logic_error("width normalization found no valid frame");
  }

  LatticeWidthData data;
  data.direction = lex_positive(w);
  data.map = f.map;
  data.x_l = f.x_l;
  data.x_r = f.x_r;
  data.plvsl_pos = f.pl;
  data.interior_vertical_lines = to_ll(rat_ceil(f.x_r) - rat_floor(f.x_l) - 1);
  if (data.x_r - data.x_l != lw.width)
    throw std::logic_error("normalized width mismatch");
  return data;
}

SymmetricLwd is_symmetric_lwd(const Polygon& p) {
  WidthResult lw = lattice_width(p);
  for (const IntVec& w : lw.directions) {
    LatticeWidthData d = width_normalize(p, w);
    Rat a = 1 - d.x_l;  // in (0, 1]
    Rat n = d.x_r - a;
    if (!is_integer(n)) continue;
    Int ni(n.get_num());
    if (ni < 1 || ni % 2 == 0) continue;
    if (2 * d.plvsl_pos == Rat(ni) + 1) return {true, w};
  }
  return {};
}

std::vector<std::string> check_slicing_bounds(const Polygon& p) {
  WidthResult lw = lattice_width(p);
  if (width_in_direction(p, {1, 0}) != lw.width)
    throw std::invalid_argument("(1,0) is not a lattice width direction");

  SliceProfile prof = slice_profile(p);
  Rat x_l = prof.breakpoints.front();
  Rat x_r = prof.breakpoints.back();
  Rat half = (x_r - x_l) / 2;
  Rat pl = (prof.argmax_lo + prof.argmax_hi) / 2;

  std::vector<std::string> violations;
  auto check_length = [&](const Rat& h, const Rat& len) {
    if (h <= pl) {
      Rat bound = rat_min(half, h - x_l);
      if (len < bound)
        violations.push_back("slice length " + rat_str(len) + " at x=" + rat_str(h) +
                             " below " + rat_str(bound));
    }
    if (h >= pl) {
      Rat bound = rat_min(half, x_r - h);
      if (len < bound)
        violations.push_back("slice length " + rat_str(len) + " at x=" + rat_str(h) +
                             " below " + rat_str(bound));
    }
  };

  for (std::size_t i = 0; i < prof.breakpoints.size(); ++i)
    check_length(prof.breakpoints[i], prof.lengths[i]);

  for (Int h = rat_ceil(x_l); Rat(h) <= x_r; ++h) {
    Rat hh(h);
    auto seg = slice_at(p, hh);
    Rat len = seg ? seg->second - seg->first : Rat(0);
    check_length(hh, len);

    // Lattice points in the relative interior of the slice segment. On
    // interior lines this is exactly int(K) on the line; on the two extreme
    // lines the segment sits in the boundary but the count bound still
    // refers to the segment itself.
    Int pts = 0;
    if (seg) {
      Int c = rat_ceil(seg->second) - rat_floor(seg->first) - 1;
      pts = c > 0 ? c : Int(0);
    }
    auto check_points = [&](const Rat& bound) {
      Int need = rat_ceil(bound) - 1;
      if (pts < need)
        violations.push_back("interior points " + int_str(pts) + " on x=" + rat_str(hh) +
                             " below " + int_str(need));
    };
    if (hh <= pl) check_points(rat_min(half, hh - x_l));
    if (hh >= pl) check_points(rat_min(half, x_r - hh));
  }
  return violations;
}

}  // namespace latpoly
