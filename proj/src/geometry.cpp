#include "latpoly/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace latpoly {

Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
Point operator*(const Rat& s, const Point& p) { return {s * p.x, s * p.y}; }

bool lex_less(const Point& a, const Point& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

Rat cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }

Rat cross(const Point& a, const Point& b, const Point& c) {
  return cross(b - a, c - a);
}

Int cross(const IntVec& u, const IntVec& v) { return u.x * v.y - u.y * v.x; }

Rat eval(const IntVec& v, const Point& p) { return v.x * p.x + v.y * p.y; }

IntVec primitive(const IntVec& v) {
  if (v.x == 0 && v.y == 0) throw std::invalid_argument("zero vector has no direction");
  Int g = gcd(abs(v.x), abs(v.y));
  return {v.x / g, v.y / g};
}

IntVec lex_positive(const IntVec& v) {
  if (v.x > 0 || (v.x == 0 && v.y > 0)) return v;
  return -v;
}

namespace {

// Monotone chain; collinear points are dropped, so the result is
// vertex-minimal. Counterclockwise, starting at the lexicographic minimum.
std::vector<Point> hull_cycle(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  std::vector<Point> lo, hi;
  for (const Point& p : pts) {
    while (lo.size() >= 2 && cross(lo[lo.size() - 2], lo.back(), p) <= 0) lo.pop_back();
    lo.push_back(p);
  }
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
    while (hi.size() >= 2 && cross(hi[hi.size() - 2], hi.back(), *it) <= 0) hi.pop_back();
    hi.push_back(*it);
  }
  lo.pop_back();
  hi.pop_back();
  lo.insert(lo.end(), hi.begin(), hi.end());
  return lo;
}

}  // namespace

Polygon Polygon::make(std::vector<Point> cycle) {
  const std::size_t n = cycle.size();
  if (n < 3) throw std::invalid_argument("polygon needs at least 3 vertices");

  // Orientation fix: make the cycle counterclockwise.
  Rat doubled = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = cycle[i];
    const Point& b = cycle[(i + 1) % n];
    doubled += a.x * b.y - b.x * a.y;
  }
  if (doubled == 0) throw std::invalid_argument("degenerate vertex cycle");
  if (doubled < 0) std::reverse(cycle.begin(), cycle.end());

  for (std::size_t i = 0; i < n; ++i) {
    if (cross(cycle[i], cycle[(i + 1) % n], cycle[(i + 2) % n]) <= 0)
      throw std::invalid_argument("vertex cycle is not strictly convex");
  }

  // A cycle of strict left turns can still wind more than once; requiring it
  // to coincide with the hull of its vertices rules that out.
  std::size_t start = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (lex_less(cycle[i], cycle[start])) start = i;
  std::rotate(cycle.begin(), cycle.begin() + static_cast<long>(start), cycle.end());

  if (hull_cycle(cycle) != cycle)
    throw std::invalid_argument("vertex cycle is not a convex polygon");
  return Polygon(std::move(cycle));
}

std::string Polygon::key() const {
  std::string out;
  for (const Point& v : verts_) {
    if (!out.empty()) out += ';';
    out += rat_str(v.x);
    out += ',';
    out += rat_str(v.y);
  }
  return out;
}

bool Hull::operator==(const Hull& o) const {
  if (dim != o.dim) return false;
  switch (dim) {
    case 0: return point() == o.point();
    case 1: return segment() == o.segment();
    default: return polygon() == o.polygon();
  }
}

Hull convex_hull(const std::vector<Point>& points) {
  if (points.empty()) throw std::invalid_argument("empty point set");
  std::vector<Point> pts = points;
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  if (pts.size() == 1) return Hull{0, pts[0]};

  bool collinear = true;
  for (const Point& p : pts)
    if (cross(pts.front(), pts.back(), p) != 0) {
      collinear = false;
      break;
    }
  if (collinear) return Hull{1, Segment{pts.front(), pts.back()}};

  return Hull{2, Polygon::make(hull_cycle(std::move(pts)))};
}

UnimodularMap UnimodularMap::make(Int a11, Int a12, Int a21, Int a22, Int b1, Int b2) {
  UnimodularMap u{std::move(a11), std::move(a12), std::move(a21), std::move(a22),
                  std::move(b1), std::move(b2)};
  Int d = u.det();
  if (d != 1 && d != -1) throw std::invalid_argument("matrix is not unimodular");
  return u;
}

UnimodularMap UnimodularMap::identity() { return {1, 0, 0, 1, 0, 0}; }

Point UnimodularMap::apply(const Point& p) const {
  return {a11 * p.x + a12 * p.y + b1, a21 * p.x + a22 * p.y + b2};
}

IntVec UnimodularMap::apply_linear(const IntVec& v) const {
  return {a11 * v.x + a12 * v.y, a21 * v.x + a22 * v.y};
}

UnimodularMap UnimodularMap::inverse() const {
  Int d = det();  // +-1, so the adjugate over det stays integral
  Int i11 = a22 * d, i12 = -a12 * d, i21 = -a21 * d, i22 = a11 * d;
  Int c1 = -(i11 * b1 + i12 * b2);
  Int c2 = -(i21 * b1 + i22 * b2);
  return {i11, i12, i21, i22, c1, c2};
}

UnimodularMap UnimodularMap::after(const UnimodularMap& inner) const {
  return {a11 * inner.a11 + a12 * inner.a21, a11 * inner.a12 + a12 * inner.a22,
          a21 * inner.a11 + a22 * inner.a21, a21 * inner.a12 + a22 * inner.a22,
          a11 * inner.b1 + a12 * inner.b2 + b1, a21 * inner.b1 + a22 * inner.b2 + b2};
}

IntVec UnimodularMap::transport_direction(const IntVec& w) const {
  UnimodularMap inv = inverse();
  // Row vector times the inverse linear part.
  return {w.x * inv.a11 + w.y * inv.a21, w.x * inv.a12 + w.y * inv.a22};
}

Rat area(const Polygon& p) {
  Rat doubled = 0;
  const auto& v = p.verts();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % v.size()];
    doubled += a.x * b.y - b.x * a.y;
  }
  return doubled / 2;
}

Polygon apply_map(const UnimodularMap& u, const Polygon& p) {
  std::vector<Point> verts;
  verts.reserve(p.size());
  for (const Point& v : p.verts()) verts.push_back(u.apply(v));
  return Polygon::make(std::move(verts));
}

Hull apply_map(const UnimodularMap& u, const Hull& h) {
  switch (h.dim) {
    case 0: return Hull{0, u.apply(h.point())};
    case 1: {
      Point a = u.apply(h.segment().a);
      Point b = u.apply(h.segment().b);
      if (lex_less(b, a)) std::swap(a, b);
      return Hull{1, Segment{a, b}};
    }
    default: return Hull{2, apply_map(u, h.polygon())};
  }
}

Polygon translate(const Polygon& p, const Rat& dx, const Rat& dy) {
  std::vector<Point> verts;
  verts.reserve(p.size());
  for (const Point& v : p.verts()) verts.push_back({v.x + dx, v.y + dy});
  return Polygon::make(std::move(verts));
}

Polygon scale(const Polygon& p, const Rat& s) {
  if (s <= 0) throw std::invalid_argument("scale factor must be positive");
  std::vector<Point> verts;
  verts.reserve(p.size());
  for (const Point& v : p.verts()) verts.push_back({s * v.x, s * v.y});
  return Polygon::make(std::move(verts));
}

Int denominator(const Polygon& p) {
  Int l = 1;
  for (const Point& v : p.verts()) {
    l = lcm(l, v.x.get_den());
    l = lcm(l, v.y.get_den());
  }
  return l;
}

bool is_lattice(const Polygon& p) {
  for (const Point& v : p.verts())
    if (!is_integer(v.x) || !is_integer(v.y)) return false;
  return true;
}

namespace {

// Fast integer path for canonical_form. Coordinates stay below 2^28, so all
// intermediates fit comfortably; the one wide product in the row reduction
// goes through __int128. Falls back to exact arithmetic on overflow risk.
struct FastCanon {
  std::vector<long long> xs, ys;

  static std::optional<FastCanon> load(const Polygon& p) {
    constexpr long long kLimit = 1LL << 28;
    FastCanon f;
    for (const Point& v : p.verts()) {
      if (!v.x.get_num().fits_slong_p() || !v.y.get_num().fits_slong_p())
        return std::nullopt;
      long long x = v.x.get_num().get_si();
      long long y = v.y.get_num().get_si();
      if (x < -kLimit || x > kLimit || y < -kLimit || y > kLimit) return std::nullopt;
      f.xs.push_back(x);
      f.ys.push_back(y);
    }
    return f;
  }
};

void egcd64(long long a, long long b, long long& x, long long& y) {
  // ax + by = gcd(a, b), iterative.
  long long x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    long long q = a / b;
    long long t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
    t = y0 - q * y1;
    y0 = y1;
    y1 = t;
  }
  if (a < 0) {
    x0 = -x0;
    y0 = -y0;
  }
  x = x0;
  y = y0;
}

// Lexicographically smallest vertex flattening over all candidate basis
// maps, translated to the bounding-box corner and rotated to the
// lexicographic minimum vertex. Mirrors the exact path bit for bit.
std::vector<std::pair<long long, long long>> canonical_fast(const FastCanon& f) {
  const std::size_t n = f.xs.size();
  std::vector<std::pair<long long, long long>> dirs;
  for (std::size_t i = 0; i < n; ++i) {
    long long dx = f.xs[(i + 1) % n] - f.xs[i];
    long long dy = f.ys[(i + 1) % n] - f.ys[i];
    long long g = std::gcd(dx < 0 ? -dx : dx, dy < 0 ? -dy : dy);
    dx /= g;
    dy /= g;
    dirs.emplace_back(dx, dy);
    dirs.emplace_back(-dx, -dy);
  }
  std::sort(dirs.begin(), dirs.end());
  dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());

  std::vector<long long> ix(n), iy(n);
  std::vector<std::pair<long long, long long>> best, cand(n);
  for (const auto& u : dirs)
    for (const auto& v : dirs) {
      if (u.first * v.second - u.second * v.first == 0) continue;
      long long r1x, r1y;
      egcd64(u.first, u.second, r1x, r1y);
      long long r2x = -u.second, r2y = u.first;
      long long yv = r2x * v.first + r2y * v.second;
      if (yv < 0) {
        r2x = -r2x;
        r2y = -r2y;
        yv = -yv;
      }
      long long xv = r1x * v.first + r1y * v.second;
      long long k = xv / yv - ((xv % yv != 0 && (xv < 0) != (yv < 0)) ? 1 : 0);
      r1x = static_cast<long long>(r1x - static_cast<__int128>(k) * r2x);
      r1y = static_cast<long long>(r1y - static_cast<__int128>(k) * r2y);

      long long minx = 0, miny = 0;
      for (std::size_t i = 0; i < n; ++i) {
        ix[i] = r1x * f.xs[i] + r1y * f.ys[i];
        iy[i] = r2x * f.xs[i] + r2y * f.ys[i];
        if (i == 0 || ix[i] < minx) minx = ix[i];
        if (i == 0 || iy[i] < miny) miny = iy[i];
      }
      // Orientation fix, then rotation to the lexicographic minimum.
      long long doubled = 0;
      for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = (i + 1) % n;
        doubled += ix[i] * iy[j] - ix[j] * iy[i];
      }
      for (std::size_t i = 0; i < n; ++i)
        cand[i] = {ix[i] - minx, iy[i] - miny};
      if (doubled < 0) std::reverse(cand.begin(), cand.end());
      std::size_t start = 0;
      for (std::size_t i = 1; i < n; ++i)
        if (cand[i] < cand[start]) start = i;
      std::rotate(cand.begin(), cand.begin() + static_cast<long>(start), cand.end());
      if (best.empty() || cand < best) best = cand;
    }
  return best;
}

// Left-unimodular reduction of the column pair (u, v), u primitive: the
// unique H with H*u = (1,0) and H*v = (x,y), y > 0, 0 <= x < y. Because the
// reduced pair is a canonical form of the orbit, H is equivariant in (u, v),
// which is what makes canonical_form well defined on equivalence classes.
UnimodularMap pair_basis_map(const IntVec& u, const IntVec& v) {
  Int g, al, be;
  mpz_gcdext(g.get_mpz_t(), al.get_mpz_t(), be.get_mpz_t(), u.x.get_mpz_t(),
             u.y.get_mpz_t());
  // g == 1 for primitive u.
  Int r1x = al, r1y = be;        // row sending u to 1
  Int r2x = -u.y, r2y = u.x;     // row sending u to 0
  Int y = r2x * v.x + r2y * v.y;
  if (y < 0) {
    r2x = -r2x;
    r2y = -r2y;
    y = -y;
  }
  Int x = r1x * v.x + r1y * v.y;
  Int k;
  mpz_fdiv_q(k.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  r1x -= k * r2x;
  r1y -= k * r2y;
  return UnimodularMap::make(r1x, r1y, r2x, r2y);
}

std::vector<std::pair<Rat, Rat>> encode(const Polygon& p) {
  std::vector<std::pair<Rat, Rat>> e;
  e.reserve(p.size());
  for (const Point& v : p.verts()) e.emplace_back(v.x, v.y);
  return e;
}

Polygon bbox_to_origin(const Polygon& p) {
  Rat minx = p.verts()[0].x, miny = p.verts()[0].y;
  for (const Point& v : p.verts()) {
    minx = rat_min(minx, v.x);
    miny = rat_min(miny, v.y);
  }
  return translate(p, -minx, -miny);
}

}  // namespace

Polygon canonical_form(const Polygon& p) {
  if (!is_lattice(p)) throw std::invalid_argument("requires lattice polygon");

  if (auto fast = FastCanon::load(p)) {
    std::vector<Point> verts;
    for (const auto& [x, y] : canonical_fast(*fast))
      verts.push_back({Rat(static_cast<long>(x)), Rat(static_cast<long>(y))});
    return Polygon::make(std::move(verts));
  }

  std::vector<IntVec> dirs;
  const auto& vs = p.verts();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    Point e = vs[(i + 1) % vs.size()] - vs[i];
    IntVec d = primitive({Int(e.x.get_num()), Int(e.y.get_num())});
    dirs.push_back(d);
    dirs.push_back(-d);
  }
  std::sort(dirs.begin(), dirs.end());
  dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());

  std::optional<Polygon> best;
  std::vector<std::pair<Rat, Rat>> best_enc;
  for (const IntVec& u : dirs)
    for (const IntVec& v : dirs) {
      if (cross(u, v) == 0) continue;
      Polygon q = bbox_to_origin(apply_map(pair_basis_map(u, v), p));
      auto enc = encode(q);
      if (!best || enc < best_enc) {
        best = q;
        best_enc = std::move(enc);
      }
    }
  return *best;
}

}  // namespace latpoly
