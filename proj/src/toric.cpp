#include "latpoly/toric.hpp"

#include <stdexcept>

#include "latpoly/lattice_points.hpp"

namespace latpoly {

Cone Cone::make(IntVec u, IntVec v) {
  u = primitive(u);
  v = primitive(v);
  Int d = cross(u, v);
  if (d <= 0) throw std::invalid_argument("cone generators must be positively oriented");
  return Cone{std::move(u), std::move(v), std::move(d)};
}

NormalFan normal_fan(const Polygon& p) {
  if (!is_lattice(p)) throw std::invalid_argument("requires lattice polygon");
  NormalFan fan;
  const auto& vs = p.verts();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    Point e = vs[(i + 1) % vs.size()] - vs[i];
    // Outer normal of a counterclockwise edge: rotate the edge by -90 deg.
    fan.rays.push_back(primitive({Int(e.y.get_num()), Int(-e.x.get_num())}));
  }
  for (std::size_t i = 0; i < fan.rays.size(); ++i)
    fan.cones.push_back(Cone::make(fan.rays[i], fan.rays[(i + 1) % fan.rays.size()]));
  return fan;
}

namespace {

// Unimodular map (det -1) sending u to (0,1) and v to (d,-q), 0 <= q < d.
UnimodularMap cone_normal_form(const Cone& c, Int& d, Int& q) {
  Int g, r, s;
  mpz_gcdext(g.get_mpz_t(), r.get_mpz_t(), s.get_mpz_t(), c.u.x.get_mpz_t(),
             c.u.y.get_mpz_t());
  // Rows (-u.y, u.x) and (r, s): the first sends u to 0 and v to det.
  Int e = r * c.v.x + s * c.v.y;
  d = c.det;
  // Shift the second row by multiples of the first to land e in (-d, 0].
  Int t;
  mpz_cdiv_q(t.get_mpz_t(), e.get_mpz_t(), d.get_mpz_t());
  r -= t * (-c.u.y);
  s -= t * c.u.x;
  q = -(e - t * d);
  return UnimodularMap::make(-c.u.y, c.u.x, r, s);
}

}  // namespace

std::vector<IntVec> resolve_cone(const Cone& c) {
  if (c.det == 1) return {};
  Int d, q;
  UnimodularMap m = cone_normal_form(c, d, q);
  UnimodularMap minv = m.inverse();

  // Minus-sign continued fraction d/q = a1 - 1/(a2 - ...), one inserted ray
  // per digit: w_{i+1} = a_i * w_i - w_{i-1} starting from (0,1), (1,0).
  std::vector<IntVec> rays;
  IntVec prev{0, 1}, cur{1, 0};
  Int dd = d, qq = q;
  while (qq > 0) {
    Int a;
    mpz_cdiv_q(a.get_mpz_t(), dd.get_mpz_t(), qq.get_mpz_t());
    rays.push_back(minv.apply_linear(cur));
    IntVec next{a * cur.x - prev.x, a * cur.y - prev.y};
    prev = cur;
    cur = next;
    Int d2 = qq;
    qq = a * qq - dd;
    dd = d2;
  }
  if (cur != IntVec{d, -q})
    throw std::logic_error("continued fraction expansion did not close the cone");
  return rays;
}

Int n_smooth(const Polygon& p) {
  NormalFan fan = normal_fan(p);
  Int n = static_cast<long>(fan.rays.size());
  for (const Cone& c : fan.cones) n += static_cast<long>(resolve_cone(c).size());
  return n;
}

Polygon dual_polygon(const Polygon& p) {
  PointCounts counts = count_interior(p);
  bool origin_ok = false;
  if (counts.interior == 1) {
    std::vector<Point> pts = interior_lattice_points(p);
    origin_ok = pts.size() == 1 && pts[0] == Point{0, 0};
  }
  if (!origin_ok)
    throw std::invalid_argument(
        "dual requires exactly one interior lattice point, at the origin");

  std::vector<Point> verts;
  const auto& vs = p.verts();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    Point e = vs[(i + 1) % vs.size()] - vs[i];
    Rat nx = e.y, ny = -e.x;
    Rat c = nx * vs[i].x + ny * vs[i].y;  // support value, > 0
    verts.push_back({-nx / c, -ny / c});
  }
  return Polygon::make(std::move(verts));
}

TwelveResult check_twelve(const Polygon& p) {
  if (!is_lattice(p)) throw std::invalid_argument("twelve-check requires reflexive polygon");
  Polygon dual = [&] {
    try {
      return dual_polygon(p);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("twelve-check requires reflexive polygon");
    }
  }();
  if (!is_lattice(dual))
    throw std::invalid_argument("twelve-check requires reflexive polygon");
  TwelveResult r{count_boundary(p), count_boundary(dual), 0};
  r.sum = r.b_p + r.b_dual;
  return r;
}

AreaIdentity area_identity(const Polygon& p) {
  if (!is_lattice(p)) throw std::invalid_argument("requires lattice polygon");
  PointCounts counts = count_interior(p);
  if (counts.interior < 1) throw std::invalid_argument("identity requires k >= 1");

  Rat hull_area = 0;
  if (auto f = interior_hull(p); f && f->dim == 2) hull_area = area(f->polygon());

  AreaIdentity id;
  id.lhs = area(p);
  id.rhs = 2 * (Rat(counts.interior) + 1) + 2 - Rat(n_smooth(p)) / 2 - hull_area;
  id.holds = id.lhs == id.rhs;
  return id;
}

}  // namespace latpoly
