#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latpoly/bounds.hpp"
#include "latpoly/harness.hpp"
#include "oracles.hpp"

using namespace latpoly;

namespace {

Polygon poly(std::initializer_list<std::pair<long, long>> pts) {
  std::vector<Point> v;
  for (auto [x, y] : pts) v.push_back({Rat(x), Rat(y)});
  return Polygon::make(std::move(v));
}

Point pt(long x, long y) { return {Rat(x), Rat(y)}; }

}  // namespace

TEST_CASE("convex hull dimensions") {
  CHECK_THROWS_WITH(convex_hull({}), "empty point set");

  Hull h0 = convex_hull({pt(0, 0), pt(0, 0)});
  CHECK(h0.dim == 0);
  CHECK(h0.point() == pt(0, 0));

  Hull h1 = convex_hull({pt(0, 0), pt(2, 0), pt(1, 0)});
  CHECK(h1.dim == 1);
  CHECK(h1.segment().a == pt(0, 0));
  CHECK(h1.segment().b == pt(2, 0));

  Hull h2 = convex_hull({pt(0, 0), pt(3, 0), pt(0, 3), pt(1, 1)});
  CHECK(h2.dim == 2);
  CHECK(h2.polygon() == poly({{0, 0}, {3, 0}, {0, 3}}));
}

TEST_CASE("hull agrees with orientation-test oracle on random sets") {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Point> pts;
    std::size_t n = 3 + rng.below(9);
    for (std::size_t i = 0; i < n; ++i)
      pts.push_back(pt(static_cast<long>(rng.below(7)), static_cast<long>(rng.below(7))));
    Hull h = convex_hull(pts);
    if (h.dim != 2) continue;
    // Every input point lies inside or on the hull; every hull vertex is an
    // input point that no triangle of other inputs strictly contains.
    for (const Point& q : pts) CHECK(oracles::side_of(h.polygon(), q) >= 0);
    for (const Point& v : h.polygon().verts()) {
      bool strict_inside = false;
      for (const Point& a : pts)
        for (const Point& b : pts)
          for (const Point& c : pts) {
            if (cross(a, b, c) <= 0) continue;
            if (cross(a, b, v) > 0 && cross(b, c, v) > 0 && cross(c, a, v) > 0)
              strict_inside = true;
          }
      CHECK_FALSE(strict_inside);
    }
  }
}

TEST_CASE("polygon construction rejects degenerate cycles") {
  CHECK_THROWS(Polygon::make({pt(0, 0), pt(1, 0)}));
  CHECK_THROWS(Polygon::make({pt(0, 0), pt(1, 0), pt(2, 0)}));
  // Collinear middle vertex.
  CHECK_THROWS(Polygon::make({pt(0, 0), pt(1, 0), pt(2, 0), pt(0, 2)}));
  // Clockwise input is fine, gets reoriented.
  Polygon p = Polygon::make({pt(0, 0), pt(0, 1), pt(1, 0)});
  CHECK(area(p) == Rat(1, 2));
}

TEST_CASE("area of reference polygons") {
  CHECK(area(poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}})) == 1);
  CHECK(area(poly({{0, 0}, {3, 0}, {0, 3}})) == Rat(9, 2));
  CHECK(area(gen_T(1, 2)) == Rat(9, 2));
}

TEST_CASE("area equals fan triangulation") {
  Rng rng(11);
  SweepConfig cfg;
  cfg.mode = SweepConfig::Mode::random;
  cfg.box = 7;
  cfg.denom = 3;
  cfg.sample_count = 40;
  cfg.seed = 1234;
  for (const Polygon& p : sample_rational_polygons(cfg)) {
    Rat fan = 0;
    const auto& vs = p.verts();
    for (std::size_t i = 1; i + 1 < vs.size(); ++i)
      fan += cross(vs[0], vs[i], vs[i + 1]) / 2;
    CHECK(fan == area(p));
  }
}

TEST_CASE("apply_map preserves area and lattice counts") {
  Rng rng(5);
  std::vector<Polygon> polys{gen_delta(3), gen_T(2, 3), gen_Q(2, QVariant::reflexive),
                             poly({{0, 0}, {4, 1}, {3, 3}, {1, 3}})};
  for (const Polygon& p : polys) {
    for (int trial = 0; trial < 20; ++trial) {
      UnimodularMap u = oracles::random_unimodular(rng);
      Polygon q = apply_map(u, p);
      CHECK(area(q) == area(p));
      CHECK(count_interior(q).interior == count_interior(p).interior);
      if (is_lattice(p)) CHECK(count_boundary(q) == count_boundary(p));
    }
  }
}

TEST_CASE("apply_map examples") {
  Polygon sq = poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  CHECK(apply_map(UnimodularMap::identity(), sq) == sq);

  UnimodularMap shear = UnimodularMap::make(1, 0, 1, 1);
  CHECK(apply_map(shear, sq) == poly({{0, 0}, {1, 1}, {1, 2}, {0, 1}}));

  UnimodularMap swap = UnimodularMap::make(0, 1, 1, 0);
  Polygon d2 = gen_delta(1);
  CHECK(apply_map(swap, d2) == d2);
}

TEST_CASE("map inverse and direction transport") {
  Rng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    UnimodularMap u = oracles::random_unimodular(rng);
    UnimodularMap id = u.after(u.inverse());
    CHECK(id.a11 == 1);
    CHECK(id.a12 == 0);
    CHECK(id.a21 == 0);
    CHECK(id.a22 == 1);
    CHECK(id.b1 == 0);
    CHECK(id.b2 == 0);
    // Transported functional takes the same values on mapped points.
    IntVec w{3, -2};
    IntVec wt = u.transport_direction(w);
    Point x{Rat(5), Rat(-7)};
    Point y = u.apply(x);
    CHECK(eval(wt, y) - eval(wt, {Rat(u.b1), Rat(u.b2)}) == eval(w, x));
  }
}

TEST_CASE("denominator") {
  CHECK(denominator(gen_delta(3)) == 1);
  CHECK(denominator(gen_T(1, 2)) == 2);
  Polygon p = Polygon::make({{Rat(1, 2), Rat(0)}, {Rat(0), Rat(1, 3)}, {Rat(-1), Rat(-1)}});
  CHECK(denominator(p) == 6);
}

TEST_CASE("canonical form is constant on orbits") {
  Rng rng(42);
  Polygon base = gen_delta(3);
  Polygon canon = canonical_form(base);
  for (int trial = 0; trial < 1000; ++trial) {
    Polygon img = apply_map(oracles::random_unimodular(rng), base);
    CHECK(canonical_form(img) == canon);
  }
}

TEST_CASE("canonical form separates scales and matches the exact path") {
  CHECK(canonical_form(gen_delta(1)) != canonical_form(gen_delta(2)));
  // A large translation pushes coordinates past the fast-path range; the
  // result must not change.
  Rng rng(33);
  for (int trial = 0; trial < 20; ++trial) {
    Polygon p = apply_map(oracles::random_unimodular(rng), gen_Q(2, QVariant::reflexive));
    Rat big(Int(1) << 40);
    CHECK(canonical_form(translate(p, big, big)) == canonical_form(p));
  }
}

TEST_CASE("canonical form rejects rational input") {
  CHECK_THROWS_WITH(canonical_form(gen_T(1, 2)), "requires lattice polygon");
}

TEST_CASE("rational arithmetic round trip") {
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    Int na(static_cast<long>(rng.next() >> 1)), nb(static_cast<long>(rng.next() >> 1));
    Int da(static_cast<long>(rng.below(1'000'000) + 1));
    Int db(static_cast<long>(rng.below(1'000'000) + 1));
    Rat a(na, da), b(nb, db);
    a.canonicalize();
    b.canonicalize();
    CHECK((a + b) - b == a);
  }
  CHECK(rat_str(parse_rat("3/2")) == "3/2");
  CHECK(rat_str(parse_rat("-4/2")) == "-2");
  CHECK(parse_rat("7") == 7);
  CHECK_THROWS(parse_rat("1/0"));
  CHECK_THROWS(parse_rat("x"));
}
