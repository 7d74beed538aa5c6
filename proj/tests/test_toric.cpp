#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latpoly/bounds.hpp"
#include "latpoly/harness.hpp"
#include "latpoly/toric.hpp"
#include "oracles.hpp"

using namespace latpoly;

namespace {

Polygon poly(std::initializer_list<std::pair<long, long>> pts) {
  std::vector<Point> v;
  for (auto [x, y] : pts) v.push_back({Rat(x), Rat(y)});
  return Polygon::make(std::move(v));
}

IntVec iv(long x, long y) { return {x, y}; }

}  // namespace

TEST_CASE("normal fans") {
  NormalFan d = normal_fan(gen_delta(1));
  CHECK(d.rays == std::vector<IntVec>{iv(0, -1), iv(1, 1), iv(-1, 0)});
  CHECK(normal_fan(gen_delta(4)).rays == d.rays);

  NormalFan sq = normal_fan(poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  CHECK(sq.rays == std::vector<IntVec>{iv(0, -1), iv(1, 0), iv(0, 1), iv(-1, 0)});
  for (const Cone& c : sq.cones) CHECK(c.det == 1);

  CHECK_THROWS(normal_fan(gen_T(1, 2)));
}

TEST_CASE("cone resolution basics") {
  CHECK(resolve_cone(Cone::make(iv(1, 0), iv(0, 1))).empty());
  CHECK(resolve_cone(Cone::make(iv(1, 0), iv(1, 2))) == std::vector<IntVec>{iv(1, 1)});
  for (long d = 2; d <= 12; ++d) {
    auto rays = resolve_cone(Cone::make(iv(1, 0), iv(1, d)));
    REQUIRE(rays.size() == static_cast<std::size_t>(d - 1));
    for (long i = 1; i < d; ++i) CHECK(rays[i - 1] == iv(1, i));
  }
  CHECK_THROWS(Cone::make(iv(1, 0), iv(2, 0)));
  CHECK_THROWS(Cone::make(iv(0, 1), iv(1, 0)));
}

TEST_CASE("cone resolution equals the hull oracle and is smooth") {
  Rng rng(97);
  int done = 0;
  while (done < 500) {
    long ux = static_cast<long>(rng.below(41)) - 20;
    long uy = static_cast<long>(rng.below(41)) - 20;
    long vx = static_cast<long>(rng.below(41)) - 20;
    long vy = static_cast<long>(rng.below(41)) - 20;
    if ((ux == 0 && uy == 0) || (vx == 0 && vy == 0)) continue;
    long g1 = std::gcd(std::abs(ux), std::abs(uy));
    long g2 = std::gcd(std::abs(vx), std::abs(vy));
    ux /= g1, uy /= g1, vx /= g2, vy /= g2;
    long long det = (long long)ux * vy - (long long)uy * vx;
    if (det <= 0 || det > 50) continue;
    Cone c = Cone::make(iv(ux, uy), iv(vx, vy));
    auto rays = resolve_cone(c);
    CHECK(rays == oracles::cone_hull_oracle(c.u, c.v));

    // Adjacent pairs in the refined chain have determinant one.
    std::vector<IntVec> chain{c.u};
    chain.insert(chain.end(), rays.begin(), rays.end());
    chain.push_back(c.v);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
      CHECK(cross(chain[i], chain[i + 1]) == 1);
    ++done;
  }
}

TEST_CASE("smooth refinement ray counts") {
  CHECK(n_smooth(gen_delta(3)) == 3);
  CHECK(n_smooth(poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}})) == 4);
  CHECK(n_smooth(gen_Q(1, QVariant::reflexive)) == 9);
}

TEST_CASE("n_smooth is a class invariant") {
  Rng rng(31);
  for (const Polygon& p : {gen_delta(3), gen_Q(1, QVariant::reflexive),
                           poly({{0, 0}, {3, 1}, {1, 4}})}) {
    Int n = n_smooth(p);
    for (int trial = 0; trial < 30; ++trial)
      CHECK(n_smooth(apply_map(oracles::random_unimodular(rng), p)) == n);
  }
}

TEST_CASE("dual polygons") {
  Polygon q = gen_Q(1, QVariant::reflexive);
  Polygon dq = dual_polygon(q);
  CHECK(dq == poly({{-1, -1}, {2, -1}, {-1, 2}}));
  CHECK(count_boundary(dq) == 9);

  Polygon diamond = poly({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
  Polygon square = poly({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}});
  CHECK(dual_polygon(diamond) == square);
  CHECK(dual_polygon(square) == diamond);

  CHECK_THROWS(dual_polygon(gen_delta(1)));                       // k = 0
  CHECK_THROWS(dual_polygon(gen_delta(3)));                       // interior point not at origin
  CHECK(dual_polygon(translate(gen_delta(3), -1, -1)) == gen_Q(1, QVariant::reflexive));
}

TEST_CASE("twelve identity on the reflexive classes") {
  Polygon q = gen_Q(1, QVariant::reflexive);
  TwelveResult t = check_twelve(q);
  CHECK(t.b_p == 3);
  CHECK(t.b_dual == 9);
  CHECK(t.sum == 12);

  std::vector<Polygon> all = enumerate_reflexive();
  CHECK(all.size() == 16);
  for (const Polygon& canon : all) {
    // The canonical form moves the interior point; recenter before dualizing.
    Point ip = interior_lattice_points(canon)[0];
    Polygon centered = translate(canon, -ip.x, -ip.y);
    CHECK(check_twelve(centered).sum == 12);
    CHECK(dual_polygon(dual_polygon(centered)) == centered);
  }

  CHECK_THROWS_WITH(check_twelve(translate(gen_delta(4), -1, -1)),
                    "twelve-check requires reflexive polygon");
}

TEST_CASE("smooth ray count equals the dual boundary count on reflexive polygons") {
  for (const Polygon& canon : enumerate_reflexive()) {
    Point ip = interior_lattice_points(canon)[0];
    Polygon centered = translate(canon, -ip.x, -ip.y);
    CHECK(n_smooth(centered) == count_boundary(dual_polygon(centered)));
  }
}

TEST_CASE("reflexive duals close under the enumeration") {
  std::vector<Polygon> all = enumerate_reflexive();
  std::set<std::string> keys;
  for (const Polygon& p : all) keys.insert(p.key());
  for (const Polygon& canon : all) {
    Point ip = interior_lattice_points(canon)[0];
    Polygon dual = dual_polygon(translate(canon, -ip.x, -ip.y));
    CHECK(keys.count(canonical_form(dual).key()) == 1);
  }
}

TEST_CASE("area identity") {
  AreaIdentity a3 = area_identity(gen_delta(3));
  CHECK(a3.lhs == Rat(9, 2));
  CHECK(a3.rhs == Rat(9, 2));
  CHECK(a3.holds);

  AreaIdentity a4 = area_identity(gen_delta(4));
  CHECK(a4.lhs == 8);
  CHECK(a4.holds);

  CHECK_THROWS_WITH(area_identity(gen_delta(2)), "identity requires k >= 1");
  CHECK_THROWS(area_identity(gen_T(1, 2)));
}

TEST_CASE("area identity across sampled lattice polygons") {
  SweepConfig cfg;
  cfg.mode = SweepConfig::Mode::random;
  cfg.box = 7;
  cfg.denom = 1;
  cfg.sample_count = 120;
  cfg.seed = 5150;
  for (const Polygon& p : sample_rational_polygons(cfg)) {
    if (count_interior(p).interior < 1) continue;
    CHECK(area_identity(p).holds);
  }
}
