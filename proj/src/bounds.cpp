#include "latpoly/bounds.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>

#include "latpoly/toric.hpp"

namespace latpoly {

Rat bound_big_width(const Int& k, const Rat& lw) {
  if (k < 1) throw std::invalid_argument("requires k >= 1");
  Rat half = lw / 2;
  Int left = rat_floor(rat_max(half - 3, Rat(0)));
  Int right = rat_floor(half - 2);
  return 2 * (Rat(k) + 1) - Rat(left * right);
}

std::optional<Rat> bound_small_width(const Int& k, const Rat& lw) {
  if (k < 1) throw std::invalid_argument("requires k >= 1");
  if (lw <= 0) throw std::invalid_argument("width must be positive");
  if (lw > 5) throw std::invalid_argument("use bound_big_width");
  if (lw <= 1) return std::nullopt;
  if (lw <= 2) return lw * lw / (2 * (lw - 1)) * (Rat(k) + 1);
  return 2 * (Rat(k) + 1) + Rat(1, 2);
}

Rat bound_scott(const Int& k) {
  if (k < 1) throw std::invalid_argument("requires k >= 1");
  return 2 * (Rat(k) + 1) + Rat(1, 2);
}

Rat bound_rational(const Int& k, const Int& l) {
  if (k < 1) throw std::invalid_argument("requires k >= 1");
  if (l < 2) throw std::invalid_argument("Scott's bound governs l = 1");
  Rat lr(l);
  return (lr + 1) * (lr + 1) / (2 * lr) * (Rat(k) + 1);
}

Rat bound_coleman_refined(const Int& k, const Int& n_vertices, const Rat& lw) {
  if (lw < 3) throw std::invalid_argument("requires lattice width >= 3");
  Rat d = lw - 2;
  return 2 * Rat(k) + 4 - Rat(n_vertices) / 2 - Rat(3, 8) * d * d;
}

namespace {

struct FineFrame {
  Polygon poly;
  Rat x_l, x_r, pl;
  long m = 0;                         // interior vertical lines
  std::map<long long, Int> per_line;  // interior points per line
  Int k = 0;
};

FineFrame make_frame(Polygon poly) {
  FineFrame f{std::move(poly), 0, 0, 0, 0, {}, 0};
  Rat xmin = f.poly.verts()[0].x, xmax = xmin;
  for (const Point& v : f.poly.verts()) {
    xmin = rat_min(xmin, v.x);
    xmax = rat_max(xmax, v.x);
  }
  f.x_l = xmin;
  f.x_r = xmax;
  f.pl = plvsl(f.poly);
  f.m = static_cast<long>(to_ll(rat_ceil(f.x_r) - rat_floor(f.x_l) - 1));
  PointCounts c = count_interior(f.poly);
  f.per_line = std::move(c.per_line);
  f.k = c.interior;
  return f;
}

Int line_count(const FineFrame& f, long long h) {
  auto it = f.per_line.find(h);
  return it == f.per_line.end() ? Int(0) : it->second;
}

BoundVerdict verdict(std::string name, const Rat& actual, const Rat& bound) {
  BoundVerdict v;
  v.name = std::move(name);
  v.applicable = true;
  v.bound = bound;
  v.actual = actual;
  v.satisfied = actual <= bound;
  v.sharp = actual == bound;
  return v;
}

BoundVerdict not_applicable(std::string name, const Rat& actual, std::string note = {}) {
  BoundVerdict v;
  v.name = std::move(name);
  v.actual = actual;
  v.note = std::move(note);
  return v;
}

}  // namespace

std::vector<BoundVerdict> bound_fine(const Polygon& p, const LatticeWidthData& lwd,
                                     const PointCounts& counts) {
  Polygon norm = apply_map(lwd.map, p);
  PointCounts fresh = count_interior(norm);
  if (fresh.interior != counts.interior || fresh.per_line != counts.per_line)
    throw std::invalid_argument("counts do not match the normalized polygon");

  FineFrame f = make_frame(norm);
  Rat a_area = area(f.poly);

  std::vector<BoundVerdict> out;
  if (f.k < 1 || f.m < 1) return out;

  // The propositions assume the profile maximum in the left half of the
  // strip. The normalization guarantees 2*pl <= ceil(x_l) + floor(x_r),
  // which exceeds m+1 only when x_l > 0 and x_r is integral; reflecting the
  // strip then lands pl below (m+1)/2.
  if (2 * f.pl > Rat(f.m) + 1) {
    Int c = rat_ceil(f.x_r);
    f = make_frame(apply_map(UnimodularMap::make(-1, 0, 0, 1, c, 0), f.poly));
    if (2 * f.pl > Rat(f.m) + 1)
      throw std::logic_error("profile maximum not reducible to the left half");
  }

  Rat a = 1 - f.x_l;          // left overhang, in (0, 1]
  Rat b = f.x_r - Rat(f.m);   // right overhang, in (0, 1]
  Rat k(f.k);

  if (f.m == 1) {
    if (a > b) {
      out.push_back(verdict("oneline.triangle", a_area, (a + b) * (a + b) / (2 * b) * (k + 1)));
      out.push_back(not_applicable("oneline.parallelogram", a_area));
      out.push_back(not_applicable("oneline.envelope", a_area));
    } else {
      out.push_back(not_applicable("oneline.triangle", a_area));
      out.push_back(verdict("oneline.parallelogram", a_area, (a + b) * (k + 1)));
      out.push_back(verdict("oneline.envelope", a_area, 2 * (k + 1)));
    }
    return out;
  }

  if (f.m == 2) {
    Rat k1(line_count(f, 1)), k2(line_count(f, 2));
    if (f.pl > 1) {
      // Profile maximum strictly between the two lines.
      if (a + b < 1) {
        Rat apb = a + b;
        Rat num = (apb + 1) * (apb + 1) * (a * (k1 + 1) + b * (k2 + 1));
        out.push_back(verdict("twolines.split", a_area, num / (2 * apb * apb)));
        out.push_back(
            verdict("twolines.split_envelope", a_area, (apb + 1) * (apb + 1) / (2 * apb) * (k + 1)));
      } else {
        out.push_back(
            verdict("twolines.wide", a_area, (a + 1) * (k1 + 1) + b * (1 - k1 + 2 * k2)));
        out.push_back(verdict("twolines.wide_envelope", a_area, 2 * (k + 1)));
      }
    } else {
      // Maximum at or left of the first line, so the slice lengths decay.
      Rat l1 = 0, l2 = 0;
      if (auto s = slice_at(f.poly, 1)) l1 = s->second - s->first;
      if (auto s = slice_at(f.poly, 2)) l2 = s->second - s->first;
      out.push_back(
          verdict("twolines.trapezoid", a_area, (1 + a - b * b / 2) * l1 + (b * b / 2 + b) * l2));
      if (l1 <= 2 * l2) {
        out.push_back(verdict("twolines.case_l1_small", a_area,
                              (Rat(1, 2) + a) * k1 + Rat(3, 2) * k2 + 2 + a));
      } else if (k2 > 0) {
        out.push_back(
            verdict("twolines.case_k2_pos", a_area, (1 + a) * k1 + k2 / 2 + Rat(3, 2) + a));
      } else {
        out.push_back(verdict("twolines.case_k2_zero", a_area,
                              2 * (k1 + 1) + 1 / (2 * k1) - (1 - a) * (k1 - 1)));
      }
      if (k2 > 0)
        out.push_back(verdict("twolines.envelope", a_area, 2 * (k + 1)));
      else
        out.push_back(verdict("twolines.envelope", a_area, 2 * (k + 1) + 1 / (2 * k)));
    }
    return out;
  }

  // m >= 3.
  Int km = line_count(f, f.m);
  auto floor_half = [](long v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); };
  if (km != 0 || f.m >= 5) {
    long corr = floor_half(f.m - 5) * floor_half(f.m - 3);
    out.push_back(verdict("threeormore.main", a_area, 2 * k + 2 - Rat(Int(corr))));
  } else {
    out.push_back(verdict("threeormore.envelope", a_area, 2 * k + 2 + Rat(1, 2)));
  }
  return out;
}

Polygon gen_T(const Int& k, const Int& l) {
  if (k < 1 || l < 1) throw std::invalid_argument("requires k, l >= 1");
  Rat lr(l), kr(k);
  Polygon t = Polygon::make({{0, 0}, {1 + 1 / lr, 0}, {0, (lr + 1) * (kr + 1)}});
  if (count_interior(t).interior != k) throw std::logic_error("triangle interior count off");
  if (area(t) != (lr + 1) * (lr + 1) / (2 * lr) * (kr + 1))
    throw std::logic_error("triangle area off");
  return t;
}

Polygon gen_delta(const Int& m) {
  if (m < 1) throw std::invalid_argument("requires m >= 1");
  Rat mr(m);
  return Polygon::make({{0, 0}, {mr, 0}, {0, mr}});
}

Polygon gen_Q(const Int& m, QVariant variant) {
  if (m < 1) throw std::invalid_argument("requires m >= 1");
  Rat mr(m);
  if (variant == QVariant::paper)
    return Polygon::make({{mr, 0}, {0, mr}, {-mr, mr}});
  return Polygon::make({{mr, 0}, {0, mr}, {-mr, -mr}});
}

namespace {

// Angular order around the origin, starting at the positive x-axis.
bool angle_less(const std::pair<long, long>& a, const std::pair<long, long>& b) {
  auto half = [](const std::pair<long, long>& p) {
    return (p.second > 0 || (p.second == 0 && p.first > 0)) ? 0 : 1;
  };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  long long cr = (long long)a.first * b.second - (long long)a.second * b.first;
  return cr > 0;
}

}  // namespace

std::vector<Polygon> enumerate_reflexive() {
  // A reflexive polygon has all edges on lines {n.x = 1}, so every vertex is
  // primitive; with k = 1 its area is at most 9/2, which prunes the search
  // hard. The origin is the interior point throughout.
  std::vector<std::pair<long, long>> pts;
  for (long x = -4; x <= 4; ++x)
    for (long y = -4; y <= 4; ++y) {
      if (x == 0 && y == 0) continue;
      long g = std::abs(std::gcd(x, y));
      if (g == 1) pts.push_back({x, y});
    }
  std::sort(pts.begin(), pts.end(), angle_less);

  auto cr = [](const std::pair<long, long>& u, const std::pair<long, long>& v) {
    return (long long)u.first * v.second - (long long)u.second * v.first;
  };

  std::map<std::string, Polygon> classes;
  std::vector<std::size_t> chain;

  auto emit = [&](const std::vector<std::size_t>& idx) {
    std::vector<Point> verts;
    for (std::size_t i : idx)
      verts.push_back({Rat(pts[i].first), Rat(pts[i].second)});
    Polygon poly = Polygon::make(std::move(verts));
    if (count_interior(poly).interior != 1) return;
    Polygon dual = dual_polygon(poly);
    if (!is_lattice(dual)) return;
    Polygon canon = canonical_form(poly);
    classes.emplace(canon.key(), canon);
  };

  // Depth-first walk over angularly increasing chains; every consecutive
  // pair (including the closing edge) must keep the origin strictly on its
  // left, and every corner must turn strictly left.
  auto dfs = [&](auto&& self, long long doubled_area) -> void {
    std::size_t last = chain.back();
    // Try to close.
    if (chain.size() >= 3) {
      std::size_t first = chain.front();
      auto edge = [&](std::size_t i, std::size_t j) {
        return std::pair<long, long>{pts[j].first - pts[i].first,
                                     pts[j].second - pts[i].second};
      };
      if (cr(pts[last], pts[first]) > 0 &&
          cr(edge(chain[chain.size() - 2], last), edge(last, first)) > 0 &&
          cr(edge(last, first), edge(first, chain[1])) > 0)
        emit(chain);
    }
    for (std::size_t j = last + 1; j < pts.size(); ++j) {
      long long step = cr(pts[last], pts[j]);
      if (step <= 0) continue;
      if (doubled_area + step > 9) continue;  // area beyond the k=1 ceiling
      if (chain.size() >= 2) {
        std::size_t prev = chain[chain.size() - 2];
        std::pair<long, long> e1{pts[last].first - pts[prev].first,
                                 pts[last].second - pts[prev].second};
        std::pair<long, long> e2{pts[j].first - pts[last].first,
                                 pts[j].second - pts[last].second};
        if (cr(e1, e2) <= 0) continue;
      }
      chain.push_back(j);
      self(self, doubled_area + step);
      chain.pop_back();
    }
  };

  for (std::size_t s = 0; s < pts.size(); ++s) {
    chain.assign(1, s);
    dfs(dfs, 0);
  }

  std::vector<Polygon> out;
  for (auto& [_, poly] : classes) out.push_back(poly);
  return out;
}

}  // namespace latpoly
