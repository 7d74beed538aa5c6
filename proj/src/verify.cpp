#include "latpoly/report.hpp"

namespace latpoly {

namespace {

const Polygon& hollow_reference() {
  static const Polygon twice_delta = canonical_form(gen_delta(2));
  return twice_delta;
}

bool is_delta_multiple(const Polygon& canon, const Rat& lw) {
  if (!is_integer(lw) || lw < 1) return false;
  return canon == canonical_form(gen_delta(Int(lw.get_num())));
}

std::string dir_str(const IntVec& v) {
  return "(" + int_str(v.x) + "," + int_str(v.y) + ")";
}

}  // namespace

InvariantReport verify_all(const Polygon& p, std::string name) {
  InvariantReport r;
  r.name = std::move(name);
  r.polygon = p;
  r.area_value = area(p);
  r.denom = denominator(p);
  const bool lattice = r.denom == 1;

  auto anomaly = [&](const std::string& cat, const std::string& msg) {
    r.anomalies.emplace_back(cat, msg);
  };

  PointCounts counts = count_interior(p);
  r.k = counts.interior;
  r.boundary = counts.boundary;
  r.per_line = counts.per_line;

  if (lattice) {
    r.canonical = canonical_form(p);
    r.sort_key = r.canonical->key();
  } else {
    r.sort_key = p.key();
  }

  WidthResult wr = lattice_width(p);
  r.lw = wr.width;
  r.directions = wr.directions;
  if (r.directions.size() > 4)
    anomaly("width", "more than 4 unsigned lattice width directions");

  for (const IntVec& w : r.directions) {
    LwdEntry e;
    e.data = width_normalize(p, w);
    Rat rhs = Rat(rat_ceil(e.data.x_l)) + Rat(rat_floor(e.data.x_r));
    if (2 * e.data.plvsl_pos > rhs)
      anomaly("lwd", "normalization inequality fails for " + dir_str(w));
    else if (2 * e.data.plvsl_pos == rhs &&
             Rat(rat_ceil(e.data.x_l)) - e.data.x_l >
                 e.data.x_r - Rat(rat_floor(e.data.x_r)))
      anomaly("lwd", "normalization tie rule fails for " + dir_str(w));
    Polygon normalized = apply_map(e.data.map, p);
    e.slicing_violations = check_slicing_bounds(normalized);
    for (const std::string& v : e.slicing_violations)
      anomaly("slicing", v + " [direction " + dir_str(w) + "]");
    r.lwd.push_back(std::move(e));
  }

  SymmetricLwd sym = is_symmetric_lwd(p);
  r.symmetric_lwd = sym.symmetric;
  if (sym.symmetric) r.symmetric_witness = sym.witness;

  r.f_hull = interior_hull(p);

  if (lattice) {
    if (r.area_value != pick_area(r.k, *r.boundary))
      anomaly("pick", "area does not match k + b/2 - 1");

    if (r.k == 0) {
      if (!(r.lw == 1 || *r.canonical == hollow_reference()))
        anomaly("hollow", "hollow polygon is neither width 1 nor twice the standard triangle");
    } else {
      r.nsmooth = n_smooth(p);
      r.identity = area_identity(p);
      if (!r.identity->holds) anomaly("identity", "area identity fails");
    }

    if (r.k == 1) {
      Point ip = interior_lattice_points(p)[0];
      Polygon centered = translate(p, -ip.x, -ip.y);
      Polygon dual = dual_polygon(centered);
      TwelveEntry tw;
      tw.b_p = *r.boundary;
      tw.reflexive = is_lattice(dual);
      tw.b_dual = tw.reflexive ? count_boundary(dual) : boundary_lattice_points(dual);
      tw.holds = tw.b_p + tw.b_dual == 12;
      if (tw.reflexive && !tw.holds)
        anomaly("twelve", "boundary counts of a reflexive polygon and its dual do not sum to 12");
      if (!tw.reflexive)
        r.notes.push_back("dual is not a lattice polygon; twelve-sum b(P)=" +
                          int_str(tw.b_p) + " b(P*)=" + int_str(tw.b_dual) +
                          " recorded informationally");
      r.twelve = tw;
    }
  }

  if (r.k >= 1) {
    // Scott.
    if (lattice) {
      BoundVerdict v;
      v.name = "scott";
      v.applicable = true;
      v.bound = bound_scott(r.k);
      v.actual = r.area_value;
      v.satisfied = v.actual <= *v.bound;
      v.sharp = v.actual == *v.bound;
      r.verdicts.push_back(v);
    }

    // Width-data bound for wide bodies.
    {
      BoundVerdict v;
      v.name = "bigwidth";
      v.actual = r.area_value;
      if (r.symmetric_lwd || r.lw > 5) {
        v.applicable = true;
        v.bound = bound_big_width(r.k, r.lw);
        v.satisfied = v.actual <= *v.bound;
        v.sharp = v.actual == *v.bound;
      } else {
        v.note = "needs symmetric width data or width > 5";
      }
      r.verdicts.push_back(v);
    }

    // Width-data bound for narrow bodies.
    {
      BoundVerdict v;
      v.name = "smallwidth";
      v.actual = r.area_value;
      if (r.lw <= 5) {
        v.applicable = true;
        v.bound = bound_small_width(r.k, r.lw);
        if (v.bound) {
          v.satisfied = v.actual <= *v.bound;
          v.sharp = v.actual == *v.bound;
        } else {
          v.note = "width <= 1: no finite bound";
        }
      } else {
        v.note = "width > 5";
      }
      r.verdicts.push_back(v);
    }

    // Denominator bound for rational polygons.
    if (r.denom >= 2) {
      BoundVerdict v;
      v.name = "rational";
      v.actual = r.area_value;
      v.bound = bound_rational(r.k, r.denom);
      if (r.k >= 2 || r.denom >= 3) {
        v.applicable = true;
        v.satisfied = v.actual <= *v.bound;
        v.sharp = v.actual == *v.bound;
      } else {
        v.note = "k = 1, l = 2: evaluated informationally (possible extra maximizers)";
        v.satisfied = v.actual <= *v.bound;
        v.sharp = v.actual == *v.bound;
      }
      r.verdicts.push_back(v);
    }

    // Vertex-count refinement.
    if (lattice && r.lw >= 3) {
      BoundVerdict v;
      v.name = "coleman";
      v.actual = r.area_value;
      v.bound = bound_coleman_refined(r.k, static_cast<long>(p.size()), r.lw);
      bool delta_mult = is_delta_multiple(*r.canonical, r.lw);
      if (!delta_mult || r.lw >= 10) {
        v.applicable = true;
        v.satisfied = v.actual <= *v.bound;
        v.sharp = v.actual == *v.bound;
      } else {
        v.note = "multiple of the standard triangle with width < 10: excluded";
      }
      r.verdicts.push_back(v);
    }

    // Strip-by-strip bounds, one set per width direction.
    for (const LwdEntry& e : r.lwd) {
      Polygon normalized = apply_map(e.data.map, p);
      PointCounts norm_counts = count_interior(normalized);
      for (BoundVerdict v : bound_fine(p, e.data, norm_counts)) {
        v.name += "@" + dir_str(e.data.direction);
        r.verdicts.push_back(std::move(v));
      }
    }
  }

  for (const BoundVerdict& v : r.verdicts)
    if (v.applicable && !v.satisfied)
      anomaly(verdict_category(v.name), "bound violated: " + v.name);

  return r;
}

std::string verdict_category(const std::string& verdict_name) {
  return verdict_name.rfind("scott", 0) == 0 ? "scott" : "bounds";
}

InvariantReport filter_report(InvariantReport r, const std::set<std::string>& checks) {
  if (checks.empty()) return r;
  std::vector<std::pair<std::string, std::string>> kept;
  for (auto& a : r.anomalies)
    if (checks.count(a.first)) kept.push_back(a);
  r.anomalies = std::move(kept);
  std::vector<BoundVerdict> vs;
  for (auto& v : r.verdicts)
    if (checks.count(verdict_category(v.name))) vs.push_back(v);
  r.verdicts = std::move(vs);
  if (!checks.count("twelve")) r.twelve.reset();
  if (!checks.count("identity")) r.identity.reset();
  if (!checks.count("slicing"))
    for (auto& e : r.lwd) e.slicing_violations.clear();
  return r;
}

}  // namespace latpoly
