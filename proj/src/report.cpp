#include "latpoly/report.hpp"

namespace latpoly {

namespace {

using nlohmann::json;

json rat_json(const Rat& r) { return rat_str(r); }

json vec_json(const IntVec& v) { return json::array({int_str(v.x), int_str(v.y)}); }

json point_json(const Point& p) {
  return json::array({rat_str(p.x), rat_str(p.y)});
}

json hull_json(const Hull& h) {
  json j;
  j["dim"] = h.dim;
  switch (h.dim) {
    case 0: j["point"] = point_json(h.point()); break;
    case 1:
      j["segment"] = json::array({point_json(h.segment().a), point_json(h.segment().b)});
      break;
    default: {
      json verts = json::array();
      for (const Point& v : h.polygon().verts()) verts.push_back(point_json(v));
      j["vertices"] = verts;
    }
  }
  return j;
}

json verdict_json(const BoundVerdict& v) {
  json j;
  j["name"] = v.name;
  j["applicable"] = v.applicable;
  if (v.bound) j["bound"] = rat_json(*v.bound);
  j["actual"] = rat_json(v.actual);
  j["satisfied"] = v.satisfied;
  j["sharp"] = v.sharp;
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

}  // namespace

nlohmann::json polygon_json(const Polygon& p, const std::string& name) {
  json j;
  if (!name.empty()) j["name"] = name;
  json verts = json::array();
  for (const Point& v : p.verts()) verts.push_back(point_json(v));
  j["vertices"] = verts;
  return j;
}

nlohmann::json report_json(const InvariantReport& r) {
  json j;
  if (!r.name.empty()) j["name"] = r.name;
  if (r.polygon) j["polygon"] = polygon_json(*r.polygon);
  if (r.canonical) j["canonical"] = polygon_json(*r.canonical);

  json inv;
  inv["area"] = rat_json(r.area_value);
  inv["denominator"] = int_str(r.denom);
  inv["interior_points"] = to_ll(r.k);
  if (r.boundary) inv["boundary_points"] = to_ll(*r.boundary);
  json per_line = json::object();
  for (const auto& [h, c] : r.per_line) per_line[std::to_string(h)] = to_ll(c);
  inv["interior_per_line"] = per_line;
  inv["lattice_width"] = rat_json(r.lw);
  json dirs = json::array();
  for (const IntVec& d : r.directions) dirs.push_back(vec_json(d));
  inv["width_directions"] = dirs;
  inv["symmetric_lwd"] = r.symmetric_lwd;
  if (r.symmetric_witness) inv["symmetric_witness"] = vec_json(*r.symmetric_witness);
  if (r.nsmooth) inv["n_smooth"] = to_ll(*r.nsmooth);
  if (r.f_hull) inv["interior_hull"] = hull_json(*r.f_hull);
  j["invariants"] = inv;

  json lwd = json::array();
  for (const LwdEntry& e : r.lwd) {
    json d;
    d["direction"] = vec_json(e.data.direction);
    d["x_l"] = rat_json(e.data.x_l);
    d["x_r"] = rat_json(e.data.x_r);
    d["plvsl"] = rat_json(e.data.plvsl_pos);
    d["interior_vertical_lines"] = e.data.interior_vertical_lines;
    if (!e.slicing_violations.empty()) d["slicing_violations"] = e.slicing_violations;
    lwd.push_back(d);
  }
  j["lattice_width_data"] = lwd;

  if (r.identity) {
    j["identity"] = {{"lhs", rat_json(r.identity->lhs)},
                     {"rhs", rat_json(r.identity->rhs)},
                     {"holds", r.identity->holds}};
  }
  if (r.twelve) {
    j["twelve"] = {{"b", to_ll(r.twelve->b_p)},
                   {"b_dual", to_ll(r.twelve->b_dual)},
                   {"reflexive", r.twelve->reflexive},
                   {"holds", r.twelve->holds}};
  }

  json verdicts = json::array();
  for (const BoundVerdict& v : r.verdicts) verdicts.push_back(verdict_json(v));
  j["verdicts"] = verdicts;

  json anomalies = json::array();
  for (const auto& [cat, msg] : r.anomalies) anomalies.push_back(cat + ": " + msg);
  j["anomalies"] = anomalies;
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

}  // namespace latpoly
