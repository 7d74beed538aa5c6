#pragma once

#include <json.hpp>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "latpoly/bounds.hpp"
#include "latpoly/toric.hpp"

namespace latpoly {

struct LwdEntry {
  LatticeWidthData data;
  std::vector<std::string> slicing_violations;
};

struct TwelveEntry {
  Int b_p = 0, b_dual = 0;
  bool reflexive = false;
  bool holds = false;
};

// Everything the verifier computed for one polygon, plus the verdicts of all
// applicable bounds. `anomalies` is empty exactly when every applicable
// check passed.
struct InvariantReport {
  std::string name;
  std::optional<Polygon> polygon;
  std::optional<Polygon> canonical;  // lattice polygons only
  std::string sort_key;

  Rat area_value = 0;
  Int denom = 1;
  Int k = 0;
  std::optional<Int> boundary;
  std::map<long long, Int> per_line;
  Rat lw = 0;
  std::vector<IntVec> directions;
  std::vector<LwdEntry> lwd;
  bool symmetric_lwd = false;
  std::optional<IntVec> symmetric_witness;
  std::optional<Int> nsmooth;
  std::optional<AreaIdentity> identity;
  std::optional<TwelveEntry> twelve;
  std::optional<Hull> f_hull;

  std::vector<BoundVerdict> verdicts;
  // (check category, message); categories: pick, scott, identity, bounds,
  // slicing, twelve, width, lwd, hollow.
  std::vector<std::pair<std::string, std::string>> anomalies;
  std::vector<std::string> notes;
};

// Computes every invariant and every applicable bound verdict for one
// polygon. Hollow lattice polygons get the reduced report with the
// classification check; rational hollow polygons just get their invariants.
InvariantReport verify_all(const Polygon& p, std::string name = {});

// Category of a verdict name, for check selection.
std::string verdict_category(const std::string& verdict_name);

// Keeps only the selected check categories (empty set keeps everything).
InvariantReport filter_report(InvariantReport r, const std::set<std::string>& checks);

nlohmann::json report_json(const InvariantReport& r);
nlohmann::json polygon_json(const Polygon& p, const std::string& name = {});

}  // namespace latpoly
