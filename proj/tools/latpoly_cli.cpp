#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "latpoly/harness.hpp"
#include "latpoly/io.hpp"

namespace {

using namespace latpoly;

std::set<std::string> parse_checks(const std::string& csv) {
  static const std::set<std::string> known{"scott",   "identity", "bounds",
                                           "slicing", "twelve",   "pick",
                                           "hollow",  "width",    "lwd"};
  std::set<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (!known.count(item)) throw CLI::ValidationError("unknown check: " + item);
    out.insert(item);
  }
  return out;
}

int cmd_invariants(const std::string& file) {
  NamedPolygon np = read_polygon_file(file);
  InvariantReport r = verify_all(np.polygon, np.name);
  std::cout << report_json(r).dump(2) << "\n";
  return r.anomalies.empty() ? 0 : 1;
}

int cmd_verify(const std::string& file, const std::string& checks_csv) {
  NamedPolygon np = read_polygon_file(file);
  InvariantReport r =
      filter_report(verify_all(np.polygon, np.name), parse_checks(checks_csv));
  std::cout << report_json(r).dump(2) << "\n";
  if (!r.anomalies.empty()) {
    std::cerr << "violations: " << r.anomalies.size() << "\n";
    return 1;
  }
  return 0;
}

int cmd_width(const std::string& file) {
  NamedPolygon np = read_polygon_file(file);
  WidthResult wr = lattice_width(np.polygon);
  nlohmann::json j;
  j["lattice_width"] = rat_str(wr.width);
  nlohmann::json dirs = nlohmann::json::array();
  for (const IntVec& d : wr.directions) {
    LatticeWidthData data = width_normalize(np.polygon, d);
    nlohmann::json e;
    e["direction"] = {int_str(d.x), int_str(d.y)};
    e["x_l"] = rat_str(data.x_l);
    e["x_r"] = rat_str(data.x_r);
    e["plvsl"] = rat_str(data.plvsl_pos);
    e["interior_vertical_lines"] = data.interior_vertical_lines;
    dirs.push_back(e);
  }
  j["directions"] = dirs;
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice polygon invariants, area bounds and verification sweeps"};
  app.require_subcommand(1);

  std::string file, checks_csv;

  auto* invariants = app.add_subcommand("invariants", "print all invariants of one polygon");
  invariants->add_option("file", file, "polygon file (text or JSON)")->required();

  auto* verify = app.add_subcommand("verify", "run selected checks; exit non-zero on violation");
  verify->add_option("file", file, "polygon file (text or JSON)")->required();
  verify->add_option("--checks", checks_csv,
                     "comma list: scott,identity,bounds,slicing,twelve,pick,hollow,width,lwd");

  auto* width = app.add_subcommand("width", "lattice width, directions and width data");
  width->add_option("file", file, "polygon file (text or JSON)")->required();

  auto* gen = app.add_subcommand("gen", "emit generator polygons");
  gen->require_subcommand(1);
  long gk = 1, gl = 1, gm = 1;
  std::string variant = "reflexive";
  auto* gen_t = gen->add_subcommand("t", "extremal triangle for (k, l)");
  gen_t->add_option("--k", gk, "interior lattice points")->required();
  gen_t->add_option("--l", gl, "denominator")->required();
  auto* gen_d = gen->add_subcommand("delta", "multiple of the standard triangle");
  gen_d->add_option("--m", gm, "scale factor")->required();
  auto* gen_q = gen->add_subcommand("q", "multiple of the sharp-family triangle");
  gen_q->add_option("--m", gm, "scale factor")->required();
  gen_q->add_option("--variant", variant, "paper | reflexive")
      ->check(CLI::IsMember({"paper", "reflexive"}));
  auto* gen_r = gen->add_subcommand("reflexive16", "all reflexive classes, one per line");

  auto* sweep = app.add_subcommand("sweep", "batch verification with a JSON-lines report");
  std::string mode = "exhaustive", out_path;
  int box = 3, denom = 1, workers = 1, count = 100;
  std::uint64_t seed = 0;
  sweep->add_option("--mode", mode, "exhaustive | random")
      ->check(CLI::IsMember({"exhaustive", "random"}));
  sweep->add_option("--box", box, "vertices in [0, box]^2");
  sweep->add_option("--denominator", denom, "vertex grid (1/denominator)*Z^2");
  sweep->add_option("--count", count, "random mode: number of samples");
  sweep->add_option("--seed", seed, "random mode: stream seed");
  sweep->add_option("--checks", checks_csv, "comma list of checks");
  sweep->add_option("--out", out_path, "report path (default stdout)");
  sweep->add_option("--workers", workers, "verification worker threads");

  CLI11_PARSE(app, argc, argv);

  try {
    if (invariants->parsed()) return cmd_invariants(file);
    if (verify->parsed()) return cmd_verify(file, checks_csv);
    if (width->parsed()) return cmd_width(file);

    if (gen->parsed()) {
      if (gen_t->parsed()) {
        std::cout << write_polygon(gen_T(gk, gl), "T_" + std::to_string(gk) + "_" + std::to_string(gl)) << "\n";
      } else if (gen_d->parsed()) {
        std::cout << write_polygon(gen_delta(gm), std::to_string(gm) + "*delta2") << "\n";
      } else if (gen_q->parsed()) {
        QVariant v = variant == "paper" ? QVariant::paper : QVariant::reflexive;
        std::cout << write_polygon(gen_Q(gm, v), std::to_string(gm) + "*Q_" + variant) << "\n";
      } else if (gen_r->parsed()) {
        for (const Polygon& p : enumerate_reflexive())
          std::cout << write_polygon(p) << "\n";
      }
      return 0;
    }

    if (sweep->parsed()) {
      SweepConfig cfg;
      cfg.mode = mode == "random" ? SweepConfig::Mode::random : SweepConfig::Mode::exhaustive;
      cfg.box = box;
      cfg.denom = denom;
      cfg.sample_count = count;
      cfg.seed = seed;
      cfg.checks = parse_checks(checks_csv);
      cfg.workers = workers;
      SweepSummary s;
      if (out_path.empty()) {
        s = run_sweep(cfg, std::cout);
      } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        s = run_sweep(cfg, out);
      }
      std::cerr << "polygons: " << s.polygons << ", anomalies: " << s.anomalies << "\n";
      return s.anomalies == 0 ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
