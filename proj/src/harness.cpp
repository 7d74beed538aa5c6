#include "latpoly/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <stdexcept>
#include <thread>

namespace latpoly {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Rng::Rng(std::uint64_t seed) {
  for (auto& s : s_) s = splitmix64(seed);
}

std::uint64_t Rng::next() {
  std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("empty range");
  std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % n);
  for (;;) {
    std::uint64_t v = next();
    if (v < limit) return v % n;
  }
}

namespace {

int max_box() {
  if (const char* env = std::getenv("LATPOLY_MAX_BOX")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 6;
}

struct GridPoint {
  long x, y;
};

// All convex polygons with vertices in [0, n]^2, visited once each: anchor
// at the lexicographic minimum vertex, then walk the remaining vertices in
// increasing angle around the anchor with strictly left turns.
void enumerate_raw(int n, const std::function<void(const std::vector<GridPoint>&)>& emit) {
  std::vector<GridPoint> grid;
  for (long x = 0; x <= n; ++x)
    for (long y = 0; y <= n; ++y) grid.push_back({x, y});

  auto cr = [](long ax, long ay, long bx, long by) { return ax * by - ay * bx; };

  for (std::size_t a = 0; a < grid.size(); ++a) {
    const GridPoint p0 = grid[a];
    std::vector<GridPoint> cand;
    for (std::size_t j = 0; j < grid.size(); ++j) {
      const GridPoint q = grid[j];
      if (q.x > p0.x || (q.x == p0.x && q.y > p0.y)) cand.push_back(q);
    }
    std::sort(cand.begin(), cand.end(), [&](const GridPoint& u, const GridPoint& v) {
      long long c = cr(u.x - p0.x, u.y - p0.y, v.x - p0.x, v.y - p0.y);
      if (c != 0) return c > 0;
      // Same ray from the anchor: nearer point first.
      return std::abs(u.x - p0.x) + std::abs(u.y - p0.y) <
             std::abs(v.x - p0.x) + std::abs(v.y - p0.y);
    });

    std::vector<GridPoint> chain{p0};
    auto dfs = [&](auto&& self, std::size_t from) -> void {
      for (std::size_t j = from; j < cand.size(); ++j) {
        const GridPoint q = cand[j];
        if (chain.size() >= 2) {
          const GridPoint& u = chain[chain.size() - 2];
          const GridPoint& v = chain.back();
          if (cr(v.x - u.x, v.y - u.y, q.x - v.x, q.y - v.y) <= 0) continue;
        }
        chain.push_back(q);
        if (chain.size() >= 3) {
          const GridPoint& u = chain[chain.size() - 2];
          const GridPoint& v = chain.back();
          const GridPoint& w = chain[1];
          if (cr(v.x - u.x, v.y - u.y, p0.x - v.x, p0.y - v.y) > 0 &&
              cr(p0.x - v.x, p0.y - v.y, w.x - p0.x, w.y - p0.y) > 0)
            emit(chain);
        }
        self(self, j + 1);
        chain.pop_back();
      }
    };
    dfs(dfs, 0);
  }
}

Polygon from_grid(const std::vector<GridPoint>& chain, int denom) {
  std::vector<Point> verts;
  verts.reserve(chain.size());
  for (const GridPoint& g : chain) {
    Rat x(g.x, denom), y(g.y, denom);
    x.canonicalize();
    y.canonicalize();
    verts.push_back({x, y});
  }
  return Polygon::make(std::move(verts));
}

}  // namespace

std::vector<Polygon> enumerate_lattice_polygons(int n) {
  if (n < 1 || n > max_box())
    throw std::invalid_argument("box size out of range (raise LATPOLY_MAX_BOX to override)");
  std::map<std::string, Polygon> classes;
  // Translates of one shape recur all over the box; dedup them with a cheap
  // integer key before paying for the canonical form.
  std::set<std::string> shapes;
  enumerate_raw(n, [&](const std::vector<GridPoint>& chain) {
    long minx = chain[0].x, miny = chain[0].y;
    for (const GridPoint& g : chain) {
      minx = std::min(minx, g.x);
      miny = std::min(miny, g.y);
    }
    std::string shape_key;
    for (const GridPoint& g : chain) {
      shape_key += std::to_string(g.x - minx);
      shape_key += ',';
      shape_key += std::to_string(g.y - miny);
      shape_key += ';';
    }
    if (!shapes.insert(std::move(shape_key)).second) return;
    Polygon canon = canonical_form(from_grid(chain, 1));
    classes.emplace(canon.key(), canon);
  });
  std::vector<Polygon> out;
  out.reserve(classes.size());
  for (auto& [_, p] : classes) out.push_back(p);
  return out;
}

std::vector<Polygon> enumerate_lattice_polygons_raw(int n) {
  if (n < 1 || n > max_box())
    throw std::invalid_argument("box size out of range (raise LATPOLY_MAX_BOX to override)");
  std::vector<Polygon> out;
  enumerate_raw(n, [&](const std::vector<GridPoint>& chain) {
    out.push_back(from_grid(chain, 1));
  });
  std::sort(out.begin(), out.end(),
            [](const Polygon& a, const Polygon& b) { return a.key() < b.key(); });
  return out;
}

std::vector<Polygon> sample_rational_polygons(const SweepConfig& cfg) {
  if (cfg.denom < 1 || cfg.sample_count < 1 || cfg.box < 1)
    throw std::invalid_argument("invalid sampling config");
  Rng rng(cfg.seed);
  std::vector<Polygon> out;
  const std::uint64_t side = static_cast<std::uint64_t>(cfg.box) * cfg.denom + 1;
  while (out.size() < static_cast<std::size_t>(cfg.sample_count)) {
    std::size_t r = 4 + rng.below(9);
    std::vector<Point> pts;
    for (std::size_t i = 0; i < r; ++i) {
      Rat x(static_cast<long>(rng.below(side)), cfg.denom);
      Rat y(static_cast<long>(rng.below(side)), cfg.denom);
      x.canonicalize();
      y.canonicalize();
      pts.push_back({x, y});
    }
    Hull h = convex_hull(pts);
    if (h.dim != 2) continue;
    out.push_back(h.polygon());
  }
  return out;
}

SweepSummary run_sweep(const SweepConfig& cfg, std::ostream& out) {
  std::vector<Polygon> stream;
  if (cfg.mode == SweepConfig::Mode::exhaustive) {
    if (cfg.denom == 1) {
      stream = enumerate_lattice_polygons(cfg.box);
    } else {
      // Class dedup would conflate genuinely different refined-grid
      // polygons, so the rational sweep verifies every raw polygon.
      for (const Polygon& p : enumerate_lattice_polygons_raw(cfg.box * cfg.denom))
        stream.push_back(scale(p, Rat(1, cfg.denom)));
    }
  } else {
    stream = sample_rational_polygons(cfg);
  }

  std::vector<InvariantReport> reports(stream.size(),
                                       InvariantReport{});
  const int workers = std::max(1, cfg.workers);
  std::atomic<std::size_t> cursor{0};
  auto work = [&] {
    for (;;) {
      std::size_t i = cursor.fetch_add(1);
      if (i >= stream.size()) break;
      reports[i] = filter_report(verify_all(stream[i]), cfg.checks);
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  std::vector<std::size_t> order(reports.size());
  std::iota(order.begin(), order.end(), std::size_t(0));
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (reports[a].sort_key != reports[b].sort_key)
      return reports[a].sort_key < reports[b].sort_key;
    return a < b;
  });

  SweepSummary result;
  std::map<std::string, long long> tally_checked, tally_sharp;
  std::vector<std::string> anomaly_list, sharp_cases;
  for (std::size_t i : order) {
    const InvariantReport& r = reports[i];
    nlohmann::json j = report_json(r);
    j["index"] = static_cast<long long>(i);
    out << j.dump() << "\n";
    ++result.polygons;
    result.anomalies += static_cast<long long>(r.anomalies.size());
    for (const auto& [cat, msg] : r.anomalies)
      anomaly_list.push_back(cat + ": " + msg + " [" + r.sort_key + "]");
    for (const BoundVerdict& v : r.verdicts) {
      if (!v.applicable) continue;
      ++tally_checked[v.name];
      if (v.sharp) {
        ++tally_sharp[v.name];
        sharp_cases.push_back(v.name + " [" + r.sort_key + "]");
      }
    }
  }

  nlohmann::json summary;
  summary["type"] = "summary";
  summary["polygons"] = result.polygons;
  summary["anomaly_count"] = result.anomalies;
  summary["anomalies"] = anomaly_list;
  nlohmann::json tallies = nlohmann::json::object();
  for (const auto& [name, n] : tally_checked) {
    tallies[name] = {{"checked", n}, {"sharp", tally_sharp[name]}};
  }
  summary["verdicts"] = tallies;
  summary["sharp_cases"] = sharp_cases;
  out << summary.dump() << "\n";
  result.summary = summary;
  return result;
}

}  // namespace latpoly
