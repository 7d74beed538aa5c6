#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "latpoly/report.hpp"

namespace latpoly {

// xoshiro256** seeded through splitmix64. Pure 64-bit integer arithmetic,
// so streams are identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  std::uint64_t next();
  // Uniform in [0, n), by rejection.
  std::uint64_t below(std::uint64_t n);

 private:
  std::uint64_t s_[4];
};

struct SweepConfig {
  enum class Mode { exhaustive, random };
  Mode mode = Mode::exhaustive;
  int box = 3;            // vertices in [0, box]^2
  int denom = 1;          // vertex grid (1/denom) * Z^2
  int sample_count = 0;   // random mode only
  std::uint64_t seed = 0; // random mode only
  std::set<std::string> checks;  // empty = all checks
  int workers = 1;
};

// Every convex lattice polygon with vertices in [0, n]^2, one canonical
// representative per affine unimodular class, sorted by canonical key.
// Guarded at n <= 6 unless LATPOLY_MAX_BOX raises the limit.
std::vector<Polygon> enumerate_lattice_polygons(int n);

// The same enumeration without class dedup, as raw polygons. Used for the
// exhaustive rational sweeps, where integer translations do not act on the
// refined grid.
std::vector<Polygon> enumerate_lattice_polygons_raw(int n);

// Seeded stream: hulls of 4..12 uniform points of (1/denom)Z^2 cut to
// [0, box]^2; degenerate draws are discarded and redrawn.
std::vector<Polygon> sample_rational_polygons(const SweepConfig& cfg);

struct SweepSummary {
  long long polygons = 0;
  long long anomalies = 0;
  nlohmann::json summary;
};

// Runs verify_all over the configured stream and writes one report per line
// plus a trailing summary object. Output is sorted by report key, so equal
// configs give byte-identical files for any worker count. Zero anomalies
// iff the returned summary says so (callers map that to the exit code).
SweepSummary run_sweep(const SweepConfig& cfg, std::ostream& out);

}  // namespace latpoly
