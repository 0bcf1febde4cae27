#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "hlab/atomic_covering.hpp"
#include "hlab/curves.hpp"
#include "hlab/metric_core.hpp"
#include "hlab/sequence_space.hpp"

namespace hlab {

// Portable uniform draws: std::mt19937_64 is fully specified, the standard
// distributions are not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  bool coin() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

// The (n = 2, rho = 1/3) sequence space, whose cell presentation models the
// middle-thirds Cantor set.
SequenceSpaceSpec cantor_spec(int depth);

// Left endpoints of the 2^depth intervals of the depth-th middle-thirds stage.
std::vector<std::vector<double>> cantor_endpoints(int depth);

// `count` equally spaced points of [0, 1].
std::vector<std::vector<double>> uniform_line(std::size_t count);

// `samples` points of [0,1]^dim per axis on a regular grid (dim = 1 gives
// uniform_line); jitter > 0 perturbs each coordinate by up to jitter/2 of the spacing.
std::vector<std::vector<double>> grid_cloud(std::size_t samples, std::size_t dim, double jitter,
                                            std::uint64_t seed);

// Unit circle at `samples` equal angles, closed by repeating the first
// point at parameter 2 pi (samples + 1 rows).
SampledPath circle_path(std::size_t samples);

// Random small instances for property checks.
PointSpace random_cloud(Rng& rng, std::size_t points, std::size_t dim);
PointSpace random_ultrametric(Rng& rng, std::size_t points);
std::vector<SubsetRef> random_groups(Rng& rng, std::size_t points, std::size_t groups);
AtomicSpace random_atomic_space(Rng& rng, std::size_t atoms);
SubsetRef random_subset(Rng& rng, std::size_t size, double keep = 0.5);
SampledPath random_walk_path(Rng& rng, std::size_t samples, std::size_t dim);

}  // namespace hlab
