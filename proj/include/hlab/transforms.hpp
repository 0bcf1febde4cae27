#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "hlab/atomic_covering.hpp"
#include "hlab/metric_core.hpp"

namespace hlab {

// Every distance raised to the power t. t must lie in (0,1] unless the
// input is an ultrametric, in which case any t > 0 is allowed.
PointSpace snowflake(const PointSpace& space, double t);
AtomicSpace snowflake(const AtomicSpace& space, double t);

// Cell presentations, and presentations whose atoms are points with an
// ultrametric distance table.
bool is_ultrametric(const AtomicSpace& space);

// A map between two finite spaces given by a codomain index per domain point.
// Constants computed from it are realized maxima over the finite pairs.
class MetricMap {
 public:
  MetricMap(std::shared_ptr<const PointSpace> domain, std::shared_ptr<const PointSpace> codomain,
            std::vector<std::size_t> assignment);

  static MetricMap identity(std::shared_ptr<const PointSpace> space);

  const PointSpace& domain() const { return *domain_; }
  const PointSpace& codomain() const { return *codomain_; }
  const std::shared_ptr<const PointSpace>& domain_ptr() const { return domain_; }
  const std::shared_ptr<const PointSpace>& codomain_ptr() const { return codomain_; }
  const std::vector<std::size_t>& assignment() const { return assignment_; }
  std::size_t operator()(std::size_t x) const { return assignment_[x]; }

 private:
  std::shared_ptr<const PointSpace> domain_;
  std::shared_ptr<const PointSpace> codomain_;
  std::vector<std::size_t> assignment_;
};

double lipschitz_constant(const MetricMap& map);

// max d2(f x, f y) / d1(x, y)^a over distinct pairs.
double holder_constant(const MetricMap& map, double a);

// Smallest k with d1/k <= d2(f x, f y) <= k d1. Throws NotInjective.
double bilipschitz_constant(const MetricMap& map);

struct LocalLipschitzEntry {
  double delta = 0.0;
  double k = 0.0;
  bool has_pairs = false;  // false when no pair has d1 < delta
  std::size_t pairs = 0;   // number of pairs with d1 < delta (0 when unknown)
};

std::vector<LocalLipschitzEntry> local_lipschitz_profile(const MetricMap& map,
                                                         std::span<const double> delta_grid);

enum class Flatness { UniformlyLocallyFlat, NotFlat, Inconclusive };

const char* to_string(Flatness f) noexcept;

struct FlatnessOptions {
  double threshold_ratio = 0.1;  // tail must fall below this fraction of k(delta_max)
  double stability = 0.1;        // relative spread of the tail counted as "stable"
  std::size_t tail = 3;
};

// Finite-sample heuristic, not a proof of flatness.
Flatness classify_flatness(std::span<const LocalLipschitzEntry> profile,
                           const FlatnessOptions& options = {});

// Atoms f(group) in the codomain with induced diameter data.
AtomicSpace image_presentation(const MetricMap& map, const std::vector<SubsetRef>& groups);

// Orthogonal projection of a Euclidean cloud onto the listed coordinates.
MetricMap coordinate_projection(std::shared_ptr<const PointSpace> cloud,
                                const std::vector<std::size_t>& axes);

}  // namespace hlab
