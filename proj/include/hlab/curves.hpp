#pragma once

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "hlab/atomic_covering.hpp"
#include "hlab/metric_core.hpp"
#include "hlab/transforms.hpp"

namespace hlab {

// Ordered (parameter, point) samples of a path. Points are either Euclidean
// coordinates or indices into a finite space. The polyline through the
// samples is the path, so its length is attained at the full partition.
class SampledPath {
 public:
  static SampledPath euclidean(std::vector<double> params, std::vector<std::vector<double>> points);
  static SampledPath in_space(std::vector<double> params, std::shared_ptr<const PointSpace> space,
                              std::vector<std::size_t> indices);

  std::size_t size() const { return params_.size(); }
  const std::vector<double>& params() const { return params_; }
  double distance(std::size_t i, std::size_t j) const;

  bool is_euclidean() const { return space_ == nullptr; }
  const std::vector<std::vector<double>>& coordinates() const { return coords_; }
  const std::shared_ptr<const PointSpace>& space() const { return space_; }
  const std::vector<std::size_t>& indices() const { return indices_; }

  // Same points, new parameters (must be strictly increasing).
  SampledPath relabeled(std::vector<double> params) const;
  // Keeps the listed samples, in order.
  SampledPath restricted(const std::vector<std::size_t>& keep) const;

 private:
  SampledPath() = default;

  std::vector<double> params_;
  std::vector<std::vector<double>> coords_;
  std::shared_ptr<const PointSpace> space_;
  std::vector<std::size_t> indices_;
};

// Sum of distances between consecutive partition samples. The partition is
// a strictly increasing list of sample indices from first to last.
double partition_sum(const SampledPath& path, const std::vector<std::size_t>& partition);

double length(const SampledPath& path);

// Lengths before and after the sample whose parameter equals x.
std::pair<double, double> split_length(const SampledPath& path, double x);

// Cumulative lengths as parameters, zero-length steps collapsed.
SampledPath arclength_reparameterize(const SampledPath& path);

// Cumulative lengths s_j, one per sample.
std::vector<double> cumulative_length(const SampledPath& path);

struct MappedPath {
  SampledPath image;
  double source_length = 0.0;
  double image_length = 0.0;
  double k = 0.0;                // global or scale-local Lipschitz constant used
  bool bound_applicable = true;  // false when a step is not shorter than the scale
  bool bound_holds = true;       // image_length <= k * source_length (when applicable)
};

MappedPath map_path(const MetricMap& map, const SampledPath& path);

// Uses the locally k(delta)-Lipschitz constant; applicable only when every
// consecutive step is shorter than delta, since a sampled path cannot be refined.
MappedPath map_path(const MetricMap& map, const SampledPath& path, double delta);

struct H1Comparison {
  double length = 0.0;
  double content = 0.0;       // H^1_delta of the chord presentation
  double delta = 0.0;         // finest scale the presentation resolves
  double image_diameter = 0.0;
  bool injective = false;
  bool content_le_length = true;
  bool equal = false;         // |content - length| <= 1e-9 (relative)
  AtomicSpace presentation;
};

// Distance between two closed segments in R^n.
double segment_distance(const std::vector<double>& a0, const std::vector<double>& a1,
                        const std::vector<double>& b0, const std::vector<double>& b1);

// Compares the length of a Euclidean polyline with the content of its image
// at alpha = 1, each chord an atom.
H1Comparison image_h1_check(const SampledPath& path, const CoveringOptions& options = {});

}  // namespace hlab
