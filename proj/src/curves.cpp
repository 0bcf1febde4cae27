#include "hlab/curves.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hlab/error.hpp"

namespace hlab {

namespace {

void check_params(const std::vector<double>& params) {
  if (params.empty()) throw Error(ErrorCode::BadParams, "a path needs at least one sample");
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (!std::isfinite(params[i]) || (i > 0 && !(params[i] > params[i - 1]))) {
      throw Error(ErrorCode::BadParams, "path parameters must be finite and strictly increasing");
    }
  }
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<double> sub(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

double euclid(const std::vector<double>& a, const std::vector<double>& b) {
  const std::vector<double> d = sub(a, b);
  return std::sqrt(dot(d, d));
}

bool same_space(const PointSpace& a, const std::shared_ptr<const PointSpace>& b) {
  return b != nullptr && (&a == b.get() || a == *b);
}

MappedPath compose(const MetricMap& map, const SampledPath& path) {
  if (path.is_euclidean() || !same_space(map.domain(), path.space())) {
    throw Error(ErrorCode::DomainMismatch, "path samples do not live in the map's domain");
  }
  std::vector<std::size_t> image;
  image.reserve(path.size());
  for (std::size_t x : path.indices()) image.push_back(map(x));
  MappedPath out{SampledPath::in_space(path.params(), map.codomain_ptr(), std::move(image))};
  out.source_length = length(path);
  out.image_length = length(out.image);
  return out;
}

}  // namespace

SampledPath SampledPath::euclidean(std::vector<double> params, std::vector<std::vector<double>> points) {
  check_params(params);
  if (points.size() != params.size()) throw Error(ErrorCode::BadParams, "one point per parameter");
  for (const auto& p : points) {
    if (p.size() != points.front().size()) throw Error(ErrorCode::BadParams, "mixed point dimensions");
  }
  SampledPath p;
  p.params_ = std::move(params);
  p.coords_ = std::move(points);
  return p;
}

SampledPath SampledPath::in_space(std::vector<double> params, std::shared_ptr<const PointSpace> space,
                                  std::vector<std::size_t> indices) {
  check_params(params);
  if (!space) throw Error(ErrorCode::BadParams, "path needs a space");
  if (indices.size() != params.size()) throw Error(ErrorCode::BadParams, "one point per parameter");
  for (std::size_t i : indices) {
    if (i >= space->size()) throw Error(ErrorCode::IndexOutOfRange, std::to_string(i));
  }
  SampledPath p;
  p.params_ = std::move(params);
  p.space_ = std::move(space);
  p.indices_ = std::move(indices);
  return p;
}

double SampledPath::distance(std::size_t i, std::size_t j) const {
  if (space_) return space_->dist(indices_[i], indices_[j]);
  return euclid(coords_[i], coords_[j]);
}

SampledPath SampledPath::relabeled(std::vector<double> params) const {
  if (params.size() != size()) throw Error(ErrorCode::BadParams, "one parameter per sample");
  check_params(params);
  SampledPath p = *this;
  p.params_ = std::move(params);
  return p;
}

SampledPath SampledPath::restricted(const std::vector<std::size_t>& keep) const {
  SampledPath p;
  p.space_ = space_;
  for (std::size_t k : keep) {
    if (k >= size()) throw Error(ErrorCode::IndexOutOfRange, std::to_string(k));
    p.params_.push_back(params_[k]);
    if (space_) {
      p.indices_.push_back(indices_[k]);
    } else {
      p.coords_.push_back(coords_[k]);
    }
  }
  check_params(p.params_);
  return p;
}

double partition_sum(const SampledPath& path, const std::vector<std::size_t>& partition) {
  const std::size_t n = path.size();
  if (partition.empty() || partition.front() != 0 || partition.back() != n - 1) {
    throw Error(ErrorCode::BadPartition, "partition must start at the first and end at the last sample");
  }
  for (std::size_t i = 1; i < partition.size(); ++i) {
    if (partition[i] <= partition[i - 1] || partition[i] >= n) {
      throw Error(ErrorCode::BadPartition, "partition indices must be strictly increasing");
    }
  }
  double s = 0.0;
  for (std::size_t i = 1; i < partition.size(); ++i) s += path.distance(partition[i - 1], partition[i]);
  return s;
}

double length(const SampledPath& path) {
  double s = 0.0;
  for (std::size_t i = 1; i < path.size(); ++i) s += path.distance(i - 1, i);
  return s;
}

std::vector<double> cumulative_length(const SampledPath& path) {
  std::vector<double> s(path.size(), 0.0);
  for (std::size_t i = 1; i < path.size(); ++i) s[i] = s[i - 1] + path.distance(i - 1, i);
  return s;
}

std::pair<double, double> split_length(const SampledPath& path, double x) {
  const auto& params = path.params();
  const auto it = std::find(params.begin(), params.end(), x);
  if (it == params.end()) throw Error(ErrorCode::NotASample, std::to_string(x));
  const std::size_t cut = static_cast<std::size_t>(it - params.begin());
  double left = 0.0, right = 0.0;
  for (std::size_t i = 1; i < path.size(); ++i) (i <= cut ? left : right) += path.distance(i - 1, i);
  return {left, right};
}

SampledPath arclength_reparameterize(const SampledPath& path) {
  const std::vector<double> s = cumulative_length(path);
  std::vector<std::size_t> keep{0};
  std::vector<double> params{0.0};
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (s[i] > params.back()) {
      keep.push_back(i);
      params.push_back(s[i]);
    }
  }
  return path.restricted(keep).relabeled(std::move(params));
}

MappedPath map_path(const MetricMap& map, const SampledPath& path) {
  MappedPath out = compose(map, path);
  out.k = lipschitz_constant(map);
  out.bound_holds = out.image_length <= out.k * out.source_length * (1.0 + 1e-12) + 1e-15;
  return out;
}

MappedPath map_path(const MetricMap& map, const SampledPath& path, double delta) {
  MappedPath out = compose(map, path);
  const double grid[] = {delta};
  out.k = local_lipschitz_profile(map, grid).front().k;
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (!(path.distance(i - 1, i) < delta)) out.bound_applicable = false;
  }
  out.bound_holds = !out.bound_applicable ||
                    out.image_length <= out.k * out.source_length * (1.0 + 1e-12) + 1e-15;
  return out;
}

double segment_distance(const std::vector<double>& a0, const std::vector<double>& a1,
                        const std::vector<double>& b0, const std::vector<double>& b1) {
  // Closest points of a0 + s u and b0 + t v with s, t in [0, 1].
  const std::vector<double> u = sub(a1, a0);
  const std::vector<double> v = sub(b1, b0);
  const std::vector<double> w = sub(a0, b0);
  const double a = dot(u, u), b = dot(u, v), c = dot(v, v), d = dot(u, w), e = dot(v, w);
  double s = 0.0, t = 0.0;
  if (a == 0.0 && c == 0.0) return euclid(a0, b0);
  if (a == 0.0) {
    t = std::clamp(e / c, 0.0, 1.0);
  } else if (c == 0.0) {
    s = std::clamp(-d / a, 0.0, 1.0);
  } else {
    const double denom = a * c - b * b;
    s = denom > 0.0 ? std::clamp((b * e - c * d) / denom, 0.0, 1.0) : 0.0;
    t = (b * s + e) / c;
    if (t < 0.0) {
      t = 0.0;
      s = std::clamp(-d / a, 0.0, 1.0);
    } else if (t > 1.0) {
      t = 1.0;
      s = std::clamp((b - d) / a, 0.0, 1.0);
    }
  }
  double sq = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double diff = w[i] + s * u[i] - t * v[i];
    sq += diff * diff;
  }
  return std::sqrt(sq);
}

H1Comparison image_h1_check(const SampledPath& path, const CoveringOptions& options) {
  if (!path.is_euclidean()) throw Error(ErrorCode::BadParams, "image check needs a Euclidean path");
  const auto& p = path.coordinates();
  H1Comparison out;
  out.length = length(path);
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) out.image_diameter = std::max(out.image_diameter, euclid(p[i], p[j]));
  }
  if (p.size() < 2) {
    out.injective = true;
    out.equal = true;
    return out;
  }

  const std::size_t segs = p.size() - 1;
  if (segs > options.dp_limit) {
    throw Error(ErrorCode::TooManySegments, std::to_string(segs) + " segments exceed DP limit " +
                                                std::to_string(options.dp_limit));
  }
  std::vector<double> diam(segs);
  DistanceTable sup(segs), inf(segs);
  for (std::size_t i = 0; i < segs; ++i) {
    diam[i] = euclid(p[i], p[i + 1]);
    sup(i, i) = diam[i];
    for (std::size_t j = i + 1; j < segs; ++j) {
      // The farthest pair of two segments is a pair of endpoints.
      sup.set_symmetric(j, i, std::max({euclid(p[i], p[j]), euclid(p[i], p[j + 1]),
                                        euclid(p[i + 1], p[j]), euclid(p[i + 1], p[j + 1])}));
      inf.set_symmetric(i, j, segment_distance(p[i], p[i + 1], p[j], p[j + 1]));
    }
  }
  out.presentation = AtomicSpace::create(diam, std::move(sup), std::move(inf), Provenance::Custom);

  out.injective = true;
  for (std::size_t i = 0; i < p.size() && out.injective; ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (euclid(p[i], p[j]) == 0.0) {
        out.injective = false;
        break;
      }
    }
  }
  for (std::size_t i = 0; i < segs && out.injective; ++i) {
    for (std::size_t j = i + 1; j < segs; ++j) {
      if (j == i + 1) {
        // Adjacent chords fold back onto each other when one far endpoint lies on the other chord.
        if (segment_distance(p[i], p[i], p[j], p[j + 1]) == 0.0 ||
            segment_distance(p[j + 1], p[j + 1], p[i], p[i + 1]) == 0.0) {
          out.injective = false;
        }
      } else if (out.presentation.inf_dist(i, j) == 0.0) {
        out.injective = false;
      }
      if (!out.injective) break;
    }
  }

  // The finest scale at which every chord is still an admissible block.
  const double max_chord = *std::max_element(diam.begin(), diam.end());
  const Extended delta = max_chord == 0.0 ? Extended::infinity() : Extended(max_chord * (1.0 + 1e-9));
  out.delta = delta.as_double();
  out.content = exact_content(out.presentation, out.presentation.all(), 1.0, delta, options)
                    .value.finite_value();
  const double tol = 1e-9 * std::max(1.0, out.length);
  out.content_le_length = out.content <= out.length + tol;
  out.equal = std::abs(out.content - out.length) <= tol;
  return out;
}

}  // namespace hlab
