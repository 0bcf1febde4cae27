#include "hlab/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include "hlab/error.hpp"

namespace hlab {

SequenceSpaceSpec cantor_spec(int depth) { return SequenceSpaceSpec::create(2, 1.0 / 3.0, depth); }

std::vector<std::vector<double>> cantor_endpoints(int depth) {
  if (depth < 0 || depth > 24) throw Error(ErrorCode::BadParams, "cantor depth must be in [0, 24]");
  std::vector<double> left{0.0};
  double scale = 1.0;
  for (int level = 0; level < depth; ++level) {
    scale /= 3.0;
    std::vector<double> next;
    next.reserve(left.size() * 2);
    for (double x : left) {
      next.push_back(x);
      next.push_back(x + 2.0 * scale);
    }
    left = std::move(next);
  }
  std::vector<std::vector<double>> out;
  out.reserve(left.size());
  for (double x : left) out.push_back({x});
  return out;
}

std::vector<std::vector<double>> uniform_line(std::size_t count) {
  if (count < 2) throw Error(ErrorCode::BadParams, "need at least 2 points");
  std::vector<std::vector<double>> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = {static_cast<double>(i) / static_cast<double>(count - 1)};
  return out;
}

std::vector<std::vector<double>> grid_cloud(std::size_t samples, std::size_t dim, double jitter,
                                            std::uint64_t seed) {
  if (samples < 2 || dim < 1) throw Error(ErrorCode::BadParams, "grid needs samples >= 2 and dim >= 1");
  std::size_t total = 1;
  for (std::size_t d = 0; d < dim; ++d) {
    total *= samples;
    if (total > (std::size_t{1} << 22)) throw Error(ErrorCode::TooLarge, "grid too large");
  }
  const double spacing = 1.0 / static_cast<double>(samples - 1);
  Rng rng(seed);
  std::vector<std::vector<double>> out;
  out.reserve(total);
  for (std::size_t i = 0; i < total; ++i) {
    std::vector<double> p(dim);
    std::size_t rem = i;
    for (std::size_t d = 0; d < dim; ++d) {
      p[d] = static_cast<double>(rem % samples) * spacing;
      rem /= samples;
      if (jitter > 0.0) p[d] += (rng.uniform() - 0.5) * jitter * spacing;
    }
    out.push_back(std::move(p));
  }
  return out;
}

SampledPath circle_path(std::size_t samples) {
  if (samples < 3) throw Error(ErrorCode::BadParams, "circle needs at least 3 samples");
  std::vector<double> params(samples + 1);
  std::vector<std::vector<double>> points(samples + 1);
  for (std::size_t j = 0; j <= samples; ++j) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(samples);
    params[j] = t;
    points[j] = j == samples ? points[0] : std::vector<double>{std::cos(t), std::sin(t)};
  }
  return SampledPath::euclidean(std::move(params), std::move(points));
}

PointSpace random_cloud(Rng& rng, std::size_t points, std::size_t dim) {
  std::vector<std::vector<double>> coords;
  while (coords.size() < points) {
    std::vector<double> p(dim);
    for (double& x : p) x = rng.uniform();
    if (std::find(coords.begin(), coords.end(), p) == coords.end()) coords.push_back(std::move(p));
  }
  return PointSpace::from_coordinates(coords);
}

PointSpace random_ultrametric(Rng& rng, std::size_t points) {
  // Random words over a 3-letter alphabet with strictly decreasing level heights.
  constexpr std::size_t kDepth = 5;
  std::vector<double> height(kDepth + 1);
  height[0] = rng.uniform(0.5, 2.0);
  for (std::size_t l = 1; l <= kDepth; ++l) height[l] = height[l - 1] * rng.uniform(0.2, 0.8);

  std::set<std::string> words;
  while (words.size() < points) {
    std::string w;
    for (std::size_t l = 0; l < kDepth; ++l) w.push_back(symbol_char(static_cast<int>(rng.index(3))));
    words.insert(w);
  }
  const std::vector<std::string> list(words.begin(), words.end());
  DistanceTable t(list.size());
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = i + 1; j < list.size(); ++j) {
      const auto lcp = static_cast<std::size_t>(
          std::mismatch(list[i].begin(), list[i].end(), list[j].begin()).first - list[i].begin());
      t.set_symmetric(i, j, height[lcp]);
    }
  }
  return PointSpace::from_table(std::move(t), PointSpace::Validation::Structural);
}

std::vector<SubsetRef> random_groups(Rng& rng, std::size_t points, std::size_t groups) {
  if (groups == 0 || groups > points) throw Error(ErrorCode::BadParams, "need 1 <= groups <= points");
  std::vector<std::size_t> order(points);
  for (std::size_t i = 0; i < points; ++i) order[i] = i;
  for (std::size_t i = points; i > 1; --i) std::swap(order[i - 1], order[rng.index(i)]);
  std::vector<SubsetRef> out(groups);
  for (std::size_t i = 0; i < points; ++i) out[i < groups ? i : rng.index(groups)].push_back(order[i]);
  for (SubsetRef& g : out) std::sort(g.begin(), g.end());
  return out;
}

AtomicSpace random_atomic_space(Rng& rng, std::size_t atoms) {
  switch (rng.index(3)) {
    case 0: {
      const std::size_t points = atoms + rng.index(atoms + 1);
      const PointSpace cloud = random_cloud(rng, points, 2);
      return AtomicSpace::from_point_groups(cloud, random_groups(rng, points, atoms));
    }
    case 1: {
      std::vector<Interval> iv(atoms);
      for (Interval& x : iv) {
        const double lo = rng.uniform(0.0, 3.0);
        x = {lo, lo + rng.uniform(0.0, 0.4)};
      }
      return interval_atoms(iv);
    }
    default: {
      const std::size_t points = atoms + rng.index(atoms + 1);
      const PointSpace u = random_ultrametric(rng, points);
      return AtomicSpace::from_point_groups(u, random_groups(rng, points, atoms), Provenance::Custom);
    }
  }
}

SubsetRef random_subset(Rng& rng, std::size_t size, double keep) {
  SubsetRef out;
  for (std::size_t i = 0; i < size; ++i) {
    if (rng.uniform() < keep) out.push_back(i);
  }
  return out;
}

SampledPath random_walk_path(Rng& rng, std::size_t samples, std::size_t dim) {
  std::vector<double> params;
  std::vector<std::vector<double>> points;
  std::vector<double> p(dim, 0.0);
  double t = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    params.push_back(t);
    points.push_back(p);
    t += rng.uniform(0.1, 1.0);
    for (double& x : p) x += rng.uniform(-1.0, 1.0);
  }
  return SampledPath::euclidean(std::move(params), std::move(points));
}

}  // namespace hlab
