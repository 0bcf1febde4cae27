#include "hlab/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>

#include "hlab/error.hpp"

namespace hlab {

namespace {

void check_exponent(double t) {
  if (!(t > 0.0) || std::isinf(t)) throw Error(ErrorCode::InvalidExponent, std::to_string(t));
}

DistanceTable power_table(const DistanceTable& t, double p) {
  DistanceTable out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = 0; j < t.size(); ++j) out(i, j) = t(i, j) == 0.0 ? 0.0 : std::pow(t(i, j), p);
  }
  return out;
}

// (d1, ratio) for every distinct pair, sorted by d1.
std::vector<std::pair<double, double>> pair_ratios(const MetricMap& map, double a) {
  const PointSpace& d1 = map.domain();
  const PointSpace& d2 = map.codomain();
  std::vector<std::pair<double, double>> out;
  out.reserve(d1.size() * (d1.size() - 1) / 2);
  for (std::size_t x = 0; x < d1.size(); ++x) {
    for (std::size_t y = x + 1; y < d1.size(); ++y) {
      const double num = d2.dist(map(x), map(y));
      out.emplace_back(d1.dist(x, y), num / std::pow(d1.dist(x, y), a));
    }
  }
  return out;
}

}  // namespace

PointSpace snowflake(const PointSpace& space, double t) {
  check_exponent(t);
  if (t > 1.0 && !validate_metric(space.table()).is_ultrametric) {
    throw Error(ErrorCode::InvalidExponent, "t > 1 needs an ultrametric input");
  }
  if (t == 1.0) return space;
  return PointSpace::from_table(power_table(space.table(), t), PointSpace::Validation::Structural);
}

bool is_ultrametric(const AtomicSpace& space) {
  if (space.provenance() == Provenance::CellSpace) return true;
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (space.atom_diam(i) != 0.0) return false;
  }
  try {
    return validate_metric(space.sup_table()).is_ultrametric;
  } catch (const Error&) {
    return false;
  }
}

AtomicSpace snowflake(const AtomicSpace& space, double t) {
  check_exponent(t);
  if (t > 1.0 && !is_ultrametric(space)) {
    throw Error(ErrorCode::InvalidExponent, "t > 1 needs an ultrametric input");
  }
  std::vector<double> diam(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    diam[i] = space.atom_diam(i) == 0.0 ? 0.0 : std::pow(space.atom_diam(i), t);
  }
  DistanceTable sup = power_table(space.sup_table(), t);
  for (std::size_t i = 0; i < space.size(); ++i) sup(i, i) = diam[i];
  return AtomicSpace::create(std::move(diam), std::move(sup), power_table(space.inf_table(), t),
                             space.provenance());
}

MetricMap::MetricMap(std::shared_ptr<const PointSpace> domain, std::shared_ptr<const PointSpace> codomain,
                     std::vector<std::size_t> assignment)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), assignment_(std::move(assignment)) {
  if (!domain_ || !codomain_) throw Error(ErrorCode::BadParams, "map needs a domain and a codomain");
  if (assignment_.size() != domain_->size()) {
    throw Error(ErrorCode::BadParams, "assignment must map every domain point");
  }
  for (std::size_t v : assignment_) {
    if (v >= codomain_->size()) throw Error(ErrorCode::IndexOutOfRange, std::to_string(v));
  }
}

MetricMap MetricMap::identity(std::shared_ptr<const PointSpace> space) {
  std::vector<std::size_t> a(space->size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = i;
  auto codomain = space;
  return MetricMap(std::move(space), std::move(codomain), std::move(a));
}

double lipschitz_constant(const MetricMap& map) { return holder_constant(map, 1.0); }

double holder_constant(const MetricMap& map, double a) {
  if (!(a > 0.0)) throw Error(ErrorCode::InvalidExponent, std::to_string(a));
  const PointSpace& d1 = map.domain();
  const PointSpace& d2 = map.codomain();
  double k = 0.0;
  for (std::size_t x = 0; x < d1.size(); ++x) {
    for (std::size_t y = x + 1; y < d1.size(); ++y) {
      const double denom = a == 1.0 ? d1.dist(x, y) : std::pow(d1.dist(x, y), a);
      k = std::max(k, d2.dist(map(x), map(y)) / denom);
    }
  }
  return k;
}

double bilipschitz_constant(const MetricMap& map) {
  const PointSpace& d1 = map.domain();
  const PointSpace& d2 = map.codomain();
  double k = 1.0;
  for (std::size_t x = 0; x < d1.size(); ++x) {
    for (std::size_t y = x + 1; y < d1.size(); ++y) {
      const double image = d2.dist(map(x), map(y));
      if (image == 0.0) {
        throw Error(ErrorCode::NotInjective,
                    "points " + std::to_string(x) + " and " + std::to_string(y) + " collide");
      }
      const double r = image / d1.dist(x, y);
      k = std::max({k, r, 1.0 / r});
    }
  }
  return k;
}

std::vector<LocalLipschitzEntry> local_lipschitz_profile(const MetricMap& map,
                                                         std::span<const double> delta_grid) {
  for (std::size_t i = 0; i < delta_grid.size(); ++i) {
    if (!(delta_grid[i] > 0.0) || (i > 0 && !(delta_grid[i] < delta_grid[i - 1]))) {
      throw Error(ErrorCode::DegenerateGrid, "delta grid must be positive and strictly decreasing");
    }
  }
  std::vector<std::pair<double, double>> pairs = pair_ratios(map, 1.0);
  std::sort(pairs.begin(), pairs.end());
  std::vector<double> prefix_max(pairs.size());
  double run = 0.0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    run = std::max(run, pairs[i].second);
    prefix_max[i] = run;
  }

  std::vector<LocalLipschitzEntry> out;
  for (double delta : delta_grid) {
    // Pairs with d1 < delta strictly.
    const auto end = std::lower_bound(pairs.begin(), pairs.end(), delta,
                                      [](const auto& p, double d) { return p.first < d; });
    const std::size_t count = static_cast<std::size_t>(end - pairs.begin());
    LocalLipschitzEntry e;
    e.delta = delta;
    e.has_pairs = count > 0;
    e.pairs = count;
    e.k = count > 0 ? prefix_max[count - 1] : 0.0;
    out.push_back(e);
  }
  return out;
}

const char* to_string(Flatness f) noexcept {
  switch (f) {
    case Flatness::UniformlyLocallyFlat: return "uniformly_locally_flat";
    case Flatness::NotFlat: return "not_flat";
    case Flatness::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Flatness classify_flatness(std::span<const LocalLipschitzEntry> profile, const FlatnessOptions& options) {
  if (profile.empty()) throw Error(ErrorCode::DegenerateProfile, "empty profile");
  // Grid points that see the same set of pairs carry no new information,
  // so only the first of each run counts as a scale.
  std::vector<double> ks;
  std::size_t last_pairs = 0;
  for (const LocalLipschitzEntry& e : profile) {
    if (!e.has_pairs) continue;
    if (!ks.empty() && e.pairs != 0 && e.pairs == last_pairs) continue;
    ks.push_back(e.k);
    last_pairs = e.pairs;
  }
  const std::size_t tail_len = std::max<std::size_t>(options.tail, 2);
  if (ks.size() < 3 || ks.size() < tail_len) return Flatness::Inconclusive;

  const double reference = ks.front();
  if (reference == 0.0) return Flatness::UniformlyLocallyFlat;
  const double threshold = options.threshold_ratio * reference;

  const std::span<const double> tail(ks.end() - static_cast<std::ptrdiff_t>(tail_len), ks.end());
  const bool nonincreasing = std::is_sorted(tail.rbegin(), tail.rend());
  const double last = tail.back();
  if (last < threshold && nonincreasing && tail.back() < tail.front()) {
    return Flatness::UniformlyLocallyFlat;
  }
  const auto [lo, hi] = std::minmax_element(tail.begin(), tail.end());
  if (last >= threshold && *hi - *lo <= options.stability * *hi) return Flatness::NotFlat;
  return Flatness::Inconclusive;
}

AtomicSpace image_presentation(const MetricMap& map, const std::vector<SubsetRef>& groups) {
  std::vector<SubsetRef> images;
  images.reserve(groups.size());
  for (const SubsetRef& g : groups) {
    check_subset(g, map.domain().size());
    SubsetRef img;
    for (std::size_t x : g) img.push_back(map(x));
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    images.push_back(std::move(img));
  }
  return AtomicSpace::from_point_groups(map.codomain(), images, Provenance::Custom);
}

MetricMap coordinate_projection(std::shared_ptr<const PointSpace> cloud,
                                const std::vector<std::size_t>& axes) {
  if (!cloud->has_coordinates()) throw Error(ErrorCode::BadParams, "projection needs coordinates");
  std::map<std::vector<double>, std::size_t> index;
  std::vector<std::vector<double>> projected;
  std::vector<std::size_t> assignment;
  for (const std::vector<double>& p : cloud->coordinates()) {
    std::vector<double> q;
    for (std::size_t ax : axes) {
      if (ax >= p.size()) throw Error(ErrorCode::IndexOutOfRange, "axis " + std::to_string(ax));
      q.push_back(p[ax]);
    }
    auto [it, inserted] = index.emplace(q, projected.size());
    if (inserted) projected.push_back(q);
    assignment.push_back(it->second);
  }
  auto codomain = std::make_shared<const PointSpace>(PointSpace::from_coordinates(projected));
  return MetricMap(std::move(cloud), std::move(codomain), std::move(assignment));
}

}  // namespace hlab
