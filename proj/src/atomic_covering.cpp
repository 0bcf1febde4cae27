#include "hlab/atomic_covering.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <string>

#include "hlab/error.hpp"

namespace hlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Near-ties in the DP keep the candidate found first (larger blocks are
// enumerated first), so witnesses prefer coarse coverings.
constexpr double kTieTolerance = 1e-12;

void check_alpha(double alpha) {
  if (!(alpha >= 0.0) || std::isinf(alpha)) {
    throw Error(ErrorCode::InvalidAlpha, std::to_string(alpha));
  }
}

void check_delta(Extended delta) {
  if (delta.is_infinite()) return;
  const double d = delta.finite_value();
  if (!(d > 0.0) || std::isinf(d)) throw Error(ErrorCode::InvalidDelta, std::to_string(d));
}

bool admissible(double diam, Extended delta) {
  return delta.is_infinite() || diam < delta.finite_value();
}

std::size_t effective_limit(const CoveringOptions& options) {
  if (options.dp_limit > kDpHardCap) {
    throw Error(ErrorCode::BadParams, "DP limit " + std::to_string(options.dp_limit) +
                                          " exceeds hard cap " + std::to_string(kDpHardCap));
  }
  return options.dp_limit;
}

void check_target(const AtomicSpace& space, const SubsetRef& target, const CoveringOptions& options) {
  check_subset(target, space.size());
  const std::size_t limit = effective_limit(options);
  if (target.size() > limit) {
    throw Error(ErrorCode::TooManyAtoms, std::to_string(target.size()) + " atoms exceed DP limit " +
                                             std::to_string(limit));
  }
}

// Diameter of every sub-block of the target, indexed by bitmask over the
// target's positions.
std::vector<double> subset_diameters(const AtomicSpace& space, const SubsetRef& target) {
  const std::size_t m = target.size();
  const std::uint32_t full = (std::uint32_t{1} << m) - 1;
  std::vector<double> diam(std::size_t{full} + 1, 0.0);
  for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
    const int low = std::countr_zero(mask);
    const std::uint32_t rest = mask & (mask - 1);
    const std::size_t a = target[static_cast<std::size_t>(low)];
    double d = std::max(diam[rest], space.atom_diam(a));
    for (std::uint32_t r = rest; r != 0; r &= r - 1) {
      d = std::max(d, space.sup_dist(a, target[static_cast<std::size_t>(std::countr_zero(r))]));
    }
    diam[mask] = d;
    if (mask == full) break;
  }
  return diam;
}

SubsetRef atoms_of(std::uint32_t mask, const SubsetRef& target) {
  SubsetRef out;
  for (std::uint32_t r = mask; r != 0; r &= r - 1) {
    out.push_back(target[static_cast<std::size_t>(std::countr_zero(r))]);
  }
  return out;
}

Covering single_block(const AtomicSpace& space, const SubsetRef& target, double alpha) {
  Block b;
  b.atoms = target;
  b.diameter = space.block_diameter(target);
  b.cost = diameter_power(b.diameter, alpha);
  return Covering{{b}, Extended(b.cost)};
}

void check_grid(std::span<const Extended> grid) {
  if (grid.empty()) throw Error(ErrorCode::DegenerateGrid, "empty delta grid");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    check_delta(grid[i]);
    if (i > 0 && !(grid[i] < grid[i - 1])) {
      throw Error(ErrorCode::DegenerateGrid, "delta grid must be strictly decreasing");
    }
  }
}

}  // namespace

const char* to_string(Provenance p) noexcept {
  switch (p) {
    case Provenance::IntervalLine: return "interval-line";
    case Provenance::CellSpace: return "cell-space";
    case Provenance::PointCloud: return "point-cloud";
    case Provenance::Custom: return "custom";
  }
  return "custom";
}

Provenance provenance_from_string(const std::string& s) {
  if (s == "interval-line") return Provenance::IntervalLine;
  if (s == "cell-space") return Provenance::CellSpace;
  if (s == "point-cloud") return Provenance::PointCloud;
  if (s == "custom" || s.empty()) return Provenance::Custom;
  throw Error(ErrorCode::ParseError, "unknown provenance '" + s + "'");
}

const char* to_string(BoundKind b) noexcept {
  switch (b) {
    case BoundKind::Exact: return "exact";
    case BoundKind::Upper: return "upper";
    case BoundKind::Lower: return "lower";
  }
  return "exact";
}

AtomicSpace AtomicSpace::create(std::vector<double> atom_diam, DistanceTable sup_dist,
                                DistanceTable inf_dist, Provenance provenance) {
  const std::size_t n = atom_diam.size();
  if (sup_dist.size() != n || inf_dist.size() != n) {
    throw Error(ErrorCode::NotSquare, "atom tables must be " + std::to_string(n) + "x" +
                                          std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!(atom_diam[i] >= 0.0) || std::isinf(atom_diam[i])) {
      throw Error(ErrorCode::NegativeEntry, "atom_diam[" + std::to_string(i) + "]");
    }
    for (std::size_t j = 0; j < n; ++j) {
      const double s = sup_dist(i, j);
      const double f = inf_dist(i, j);
      if (!(s >= 0.0) || !(f >= 0.0) || std::isinf(s)) {
        throw Error(ErrorCode::NegativeEntry,
                    "atom pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
      const double tol = kMetricTolerance * std::max(1.0, s);
      if (std::abs(s - sup_dist(j, i)) > tol || std::abs(f - inf_dist(j, i)) > tol) {
        throw Error(ErrorCode::NonSymmetric,
                    "atom pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
      if (f > s + tol) {
        throw Error(ErrorCode::BadParams, "inf_dist exceeds sup_dist at (" + std::to_string(i) +
                                              "," + std::to_string(j) + ")");
      }
    }
    if (inf_dist(i, i) != 0.0) {
      throw Error(ErrorCode::BadParams, "inf_dist(i,i) must be 0 at " + std::to_string(i));
    }
    if (std::abs(sup_dist(i, i) - atom_diam[i]) > kMetricTolerance * std::max(1.0, atom_diam[i])) {
      throw Error(ErrorCode::BadParams, "sup_dist(i,i) must equal atom_diam at " + std::to_string(i));
    }
  }
  AtomicSpace a;
  a.atom_diam_ = std::move(atom_diam);
  a.sup_ = std::move(sup_dist);
  a.inf_ = std::move(inf_dist);
  a.provenance_ = provenance;
  return a;
}

AtomicSpace AtomicSpace::from_points(const PointSpace& space) {
  AtomicSpace a;
  a.atom_diam_.assign(space.size(), 0.0);
  a.sup_ = space.table();
  a.inf_ = space.table();
  a.provenance_ = Provenance::PointCloud;
  return a;
}

AtomicSpace AtomicSpace::from_point_groups(const PointSpace& space,
                                           const std::vector<SubsetRef>& groups,
                                           Provenance provenance) {
  const std::size_t n = groups.size();
  std::vector<double> diam(n);
  DistanceTable sup(n), inf(n);
  for (std::size_t i = 0; i < n; ++i) {
    diam[i] = diameter(space, groups[i]);
    sup(i, i) = diam[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      check_subset(groups[j], space.size());
      double hi = 0.0;
      double lo = kInf;
      for (std::size_t p : groups[i]) {
        for (std::size_t q : groups[j]) {
          hi = std::max(hi, space.dist(p, q));
          lo = std::min(lo, space.dist(p, q));
        }
      }
      sup.set_symmetric(i, j, hi);
      inf.set_symmetric(i, j, lo);
    }
  }
  return create(std::move(diam), std::move(sup), std::move(inf), provenance);
}

double AtomicSpace::block_diameter(const SubsetRef& block) const {
  double d = 0.0;
  for (std::size_t a = 0; a < block.size(); ++a) {
    d = std::max(d, atom_diam_[block[a]]);
    for (std::size_t b = a + 1; b < block.size(); ++b) d = std::max(d, sup_(block[a], block[b]));
  }
  return d;
}

double AtomicSpace::set_distance(const SubsetRef& a, const SubsetRef& b) const {
  double d = kInf;
  for (std::size_t i : a) {
    for (std::size_t j : b) d = std::min(d, inf_(i, j));
  }
  return d;
}

SubsetRef AtomicSpace::all() const {
  SubsetRef s(size());
  std::iota(s.begin(), s.end(), std::size_t{0});
  return s;
}

double WeightAssignment::total(const SubsetRef& over) const {
  double t = 0.0;
  for (std::size_t i : over) t += weights.at(i);
  return t;
}

CoveringOptions CoveringOptions::from_environment() {
  CoveringOptions o;
  if (const char* env = std::getenv("HLAB_DP_LIMIT"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1) {
      throw Error(ErrorCode::BadParams, std::string("HLAB_DP_LIMIT='") + env + "'");
    }
    o.dp_limit = std::min<std::size_t>(static_cast<std::size_t>(v), kDpHardCap);
  }
  return o;
}

ContentEstimate exact_content(const AtomicSpace& space, const SubsetRef& target, double alpha,
                              Extended delta, const CoveringOptions& options) {
  check_alpha(alpha);
  check_delta(delta);
  check_target(space, target, options);

  ContentEstimate est;
  est.alpha = alpha;
  est.delta = delta;
  est.bound = BoundKind::Exact;
  est.method = "partition-dp";
  if (target.empty()) {
    est.value = Extended(0.0);
    est.covering = Covering{{}, Extended(0.0)};
    return est;
  }
  for (std::size_t a : target) {
    if (!admissible(space.atom_diam(a), delta)) {
      est.value = Extended::infinity();
      return est;
    }
  }

  const std::size_t m = target.size();
  const std::uint32_t full = (std::uint32_t{1} << m) - 1;
  const std::vector<double> diam = subset_diameters(space, target);
  std::vector<double> cost(diam.size(), kInf);
  for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
    if (admissible(diam[mask], delta)) cost[mask] = diameter_power(diam[mask], alpha);
    if (mask == full) break;
  }

  // best(S) = min over blocks B of S containing the lowest atom of S of
  // cost(B) + best(S \ B).
  std::vector<double> best(diam.size(), kInf);
  std::vector<std::uint32_t> choice(diam.size(), 0);
  best[0] = 0.0;
  for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
    const std::uint32_t low = mask & (~mask + 1);
    const std::uint32_t rest = mask ^ low;
    double b = kInf;
    std::uint32_t pick = 0;
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
      const std::uint32_t block = sub | low;
      const double c = cost[block];
      if (c != kInf) {
        const double cand = c + best[mask ^ block];
        if (b == kInf ? cand != kInf : cand < b - kTieTolerance * std::max(1.0, b)) {
          b = cand;
          pick = block;
        }
      }
      if (sub == 0) break;
    }
    best[mask] = b;
    choice[mask] = pick;
    if (mask == full) break;
  }

  Covering cov;
  for (std::uint32_t mask = full; mask != 0; mask ^= choice[mask]) {
    const std::uint32_t block = choice[mask];
    cov.blocks.push_back(Block{atoms_of(block, target), diam[block], cost[block]});
  }
  cov.cost = Extended(best[full]);
  est.value = cov.cost;
  est.covering = std::move(cov);
  return est;
}

ContentEstimate greedy_content(const AtomicSpace& space, const SubsetRef& target, double alpha,
                               double delta) {
  check_alpha(alpha);
  if (!(delta > 0.0) || std::isinf(delta)) {
    throw Error(ErrorCode::InvalidDelta, "greedy covering needs a finite positive delta");
  }
  check_subset(target, space.size());
  for (std::size_t a : target) {
    if (space.atom_diam(a) >= delta) {
      throw Error(ErrorCode::InadmissibleAtom, "atom " + std::to_string(a) + " has diameter >= delta");
    }
  }

  const double cap = delta * (2.0 / 3.0);
  std::vector<std::size_t> open(target.begin(), target.end());
  Covering cov;
  double total = 0.0;
  while (!open.empty()) {
    const auto seed_it = std::max_element(open.begin(), open.end(), [&](std::size_t x, std::size_t y) {
      return space.atom_diam(x) < space.atom_diam(y);
    });
    const std::size_t seed = *seed_it;
    open.erase(seed_it);

    std::vector<std::size_t> order = open;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return space.sup_dist(seed, x) < space.sup_dist(seed, y);
    });

    Block block;
    block.atoms = {seed};
    block.diameter = space.atom_diam(seed);
    for (std::size_t c : order) {
      double d = std::max(block.diameter, space.atom_diam(c));
      for (std::size_t b : block.atoms) d = std::max(d, space.sup_dist(b, c));
      if (d < cap) {
        block.atoms.push_back(c);
        block.diameter = d;
      }
    }
    std::erase_if(open, [&](std::size_t x) {
      return std::find(block.atoms.begin(), block.atoms.end(), x) != block.atoms.end();
    });
    block.cost = diameter_power(block.diameter, alpha);
    total += block.cost;
    cov.blocks.push_back(std::move(block));
  }
  cov.cost = Extended(total);

  ContentEstimate est;
  est.value = cov.cost;
  est.bound = BoundKind::Upper;
  est.alpha = alpha;
  est.delta = Extended(delta);
  est.covering = std::move(cov);
  est.method = "greedy";
  return est;
}

std::vector<ContentEstimate> measure_profile(const AtomicSpace& space, const SubsetRef& target,
                                             double alpha, std::span<const Extended> delta_grid,
                                             const CoveringOptions& options) {
  check_alpha(alpha);
  check_grid(delta_grid);
  check_subset(target, space.size());
  const std::size_t limit = effective_limit(options);

  std::vector<ContentEstimate> out;
  out.reserve(delta_grid.size());
  for (Extended delta : delta_grid) {
    if (target.size() <= limit) {
      out.push_back(exact_content(space, target, alpha, delta, options));
      continue;
    }
    const bool feasible = std::all_of(target.begin(), target.end(), [&](std::size_t a) {
      return admissible(space.atom_diam(a), delta);
    });
    if (!feasible) {
      ContentEstimate est;
      est.value = Extended::infinity();
      est.alpha = alpha;
      est.delta = delta;
      est.method = "infeasible";
      out.push_back(std::move(est));
    } else if (delta.is_infinite()) {
      ContentEstimate est;
      est.covering = single_block(space, target, alpha);
      est.value = est.covering->cost;
      est.bound = BoundKind::Upper;
      est.alpha = alpha;
      est.delta = delta;
      est.method = "single-block";
      out.push_back(std::move(est));
    } else {
      out.push_back(greedy_content(space, target, alpha, delta.finite_value()));
    }
  }
  return out;
}

IntervalSet::IntervalSet(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
  for (const Interval& iv : intervals_) {
    if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi) || iv.lo > iv.hi) {
      throw Error(ErrorCode::BadParams,
                  "bad interval [" + std::to_string(iv.lo) + "," + std::to_string(iv.hi) + "]");
    }
  }
}

IntervalSet IntervalSet::normalized() const {
  std::vector<Interval> v = intervals_;
  std::sort(v.begin(), v.end(), [](const Interval& a, const Interval& b) {
    return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
  });
  std::vector<Interval> merged;
  for (const Interval& iv : v) {
    if (!merged.empty() && iv.lo <= merged.back().hi) {
      merged.back().hi = std::max(merged.back().hi, iv.hi);
    } else {
      merged.push_back(iv);
    }
  }
  return IntervalSet(std::move(merged));
}

bool IntervalSet::is_normalized() const {
  for (std::size_t i = 1; i < intervals_.size(); ++i) {
    if (!(intervals_[i - 1].hi < intervals_[i].lo)) return false;
  }
  return true;
}

double IntervalSet::total_length() const {
  double t = 0.0;
  for (const Interval& iv : intervals_) t += iv.length();
  return t;
}

AtomicSpace interval_atoms(const std::vector<Interval>& atoms) {
  const std::size_t n = atoms.size();
  std::vector<double> diam(n);
  DistanceTable sup(n), inf(n);
  for (std::size_t i = 0; i < n; ++i) {
    diam[i] = atoms[i].length();
    sup(i, i) = diam[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      const Interval& a = atoms[i];
      const Interval& b = atoms[j];
      sup.set_symmetric(i, j, std::max(a.hi, b.hi) - std::min(a.lo, b.lo));
      inf.set_symmetric(i, j, std::max(0.0, std::max(a.lo, b.lo) - std::min(a.hi, b.hi)));
    }
  }
  return AtomicSpace::create(std::move(diam), std::move(sup), std::move(inf),
                             Provenance::IntervalLine);
}

AtomicSpace interval_presentation(const IntervalSet& set, std::size_t pieces) {
  if (pieces == 0) throw Error(ErrorCode::BadParams, "pieces must be positive");
  std::vector<Interval> atoms;
  for (const Interval& iv : set.intervals()) {
    const std::size_t k = iv.length() == 0.0 ? 1 : pieces;
    for (std::size_t p = 0; p < k; ++p) {
      const double lo = iv.lo + iv.length() * static_cast<double>(p) / static_cast<double>(k);
      const double hi = p + 1 == k ? iv.hi
                                   : iv.lo + iv.length() * static_cast<double>(p + 1) /
                                                 static_cast<double>(k);
      atoms.push_back({lo, hi});
    }
  }
  return interval_atoms(atoms);
}

ContentEstimate interval_content(const IntervalSet& set, double alpha, const IntervalOptions& options) {
  check_alpha(alpha);
  const IntervalSet norm = set.normalized();

  if (alpha == 1.0) {
    const AtomicSpace atoms = interval_atoms(norm.intervals());
    ContentEstimate est;
    est.alpha = 1.0;
    est.delta = Extended::infinity();
    est.bound = BoundKind::Exact;
    est.method = "merged-length";
    Covering cov;
    double total = 0.0;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      cov.blocks.push_back(Block{{i}, atoms.atom_diam(i), atoms.atom_diam(i)});
      total += atoms.atom_diam(i);
    }
    cov.cost = Extended(total);
    est.value = cov.cost;
    est.covering = std::move(cov);
    return est;
  }

  const std::size_t count = norm.intervals().size();
  const std::size_t budget = std::min(options.refinement_atoms, options.covering.dp_limit);
  if (count > budget) {
    throw Error(ErrorCode::TooManyAtoms,
                std::to_string(count) + " intervals exceed the refinement budget");
  }
  const std::size_t pieces = count == 0 ? 1 : std::max<std::size_t>(1, budget / count);
  const AtomicSpace atoms = interval_presentation(norm, pieces);
  ContentEstimate est = exact_content(atoms, atoms.all(), alpha, Extended::infinity(), options.covering);
  // Runs of whole intervals are optimal when alpha <= 1 (t^alpha is
  // subadditive), and those runs are blocks of the presentation.
  est.bound = alpha <= 1.0 ? BoundKind::Exact : BoundKind::Upper;
  est.method = "interval-presentation";
  return est;
}

ContentEstimate mass_lower_bound(const AtomicSpace& space, const SubsetRef& target, double alpha,
                                 Extended delta, const WeightAssignment& weights,
                                 const CoveringOptions& options) {
  check_alpha(alpha);
  check_delta(delta);
  check_target(space, target, options);
  if (weights.weights.size() != space.size()) {
    throw Error(ErrorCode::BadParams, "weights must have one entry per atom");
  }
  for (std::size_t a : target) {
    if (!(weights.weights[a] >= 0.0)) {
      throw Error(ErrorCode::NegativeWeight, "atom " + std::to_string(a));
    }
  }

  ContentEstimate est;
  est.alpha = alpha;
  est.delta = delta;
  est.bound = BoundKind::Lower;
  est.method = "mass-distribution";
  est.weights = weights;
  const double mass = weights.total(target);
  if (target.empty() || mass == 0.0) {
    est.value = Extended(0.0);
    est.mass_constant = Extended(0.0);
    return est;
  }

  const std::size_t m = target.size();
  const std::uint32_t full = (std::uint32_t{1} << m) - 1;
  const std::vector<double> diam = subset_diameters(space, target);
  std::vector<double> w(diam.size(), 0.0);
  double c = 0.0;
  bool infinite = false;
  for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
    const std::uint32_t rest = mask & (mask - 1);
    w[mask] = w[rest] + weights.weights[target[static_cast<std::size_t>(std::countr_zero(mask))]];
    if (admissible(diam[mask], delta) && w[mask] > 0.0) {
      if (alpha == 0.0) {
        c = std::max(c, w[mask]);
      } else if (diam[mask] == 0.0) {
        infinite = true;
      } else {
        c = std::max(c, w[mask] / std::pow(diam[mask], alpha));
      }
    }
    if (mask == full) break;
  }

  if (infinite) {
    est.mass_constant = Extended::infinity();
    est.value = Extended(0.0);
  } else if (c == 0.0) {
    // No admissible block carries mass: every atom is too large for delta.
    est.mass_constant = Extended(0.0);
    est.value = Extended::infinity();
  } else {
    est.mass_constant = Extended(c);
    est.value = Extended(mass / c);
  }
  return est;
}

SubsetRef farthest_point_net(const PointSpace& cloud, const SubsetRef& target, double radius) {
  check_subset(target, cloud.size());
  if (target.empty()) return {};
  SubsetRef centers{target.front()};
  std::vector<double> nearest(target.size());
  for (std::size_t i = 0; i < target.size(); ++i) nearest[i] = cloud.dist(target[i], target.front());
  for (;;) {
    const auto far = std::max_element(nearest.begin(), nearest.end());
    if (*far <= radius) break;
    const std::size_t c = target[static_cast<std::size_t>(far - nearest.begin())];
    centers.push_back(c);
    for (std::size_t i = 0; i < target.size(); ++i) {
      nearest[i] = std::min(nearest[i], cloud.dist(target[i], c));
    }
  }
  return centers;
}

DimensionEstimate dimension_estimate(const PointSpace& cloud, const SubsetRef& target,
                                     std::span<const double> scales,
                                     std::pair<double, double> bracket) {
  if (scales.size() < 3) throw Error(ErrorCode::DegenerateGrid, "need at least 3 scales");
  for (std::size_t i = 0; i < scales.size(); ++i) {
    if (!(scales[i] > 0.0) || std::isinf(scales[i]) || (i > 0 && !(scales[i] < scales[i - 1]))) {
      throw Error(ErrorCode::DegenerateGrid, "scales must be positive and strictly decreasing");
    }
  }
  check_subset(target, cloud.size());
  if (target.size() < 2) throw Error(ErrorCode::TooFewPoints, "need at least 2 points");

  DimensionEstimate out;
  DimensionDiagnostics& diag = out.diagnostics;
  std::vector<double> xs, ys;
  for (double delta : scales) {
    // Closed balls of radius delta/3 have diameter at most 2 delta / 3 < delta.
    const std::size_t count = farthest_point_net(cloud, target, delta / 3.0).size();
    diag.scales.push_back(delta);
    diag.counts.push_back(count);
    if (count == 1 || count == target.size()) diag.saturated_scales.push_back(delta);
    xs.push_back(std::log(1.0 / delta));
    ys.push_back(std::log(static_cast<double>(count)));
  }

  const double n = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  out.alpha_hat = sxy / sxx;
  diag.intercept = my - out.alpha_hat * mx;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    diag.residuals.push_back(ys[i] - (diag.intercept + out.alpha_hat * xs[i]));
  }
  diag.in_bracket = bracket.first <= out.alpha_hat && out.alpha_hat <= bracket.second;
  return out;
}

DimensionEstimate dimension_estimate(const AtomicSpace& cloud, const SubsetRef& target,
                                     std::span<const double> scales,
                                     std::pair<double, double> bracket) {
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    if (cloud.atom_diam(i) != 0.0) {
      throw Error(ErrorCode::BadParams, "dimension estimate needs a point-cloud presentation");
    }
  }
  return dimension_estimate(PointSpace::from_table(cloud.sup_table(), PointSpace::Validation::Structural),
                            target, scales, bracket);
}

}  // namespace hlab
