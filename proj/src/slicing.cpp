#include "hlab/slicing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hlab/error.hpp"

namespace hlab {

namespace {

constexpr double kLipschitzTolerance = 1e-9;

}  // namespace

void SlicedSpace::check() const {
  if (f_image.size() != space.size()) {
    throw Error(ErrorCode::BadParams, "one f-interval per atom is required");
  }
  for (const Interval& iv : f_image) {
    if (!(iv.lo <= iv.hi)) throw Error(ErrorCode::BadParams, "reversed f-interval");
  }
}

double SliceProfile::at(double r) const {
  double h = 0.0;
  for (std::size_t i = 0; i < block_intervals.size(); ++i) {
    if (block_intervals[i].contains(r)) h += block_weights[i];
  }
  return h;
}

SliceProfile build_slice_profile(const SlicedSpace& sliced, const Covering& covering, double alpha,
                                 double k) {
  sliced.check();
  if (!(alpha >= 1.0) || std::isinf(alpha)) {
    throw Error(ErrorCode::InvalidAlpha, "slicing needs alpha >= 1, got " + std::to_string(alpha));
  }
  if (!(k >= 0.0)) throw Error(ErrorCode::BadParams, "k must be nonnegative");

  SliceProfile p;
  p.alpha = alpha;
  p.k = k;
  for (const Block& b : covering.blocks) {
    if (b.atoms.empty()) continue;
    check_subset(b.atoms, sliced.space.size());
    Interval hull{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    for (std::size_t a : b.atoms) {
      hull.lo = std::min(hull.lo, sliced.f_image[a].lo);
      hull.hi = std::max(hull.hi, sliced.f_image[a].hi);
    }
    const double diam = sliced.space.block_diameter(b.atoms);
    if (hull.length() > k * diam + kLipschitzTolerance * std::max(1.0, k * diam)) {
      throw Error(ErrorCode::LipschitzViolation,
                  "block f-interval length " + std::to_string(hull.length()) + " exceeds k*diam " +
                      std::to_string(k * diam));
    }
    const double weight = diameter_power(diam, alpha - 1.0);
    p.block_intervals.push_back(hull);
    p.block_weights.push_back(weight);
    p.covering_cost += diameter_power(diam, alpha);
    p.integral += weight * hull.length();
  }

  for (const Interval& iv : p.block_intervals) {
    p.breakpoints.push_back(iv.lo);
    p.breakpoints.push_back(iv.hi);
  }
  std::sort(p.breakpoints.begin(), p.breakpoints.end());
  p.breakpoints.erase(std::unique(p.breakpoints.begin(), p.breakpoints.end()), p.breakpoints.end());
  for (std::size_t i = 0; i + 1 < p.breakpoints.size(); ++i) {
    p.values.push_back(p.at(0.5 * (p.breakpoints[i] + p.breakpoints[i + 1])));
  }
  return p;
}

SliceCheck slice_content_bound(const SlicedSpace& sliced, const Covering& covering,
                               const SliceProfile& profile, double r, double alpha, Extended delta,
                               const CoveringOptions& options) {
  sliced.check();
  for (const Block& b : covering.blocks) {
    if (!delta.is_infinite() && !(sliced.space.block_diameter(b.atoms) < delta.finite_value())) {
      throw Error(ErrorCode::InvalidDelta, "covering block is not smaller than delta");
    }
  }
  SliceCheck out;
  out.r = r;
  for (std::size_t a = 0; a < sliced.space.size(); ++a) {
    if (sliced.f_image[a].contains(r)) out.slice_atoms.push_back(a);
  }
  out.content = exact_content(sliced.space, out.slice_atoms, alpha - 1.0, delta, options).value;
  out.h = profile.at(r);
  out.holds = out.content <= Extended(out.h * (1.0 + 1e-12) + 1e-15);
  return out;
}

std::vector<SweepEntry> slice_profile_sweep(const SlicedSpace& sliced, double alpha, double k,
                                            std::span<const double> delta_grid,
                                            const CoveringOptions& options) {
  sliced.check();
  const SubsetRef target = sliced.space.all();
  std::vector<SweepEntry> out;
  for (double delta : delta_grid) {
    SweepEntry e;
    e.delta = delta;
    const bool feasible = std::all_of(target.begin(), target.end(), [&](std::size_t a) {
      return sliced.space.atom_diam(a) < delta;
    });
    if (!feasible) {
      e.feasible = false;
      out.push_back(e);
      continue;
    }
    const ContentEstimate est = target.size() <= options.dp_limit
                                    ? exact_content(sliced.space, target, alpha, Extended(delta), options)
                                    : greedy_content(sliced.space, target, alpha, delta);
    const SliceProfile profile = build_slice_profile(sliced, *est.covering, alpha, k);
    e.covering_bound = est.bound;
    e.cost = profile.covering_cost;
    e.integral = profile.integral;
    e.bound = k * profile.covering_cost;
    e.holds = e.integral <= e.bound * (1.0 + 1e-12) + 1e-15;
    out.push_back(e);
  }
  return out;
}

std::vector<Interval> f_intervals_from_values(const std::vector<SubsetRef>& groups,
                                              const std::vector<double>& values) {
  std::vector<Interval> out;
  out.reserve(groups.size());
  for (const SubsetRef& g : groups) {
    if (g.empty()) throw Error(ErrorCode::EmptySubset, "empty atom group");
    Interval iv{values.at(g.front()), values.at(g.front())};
    for (std::size_t x : g) {
      iv.lo = std::min(iv.lo, values.at(x));
      iv.hi = std::max(iv.hi, values.at(x));
    }
    out.push_back(iv);
  }
  return out;
}

}  // namespace hlab
