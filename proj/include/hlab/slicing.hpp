#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hlab/atomic_covering.hpp"

namespace hlab {

// An atomic presentation together with the closed hull of f(atom) for a
// real-valued function f, one interval per atom. Point atoms carry
// degenerate intervals.
struct SlicedSpace {
  AtomicSpace space;
  std::vector<Interval> f_image;

  // Throws BadParams when the interval count does not match the atom count.
  void check() const;
};

// Piecewise-constant h(r) = sum over blocks of (diam)^(alpha-1) times the
// indicator of the block's f-interval.
struct SliceProfile {
  std::vector<double> breakpoints;   // sorted, unique interval endpoints
  std::vector<double> values;        // h on (breakpoints[i], breakpoints[i+1])
  std::vector<Interval> block_intervals;
  std::vector<double> block_weights;  // (diam)^(alpha-1) per block
  double alpha = 1.0;
  double k = 0.0;
  double covering_cost = 0.0;  // sum (diam)^alpha
  double integral = 0.0;       // sum weight * |interval|

  // Exact h(r), counting closed intervals (so endpoints included).
  double at(double r) const;
};

// Throws LipschitzViolation when a block's f-interval is longer than
// k * diam(block) beyond tolerance, InvalidAlpha when alpha < 1.
SliceProfile build_slice_profile(const SlicedSpace& sliced, const Covering& covering, double alpha,
                                 double k);

struct SliceCheck {
  double r = 0.0;
  SubsetRef slice_atoms;  // atoms whose f-interval contains r
  Extended content;       // H^(alpha-1)_delta of the slice atoms
  double h = 0.0;
  bool holds = true;
};

SliceCheck slice_content_bound(const SlicedSpace& sliced, const Covering& covering,
                               const SliceProfile& profile, double r, double alpha, Extended delta,
                               const CoveringOptions& options = {});

struct SweepEntry {
  double delta = 0.0;
  bool feasible = true;  // false when some atom is too large for delta
  BoundKind covering_bound = BoundKind::Exact;
  double cost = 0.0;
  double integral = 0.0;
  double bound = 0.0;  // k * cost
  bool holds = true;
};

// One covering per delta (the DP witness within the limit, greedy beyond)
// and the integral bound for its h.
std::vector<SweepEntry> slice_profile_sweep(const SlicedSpace& sliced, double alpha, double k,
                                            std::span<const double> delta_grid,
                                            const CoveringOptions& options = {});

// Per-atom f-intervals from per-point values of f on grouped atoms.
std::vector<Interval> f_intervals_from_values(const std::vector<SubsetRef>& groups,
                                              const std::vector<double>& values);

}  // namespace hlab
