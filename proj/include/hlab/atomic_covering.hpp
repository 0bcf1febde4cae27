#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hlab/extended.hpp"
#include "hlab/metric_core.hpp"

namespace hlab {

enum class Provenance { IntervalLine, CellSpace, PointCloud, Custom };

const char* to_string(Provenance p) noexcept;
Provenance provenance_from_string(const std::string& s);

// A space presented as finitely many closed atoms. Only per-atom diameters
// and pairwise sup/inf distances between atoms are known; every covering
// computation works from these tables.
class AtomicSpace {
 public:
  AtomicSpace() = default;

  // Validates: square symmetric tables of matching size, inf <= sup,
  // inf(i,i) = 0, sup(i,i) = atom_diam(i), nonnegative entries.
  static AtomicSpace create(std::vector<double> atom_diam, DistanceTable sup_dist,
                            DistanceTable inf_dist, Provenance provenance = Provenance::Custom);

  // Every point is a singleton atom.
  static AtomicSpace from_points(const PointSpace& space);

  // Each group of points is one atom; diameters and distances are induced.
  static AtomicSpace from_point_groups(const PointSpace& space, const std::vector<SubsetRef>& groups,
                                       Provenance provenance = Provenance::PointCloud);

  std::size_t size() const { return atom_diam_.size(); }
  double atom_diam(std::size_t i) const { return atom_diam_[i]; }
  double sup_dist(std::size_t i, std::size_t j) const { return sup_(i, j); }
  double inf_dist(std::size_t i, std::size_t j) const { return inf_(i, j); }
  const std::vector<double>& atom_diams() const { return atom_diam_; }
  const DistanceTable& sup_table() const { return sup_; }
  const DistanceTable& inf_table() const { return inf_; }
  Provenance provenance() const { return provenance_; }

  // max(atom diameters, pairwise sup distances) over the block.
  double block_diameter(const SubsetRef& block) const;

  // Smallest inf distance between an atom of `a` and an atom of `b`.
  double set_distance(const SubsetRef& a, const SubsetRef& b) const;

  SubsetRef all() const;

 private:
  std::vector<double> atom_diam_;
  DistanceTable sup_;
  DistanceTable inf_;
  Provenance provenance_ = Provenance::Custom;
};

struct Block {
  SubsetRef atoms;
  double diameter = 0.0;
  double cost = 0.0;  // (diameter)^alpha with the alpha = 0 convention
};

struct Covering {
  std::vector<Block> blocks;
  Extended cost;
};

enum class BoundKind { Exact, Upper, Lower };

const char* to_string(BoundKind b) noexcept;

struct WeightAssignment {
  std::vector<double> weights;  // one per atom of the space

  double total(const SubsetRef& over) const;
};

// A content value with the direction of its guarantee. Exact is exact for
// the atomic presentation; for the underlying set it is an upper bound,
// with equality for ultrametric cell presentations and for interval
// presentations at alpha = 1.
struct ContentEstimate {
  Extended value;
  BoundKind bound = BoundKind::Exact;
  double alpha = 0.0;
  Extended delta = Extended::infinity();
  std::optional<Covering> covering;       // exact / upper witness
  std::optional<WeightAssignment> weights;  // lower witness
  Extended mass_constant;                   // C of the mass bound (lower only)
  std::string method;
};

inline constexpr std::size_t kDefaultDpLimit = 16;
inline constexpr std::size_t kDpHardCap = 20;

struct CoveringOptions {
  std::size_t dp_limit = kDefaultDpLimit;

  // Reads HLAB_DP_LIMIT (capped at kDpHardCap) when set.
  static CoveringOptions from_environment();
};

// Minimum over all partitions of the target atoms into blocks of diameter
// < delta of the sum of (block diameter)^alpha. +inf when some atom alone is
// too large for delta.
ContentEstimate exact_content(const AtomicSpace& space, const SubsetRef& target, double alpha,
                              Extended delta, const CoveringOptions& options = {});

// Upper bound by greedily grown blocks of diameter < 2/3 delta.
ContentEstimate greedy_content(const AtomicSpace& space, const SubsetRef& target, double alpha,
                               double delta);

// H^alpha_delta along a strictly decreasing grid; exact within the DP limit,
// greedy upper bounds beyond it.
std::vector<ContentEstimate> measure_profile(const AtomicSpace& space, const SubsetRef& target,
                                             double alpha, std::span<const Extended> delta_grid,
                                             const CoveringOptions& options = {});

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const { return hi - lo; }
  bool contains(double r) const { return lo <= r && r <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

class IntervalSet {
 public:
  IntervalSet() = default;
  // Throws BadParams on a reversed or non-finite interval.
  explicit IntervalSet(std::vector<Interval> intervals);

  // Sorted, disjoint, merged (touching closed intervals merge).
  IntervalSet normalized() const;
  bool is_normalized() const;

  const std::vector<Interval>& intervals() const { return intervals_; }
  bool empty() const { return intervals_.empty(); }
  double total_length() const;

 private:
  std::vector<Interval> intervals_;
};

// Atoms are the given closed intervals of the line.
AtomicSpace interval_atoms(const std::vector<Interval>& atoms);

// Splits each interval of a normalized set into `pieces` equal atoms.
AtomicSpace interval_presentation(const IntervalSet& set, std::size_t pieces);

struct IntervalOptions {
  std::size_t refinement_atoms = 12;  // atom budget for alpha != 1
  CoveringOptions covering;
};

// Exact merged length at alpha = 1; otherwise an upper bound from an atomic
// presentation.
ContentEstimate interval_content(const IntervalSet& set, double alpha,
                                 const IntervalOptions& options = {});

// Mass distribution lower bound weight(target) / C with
// C = max weight(S) / diam(S)^alpha over admissible blocks S.
ContentEstimate mass_lower_bound(const AtomicSpace& space, const SubsetRef& target, double alpha,
                                 Extended delta, const WeightAssignment& weights,
                                 const CoveringOptions& options = {});

struct DimensionDiagnostics {
  std::vector<double> scales;
  std::vector<std::size_t> counts;
  std::vector<double> residuals;
  double intercept = 0.0;
  // Scales where the net is a single block or every point is its own block.
  std::vector<double> saturated_scales;
  bool in_bracket = true;
};

struct DimensionEstimate {
  double alpha_hat = 0.0;
  DimensionDiagnostics diagnostics;
};

// Greedy farthest-point net: every target point ends within `radius` of a
// returned center. Deterministic, seeded with the first target point.
SubsetRef farthest_point_net(const PointSpace& cloud, const SubsetRef& target, double radius);

// Box-counting surrogate for the dimension: slope of log N(delta) against
// log(1/delta), N counted by nets of radius delta/3.
DimensionEstimate dimension_estimate(const PointSpace& cloud, const SubsetRef& target,
                                     std::span<const double> scales,
                                     std::pair<double, double> bracket = {0.0, 1e300});

// Same, on a point-cloud presentation (all atoms of diameter 0).
DimensionEstimate dimension_estimate(const AtomicSpace& cloud, const SubsetRef& target,
                                     std::span<const double> scales,
                                     std::pair<double, double> bracket = {0.0, 1e300});

}  // namespace hlab
