#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace hlab {

// 0-based indices into a PointSpace (or an AtomicSpace). Unique, in range.
using SubsetRef = std::vector<std::size_t>;

// Throws IndexOutOfRange / DuplicateIndex when `subset` is not a valid
// reference into a space of `size` elements.
void check_subset(const SubsetRef& subset, std::size_t size);

// Dense symmetric n x n table, row-major.
class DistanceTable {
 public:
  DistanceTable() = default;
  explicit DistanceTable(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}

  // Throws NotSquare when the rows are ragged.
  static DistanceTable from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }

  void set_symmetric(std::size_t i, std::size_t j, double v) {
    data_[i * n_ + j] = v;
    data_[j * n_ + i] = v;
  }

  std::vector<std::vector<double>> rows() const;

  friend bool operator==(const DistanceTable&, const DistanceTable&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

struct Triple {
  std::size_t x = 0;
  std::size_t y = 0;
  std::size_t z = 0;
};

struct MetricReport {
  bool is_metric = true;
  bool is_ultrametric = true;
  // Smallest C >= 1 with d(x,z) <= C (d(x,y) + d(y,z)) over all triples.
  double quasimetric_constant = 1.0;
  Triple worst_triple;
};

// Relative tolerance applied to every metric-axiom inequality.
inline constexpr double kMetricTolerance = 1e-9;

// Structural checks (square, symmetric, nonnegative, positive off the
// diagonal), then the exact quasimetric constant and ultrametric flag.
MetricReport validate_metric(const DistanceTable& table);

// A finite metric space with a fully materialized distance table.
class PointSpace {
 public:
  enum class Validation {
    Full,        // structural checks plus the triangle inequality
    Structural,  // skips the O(n^3) triangle check for tables built by this library
  };

  PointSpace() = default;

  static PointSpace from_table(DistanceTable table, Validation validation = Validation::Full);
  static PointSpace from_coordinates(const std::vector<std::vector<double>>& coords);

  std::size_t size() const { return table_.size(); }
  double dist(std::size_t i, std::size_t j) const { return table_(i, j); }
  const DistanceTable& table() const { return table_; }

  // Euclidean coordinates when the space was built from a point cloud.
  const std::vector<std::vector<double>>& coordinates() const { return coords_; }
  bool has_coordinates() const { return !coords_.empty(); }

  SubsetRef all() const;

  friend bool operator==(const PointSpace& a, const PointSpace& b) { return a.table_ == b.table_; }

 private:
  DistanceTable table_;
  std::vector<std::vector<double>> coords_;
};

double diameter(const PointSpace& space, const SubsetRef& subset);

double dist_to_set(const PointSpace& space, std::size_t x, const SubsetRef& set);

// phi(x) = dist(x,A) / (dist(x,A) + dist(x,B)) for every point of the space.
std::vector<double> separation_function(const PointSpace& space, const SubsetRef& a,
                                        const SubsetRef& b);

struct ClopenSeparation {
  SubsetRef u;              // {x : phi(x) < r}, sorted
  double r = 0.0;           // threshold never attained by phi
  std::vector<double> phi;  // per-point values
};

// Threshold at the midpoint of the widest gap between consecutive attained
// phi-values; ties go to the smaller threshold.
ClopenSeparation clopen_separation(const PointSpace& space, const SubsetRef& a, const SubsetRef& b);

enum class BallKind { Open, Closed };

SubsetRef ball(const PointSpace& space, std::size_t center, double radius, BallKind kind);

}  // namespace hlab
