#include "hlab/metric_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hlab/error.hpp"

namespace hlab {

namespace {

void require_nonempty(const SubsetRef& s, const char* what) {
  if (s.empty()) throw Error(ErrorCode::EmptySubset, what);
}

void structural_checks(const DistanceTable& t) {
  const std::size_t n = t.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (t(i, i) != 0.0) {
      throw Error(ErrorCode::NotAMetric, "nonzero diagonal entry at " + std::to_string(i));
    }
    for (std::size_t j = 0; j < n; ++j) {
      const double v = t(i, j);
      if (std::isnan(v) || v < 0.0) {
        throw Error(ErrorCode::NegativeEntry,
                    "entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
      if (i != j && v == 0.0) {
        throw Error(ErrorCode::ZeroOffDiagonal,
                    "distinct points " + std::to_string(i) + "," + std::to_string(j));
      }
      const double w = t(j, i);
      if (std::abs(v - w) > kMetricTolerance * std::max({1.0, v, w})) {
        throw Error(ErrorCode::NonSymmetric,
                    "entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
}

}  // namespace

void check_subset(const SubsetRef& subset, std::size_t size) {
  std::vector<bool> seen(size, false);
  for (std::size_t i : subset) {
    if (i >= size) {
      throw Error(ErrorCode::IndexOutOfRange,
                  std::to_string(i) + " >= " + std::to_string(size));
    }
    if (seen[i]) throw Error(ErrorCode::DuplicateIndex, std::to_string(i));
    seen[i] = true;
  }
}

DistanceTable DistanceTable::from_rows(const std::vector<std::vector<double>>& rows) {
  DistanceTable t(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw Error(ErrorCode::NotSquare, "row " + std::to_string(i) + " has " +
                                            std::to_string(rows[i].size()) + " entries");
    }
    for (std::size_t j = 0; j < rows.size(); ++j) t(i, j) = rows[i][j];
  }
  return t;
}

std::vector<std::vector<double>> DistanceTable::rows() const {
  std::vector<std::vector<double>> out(n_, std::vector<double>(n_));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) out[i][j] = (*this)(i, j);
  }
  return out;
}

MetricReport validate_metric(const DistanceTable& t) {
  structural_checks(t);
  MetricReport report;
  const std::size_t n = t.size();
  double worst = 1.0;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t z = x + 1; z < n; ++z) {
      const double dxz = t(x, z);
      for (std::size_t y = 0; y < n; ++y) {
        if (y == x || y == z) continue;
        const double a = t(x, y);
        const double b = t(y, z);
        const double ratio = dxz / (a + b);
        if (ratio > worst) {
          worst = ratio;
          report.worst_triple = {x, y, z};
        }
        if (dxz > std::max(a, b) * (1.0 + kMetricTolerance)) report.is_ultrametric = false;
      }
    }
  }
  report.quasimetric_constant = worst;
  report.is_metric = worst <= 1.0 + kMetricTolerance;
  if (!report.is_metric) report.is_ultrametric = false;
  return report;
}

PointSpace PointSpace::from_table(DistanceTable table, Validation validation) {
  if (validation == Validation::Full) {
    const MetricReport report = validate_metric(table);
    if (!report.is_metric) {
      const Triple& w = report.worst_triple;
      throw Error(ErrorCode::NotAMetric, "triangle inequality fails on (" + std::to_string(w.x) +
                                             "," + std::to_string(w.y) + "," +
                                             std::to_string(w.z) + ")");
    }
  } else {
    structural_checks(table);
  }
  PointSpace s;
  s.table_ = std::move(table);
  return s;
}

PointSpace PointSpace::from_coordinates(const std::vector<std::vector<double>>& coords) {
  const std::size_t n = coords.size();
  const std::size_t dim = n ? coords.front().size() : 0;
  DistanceTable t(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (coords[i].size() != dim) {
      throw Error(ErrorCode::BadParams, "point " + std::to_string(i) + " has wrong dimension");
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < dim; ++k) {
        const double d = coords[i][k] - coords[j][k];
        s += d * d;
      }
      t.set_symmetric(i, j, std::sqrt(s));
    }
  }
  PointSpace s = from_table(std::move(t), Validation::Structural);
  s.coords_ = coords;
  return s;
}

SubsetRef PointSpace::all() const {
  SubsetRef s(size());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = i;
  return s;
}

double diameter(const PointSpace& space, const SubsetRef& subset) {
  require_nonempty(subset, "diameter of an empty subset");
  check_subset(subset, space.size());
  double d = 0.0;
  for (std::size_t a = 0; a < subset.size(); ++a) {
    for (std::size_t b = a + 1; b < subset.size(); ++b) {
      d = std::max(d, space.dist(subset[a], subset[b]));
    }
  }
  return d;
}

double dist_to_set(const PointSpace& space, std::size_t x, const SubsetRef& set) {
  require_nonempty(set, "distance to an empty set");
  check_subset(set, space.size());
  if (x >= space.size()) throw Error(ErrorCode::IndexOutOfRange, std::to_string(x));
  double d = space.dist(x, set.front());
  for (std::size_t a : set) d = std::min(d, space.dist(x, a));
  return d;
}

std::vector<double> separation_function(const PointSpace& space, const SubsetRef& a,
                                        const SubsetRef& b) {
  require_nonempty(a, "separation needs nonempty A");
  require_nonempty(b, "separation needs nonempty B");
  std::vector<double> phi(space.size());
  for (std::size_t x = 0; x < space.size(); ++x) {
    const double da = dist_to_set(space, x, a);
    const double db = dist_to_set(space, x, b);
    if (da == 0.0 && db == 0.0) {
      throw Error(ErrorCode::OverlappingSets, "point " + std::to_string(x) + " lies in A and B");
    }
    phi[x] = da / (da + db);
  }
  return phi;
}

ClopenSeparation clopen_separation(const PointSpace& space, const SubsetRef& a,
                                   const SubsetRef& b) {
  ClopenSeparation out;
  out.phi = separation_function(space, a, b);

  std::vector<double> values = out.phi;
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  // values always contains 0 (on A) and 1 (on B).
  double best_gap = -1.0;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    const double gap = values[i + 1] - values[i];
    if (gap > best_gap * (1.0 + 1e-12)) {
      best_gap = gap;
      out.r = 0.5 * (values[i] + values[i + 1]);
    }
  }
  for (std::size_t x = 0; x < space.size(); ++x) {
    if (out.phi[x] < out.r) out.u.push_back(x);
  }
  return out;
}

SubsetRef ball(const PointSpace& space, std::size_t center, double radius, BallKind kind) {
  if (center >= space.size()) throw Error(ErrorCode::IndexOutOfRange, std::to_string(center));
  if (radius < 0.0 || (kind == BallKind::Open && radius == 0.0) || std::isnan(radius)) {
    throw Error(ErrorCode::InvalidRadius, std::to_string(radius));
  }
  SubsetRef out;
  for (std::size_t q = 0; q < space.size(); ++q) {
    const double d = space.dist(center, q);
    if (kind == BallKind::Open ? d < radius : d <= radius) out.push_back(q);
  }
  return out;
}

}  // namespace hlab
