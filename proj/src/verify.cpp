#include "hlab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <sstream>
#include <tuple>

#include "hlab/curves.hpp"
#include "hlab/error.hpp"
#include "hlab/generators.hpp"
#include "hlab/io.hpp"
#include "hlab/metric_core.hpp"
#include "hlab/slicing.hpp"
#include "hlab/transforms.hpp"

namespace hlab {

namespace {

using nlohmann::json;

constexpr double kRel = 1e-9;

bool le(Extended a, Extended b) {
  if (b.is_infinite()) return true;
  if (a.is_infinite()) return false;
  return a.finite_value() <= b.finite_value() + kRel * std::max(1.0, std::abs(b.finite_value()));
}

bool approx_eq(Extended a, Extended b) { return le(a, b) && le(b, a); }

Extended scaled(Extended v, double factor) {
  if (v.is_infinite()) return v;
  return Extended(v.finite_value() * factor);
}

class Checker {
 public:
  explicit Checker(SuiteReport& report) : report_(report) {}

  void expect(bool ok, const std::string& check, const std::function<json()>& instance) {
    ++report_.checks;
    ++report_.check_counts[check];
    if (!ok) report_.failures.push_back({check, instance()});
  }

 private:
  SuiteReport& report_;
};

Extended random_delta(Rng& rng, const AtomicSpace& space) {
  if (rng.uniform() < 0.25) return Extended::infinity();
  double scale = 0.0;
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t j = 0; j < space.size(); ++j) scale = std::max(scale, space.sup_dist(i, j));
  }
  return Extended(std::max(scale, 1e-3) * rng.uniform(0.05, 1.2));
}

double random_alpha(Rng& rng) { return rng.uniform() < 0.15 ? 0.0 : rng.uniform(0.0, 2.0); }

SubsetRef set_union(const SubsetRef& a, const SubsetRef& b) {
  SubsetRef u = a;
  u.insert(u.end(), b.begin(), b.end());
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  return u;
}

// Splits 0..n-1 into disjoint random A and B (either may be empty).
std::pair<SubsetRef, SubsetRef> random_disjoint(Rng& rng, std::size_t n) {
  SubsetRef a, b;
  for (std::size_t i = 0; i < n; ++i) {
    const double u = rng.uniform();
    if (u < 0.4) {
      a.push_back(i);
    } else if (u < 0.8) {
      b.push_back(i);
    }
  }
  return {a, b};
}

void content_laws_case(Rng& rng, Checker& check, const CoveringOptions& options) {
  const std::size_t atoms = 2 + rng.index(7);
  const AtomicSpace space = random_atomic_space(rng, atoms);
  const double alpha = random_alpha(rng);
  const Extended delta = random_delta(rng, space);
  const SubsetRef a = random_subset(rng, space.size());
  const SubsetRef b = random_subset(rng, space.size());
  const SubsetRef ab = set_union(a, b);
  auto instance = [&] {
    return json{{"space", io::to_json(space)}, {"alpha", alpha}, {"delta", io::to_json(delta)},
                {"A", a}, {"B", b}};
  };
  auto content = [&](const SubsetRef& t, double al, Extended d) {
    return exact_content(space, t, al, d, options).value;
  };

  const Extended ca = content(a, alpha, delta);
  const Extended cb = content(b, alpha, delta);
  const Extended cab = content(ab, alpha, delta);
  check.expect(le(ca, cab), "monotonicity", instance);
  check.expect(le(cab, ca + cb), "subadditivity", instance);

  // A smaller delta never lowers the value.
  const Extended finer = delta.is_infinite() ? random_delta(rng, space)
                                             : Extended(delta.finite_value() * rng.uniform(0.2, 1.0));
  check.expect(le(cab, content(ab, alpha, finer)), "delta-monotonicity", instance);

  if (delta.is_finite()) {
    const double beta = alpha + rng.uniform(0.01, 1.0);
    if (cab.is_finite()) {
      const Extended rhs = scaled(cab, std::pow(delta.finite_value(), beta - alpha));
      check.expect(le(content(ab, beta, delta), rhs), "exponent-comparison", instance);
    }
    bool feasible = true;
    for (std::size_t i : ab) feasible = feasible && space.atom_diam(i) < delta.finite_value();
    if (feasible) {
      check.expect(le(cab, greedy_content(space, ab, alpha, delta.finite_value()).value),
                   "greedy-upper-bound", instance);
    }
  }

  WeightAssignment w;
  for (std::size_t i = 0; i < space.size(); ++i) w.weights.push_back(rng.uniform());
  check.expect(le(mass_lower_bound(space, ab, alpha, delta, w, options).value, cab), "mass-lower-bound",
               instance);

  // Separated pieces add once delta is at most their distance.
  const auto [p, q] = random_disjoint(rng, space.size());
  if (!p.empty() && !q.empty()) {
    const double gap = space.set_distance(p, q);
    if (gap > 0.0) {
      const Extended sep(gap * rng.uniform(0.3, 1.0));
      const Extended lhs = content(set_union(p, q), alpha, sep);
      const Extended rhs = content(p, alpha, sep) + content(q, alpha, sep);
      check.expect(approx_eq(lhs, rhs), "delta-separated-additivity", [&] {
        return json{{"space", io::to_json(space)}, {"alpha", alpha}, {"delta", io::to_json(sep)},
                    {"A", p}, {"B", q}};
      });
    }
  }
}

void transforms_case(Rng& rng, Checker& check, const CoveringOptions& options) {
  // Snowflake re-indexing on a random presentation.
  {
    const AtomicSpace space = random_atomic_space(rng, 2 + rng.index(7));
    const bool ultra = is_ultrametric(space);
    const double t = ultra && rng.coin() ? rng.uniform(1.0, 3.0) : rng.uniform(0.2, 1.0);
    const double alpha = random_alpha(rng);
    const Extended delta = random_delta(rng, space);
    const Extended delta_t = delta.is_infinite() ? delta : Extended(std::pow(delta.finite_value(), t));
    const Extended lhs = exact_content(snowflake(space, t), space.all(), alpha / t, delta_t, options).value;
    const Extended rhs = exact_content(space, space.all(), alpha, delta, options).value;
    check.expect(approx_eq(lhs, rhs), "snowflake-reindexing", [&] {
      return json{{"space", io::to_json(space)}, {"t", t}, {"alpha", alpha}, {"delta", io::to_json(delta)}};
    });
  }

  const std::size_t n = 3 + rng.index(8);
  auto domain = std::make_shared<const PointSpace>(random_cloud(rng, n, 2));
  auto codomain = std::make_shared<const PointSpace>(random_cloud(rng, 2 + rng.index(8), 2));
  std::vector<std::size_t> assign(n);
  for (std::size_t& v : assign) v = rng.index(codomain->size());
  assign[1] = (assign[0] + 1) % codomain->size();  // nonconstant
  const MetricMap map(domain, codomain, assign);
  const auto groups = random_groups(rng, n, 1 + rng.index(std::min<std::size_t>(n, 7)));
  const AtomicSpace dom_atoms = AtomicSpace::from_point_groups(*domain, groups);
  const AtomicSpace img_atoms = image_presentation(map, groups);
  const double alpha = random_alpha(rng);
  auto instance = [&] {
    return json{{"domain", io::to_json(*domain)}, {"codomain", io::to_json(*codomain)},
                {"assignment", assign}, {"groups", groups}, {"alpha", alpha}};
  };

  // Lipschitz pushforward at (alpha, k delta).
  const double k = lipschitz_constant(map);
  const Extended delta = random_delta(rng, dom_atoms);
  const Extended kdelta = delta.is_infinite() ? delta : Extended(k * delta.finite_value());
  const Extended img = exact_content(img_atoms, img_atoms.all(), alpha, kdelta, options).value;
  const Extended dom = exact_content(dom_atoms, dom_atoms.all(), alpha, delta, options).value;
  check.expect(le(img, scaled(dom, std::pow(k, alpha))), "lipschitz-pushforward", instance);

  // Hoelder pushforward and order change.
  const double a = rng.uniform(0.3, 1.0);
  const double ka = holder_constant(map, a);
  const Extended img_con = exact_content(img_atoms, img_atoms.all(), alpha, Extended::infinity(), options).value;
  const Extended dom_con =
      exact_content(dom_atoms, dom_atoms.all(), a * alpha, Extended::infinity(), options).value;
  check.expect(le(img_con, scaled(dom_con, std::pow(ka, alpha))), "holder-pushforward", instance);
  const MetricMap snow(std::make_shared<const PointSpace>(snowflake(*domain, a)), codomain, assign);
  check.expect(std::abs(lipschitz_constant(snow) - ka) <= kRel * std::max(1.0, ka), "holder-order-change",
               instance);

  // Bilipschitz sandwich on a perturbed copy.
  std::vector<std::vector<double>> moved = domain->coordinates();
  for (auto& p : moved) {
    for (double& x : p) x += rng.uniform(-0.05, 0.05);
  }
  auto moved_space = std::make_shared<const PointSpace>(PointSpace::from_coordinates(moved));
  std::vector<std::size_t> id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = i;
  const MetricMap bi(domain, moved_space, id);
  try {
    const double kb = bilipschitz_constant(bi);
    const AtomicSpace moved_atoms = image_presentation(bi, groups);
    const Extended h = exact_content(dom_atoms, dom_atoms.all(), alpha, Extended::infinity(), options).value;
    const Extended hi = exact_content(moved_atoms, moved_atoms.all(), alpha, Extended::infinity(), options).value;
    check.expect(le(scaled(h, std::pow(kb, -alpha)), hi) && le(hi, scaled(h, std::pow(kb, alpha))),
                 "bilipschitz-sandwich", instance);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotInjective) throw;
  }
}

void curves_case(Rng& rng, Checker& check, const CoveringOptions& options) {
  const std::size_t samples = 2 + rng.index(29);
  const SampledPath path = random_walk_path(rng, samples, 1 + rng.index(3));
  auto instance = [&] {
    std::ostringstream csv;
    io::write_path_csv(csv, path);
    return json{{"path_csv", csv.str()}};
  };
  const double total = length(path);
  const double tol = 1e-12 * std::max(1.0, total);

  // Refinement never decreases partition sums.
  std::vector<std::size_t> coarse{0}, fine{0};
  for (std::size_t i = 1; i + 1 < samples; ++i) {
    const double u = rng.uniform();
    if (u < 0.3) coarse.push_back(i);
    if (u < 0.7) fine.push_back(i);
  }
  coarse.push_back(samples - 1);
  fine.push_back(samples - 1);
  if (samples == 1) {
    coarse.pop_back();
    fine.pop_back();
  }
  check.expect(partition_sum(path, coarse) <= partition_sum(path, fine) + tol, "refinement-monotonicity",
               instance);

  const SampledPath q = arclength_reparameterize(path);
  bool lipschitz = true;
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t j = i + 1; j < q.size(); ++j) {
      lipschitz = lipschitz && q.distance(i, j) <= (q.params()[j] - q.params()[i]) + tol;
    }
  }
  check.expect(lipschitz, "arclength-1-lipschitz", instance);
  check.expect(std::abs(length(q) - total) <= tol, "arclength-preserves-length", instance);

  double diam = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    for (std::size_t j = i + 1; j < samples; ++j) diam = std::max(diam, path.distance(i, j));
  }
  check.expect(diam <= total + tol, "diameter-le-length", instance);

  std::vector<double> relabeled;
  for (double t : path.params()) relabeled.push_back(std::exp(0.3 * t) + t);
  check.expect(length(path.relabeled(relabeled)) == total, "relabel-invariance", instance);

  const double cut = path.params()[rng.index(samples)];
  const auto [left, right] = split_length(path, cut);
  check.expect(std::abs(left + right - total) <= tol, "split-additivity", instance);

  if (samples - 1 <= std::min<std::size_t>(options.dp_limit, 8)) {
    const H1Comparison cmp = image_h1_check(path, options);
    check.expect(cmp.content_le_length, "content-le-length", instance);
    check.expect(cmp.image_diameter <= cmp.content + 1e-9 * std::max(1.0, cmp.content),
                 "diameter-le-content", instance);
  }
}

void slicing_case(Rng& rng, Checker& check, const CoveringOptions& options) {
  SlicedSpace sliced;
  double k = 1.0;
  if (rng.coin()) {
    std::vector<Interval> iv(2 + rng.index(7));
    for (Interval& x : iv) {
      const double lo = rng.uniform(0.0, 2.0);
      x = {lo, lo + rng.uniform(0.0, 0.5)};
    }
    sliced = {interval_atoms(iv), iv};
  } else {
    const std::size_t n = 3 + rng.index(10);
    std::vector<std::vector<double>> pts;
    for (std::size_t i = 0; i < n; ++i) pts.push_back({rng.uniform(), rng.uniform()});
    const PointSpace cloud = PointSpace::from_coordinates(pts);
    const auto groups = random_groups(rng, n, 2 + rng.index(std::min<std::size_t>(n - 1, 7)));
    std::vector<double> f(n);
    for (std::size_t i = 0; i < n; ++i) f[i] = pts[i][0] + pts[i][1];  // sqrt(2)-Lipschitz
    k = std::sqrt(2.0) * rng.uniform(1.0, 2.0);
    sliced = {AtomicSpace::from_point_groups(cloud, groups), f_intervals_from_values(groups, f)};
  }
  const double alpha = rng.uniform(1.0, 2.0);
  double max_atom = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < sliced.space.size(); ++i) {
    max_atom = std::max(max_atom, sliced.space.atom_diam(i));
    for (std::size_t j = 0; j < sliced.space.size(); ++j) scale = std::max(scale, sliced.space.sup_dist(i, j));
  }
  const double delta = max_atom + (scale - max_atom) * rng.uniform(0.05, 1.0) + 1e-6;
  auto instance = [&] {
    json iv = json::array();
    for (const Interval& x : sliced.f_image) iv.push_back({x.lo, x.hi});
    return json{{"space", io::to_json(sliced.space)}, {"f_image", iv}, {"alpha", alpha}, {"k", k},
                {"delta", delta}};
  };

  const ContentEstimate est = exact_content(sliced.space, sliced.space.all(), alpha, Extended(delta), options);
  const SliceProfile profile = build_slice_profile(sliced, *est.covering, alpha, k);
  check.expect(profile.integral <= k * profile.covering_cost * (1.0 + 1e-12) + 1e-15, "integral-bound", instance);

  double piecewise = 0.0;
  for (std::size_t i = 0; i < profile.values.size(); ++i) {
    piecewise += profile.values[i] * (profile.breakpoints[i + 1] - profile.breakpoints[i]);
  }
  check.expect(std::abs(piecewise - profile.integral) <= kRel * std::max(1.0, profile.integral),
               "integral-identity", instance);

  for (int s = 0; s < 5; ++s) {
    const double lo = profile.breakpoints.empty() ? 0.0 : profile.breakpoints.front();
    const double hi = profile.breakpoints.empty() ? 1.0 : profile.breakpoints.back();
    const double r = rng.uniform(lo - 0.1, hi + 0.1);
    const SliceCheck sc = slice_content_bound(sliced, *est.covering, profile, r, alpha, Extended(delta), options);
    check.expect(sc.holds, "slice-content-bound", instance);
  }
}

void separation_case(Rng& rng, Checker& check, const CoveringOptions&) {
  const std::size_t n = 3 + rng.index(10);
  const bool ultra = rng.coin();
  const PointSpace space = ultra ? random_ultrametric(rng, n) : random_cloud(rng, n, 2);
  SubsetRef a, b;
  while (a.empty() || b.empty()) std::tie(a, b) = random_disjoint(rng, n);
  auto instance = [&] { return json{{"space", io::to_json(space)}, {"A", a}, {"B", b}}; };

  const ClopenSeparation sep = clopen_separation(space, a, b);
  const bool contains_a = std::all_of(a.begin(), a.end(), [&](std::size_t x) {
    return std::binary_search(sep.u.begin(), sep.u.end(), x);
  });
  const bool misses_b = std::none_of(b.begin(), b.end(), [&](std::size_t x) {
    return std::binary_search(sep.u.begin(), sep.u.end(), x);
  });
  const bool empty_level = std::none_of(sep.phi.begin(), sep.phi.end(), [&](double v) { return v == sep.r; });
  check.expect(contains_a && misses_b && empty_level && sep.r > 0.0 && sep.r < 1.0, "clopen-separation",
               instance);

  bool lip = true;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      lip = lip && std::abs(dist_to_set(space, x, a) - dist_to_set(space, y, a)) <= space.dist(x, y) * (1 + kRel);
    }
  }
  check.expect(lip, "dist-to-set-1-lipschitz", instance);

  if (ultra) {
    bool local = true;
    for (std::size_t x = 0; x < n; ++x) {
      const double eps = std::min(dist_to_set(space, x, a), dist_to_set(space, x, b));
      if (eps == 0.0) continue;
      for (std::size_t y : ball(space, x, eps, BallKind::Open)) local = local && sep.phi[y] == sep.phi[x];
    }
    check.expect(local, "phi-locally-constant", instance);

    // U is a union of the open balls around its points that avoid A and B.
    bool cells = true;
    for (std::size_t x : sep.u) {
      const double eps = std::min(dist_to_set(space, x, a), dist_to_set(space, x, b));
      if (eps == 0.0) continue;
      for (std::size_t y : ball(space, x, eps, BallKind::Open)) {
        cells = cells && std::binary_search(sep.u.begin(), sep.u.end(), y);
      }
    }
    check.expect(cells, "u-union-of-cells", instance);
  }
}

}  // namespace

json SuiteReport::to_json() const {
  json fails = json::array();
  for (const SuiteFailure& f : failures) fails.push_back(json{{"check", f.check}, {"instance", f.instance}});
  return json{{"suite", suite}, {"seed", seed},           {"cases", cases},
              {"checks", checks}, {"check_counts", check_counts}, {"passed", passed()},
              {"failures", fails}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"content-laws", "transforms", "curves", "slicing", "separation"};
  return names;
}

SuiteReport run_suite(const std::string& suite, std::uint64_t seed, std::size_t cases,
                      const CoveringOptions& options) {
  using CaseFn = void (*)(Rng&, Checker&, const CoveringOptions&);
  CaseFn fn = nullptr;
  if (suite == "content-laws") fn = content_laws_case;
  if (suite == "transforms") fn = transforms_case;
  if (suite == "curves") fn = curves_case;
  if (suite == "slicing") fn = slicing_case;
  if (suite == "separation") fn = separation_case;
  if (fn == nullptr) throw Error(ErrorCode::BadParams, "unknown suite '" + suite + "'");

  SuiteReport report;
  report.suite = suite;
  report.seed = seed;
  report.cases = cases;
  Rng rng(seed);
  Checker check(report);
  for (std::size_t c = 0; c < cases; ++c) fn(rng, check, options);
  return report;
}

}  // namespace hlab
