// Prints one PASS/FAIL line per acceptance criterion. Optional argv[1] is the
// path of the hlab command-line tool; when given, criteria 1 and 2 are also
// checked through it.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <memory>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "hlab/atomic_covering.hpp"
#include "hlab/curves.hpp"
#include "hlab/generators.hpp"
#include "hlab/io.hpp"
#include "hlab/metric_core.hpp"
#include "hlab/sequence_space.hpp"
#include "hlab/slicing.hpp"
#include "hlab/transforms.hpp"
#include "hlab/verify.hpp"

using namespace hlab;
using nlohmann::json;

namespace {

const double kCantorAlpha = std::log(2.0) / std::log(3.0);
std::string g_cli;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string run_command(const std::string& cmd, int& status) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    status = -1;
    return out;
  }
  char buf[4096];
  std::size_t n = 0;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  status = pclose(pipe);
  return out;
}

// Runs "hlab content" on a temporary file and returns the reported value.
double cli_content(const json& space, const std::string& args, const std::string& env = "") {
  const std::string path = "acceptance_input_" + std::to_string(std::hash<std::string>{}(space.dump())) + ".json";
  io::write_text_file(path, space.dump());
  int status = 0;
  const std::string out = run_command(env + " " + g_cli + " content " + path + " " + args, status);
  std::remove(path.c_str());
  if (status != 0) throw std::runtime_error("cli exited with status " + std::to_string(status));
  const json j = json::parse(out);
  if (j.at("value").is_string()) return INFINITY;
  return j.at("value").get<double>();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Criterion = std::function<Outcome()>;

Outcome criterion1() {
  Outcome o;
  std::ostringstream d;
  for (int depth : {3, 4}) {
    const AtomicSpace atoms = materialize(cantor_spec(depth)).atoms;
    CoveringOptions opts{16};
    const auto t0 = std::chrono::steady_clock::now();
    const ContentEstimate e = exact_content(atoms, atoms.all(), kCantorAlpha, Extended::infinity(), opts);
    const double secs = seconds_since(t0);
    const double limit = depth == 3 ? 1.0 : 60.0;
    const bool ok = e.value.is_finite() && std::abs(e.value.finite_value() - 1.0) <= 1e-9 &&
                    e.bound == BoundKind::Exact && secs < limit;
    o.pass = o.pass && ok;
    d << "depth " << depth << ": " << e.value.to_string() << " in " << secs << "s; ";
    if (!g_cli.empty()) {
      json file = io::to_json(atoms);
      const auto t1 = std::chrono::steady_clock::now();
      const double v = cli_content(file, "--alpha log2/log3", "HLAB_DP_LIMIT=16");
      const double cli_secs = seconds_since(t1);
      o.pass = o.pass && std::abs(v - 1.0) <= 1e-9 && cli_secs < limit;
      d << "cli " << v << " in " << cli_secs << "s; ";
    }
  }
  o.detail = d.str();
  return o;
}

Outcome criterion2() {
  Outcome o;
  std::ostringstream d;
  const std::vector<std::pair<double, double>> cases{{0, 1}, {2, 3}, {-1.5, 2.25}, {0.1, 0.7}, {5, 5}};
  for (const auto& [a, b] : cases) {
    const Extended v = interval_content(IntervalSet({{a, b}}), 1.0).value;
    o.pass = o.pass && v == Extended(b - a);
  }
  const Extended two = interval_content(IntervalSet({{0, 1}, {2, 3}}), 1.0).value;
  o.pass = o.pass && two == Extended(2.0);
  d << "[0,1]u[2,3] -> " << two.to_string();
  if (!g_cli.empty()) {
    const double v = cli_content(io::to_json(IntervalSet({{0, 1}, {2, 3}})), "--alpha 1");
    o.pass = o.pass && v == 2.0;
    d << "; cli " << v;
  }
  o.detail = d.str();
  return o;
}

Outcome criterion3() {
  Outcome o;
  Rng rng(3);
  std::size_t profiles = 0;
  for (std::size_t n : {2, 5, 9, 14}) {
    std::vector<double> xs;
    double x = 0.0;
    double min_sep = INFINITY;
    for (std::size_t i = 0; i < n; ++i) {
      const double step = rng.uniform(0.1, 1.0);
      x += step;
      if (i > 0) min_sep = std::min(min_sep, step);
      xs.push_back(x);
    }
    std::vector<std::vector<double>> pts;
    for (double v : xs) pts.push_back({v});
    const AtomicSpace s = AtomicSpace::from_points(PointSpace::from_coordinates(pts));
    const std::vector<Extended> grid{Extended::infinity(), Extended(min_sep * 2.0), Extended(min_sep),
                                     Extended(min_sep * 0.5), Extended(min_sep * 0.01)};
    const auto profile = measure_profile(s, s.all(), 0.0, grid);
    // Points differ in float by at least min_sep up to rounding; the last
    // three scales are at or below it.
    for (std::size_t i = 3; i < grid.size(); ++i) {
      o.pass = o.pass && profile[i].value == Extended(static_cast<double>(n));
    }
    for (std::size_t i = 1; i < grid.size(); ++i) o.pass = o.pass && profile[i - 1].value <= profile[i].value;
    ++profiles;
  }
  o.detail = std::to_string(profiles) + " separated point sets";
  return o;
}

// Runs a suite until every listed check has at least `need` evaluations.
Outcome suite_criterion(const std::string& suite, const std::vector<std::string>& checks, std::size_t need,
                        std::size_t cases) {
  Outcome o;
  const SuiteReport r = run_suite(suite, 20240601, cases);
  std::ostringstream d;
  o.pass = r.passed();
  for (const std::string& c : checks) {
    const auto it = r.check_counts.find(c);
    const std::size_t count = it == r.check_counts.end() ? 0 : it->second;
    o.pass = o.pass && count >= need;
    d << c << "=" << count << " ";
  }
  d << "violations=" << r.failures.size();
  if (!r.failures.empty()) d << " first=" << r.failures.front().check;
  o.detail = d.str();
  return o;
}

Outcome criterion4() {
  return suite_criterion("content-laws",
                         {"monotonicity", "subadditivity", "delta-separated-additivity", "delta-monotonicity",
                          "exponent-comparison"},
                         200, 800);
}

Outcome criterion5() {
  Outcome o = suite_criterion("transforms", {"snowflake-reindexing"}, 100, 100);
  const AtomicSpace cantor = materialize(cantor_spec(3)).atoms;
  const AtomicSpace half = snowflake(cantor, 0.5);
  for (const Extended delta : {Extended::infinity(), Extended(0.5), Extended(0.2), Extended(0.05)}) {
    const Extended base = exact_content(cantor, cantor.all(), kCantorAlpha, delta).value;
    const Extended dt = delta.is_infinite() ? delta : Extended(std::sqrt(delta.finite_value()));
    const Extended snow = exact_content(half, half.all(), 2.0 * kCantorAlpha, dt).value;
    o.pass = o.pass && base.is_finite() && snow.is_finite() &&
             std::abs(base.finite_value() - snow.finite_value()) <= 1e-9;
  }
  o.detail += "; Cantor t=1/2 checked at 4 scales";
  return o;
}

Outcome criterion6() { return suite_criterion("transforms", {"lipschitz-pushforward"}, 100, 100); }

Outcome criterion7() {
  Outcome o;
  const AtomicSpace cells = materialize(cantor_spec(3)).atoms;
  const WeightAssignment w{std::vector<double>(cells.size(), 1.0 / static_cast<double>(cells.size()))};
  const ContentEstimate lower = mass_lower_bound(cells, cells.all(), kCantorAlpha, Extended::infinity(), w);
  const ContentEstimate exact = exact_content(cells, cells.all(), kCantorAlpha, Extended::infinity());
  o.pass = lower.value.is_finite() && std::abs(lower.value.finite_value() - 1.0) <= 1e-9 &&
           std::abs(lower.value.finite_value() - exact.value.finite_value()) <= 1e-9;
  o.detail = "lower " + lower.value.to_string() + ", exact " + exact.value.to_string();
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::ostringstream d;
  {
    const PointSpace cloud = PointSpace::from_coordinates(cantor_endpoints(10));
    std::vector<double> scales;
    for (int k = 1; k <= 8; ++k) scales.push_back(std::pow(3.0, -k));
    const auto t0 = std::chrono::steady_clock::now();
    const DimensionEstimate e = dimension_estimate(cloud, cloud.all(), scales);
    const double secs = seconds_since(t0);
    o.pass = o.pass && std::abs(e.alpha_hat - kCantorAlpha) <= 0.05 && secs < 10.0;
    d << "Cantor " << e.alpha_hat << " in " << secs << "s; ";
  }
  {
    const PointSpace cloud = PointSpace::from_coordinates(uniform_line(1000));
    std::vector<double> scales;
    for (int k = 2; k <= 7; ++k) scales.push_back(std::pow(2.0, -k));
    const auto t0 = std::chrono::steady_clock::now();
    const DimensionEstimate e = dimension_estimate(cloud, cloud.all(), scales);
    const double secs = seconds_since(t0);
    o.pass = o.pass && std::abs(e.alpha_hat - 1.0) <= 0.05 && secs < 10.0;
    d << "line " << e.alpha_hat << " in " << secs << "s";
  }
  o.detail = d.str();
  return o;
}

SampledPath planar(const std::vector<std::vector<double>>& pts) {
  std::vector<double> t;
  for (std::size_t i = 0; i < pts.size(); ++i) t.push_back(static_cast<double>(i));
  return SampledPath::euclidean(t, pts);
}

Outcome criterion9() {
  Outcome o;
  std::ostringstream d;
  const SampledPath circle = circle_path(1000);
  const double len = length(circle);
  const double expected = 2000.0 * std::sin(std::numbers::pi / 1000.0);
  o.pass = std::abs(len - expected) <= 1e-12 * expected && std::abs(len - 2.0 * std::numbers::pi) < 1.1e-5;
  d << "length " << len << "; ";

  const SampledPath q = arclength_reparameterize(circle);
  bool lipschitz = true;
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t j = i + 1; j < q.size(); ++j) {
      lipschitz = lipschitz && q.distance(i, j) <= (q.params()[j] - q.params()[i]) * (1.0 + 1e-12);
    }
  }
  const bool preserved = std::abs(length(q) - len) <= 1e-12;
  o.pass = o.pass && lipschitz && preserved;
  d << "reparam 1-Lipschitz " << lipschitz << ", length kept " << preserved << "; ";

  const H1Comparison retrace = image_h1_check(planar({{0, 0}, {1, 0}, {1, 1}, {1, 0}, {0, 0}}));
  o.pass = o.pass && !retrace.injective && retrace.content < retrace.length - 1e-9;
  d << "retrace " << retrace.content << " < " << retrace.length << "; ";

  std::vector<std::vector<double>> arc;
  for (int i = 0; i <= 6; ++i) {
    const double t = std::numbers::pi * i / 6.0;
    arc.push_back({std::cos(t), std::sin(t)});
  }
  const std::vector<SampledPath> injective{
      planar({{0, 0}, {0.25, 0}, {0.5, 0}, {0.75, 0}, {1, 0}}),
      planar({{0, 0}, {1, 0}, {1, 1}, {2, 1}}),
      planar({{0, 0}, {3, 4}}),
      planar(arc),
  };
  for (const SampledPath& p : injective) {
    const H1Comparison c = image_h1_check(p);
    o.pass = o.pass && c.injective && std::abs(c.content - c.length) <= 1e-9;
  }
  d << injective.size() << " injective polylines equal";
  o.detail = d.str();
  return o;
}

Outcome criterion10() {
  Outcome o;
  std::vector<Interval> iv;
  for (int i = 0; i < 8; ++i) iv.push_back({i / 8.0, (i + 1) / 8.0});
  const SlicedSpace sliced{interval_atoms(iv), iv};
  Covering cov;
  for (std::size_t i = 0; i < 8; ++i) cov.blocks.push_back(Block{{i}, 0.125, 0.125});
  cov.cost = Extended(1.0);
  const SliceProfile p = build_slice_profile(sliced, cov, 1.0, 1.0);
  o.pass = std::abs(p.integral - 1.0) <= 1e-12 && p.integral <= p.k * p.covering_cost + 1e-12 &&
           std::abs(p.covering_cost - 1.0) <= 1e-12;

  Rng rng(10);
  std::size_t held = 0;
  for (int i = 0; i < 100; ++i) {
    const double r = rng.uniform(-0.1, 1.1);
    held += slice_content_bound(sliced, cov, p, r, 1.0, Extended(0.2)).holds ? 1 : 0;
  }
  o.pass = o.pass && held == 100;

  const std::vector<double> grid{4.0, 1.0, 0.6, 0.3, 0.2, 0.13};
  std::size_t sweep_ok = 0;
  const auto sweep = slice_profile_sweep(sliced, 1.0, 1.0, grid);
  for (const SweepEntry& e : sweep) sweep_ok += (e.feasible && e.holds) ? 1 : 0;
  o.pass = o.pass && sweep_ok == grid.size();
  o.detail = "integral " + std::to_string(p.integral) + ", slices " + std::to_string(held) + "/100, sweep " +
             std::to_string(sweep_ok) + "/" + std::to_string(grid.size());
  return o;
}

Outcome criterion11() {
  return suite_criterion("separation", {"clopen-separation", "u-union-of-cells"}, 1, 200);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli = argv[1];
  const std::vector<std::pair<std::string, Criterion>> criteria{
      {"1 Cantor content equals 1 (depth 3 and 4)", criterion1},
      {"2 interval content equals merged length", criterion2},
      {"3 alpha 0 profile is counting measure", criterion3},
      {"4 scaling laws on 200 instances each", criterion4},
      {"5 snowflake re-indexing", criterion5},
      {"6 Lipschitz pushforward on 100 maps", criterion6},
      {"7 mass distribution bound is tight on Cantor cells", criterion7},
      {"8 dimension estimates", criterion8},
      {"9 curve length, reparameterization, image content", criterion9},
      {"10 slicing profile and slice bounds", criterion10},
      {"11 clopen separation on 200 instances", criterion11},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << name << "  (" << o.detail << ")\n";
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
