#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hlab/atomic_covering.hpp"
#include "hlab/error.hpp"
#include "hlab/generators.hpp"
#include "hlab/io.hpp"
#include "hlab/sequence_space.hpp"
#include "hlab/verify.hpp"

namespace {

using hlab::Error;
using hlab::ErrorCode;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInvariant = 1;
constexpr int kExitParse = 2;
constexpr int kExitLimit = 3;

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    hlab::io::write_text_file(out_path, text);
  }
}

void emit_json(const std::string& out_path, const json& j) { emit(out_path, j.dump(2) + "\n"); }

// "0:1,2:3" -> [[0,1],[2,3]]
std::vector<hlab::Interval> parse_intervals(const std::string& text) {
  std::vector<hlab::Interval> out;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    const auto colon = part.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::ParseError, "interval must be lo:hi, got '" + part + "'");
    out.push_back({hlab::io::parse_real(part.substr(0, colon)), hlab::io::parse_real(part.substr(colon + 1))});
  }
  if (out.empty()) throw Error(ErrorCode::BadParams, "no intervals given");
  return out;
}

struct GenArgs {
  std::string kind;
  int depth = 3;
  int n = 2;
  std::string rho = "1/3";
  std::string as = "atoms";
  std::string intervals = "0:1";
  std::size_t samples = 1000;
  std::size_t dim = 1;
  double jitter = 0.0;
  std::uint64_t seed = 1;
  std::string out;
};

int run_gen(const GenArgs& a) {
  json config{{"command", "gen"}, {"kind", a.kind}};
  if (a.kind == "cantor") {
    config["depth"] = a.depth;
    config["as"] = a.as;
    if (a.as == "cloud") {
      json j = hlab::io::to_json(hlab::PointSpace::from_coordinates(hlab::cantor_endpoints(a.depth)));
      j["config"] = config;
      emit_json(a.out, j);
      return kExitOk;
    }
    if (a.as != "atoms") throw Error(ErrorCode::BadParams, "--as must be atoms or cloud");
    const hlab::SequenceSpaceSpec spec = hlab::cantor_spec(a.depth);
    const hlab::Materialization m = hlab::materialize(spec);
    json j = hlab::io::to_json(m.atoms);
    j["sequence_space"] = hlab::io::to_json(spec);
    j["words"] = m.words;
    j["config"] = config;
    emit_json(a.out, j);
    return kExitOk;
  }
  if (a.kind == "seqspace") {
    const hlab::SequenceSpaceSpec spec = hlab::SequenceSpaceSpec::create(a.n, hlab::io::parse_real(a.rho), a.depth);
    config["n"] = a.n;
    config["rho"] = spec.rho;
    config["depth"] = a.depth;
    const hlab::Materialization m = hlab::materialize(spec);
    json j = hlab::io::to_json(m.atoms);
    j["sequence_space"] = hlab::io::to_json(spec);
    j["alpha_star"] = spec.alpha_star();
    j["words"] = m.words;
    j["config"] = config;
    emit_json(a.out, j);
    return kExitOk;
  }
  if (a.kind == "interval-union") {
    const hlab::IntervalSet set(parse_intervals(a.intervals));
    config["intervals"] = a.intervals;
    json j = hlab::io::to_json(set);
    j["config"] = config;
    emit_json(a.out, j);
    return kExitOk;
  }
  if (a.kind == "circle") {
    std::ostringstream csv;
    hlab::io::write_path_csv(csv, hlab::circle_path(a.samples));
    emit(a.out, csv.str());
    return kExitOk;
  }
  if (a.kind == "grid-cloud") {
    config["samples"] = a.samples;
    config["dim"] = a.dim;
    config["jitter"] = a.jitter;
    config["seed"] = a.seed;
    json j = hlab::io::to_json(hlab::PointSpace::from_coordinates(hlab::grid_cloud(a.samples, a.dim, a.jitter, a.seed)));
    j["config"] = config;
    emit_json(a.out, j);
    return kExitOk;
  }
  throw Error(ErrorCode::BadParams, "unknown kind '" + a.kind + "'");
}

struct ContentArgs {
  std::string file;
  std::string alpha;
  std::string delta = "inf";
  std::string mode = "exact";
  std::optional<std::string> target;
  std::optional<std::string> weights;
  std::string out;
};

// Any supported input file, turned into an atomic presentation.
struct LoadedSpace {
  std::string format;
  hlab::AtomicSpace atoms;
  std::optional<hlab::IntervalSet> intervals;
};

LoadedSpace load_space(const json& j, std::size_t interval_pieces) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "input must be a JSON object");
  if (j.contains("atom_diam")) return {"atomic", hlab::io::atomic_space_from_json(j), std::nullopt};
  if (j.contains("intervals")) {
    const hlab::IntervalSet set = hlab::io::interval_set_from_json(j).normalized();
    return {"intervals", hlab::interval_presentation(set, interval_pieces), set};
  }
  if (j.contains("points") || j.contains("dist")) {
    return {"points", hlab::AtomicSpace::from_points(hlab::io::point_space_from_json(j)), std::nullopt};
  }
  if (j.contains("n") && j.contains("rho") && j.contains("depth")) {
    return {"seqspace", hlab::materialize(hlab::io::sequence_spec_from_json(j)).atoms, std::nullopt};
  }
  throw Error(ErrorCode::ParseError, "unrecognized space file");
}

int run_content(const ContentArgs& a) {
  const double alpha = hlab::io::parse_real(a.alpha);
  const double delta_raw = hlab::io::parse_real(a.delta);
  const hlab::Extended delta = hlab::Extended::from_double(delta_raw);
  const hlab::CoveringOptions options = hlab::CoveringOptions::from_environment();
  const hlab::IntervalOptions interval_options{hlab::IntervalOptions{}.refinement_atoms, options};

  const LoadedSpace loaded = load_space(hlab::io::read_json_file(a.file), interval_options.refinement_atoms);
  const hlab::SubsetRef target = a.target ? hlab::io::parse_index_list(*a.target) : loaded.atoms.all();

  hlab::ContentEstimate est;
  if (a.mode == "exact") {
    if (loaded.intervals && !a.target && delta.is_infinite()) {
      est = hlab::interval_content(*loaded.intervals, alpha, interval_options);
    } else {
      est = hlab::exact_content(loaded.atoms, target, alpha, delta, options);
    }
  } else if (a.mode == "greedy") {
    if (delta.is_infinite()) throw Error(ErrorCode::InvalidDelta, "greedy mode needs a finite --delta");
    est = hlab::greedy_content(loaded.atoms, target, alpha, delta.finite_value());
  } else if (a.mode == "lower") {
    hlab::WeightAssignment w;
    if (a.weights) {
      w.weights = hlab::io::parse_real_list(*a.weights);
      if (w.weights.size() != loaded.atoms.size()) {
        throw Error(ErrorCode::BadParams, "--weights needs one value per atom");
      }
    } else {
      w.weights.assign(loaded.atoms.size(), 1.0 / static_cast<double>(std::max<std::size_t>(1, loaded.atoms.size())));
    }
    est = hlab::mass_lower_bound(loaded.atoms, target, alpha, delta, w, options);
  } else {
    throw Error(ErrorCode::BadParams, "--mode must be exact, greedy or lower");
  }

  json j = hlab::io::to_json(est);
  j["atoms"] = loaded.atoms.size();
  j["target"] = target;
  j["config"] = json{{"command", "content"},     {"file", a.file},   {"format", loaded.format},
                     {"alpha", alpha},           {"delta", hlab::io::to_json(delta)},
                     {"mode", a.mode},           {"dp_limit", options.dp_limit}};
  emit_json(a.out, j);
  return kExitOk;
}

struct DimArgs {
  std::string file;
  std::string scales;
  std::string bracket;
  std::string out;
};

int run_dim(const DimArgs& a) {
  const json input = hlab::io::read_json_file(a.file);
  std::vector<double> scales = hlab::io::parse_real_list(a.scales);
  std::pair<double, double> bracket{0.0, 1e300};
  if (!a.bracket.empty()) {
    const std::vector<double> b = hlab::io::parse_real_list(a.bracket);
    if (b.size() != 2 || !(b[0] <= b[1])) throw Error(ErrorCode::BadParams, "--bracket needs lo,hi");
    bracket = {b[0], b[1]};
  }

  hlab::DimensionEstimate est;
  std::string format;
  if (input.contains("atom_diam")) {
    const hlab::AtomicSpace atoms = hlab::io::atomic_space_from_json(input);
    est = hlab::dimension_estimate(atoms, atoms.all(), scales, bracket);
    format = "atomic";
  } else {
    const hlab::PointSpace cloud = hlab::io::point_space_from_json(input);
    est = hlab::dimension_estimate(cloud, cloud.all(), scales, bracket);
    format = "points";
  }

  json j = hlab::io::to_json(est);
  if (!est.diagnostics.saturated_scales.empty()) j["warning"] = "saturated scales present";
  j["config"] = json{{"command", "dim"}, {"file", a.file}, {"format", format}, {"scales", scales},
                     {"bracket", {bracket.first, bracket.second}}};
  emit_json(a.out, j);
  return kExitOk;
}

struct VerifyArgs {
  std::string suite;
  std::uint64_t seed = 1;
  std::size_t cases = 100;
  std::string out;
};

int run_verify(const VerifyArgs& a) {
  const hlab::CoveringOptions options = hlab::CoveringOptions::from_environment();
  std::vector<std::string> suites;
  if (a.suite == "all") {
    suites = hlab::suite_names();
  } else {
    suites = {a.suite};
  }
  json reports = json::array();
  bool ok = true;
  for (const std::string& s : suites) {
    const hlab::SuiteReport r = hlab::run_suite(s, a.seed, a.cases, options);
    ok = ok && r.passed();
    reports.push_back(r.to_json());
    std::cerr << s << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.checks << " checks, "
              << r.failures.size() << " failures)\n";
  }
  json j{{"passed", ok},
         {"reports", reports},
         {"config", {{"command", "verify"}, {"suite", a.suite}, {"seed", a.seed}, {"cases", a.cases},
                     {"dp_limit", options.dp_limit}}}};
  emit_json(a.out, j);
  return ok ? kExitOk : kExitInvariant;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hausdorff content and dimension laboratory"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a space or path file");
  gen_cmd->add_option("kind", gen.kind, "cantor | seqspace | interval-union | circle | grid-cloud")->required();
  gen_cmd->add_option("--depth", gen.depth, "Word length (cantor, seqspace)");
  gen_cmd->add_option("--n", gen.n, "Alphabet size (seqspace)");
  gen_cmd->add_option("--rho", gen.rho, "Contraction ratio (seqspace)");
  gen_cmd->add_option("--as", gen.as, "cantor output: atoms or cloud");
  gen_cmd->add_option("--intervals", gen.intervals, "interval-union: lo:hi,lo:hi,...");
  gen_cmd->add_option("--samples", gen.samples, "circle samples, or grid points per axis");
  gen_cmd->add_option("--dim", gen.dim, "grid-cloud dimension");
  gen_cmd->add_option("--jitter", gen.jitter, "grid-cloud jitter as a fraction of the spacing");
  gen_cmd->add_option("--seed", gen.seed, "Seed for randomized generators");
  gen_cmd->add_option("--out", gen.out, "Output path (default stdout)");

  ContentArgs content;
  auto* content_cmd = app.add_subcommand("content", "Compute H^alpha_delta of a space file");
  content_cmd->add_option("file", content.file, "Space JSON")->required();
  content_cmd->add_option("--alpha", content.alpha, "Exponent, e.g. 1, 0.5, log2/log3")->required();
  content_cmd->add_option("--delta", content.delta, "Scale; inf for content");
  content_cmd->add_option("--mode", content.mode, "exact | greedy | lower");
  content_cmd->add_option("--target", content.target, "Comma separated atom indices (default all)");
  content_cmd->add_option("--weights", content.weights, "Per-atom weights for --mode lower");
  content_cmd->add_option("--out", content.out, "Output path (default stdout)");

  DimArgs dim;
  auto* dim_cmd = app.add_subcommand("dim", "Estimate dimension of a point cloud");
  dim_cmd->add_option("file", dim.file, "Cloud JSON")->required();
  dim_cmd->add_option("--scales", dim.scales, "Comma separated scales, e.g. 3^-1,3^-2")->required();
  dim_cmd->add_option("--bracket", dim.bracket, "Expected range lo,hi");
  dim_cmd->add_option("--out", dim.out, "Output path (default stdout)");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run a randomized invariant suite");
  verify_cmd->add_option("suite", verify.suite, "content-laws | transforms | curves | slicing | separation | all")
      ->required();
  verify_cmd->add_option("--seed", verify.seed, "Generator seed");
  verify_cmd->add_option("--cases", verify.cases, "Number of random instances");
  verify_cmd->add_option("--out", verify.out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*content_cmd) return run_content(content);
    if (*dim_cmd) return run_dim(dim);
    if (*verify_cmd) return run_verify(verify);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return hlab::is_limit_error(e.code()) ? kExitLimit : kExitParse;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error [ParseError]: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitParse;
}
