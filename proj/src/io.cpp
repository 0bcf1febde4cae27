#include "hlab/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "hlab/error.hpp"

namespace hlab::io {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string& raw) {
  const std::string s = trim(raw);
  if (s == "inf" || s == "+inf" || s == "infinity") return INFINITY;
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "not a number: '" + raw + "'");
  }
  if (used != s.size()) throw Error(ErrorCode::ParseError, "not a number: '" + raw + "'");
  return v;
}

// term := number | "log" number | number "^" number
double parse_term(const std::string& raw) {
  const std::string s = trim(raw);
  if (s.rfind("log", 0) == 0) return std::log(parse_number(s.substr(3)));
  if (const auto caret = s.find('^'); caret != std::string::npos) {
    return std::pow(parse_number(s.substr(0, caret)), parse_number(s.substr(caret + 1)));
  }
  return parse_number(s);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

std::vector<double> number_array(const json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, std::string(what) + " must be an array");
  std::vector<double> out;
  for (const json& v : j) {
    if (!v.is_number()) throw Error(ErrorCode::ParseError, std::string(what) + " must hold numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

std::vector<std::vector<double>> number_matrix(const json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, std::string(what) + " must be an array of rows");
  std::vector<std::vector<double>> out;
  for (const json& row : j) out.push_back(number_array(row, what));
  return out;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

double parse_real(const std::string& text) {
  const std::string s = trim(text);
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty number");
  if (const auto slash = s.find('/'); slash != std::string::npos) {
    return parse_term(s.substr(0, slash)) / parse_term(s.substr(slash + 1));
  }
  return parse_term(s);
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  for (const std::string& part : split(text, ',')) {
    if (!trim(part).empty()) out.push_back(parse_real(part));
  }
  return out;
}

std::vector<std::size_t> parse_index_list(const std::string& text) {
  std::vector<std::size_t> out;
  for (const std::string& part : split(text, ',')) {
    const std::string t = trim(part);
    if (t.empty()) continue;
    if (t.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(ErrorCode::ParseError, "bad index '" + t + "'");
    }
    out.push_back(static_cast<std::size_t>(std::stoull(t)));
  }
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::BadParams, "cannot write " + path);
  out << text;
}

json to_json(Extended v) {
  if (v.is_infinite()) return "inf";
  return v.finite_value();
}

Extended extended_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return Extended::infinity();
  if (j.is_number()) return Extended(j.get<double>());
  throw Error(ErrorCode::ParseError, "expected a number or \"inf\"");
}

PointSpace point_space_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "space must be a JSON object");
  if (j.contains("points")) return PointSpace::from_coordinates(number_matrix(j.at("points"), "points"));
  if (j.contains("dist")) return PointSpace::from_table(DistanceTable::from_rows(number_matrix(j.at("dist"), "dist")));
  throw Error(ErrorCode::ParseError, "space needs \"points\" or \"dist\"");
}

json to_json(const PointSpace& space) {
  if (space.has_coordinates()) return json{{"points", space.coordinates()}};
  return json{{"dist", space.table().rows()}};
}

AtomicSpace atomic_space_from_json(const json& j) {
  for (const char* key : {"atom_diam", "sup_dist", "inf_dist"}) {
    if (!j.contains(key)) throw Error(ErrorCode::ParseError, std::string("atomic space needs \"") + key + "\"");
  }
  const std::string prov = j.contains("provenance") ? j.at("provenance").get<std::string>() : "custom";
  return AtomicSpace::create(number_array(j.at("atom_diam"), "atom_diam"),
                             DistanceTable::from_rows(number_matrix(j.at("sup_dist"), "sup_dist")),
                             DistanceTable::from_rows(number_matrix(j.at("inf_dist"), "inf_dist")),
                             provenance_from_string(prov));
}

json to_json(const AtomicSpace& space) {
  return json{{"atom_diam", space.atom_diams()},
              {"sup_dist", space.sup_table().rows()},
              {"inf_dist", space.inf_table().rows()},
              {"provenance", to_string(space.provenance())}};
}

IntervalSet interval_set_from_json(const json& j) {
  if (!j.contains("intervals")) throw Error(ErrorCode::ParseError, "interval set needs \"intervals\"");
  std::vector<Interval> out;
  for (const std::vector<double>& row : number_matrix(j.at("intervals"), "intervals")) {
    if (row.size() != 2) throw Error(ErrorCode::ParseError, "interval must be [a, b]");
    out.push_back({row[0], row[1]});
  }
  return IntervalSet(std::move(out));
}

json to_json(const IntervalSet& set) {
  json rows = json::array();
  for (const Interval& iv : set.intervals()) rows.push_back({iv.lo, iv.hi});
  return json{{"intervals", rows}};
}

SequenceSpaceSpec sequence_spec_from_json(const json& j) {
  try {
    return SequenceSpaceSpec::create(j.at("n").get<int>(), j.at("rho").get<double>(), j.at("depth").get<int>());
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("sequence space parameters: ") + e.what());
  }
}

json to_json(const SequenceSpaceSpec& spec) {
  return json{{"n", spec.n}, {"rho", spec.rho}, {"depth", spec.depth}};
}

json to_json(const Covering& covering) {
  json blocks = json::array();
  for (const Block& b : covering.blocks) {
    blocks.push_back(json{{"atoms", b.atoms}, {"diameter", b.diameter}, {"cost", b.cost}});
  }
  return json{{"blocks", blocks}, {"cost", to_json(covering.cost)}};
}

json to_json(const ContentEstimate& e) {
  json j{{"value", to_json(e.value)},
         {"bound", to_string(e.bound)},
         {"alpha", e.alpha},
         {"delta", to_json(e.delta)},
         {"method", e.method}};
  if (e.covering) j["witness"] = to_json(*e.covering);
  if (e.weights) {
    j["weights"] = e.weights->weights;
    j["mass_constant"] = to_json(e.mass_constant);
  }
  return j;
}

json to_json(const DimensionEstimate& e) {
  const DimensionDiagnostics& d = e.diagnostics;
  return json{{"alpha_hat", e.alpha_hat},
              {"scales", d.scales},
              {"counts", d.counts},
              {"residuals", d.residuals},
              {"intercept", d.intercept},
              {"saturated_scales", d.saturated_scales},
              {"saturated", !d.saturated_scales.empty()},
              {"in_bracket", d.in_bracket}};
}

json to_json(const MetricReport& r) {
  return json{{"is_metric", r.is_metric},
              {"is_ultrametric", r.is_ultrametric},
              {"quasimetric_constant", r.quasimetric_constant},
              {"worst_triple", {r.worst_triple.x, r.worst_triple.y, r.worst_triple.z}}};
}

std::vector<std::size_t> assignment_from_json(const json& j) {
  if (!j.contains("assignment")) throw Error(ErrorCode::ParseError, "map needs \"assignment\"");
  return j.at("assignment").get<std::vector<std::size_t>>();
}

void write_path_csv(std::ostream& out, const SampledPath& path) {
  if (!path.is_euclidean()) {
    out << "t,index\n";
    for (std::size_t i = 0; i < path.size(); ++i) {
      out << format_double(path.params()[i]) << ',' << path.indices()[i] << '\n';
    }
    return;
  }
  const std::size_t dim = path.size() ? path.coordinates().front().size() : 0;
  out << 't';
  for (std::size_t d = 0; d < dim; ++d) out << ",x" << d + 1;
  out << '\n';
  for (std::size_t i = 0; i < path.size(); ++i) {
    out << format_double(path.params()[i]);
    for (double x : path.coordinates()[i]) out << ',' << format_double(x);
    out << '\n';
  }
}

SampledPath read_path_csv(std::istream& in) {
  std::vector<double> params;
  std::vector<std::vector<double>> points;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    if (first && line.front() == 't') {
      first = false;
      continue;
    }
    first = false;
    const std::vector<std::string> cells = split(line, ',');
    if (cells.size() < 2) throw Error(ErrorCode::ParseError, "path row needs t and coordinates");
    params.push_back(parse_number(cells[0]));
    std::vector<double> p;
    for (std::size_t c = 1; c < cells.size(); ++c) p.push_back(parse_number(cells[c]));
    points.push_back(std::move(p));
  }
  return SampledPath::euclidean(std::move(params), std::move(points));
}

void write_profile_csv(std::ostream& out, const std::vector<LocalLipschitzEntry>& profile) {
  out << "delta,k\n";
  for (const LocalLipschitzEntry& e : profile) out << format_double(e.delta) << ',' << format_double(e.k) << '\n';
}

void write_slice_profile_csv(std::ostream& out, const SliceProfile& profile) {
  out << "breakpoint,value\n";
  for (std::size_t i = 0; i < profile.breakpoints.size(); ++i) {
    const double v = i < profile.values.size() ? profile.values[i] : 0.0;
    out << format_double(profile.breakpoints[i]) << ',' << format_double(v) << '\n';
  }
}

}  // namespace hlab::io
