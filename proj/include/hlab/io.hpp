#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "hlab/atomic_covering.hpp"
#include "hlab/curves.hpp"
#include "hlab/metric_core.hpp"
#include "hlab/sequence_space.hpp"
#include "hlab/slicing.hpp"
#include "hlab/transforms.hpp"

namespace hlab::io {

using nlohmann::json;

// Reals on the command line: plain numbers, "inf", "a/b", "b^e", and
// "logN" (natural log of N), e.g. "log2/log3" or "3^-4".
double parse_real(const std::string& text);
std::vector<double> parse_real_list(const std::string& text);  // comma separated
std::vector<std::size_t> parse_index_list(const std::string& text);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// Extended reals serialize as numbers, +inf as the string "inf".
json to_json(Extended v);
Extended extended_from_json(const json& j);

// {"points": [[x, ...], ...]} or {"dist": [[...], ...]}.
PointSpace point_space_from_json(const json& j);
json to_json(const PointSpace& space);

// {"atom_diam": [...], "sup_dist": [[...]], "inf_dist": [[...]], "provenance": "..."}.
AtomicSpace atomic_space_from_json(const json& j);
json to_json(const AtomicSpace& space);

// {"intervals": [[a, b], ...]}.
IntervalSet interval_set_from_json(const json& j);
json to_json(const IntervalSet& set);

// {"n": 2, "rho": 0.333, "depth": 3}.
SequenceSpaceSpec sequence_spec_from_json(const json& j);
json to_json(const SequenceSpaceSpec& spec);

json to_json(const Covering& covering);
json to_json(const ContentEstimate& estimate);
json to_json(const DimensionEstimate& estimate);
json to_json(const MetricReport& report);

// {"assignment": [codomain indices]}.
std::vector<std::size_t> assignment_from_json(const json& j);

// Path CSV: header "t,x1,x2,..." then one row per sample.
void write_path_csv(std::ostream& out, const SampledPath& path);
SampledPath read_path_csv(std::istream& in);

// "delta,k" rows.
void write_profile_csv(std::ostream& out, const std::vector<LocalLipschitzEntry>& profile);
// "breakpoint,value" rows; the last breakpoint carries value 0.
void write_slice_profile_csv(std::ostream& out, const SliceProfile& profile);

}  // namespace hlab::io
