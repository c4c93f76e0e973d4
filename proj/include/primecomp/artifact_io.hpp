#pragma once

#include <string>

#include <json.hpp>

#include "primecomp/goldbach.hpp"
#include "primecomp/randcomplement.hpp"
#include "primecomp/verify.hpp"

namespace primecomp {

using nlohmann::json;

// Canonical form: sorted keys (nlohmann default), 2-space indent, trailing
// newline. Reading an artifact and re-emitting it is byte-identical.
std::string canonical_dump(const json& j);
void write_artifact(const std::string& path, const json& j);
json read_json_file(const std::string& path);

// Envelope shared by every artifact: version + command + config (+ seed for
// randomized commands).
json artifact_envelope(const std::string& command, json config);

json schedule_to_json(const ScaleSchedule& s);
ScaleSchedule schedule_from_json(const json& j);

// Persisted set schema: {kind, config, seed, elements: [...]} plus the
// envelope. Loading verifies elements are sorted, duplicate-free primes.
json complement_to_json(const SparseComplement& s, const std::string& command);
SparseComplement complement_from_json(const json& j);

json coverage_report_to_json(const CoverageReport& r);
json exceptional_report_to_json(const ExceptionalReport& r);
json density_grid_to_json(const DensityGrid& g);

}  // namespace primecomp
