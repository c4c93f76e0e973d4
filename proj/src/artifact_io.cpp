#include "primecomp/artifact_io.hpp"

#include <fstream>

#include "primecomp/numtheory.hpp"

namespace primecomp {

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

void write_artifact(const std::string& path, const json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << canonical_dump(j);
    if (!out) throw std::runtime_error("write failed: " + path);
}

json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open: " + path);
    json j;
    in >> j;
    return j;
}

json artifact_envelope(const std::string& command, json config) {
    json j;
    j["version"] = kVersion;
    j["command"] = command;
    j["config"] = std::move(config);
    return j;
}

json schedule_to_json(const ScaleSchedule& s) {
    json j;
    j["c0"] = s.c0;
    j["c1"] = s.c1;
    j["cstar"] = s.cstar;
    j["eps_schedule"] = s.eps_schedule;
    j["N_sequence"] = s.N_sequence;
    j["K_values"] = s.K_values;
    j["w"] = s.w_description;
    j["desk_override"] = s.desk_override;
    return j;
}

ScaleSchedule schedule_from_json(const json& j) {
    ScaleSchedule s;
    s.c0 = j.at("c0").get<double>();
    s.c1 = j.at("c1").get<double>();
    if (j.contains("cstar")) s.cstar = j.at("cstar").get<double>();
    if (j.contains("eps_schedule")) s.eps_schedule = j.at("eps_schedule").get<std::vector<double>>();
    s.N_sequence = j.at("N_sequence").get<std::vector<std::uint64_t>>();
    if (j.contains("K_values")) s.K_values = j.at("K_values").get<std::vector<double>>();
    if (j.contains("w")) s.w_description = j.at("w").get<std::string>();
    if (j.contains("desk_override")) s.desk_override = j.at("desk_override").get<bool>();
    s.validate();
    return s;
}

namespace {

json sampler_config_to_json(const SparseComplement& s) {
    json cfg;
    switch (s.kind) {
        case ComplementKind::A: {
            const auto& c = std::get<SamplerConfigA>(s.config);
            cfg["c"] = c.c;
            cfg["range_max"] = c.range_max;
            break;
        }
        case ComplementKind::BBlock: {
            const auto& c = std::get<SamplerConfigB>(s.config);
            cfg["N"] = c.N;
            cfg["K"] = c.K;
            cfg["c0"] = c.c0;
            break;
        }
        case ComplementKind::BAssembled:
            cfg = schedule_to_json(std::get<ScaleSchedule>(s.config));
            break;
    }
    return cfg;
}

}  // namespace

json complement_to_json(const SparseComplement& s, const std::string& command) {
    json j = artifact_envelope(command, sampler_config_to_json(s));
    j["kind"] = kind_name(s.kind);
    j["seed"] = s.seed;
    j["elements"] = s.elements;
    return j;
}

SparseComplement complement_from_json(const json& j) {
    SparseComplement s;
    s.kind = kind_from_name(j.at("kind").get<std::string>());
    s.seed = j.at("seed").get<std::uint64_t>();
    const json& cfg = j.at("config");
    switch (s.kind) {
        case ComplementKind::A: {
            SamplerConfigA c;
            c.c = cfg.at("c").get<double>();
            c.range_max = cfg.at("range_max").get<std::uint64_t>();
            c.seed = s.seed;
            s.config = c;
            break;
        }
        case ComplementKind::BBlock: {
            SamplerConfigB c;
            c.N = cfg.at("N").get<std::uint64_t>();
            c.K = cfg.at("K").get<double>();
            c.c0 = cfg.at("c0").get<double>();
            c.seed = s.seed;
            s.config = c;
            break;
        }
        case ComplementKind::BAssembled:
            s.config = schedule_from_json(cfg);
            break;
    }
    s.elements = j.at("elements").get<std::vector<std::uint64_t>>();
    for (std::size_t i = 0; i < s.elements.size(); i++) {
        if (i > 0 && s.elements[i] <= s.elements[i - 1])
            throw std::invalid_argument("complement_from_json: elements not strictly ascending");
        if (!trial_is_prime(s.elements[i]))
            throw std::invalid_argument("complement_from_json: element " +
                                        std::to_string(s.elements[i]) + " is not prime");
    }
    return s;
}

json coverage_report_to_json(const CoverageReport& r) {
    json j;
    j["n_lo"] = r.n_lo;
    j["n_hi"] = r.n_hi;
    j["parity"] = r.parity == Parity::Odd ? "odd" : "even";
    j["covered"] = r.covered;
    j["tested"] = r.tested;
    j["failures_total"] = r.failures_total;
    j["failures_sample"] = r.failures;
    j["min_reps"] = r.min_reps;
    j["threshold_n0"] = r.threshold_n0;
    return j;
}

json exceptional_report_to_json(const ExceptionalReport& r) {
    json j;
    json w;
    w["x"] = r.window.x;
    w["M"] = r.window.M;
    w["y"] = r.window.y;
    w["cstar"] = r.window.cstar;
    j["window"] = w;
    j["tested"] = r.tested;
    j["exceptional_count"] = r.exceptional_count;
    j["exceptional_sample"] = r.exceptional;
    j["predicted_cap"] = r.predicted_cap;
    if (r.has_infimum)
        j["ratio"] = r.infimum_ratio;
    else
        j["ratio"] = nullptr;
    return j;
}

json density_grid_to_json(const DensityGrid& g) {
    json j;
    j["N"] = g.N;
    j["eta"] = g.eta;
    j["eps"] = g.eps;
    j["c1"] = g.c1;
    json rows = json::array();
    for (std::size_t k = 0; k < g.x_values.size(); k++) {
        json row;
        row["x"] = g.x_values[k];
        row["density"] = g.densities[k];
        row["deficit"] = g.deficits[k];
        row["flagged"] = static_cast<bool>(g.flagged[k]);
        rows.push_back(row);
    }
    j["grid"] = rows;
    return j;
}

}  // namespace primecomp
