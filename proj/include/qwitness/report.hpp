// Copyright 2026 The qwitness Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qwitness/qwitness.hpp"

namespace qwit::cli {

inline constexpr const char *tool_version = "0.1.0";
inline constexpr int schema_version = 1;

using Json = nlohmann::ordered_json;

/// Invalid run configuration; `field` names the offending setting.
struct ConfigError : std::invalid_argument {
    ConfigError(std::string field_name, const std::string &what)
        : std::invalid_argument("invalid " + field_name + ": " + what), field(std::move(field_name)) {
    }
    std::string field;
};

enum class Backend { UnitaryCnot, DephasedCnot, ClassicalRotation, TwirledRandom, ToyModel };

inline const char *backend_name(Backend b) {
    switch (b) {
        case Backend::UnitaryCnot:
            return "unitary-cnot";
        case Backend::DephasedCnot:
            return "dephased-cnot";
        case Backend::ClassicalRotation:
            return "classical-rotation";
        case Backend::TwirledRandom:
            return "twirled-random";
        case Backend::ToyModel:
            return "toy-model";
    }
    return "?";
}

inline Backend parse_backend(const std::string &name) {
    for (Backend b : {Backend::UnitaryCnot, Backend::DephasedCnot, Backend::ClassicalRotation,
                      Backend::TwirledRandom, Backend::ToyModel}) {
        if (name == backend_name(b)) {
            return b;
        }
    }
    throw ConfigError("backend", "unknown backend '" + name + "'");
}

struct RunConfig {
    Backend backend = Backend::UnitaryCnot;
    double lambda = 0.0;
    double t = std::numbers::pi / 2;
    Shots shots = Shots::exact();
    std::uint64_t seed = 0;
    double tolerance = 1e-9;
    double significance = 5.0;
    std::string output_path;
    std::size_t channels = 1000;
    std::vector<double> grid;
};

inline void validate(const RunConfig &c) {
    if (!(c.lambda >= 0.0 && c.lambda <= 1.0)) {
        throw ConfigError("lambda", "must lie in [0, 1], got " + std::to_string(c.lambda));
    }
    if (!std::isfinite(c.t)) {
        throw ConfigError("t", "must be finite");
    }
    if (!(c.tolerance > 0.0)) {
        throw ConfigError("tolerance", "must be positive");
    }
    if (!(c.significance > 0.0)) {
        throw ConfigError("significance", "must be positive");
    }
}

/// Comma separated reals, e.g. "0,0.5,1".
inline std::vector<double> parse_grid(const std::string &text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception &) {
            throw ConfigError("grid", "cannot parse '" + item + "' as a number");
        }
    }
    return out;
}

inline Json shots_json(const Shots &s) {
    return s.is_exact() ? Json("exact") : Json(s.value());
}

inline Json config_json(const RunConfig &c) {
    Json j;
    j["backend"] = backend_name(c.backend);
    j["lambda"] = c.lambda;
    j["t"] = c.t;
    j["shots"] = shots_json(c.shots);
    j["seed"] = c.seed;
    j["tolerance"] = c.tolerance;
    j["significance"] = c.significance;
    j["channels"] = c.channels;
    j["grid"] = c.grid;
    j["out"] = c.output_path;
    return j;
}

inline Json header(const char *command, const RunConfig &c) {
    Json j;
    j["schema"] = schema_version;
    j["tool"] = "qwitness";
    j["version"] = tool_version;
    j["command"] = command;
    j["config"] = config_json(c);
    return j;
}

inline CopyChannel backend_channel(const RunConfig &c, CopyDirection d) {
    switch (c.backend) {
        case Backend::UnitaryCnot:
            return make_unitary_cnot(d);
        case Backend::DephasedCnot:
            return make_dephased_cnot(d, c.lambda);
        case Backend::ClassicalRotation:
            return make_classical_rotation_copy(c.t, d);
        case Backend::TwirledRandom:
            return random_covariant_copy_channel(c.seed, d);
        case Backend::ToyModel:
            break;
    }
    throw ConfigError("backend", "toy-model is only available through toy-sweep");
}

inline Json channel_json(const CopyChannel &ch) {
    Json j;
    j["label"] = ch.label();
    j["direction"] = direction_name(ch.direction());
    j["kraus_operators"] = ch.kraus().size();
    j["dephasing_covariant"] = ch.covariant();
    j["truth_table_error"] = ch.truth_table_error();
    return j;
}

inline Json record_json(const CorrelatorRecord &r) {
    Json j;
    j["state"] = r.state_label;
    j["shots"] = shots_json(r.shots);
    Json values = Json::object();
    for (const auto &[obs, est] : r.values) {
        values[obs.str()] = {{"estimate", est.value}, {"std_error", est.std_error}};
    }
    j["correlators"] = values;
    return j;
}

inline Json witness_report_json(const WitnessReport &w) {
    Json j;
    j["conditions"] = {{"c1_copy_correlation", w.c1_copy_correlation},
                       {"c2_cross_terms_zero", w.c2_cross_terms_zero},
                       {"c3_not_eigenstate", w.c3_not_eigenstate},
                       {"c4_stage2_distinguishable", w.c4_stage2_distinguishable}};
    j["c3_criterion"] = "all probe moments <XI>, <YI>, <ZI> vanish within tolerance";
    Json seps = Json::object();
    for (const auto &[obs, s] : w.separations) {
        seps[obs.str()] = s;
    }
    j["stage2_separations"] = seps;
    j["discriminating_observable"] =
        w.discriminating_observable ? Json(w.discriminating_observable->str()) : Json(nullptr);
    j["verdict"] = verdict_name(w.verdict);
    j["tolerance_used"] = w.tolerance_used;
    j["significance_used"] = w.significance_used;
    return j;
}

inline WitnessRun witness_run(const RunConfig &c) {
    validate(c);
    return run_witness(backend_channel(c, CopyDirection::QtoC), c.shots, c.seed,
                       WitnessThresholds{c.tolerance, c.significance});
}

inline Json witness_json(const RunConfig &c) {
    validate(c);
    CopyChannel ch = backend_channel(c, CopyDirection::QtoC);
    WitnessRun run = run_witness(ch, c.shots, c.seed, WitnessThresholds{c.tolerance, c.significance});
    Json j = header("witness", c);
    j["channel"] = channel_json(ch);
    j["measured_on_classical_system"] = "T only (I or Z factor)";
    j["records"] = Json::array({record_json(run.rho_plus), record_json(run.rho_minus),
                                record_json(run.tilde_plus), record_json(run.tilde_minus)});
    Json w = witness_report_json(run.report);
    for (auto it = w.begin(); it != w.end(); ++it) {
        j[it.key()] = it.value();
    }
    return j;
}

inline std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

/// One witness run per grid value of lambda (dephased-cnot) or t
/// (classical-rotation), as CSV in grid order.
inline std::string sweep_csv(const RunConfig &c) {
    validate(c);
    if (c.grid.empty()) {
        throw ConfigError("grid", "must contain at least one value");
    }
    std::string parameter;
    if (c.backend == Backend::DephasedCnot) {
        parameter = "lambda";
    } else if (c.backend == Backend::ClassicalRotation) {
        parameter = "t";
    } else {
        throw ConfigError("backend", "sweep needs dephased-cnot (lambda) or classical-rotation (t)");
    }
    static const PauliString zz = PauliString::parse("ZZ");
    static const PauliString xz = PauliString::parse("XZ");
    std::string out = "parameter,zz_plus,xz_separation,verdict\n";
    for (double v : c.grid) {
        RunConfig point = c;
        (parameter == "lambda" ? point.lambda : point.t) = v;
        validate(point);
        WitnessRun run = witness_run(point);
        out += format_real(v) + "," + format_real(run.rho_plus.at(zz).value) + "," +
               format_real(run.report.separations.at(xz)) + "," + verdict_name(run.report.verdict) + "\n";
    }
    return out;
}

inline Json vec3_json(const Vec3 &v) {
    return Json::array({v[0], v[1], v[2]});
}

inline Json tomography_json(const TomographyResult &t) {
    Json j;
    j["bloch"] = vec3_json(t.bloch);
    j["raw_bloch"] = vec3_json(t.raw_bloch);
    j["std_errors"] = vec3_json(t.std_errors);
    j["shots_per_basis"] = shots_json(t.shots_per_basis);
    j["fidelity_to_reference"] = t.fidelity_to_reference ? Json(*t.fidelity_to_reference) : Json(nullptr);
    return j;
}

inline Json swap_tomography_json(const RunConfig &c) {
    validate(c);
    CopyChannel qc = backend_channel(c, CopyDirection::QtoC);
    CopyChannel cq = backend_channel(c, CopyDirection::CtoQ);
    SwapTomographyRun run = run_swap_tomography(qc, cq, c.shots, c.seed, c.tolerance);
    Json j = header("swap-tomography", c);
    j["channels"] = {{"q_to_c", channel_json(qc)}, {"c_to_q", channel_json(cq)}};
    j["swap_stage"] = swap_coupling_label;
    j["alpha_bloch"] = {{"plus", vec3_json(bloch_vector(run.alpha.alpha_plus))},
                        {"minus", vec3_json(bloch_vector(run.alpha.alpha_minus))}};
    j["tomography"] = {{"plus", tomography_json(run.tomography_plus)},
                       {"minus", tomography_json(run.tomography_minus)}};
    j["overlap"] = {{"overlap", run.overlap.overlap},
                    {"orthogonal", run.overlap.orthogonal},
                    {"implied_observables", run.overlap.implied_observables}};
    return j;
}

inline Json bloch_json(const ClassicalBlochState &b) {
    return {{"r", vec3_json(b.r)}, {"s_z", b.s_z}, {"t", vec3_json(b.t)}};
}

inline Json nogo_json(const RunConfig &c) {
    validate(c);
    NoGoReport rep = no_go_demonstration(c.channels, c.seed, c.tolerance);
    Json j = header("nogo", c);
    j["forced_classical_state"] = bloch_json(rep.forced_state);
    j["max_forced_separation"] = rep.max_forced_separation;
    j["max_protocol_separation"] = rep.max_protocol_separation;
    j["theorem_violations"] = rep.theorem_violations;
    j["control_unitary_cnot_separation"] = rep.control_separation;
    j["passed"] = rep.passed();
    Json rows = Json::array();
    for (const auto &r : rep.rows) {
        rows.push_back({{"channel_seed", r.channel_seed},
                        {"forced_separation", r.forced_separation},
                        {"protocol_separation", r.protocol_separation},
                        {"c1_to_c3_hold", r.c1_to_c3_hold},
                        {"dephasing_covariant", r.covariant}});
    }
    j["rows"] = rows;
    return j;
}

inline Json toy_sweep_json(const RunConfig &c) {
    toy::ToySweepReport rep = toy::toy_witness_sweep();
    Json j = header("toy-sweep", c);
    j["mapping"] = {{"T", "{1,2} vs {3,4}"}, {"X", "{1,3} vs {2,4}"}, {"Y", "{1,4} vs {2,3}"}};
    j["group_order"] = rep.group_order;
    j["valid_two_bit_states"] = rep.valid_two_bit_states;
    j["copy_dynamics"] = rep.rows.size();
    Json counts = Json::object();
    for (const auto &[k, v] : rep.verdict_counts) {
        counts[k] = v;
    }
    j["verdict_counts"] = counts;
    auto pair_json = [](const std::map<std::string, std::array<toy::Rational, 2>> &m) {
        Json o = Json::object();
        for (const auto &[k, v] : m) {
            o[k] = Json::array({toy::to_string(v[0]), toy::to_string(v[1])});
        }
        return o;
    };
    Json rows = Json::array();
    for (const auto &r : rep.rows) {
        Json row;
        row["index"] = r.index;
        row["label"] = r.label;
        row["permutation"] = std::vector<int>(r.permutation.begin(), r.permutation.end());
        row["stage1"] = pair_json(r.stage1);
        row["stage2"] = pair_json(r.stage2);
        row["conditions"] = {{"c1", r.c1}, {"c2", r.c2}, {"c3", r.c3}, {"c4", r.c4}};
        row["discriminating_observable"] =
            r.discriminating_observable ? Json(*r.discriminating_observable) : Json(nullptr);
        row["verdict"] = verdict_name(r.verdict);
        rows.push_back(row);
    }
    j["rows"] = rows;
    return j;
}

}  // namespace qwit::cli
