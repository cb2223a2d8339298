// Copyright 2026 The dcegbs Authors
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

#include "dcegbs/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "dcegbs/error.hpp"

namespace dcegbs {
namespace {

PulseIntent intent_from_string(const std::string& s) {
    if (s == "squeeze") return PulseIntent::Squeeze;
    if (s == "beam_split") return PulseIntent::BeamSplit;
    if (s == "idle") return PulseIntent::Idle;
    throw Error(ErrorKind::ParseError, "unknown pulse intent '" + s + "'");
}

Side side_from_string(const std::string& s) {
    if (s == "left") return Side::Left;
    if (s == "right") return Side::Right;
    throw Error(ErrorKind::ParseError, "unknown side '" + s + "'");
}

}  // namespace

void to_json(Json& j, const ResonatorPair& cfg) {
    j = Json{{"length_left", cfg.length_left},
             {"length_right", cfg.length_right},
             {"speed", cfg.speed},
             {"modes_left", cfg.modes_left},
             {"modes_right", cfg.modes_right}};
}

void from_json(const Json& j, ResonatorPair& cfg) {
    j.at("length_left").get_to(cfg.length_left);
    j.at("length_right").get_to(cfg.length_right);
    j.at("speed").get_to(cfg.speed);
    j.at("modes_left").get_to(cfg.modes_left);
    j.at("modes_right").get_to(cfg.modes_right);
}

void to_json(Json& j, const ModeRef& mode) { j = Json{{"side", to_string(mode.side)}, {"index", mode.index}}; }

void from_json(const Json& j, ModeRef& mode) {
    mode.side = side_from_string(j.at("side").get<std::string>());
    j.at("index").get_to(mode.index);
}

void to_json(Json& j, const PumpPulse& pulse) {
    j = Json{{"intent", to_string(pulse.intent)},
             {"pump_frequency", pulse.pump_frequency},
             {"amplitude", pulse.amplitude},
             {"phase", pulse.phase},
             {"duration", pulse.duration},
             {"j", pulse.j},
             {"l", pulse.l}};
    if (pulse.frame_mode) j["frame_mode"] = *pulse.frame_mode;
}

void from_json(const Json& j, PumpPulse& pulse) {
    pulse.intent = intent_from_string(j.at("intent").get<std::string>());
    pulse.pump_frequency = j.value("pump_frequency", 0.0);
    pulse.amplitude = j.value("amplitude", 0.0);
    pulse.phase = j.value("phase", 0.0);
    pulse.duration = j.value("duration", 0.0);
    pulse.j = j.value("j", 0);
    pulse.l = j.value("l", 0);
    pulse.frame_mode.reset();
    if (j.contains("frame_mode")) pulse.frame_mode = j.at("frame_mode").get<ModeRef>();
}

void to_json(Json& j, const PumpSchedule& schedule) {
    j = Json{{"pulses", schedule.pulses}};
    if (schedule.amplitude_seed) j["amplitude_seed"] = *schedule.amplitude_seed;
}

void from_json(const Json& j, PumpSchedule& schedule) {
    j.at("pulses").get_to(schedule.pulses);
    schedule.amplitude_seed.reset();
    if (j.contains("amplitude_seed")) schedule.amplitude_seed = j.at("amplitude_seed").get<std::uint64_t>();
}

void to_json(Json& j, const SqueezeSpec& s) { j = Json{{"r", s.r}, {"phi", s.phi}}; }

void from_json(const Json& j, SqueezeSpec& s) {
    j.at("r").get_to(s.r);
    s.phi = j.value("phi", 0.0);
}

void to_json(Json& j, const TargetInstance& instance) {
    j = Json{{"n_modes", instance.n_modes},
             {"squeezers", instance.squeezers},
             {"unitary", complex_matrix_to_json(instance.unitary)},
             {"real_only", instance.real_only}};
}

void from_json(const Json& j, TargetInstance& instance) {
    j.at("n_modes").get_to(instance.n_modes);
    j.at("squeezers").get_to(instance.squeezers);
    instance.unitary = complex_matrix_from_json(j.at("unitary"));
    instance.real_only = j.value("real_only", false);
}

void to_json(Json& j, const ScattershotRecord& rec) {
    j = Json{{"herald", rec.herald},
             {"output", rec.output},
             {"accepted", rec.accepted},
             {"seed", rec.seed},
             {"draw", rec.draw}};
}

void from_json(const Json& j, ScattershotRecord& rec) {
    j.at("herald").get_to(rec.herald);
    j.at("output").get_to(rec.output);
    j.at("accepted").get_to(rec.accepted);
    j.at("seed").get_to(rec.seed);
    j.at("draw").get_to(rec.draw);
}

void to_json(Json& j, const ExperimentEstimate& est) {
    j = Json{{"max_beta", est.max_beta},
             {"mean_photons_per_pair", est.mean_photons_per_pair},
             {"repetitions", est.attainable() ? Json(est.repetitions) : Json(nullptr)},
             {"attainable", est.attainable()},
             {"pulse_count", est.pulse_count},
             {"pulse_time", est.pulse_time},
             {"measurement_time", std::isfinite(est.measurement_time) ? Json(est.measurement_time) : Json(nullptr)},
             {"event_rate", est.event_rate}};
}

Json complex_matrix_to_json(const ComplexMatrix& m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix complex_matrix_from_json(const Json& j) {
    const auto rows = j.get<std::vector<std::vector<std::vector<double>>>>();
    const auto n = static_cast<Eigen::Index>(rows.size());
    const auto m = n == 0 ? Eigen::Index{0} : static_cast<Eigen::Index>(rows.front().size());
    ComplexMatrix out(n, m);
    for (Eigen::Index r = 0; r < n; ++r) {
        if (static_cast<Eigen::Index>(rows[r].size()) != m) throw Error(ErrorKind::ParseError, "ragged matrix");
        for (Eigen::Index c = 0; c < m; ++c) {
            const auto& z = rows[r][c];
            if (z.size() != 2) throw Error(ErrorKind::ParseError, "complex entries must be [re, im]");
            out(r, c) = Complex(z[0], z[1]);
        }
    }
    return out;
}

Json real_matrix_to_json(const RealMatrix& m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

RealMatrix real_matrix_from_json(const Json& j) {
    const auto rows = j.get<std::vector<std::vector<double>>>();
    const auto n = static_cast<Eigen::Index>(rows.size());
    const auto m = n == 0 ? Eigen::Index{0} : static_cast<Eigen::Index>(rows.front().size());
    RealMatrix out(n, m);
    for (Eigen::Index r = 0; r < n; ++r) {
        if (static_cast<Eigen::Index>(rows[r].size()) != m) throw Error(ErrorKind::ParseError, "ragged matrix");
        for (Eigen::Index c = 0; c < m; ++c) out(r, c) = rows[r][c];
    }
    return out;
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, path.string() + ": " + e.what());
    }
}

std::string dump_document(const Json& j) { return j.dump(2) + "\n"; }

std::string dump_records(const std::vector<ScattershotRecord>& records) {
    std::string out;
    for (const auto& rec : records) {
        out += Json(rec).dump();
        out += '\n';
    }
    return out;
}

std::string config_digest(const Json& j) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : j.dump()) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string format_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace dcegbs
