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


#include "run_config.hpp"

#include "dcegbs/error.hpp"

namespace dcegbs::cli {

namespace {

void require_object(const Json& j, std::string_view what) {
    if (!j.is_object()) throw Error(ErrorKind::ParseError, std::string(what) + " must be an object");
}

// Every file named in the document must exist before any command runs.
void check_referenced_files(const RunConfig& cfg) {
    auto check = [&](const Json& section) {
        const auto it = section.find("file");
        if (it == section.end()) return;
        const auto path = cfg.resolve(decode<std::string>(*it, "file"));
        if (!std::filesystem::exists(path))
            throw Error(ErrorKind::InvalidConfig, "referenced file not found: " + path.string());
    };
    check(cfg.section("instance"));
    const Json verify = cfg.section("verify");
    if (verify.contains("schedule_file")) {
        const auto path = cfg.resolve(decode<std::string>(verify.at("schedule_file"), "schedule_file"));
        if (!std::filesystem::exists(path))
            throw Error(ErrorKind::InvalidConfig, "referenced file not found: " + path.string());
    }
}

}  // namespace

Json RunConfig::section(std::string_view name) const {
    const auto it = document.find(name);
    if (it == document.end()) return Json::object();
    require_object(*it, name);
    return *it;
}

std::filesystem::path RunConfig::resolve(const std::filesystem::path& p) const {
    if (p.is_absolute()) return p;
    return (source.parent_path() / p).lexically_normal();
}

TargetInstance RunConfig::instance() const {
    const Json spec = section("instance");
    if (spec.empty()) throw Error(ErrorKind::InvalidConfig, "config has no instance");
    TargetInstance out;
    if (spec.contains("file")) {
        out = decode<TargetInstance>(read_json_file(resolve(decode<std::string>(spec.at("file"), "file"))),
                                     "instance file");
    } else if (spec.contains("generate")) {
        const auto kind = decode<std::string>(spec.at("generate"), "generate");
        const int n = decode<int>(spec.at("n_modes"), "n_modes");
        if (n < 1) throw Error(ErrorKind::InvalidConfig, "n_modes must be >= 1");
        const auto instance_seed = setting<std::uint64_t>(spec, "seed", seed);
        out.n_modes = n;
        if (kind == "haar") {
            out.unitary = haar_random_unitary(n, instance_seed);
        } else if (kind == "real_orthogonal") {
            out.unitary = random_real_orthogonal(n, instance_seed).cast<Complex>();
            out.real_only = true;
        } else if (kind == "identity") {
            out.unitary = ComplexMatrix::Identity(n, n);
        } else {
            throw Error(ErrorKind::InvalidConfig, "unknown instance generator: " + kind);
        }
        const SqueezeSpec sq{setting(spec, "r", 0.0), setting(spec, "phi", 0.0)};
        out.squeezers.assign(static_cast<std::size_t>(n), sq);
    } else {
        out = decode<TargetInstance>(spec, "instance");
    }
    out.validate();
    return out;
}

CompileOptions RunConfig::compile_options() const {
    const Json c = section("compile");
    CompileOptions opt;
    opt.beta_max = setting(c, "beta_max", opt.beta_max);
    opt.collision_tolerance = setting(c, "collision_tolerance", opt.collision_tolerance);
    opt.resonance.rwa_min = setting(c, "rwa_min", opt.resonance.rwa_min);
    opt.resonance.detuning_tolerance = setting(c, "detuning_tolerance", opt.resonance.detuning_tolerance);
    auto& policy = opt.policy;
    const auto mode = setting<std::string>(c, "amplitude_policy", "fixed");
    if (mode == "fixed") {
        policy.mode = AmplitudePolicy::Mode::Fixed;
    } else if (mode == "randomized") {
        policy.mode = AmplitudePolicy::Mode::Randomized;
    } else {
        throw Error(ErrorKind::InvalidConfig, "amplitude_policy must be fixed or randomized");
    }
    policy.amplitude = setting(c, "amplitude", policy.amplitude);
    policy.amplitude_min = setting(c, "amplitude_min", policy.amplitude_min);
    policy.amplitude_max = setting(c, "amplitude_max", policy.amplitude_max);
    policy.seed = setting(c, "seed", seed);
    policy.lower_amplitude_for_rwa = setting(c, "lower_amplitude_for_rwa", policy.lower_amplitude_for_rwa);
    return opt;
}

RunConfig load_run_config(const std::filesystem::path& path, const Overrides& overrides) {
    RunConfig cfg;
    cfg.source = path;
    cfg.document = read_json_file(path);
    require_object(cfg.document, "config");
    auto& doc = cfg.document;
    if (overrides.seed) doc["seed"] = *overrides.seed;
    if (overrides.samples) doc["samples"] = *overrides.samples;
    if (overrides.cutoff) doc["cutoff"] = *overrides.cutoff;
    if (overrides.oracle) doc["oracle"] = *overrides.oracle;

    if (!doc.contains("resonator")) throw Error(ErrorKind::InvalidConfig, "config has no resonator");
    cfg.resonator = decode<ResonatorPair>(doc.at("resonator"), "resonator");
    cfg.resonator.validate();
    cfg.seed = setting<std::uint64_t>(doc, "seed", 1);
    cfg.out_dir = overrides.out ? *overrides.out : cfg.resolve(setting<std::string>(doc, "out", "dcegbs-out"));

    Json hashed = doc;
    hashed.erase("out");
    cfg.digest = config_digest(hashed);
    check_referenced_files(cfg);
    return cfg;
}

}  // namespace dcegbs::cli
