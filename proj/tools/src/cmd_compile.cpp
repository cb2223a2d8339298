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


#include <cstdio>

#include "commands.hpp"
#include "output.hpp"

namespace dcegbs::cli {

namespace {

constexpr double kRoundTripTolerance = 1e-9;

}  // namespace

int cmd_compile(const RunConfig& cfg) {
    const auto instance = cfg.instance();
    const auto options = cfg.compile_options();
    const auto compiled = compile_instance(cfg.resonator, instance, options);

    Json schedule = report_header(cfg, "compile");
    schedule.update(Json(compiled.schedule));

    Json report = report_header(cfg, "compile");
    report["instance"] = instance;
    report["pulse_count"] = compiled.schedule.pulses.size();
    report["total_duration"] = compiled.schedule.total_duration();
    if (compiled.schedule.amplitude_seed) report["amplitude_seed"] = *compiled.schedule.amplitude_seed;

    CsvTable table({"index", "intent", "j", "l", "pump_frequency", "amplitude", "duration", "phase", "target"});
    Json pulses = Json::array();
    for (std::size_t k = 0; k < compiled.schedule.pulses.size(); ++k) {
        const auto& p = compiled.schedule.pulses[k];
        Json row = p;
        row["target"] = compiled.targets[k];
        pulses.push_back(row);
        table.row({cell(static_cast<long long>(k)), std::string(to_string(p.intent)), cell(static_cast<long long>(p.j)),
                   cell(static_cast<long long>(p.l)), cell(p.pump_frequency), cell(p.amplitude), cell(p.duration),
                   cell(p.phase), cell(compiled.targets[k])});
    }
    report["pulses"] = pulses;
    report["max_beta"] = compiled.max_beta;
    report["warnings"] = compiled.warnings;

    const bool beta_ok = compiled.max_beta <= options.beta_max;
    const bool round_trip_ok = compiled.max_relative_error <= kRoundTripTolerance;
    report["gates"] = Json::array({gate("max_beta", compiled.max_beta, options.beta_max, beta_ok),
                                   gate("round_trip_relative_error", compiled.max_relative_error,
                                        kRoundTripTolerance, round_trip_ok)});
    report["pass"] = beta_ok && round_trip_ok;

    write_output(cfg, "schedule.json", dump_document(schedule));
    write_output(cfg, "pulses.csv", table.str());
    const auto path = write_output(cfg, "compile_report.json", dump_document(report));
    std::printf("compile: %zu pulses, max |beta| %.6g, round-trip error %.3g -> %s\n", compiled.schedule.pulses.size(),
                compiled.max_beta, compiled.max_relative_error, path.string().c_str());
    return beta_ok && round_trip_ok ? kPass : kGateFailed;
}

}  // namespace dcegbs::cli
