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


#include <algorithm>
#include <cstdio>

#include "commands.hpp"
#include "dcegbs/error.hpp"
#include "output.hpp"

namespace dcegbs::cli {

namespace {

std::vector<double> sorted_unique(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

int cmd_estimate(const RunConfig& cfg) {
    const Json e = cfg.section("estimate");
    const int n_photons = setting(e, "n_photons", 3);
    const double amplitude = setting(e, "amplitude", 1e-3);
    const double duration = setting(e, "duration", 100e-9);
    const double measurement = setting(e, "measurement_time", 1e-6);
    const int j = setting(e, "j", 1);
    const int l = setting(e, "l", 1);
    const double beta_max = setting(e, "beta_max", 0.1);
    const auto resonance = cfg.compile_options().resonance;

    auto estimate = [&](double a, double t) {
        return experiment_estimate(cfg.resonator, feasibility_schedule(cfg.resonator, n_photons, a, t, j, l),
                                   measurement, resonance);
    };
    const auto est = estimate(amplitude, duration);

    Json report = report_header(cfg, "estimate");
    report["n_photons"] = n_photons;
    report["pair"] = {{"j", j}, {"l", l}};
    report["pump_frequency"] = resonance_frequency(cfg.resonator, j, l, ResonanceKind::Plus);
    report["amplitude"] = amplitude;
    report["duration"] = duration;
    report["estimate"] = est;
    const bool beta_ok = est.max_beta <= beta_max;
    report["gates"] = Json::array({gate("max_beta", est.max_beta, beta_max, beta_ok)});
    report["pass"] = beta_ok && est.attainable();

    // Sweep rows ordered by amplitude, then duration.
    const Json sweep = e.contains("sweep") ? e.at("sweep") : Json::object();
    const auto amplitudes = sorted_unique(setting<std::vector<double>>(
        sweep, "amplitudes", {0.25e-3, 0.5e-3, 0.75e-3, 1e-3, 1.25e-3, 1.5e-3}));
    const auto durations =
        sorted_unique(setting<std::vector<double>>(sweep, "durations", {50e-9, 75e-9, 100e-9, 150e-9, 200e-9}));
    CsvTable table({"amplitude", "duration", "max_beta", "repetitions", "event_rate", "beta_ok"});
    for (double a : amplitudes) {
        for (double t : durations) {
            const auto row = estimate(a, t);
            table.row({cell(a), cell(t), cell(row.max_beta), row.attainable() ? cell(row.repetitions) : "inf",
                       cell(row.event_rate), row.max_beta <= beta_max ? "1" : "0"});
        }
    }

    write_output(cfg, "estimate_sweep.csv", table.str());
    const auto path = write_output(cfg, "estimate.json", dump_document(report));
    if (est.attainable()) {
        std::printf("estimate: |beta| %.4g, %.0f repetitions, %.4g Hz over %zu pulses -> %s\n", est.max_beta,
                    est.repetitions, est.event_rate, est.pulse_count, path.string().c_str());
    } else {
        std::printf("estimate: unattainable (|beta| %.4g) -> %s\n", est.max_beta, path.string().c_str());
    }
    return report["pass"].get<bool>() ? kPass : kGateFailed;
}

}  // namespace dcegbs::cli
