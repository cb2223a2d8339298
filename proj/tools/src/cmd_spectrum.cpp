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

Json resonance_json(const Resonance& r) {
    return Json{{"j", r.j}, {"l", r.l}, {"kind", to_string(r.kind)}, {"frequency", r.frequency}};
}

}  // namespace

int cmd_spectrum(const RunConfig& cfg) {
    const auto& res = cfg.resonator;
    const double tolerance = setting(cfg.section("spectrum"), "collision_tolerance", 1e-6);

    Json report = report_header(cfg, "spectrum");
    CsvTable modes({"side", "index", "frequency"});
    for (Side side : {Side::Left, Side::Right}) {
        const auto freqs = mode_frequencies(res, side);
        report["modes"][std::string(to_string(side))] = freqs;
        for (std::size_t k = 0; k < freqs.size(); ++k)
            modes.row({std::string(to_string(side)), cell(static_cast<long long>(k + 1)), cell(freqs[k])});
    }

    const auto table = resonance_table(res);
    CsvTable resonances({"j", "l", "kind", "frequency"});
    Json rows = Json::array();
    for (const auto& r : table) {
        rows.push_back(resonance_json(r));
        resonances.row({cell(static_cast<long long>(r.j)), cell(static_cast<long long>(r.l)),
                        std::string(to_string(r.kind)), cell(r.frequency)});
    }
    report["resonances"] = rows;

    const auto collisions = addressability_report(res, tolerance);
    Json clashes = Json::array();
    for (const auto& c : collisions)
        clashes.push_back(
            {{"first", resonance_json(c.first)}, {"second", resonance_json(c.second)}, {"separation", c.separation}});
    report["collision_tolerance"] = tolerance;
    report["collisions"] = clashes;
    report["collision_count"] = collisions.size();
    report["pass"] = collisions.empty();

    write_output(cfg, "spectrum_modes.csv", modes.str());
    write_output(cfg, "resonances.csv", resonances.str());
    const auto path = write_output(cfg, "spectrum.json", dump_document(report));
    std::printf("spectrum: %zu resonances, %zu collisions -> %s\n", table.size(), collisions.size(),
                path.string().c_str());
    return collisions.empty() ? kPass : kGateFailed;
}

}  // namespace dcegbs::cli
