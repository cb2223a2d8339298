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
#include <cmath>
#include <cstdio>

#include "commands.hpp"
#include "dcegbs/error.hpp"
#include "dcegbs/fock.hpp"
#include "output.hpp"

namespace dcegbs::cli {

namespace {

constexpr double kIdentityTolerance = 1e-12;
// Acceptance fraction gate, in binomial standard deviations.
constexpr double kAcceptanceSigmas = 5.0;

bool collision_free(const FockPattern& p) { return std::all_of(p.begin(), p.end(), [](int c) { return c <= 1; }); }

}  // namespace

int cmd_sample(const RunConfig& cfg) {
    const Json s = cfg.section("sample");
    const auto instance = cfg.instance();
    const auto samples = setting<std::size_t>(cfg.document, "samples", setting<std::size_t>(s, "samples", 10000));
    const int n_target = setting(s, "n_target", 1);
    const bool oracle = setting(cfg.document, "oracle", setting(s, "oracle", true));
    const double tvd_tolerance = setting(s, "tvd_tolerance", 0.03);

    ScattershotOptions opt;
    opt.compile = cfg.compile_options();
    const auto route = setting<std::string>(s, "route", "direct");
    if (route == "compiled") {
        opt.route = ScattershotOptions::Route::Compiled;
    } else if (route != "direct") {
        throw Error(ErrorKind::InvalidConfig, "route must be direct or compiled");
    }

    const auto run = run_scattershot(cfg.resonator, instance, samples, n_target, cfg.seed, opt);

    Json report = report_header(cfg, "sample");
    report["instance"] = instance;
    report["samples"] = samples;
    report["n_target"] = n_target;
    report["route"] = route;
    report["accepted"] = run.accepted;
    report["acceptance_fraction"] = run.acceptance_fraction;
    report["leakage"] = run.leakage;
    Json gates = Json::array();
    bool pass = true;

    // Analytic heralding probability of the independent pairs.
    const double p = heralding_probability(instance.squeezers, n_target);
    const double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
    const double z = sigma > 0.0 ? std::abs(run.acceptance_fraction - p) / sigma : 0.0;
    report["heralding_probability"] = p;
    const bool acceptance_ok = z <= kAcceptanceSigmas;
    gates.push_back(gate("acceptance_sigma", z, kAcceptanceSigmas, acceptance_ok));
    pass = pass && acceptance_ok;

    if ((instance.unitary - ComplexMatrix::Identity(instance.n_modes, instance.n_modes)).cwiseAbs().maxCoeff() <=
        kIdentityTolerance) {
        std::size_t mismatches = 0;
        for (const auto& r : run.records) mismatches += r.accepted && r.output != r.herald ? 1 : 0;
        const bool ok = mismatches == 0;
        gates.push_back(gate("identity_mismatches", static_cast<double>(mismatches), 0.0, ok));
        pass = pass && ok;
    }

    const auto empirical = heralded_empirical(run.records);
    std::size_t heralded = 0;
    for (const auto& r : run.records) heralded += r.accepted && collision_free(r.herald) ? 1 : 0;
    report["heralded_collision_free"] = heralded;

    CsvTable table({"herald", "output", "empirical", "oracle"});
    if (oracle) {
        const auto exact = heralded_oracle(instance.unitary, n_target);
        const double tvd = total_variation_distance(empirical, exact);
        report["tvd"] = tvd;
        const bool ok = tvd <= tvd_tolerance;
        gates.push_back(gate("tvd", tvd, tvd_tolerance, ok));
        pass = pass && ok;
        std::map<FockPattern, double> keys = exact;
        for (const auto& [k, v] : empirical) keys.emplace(k, 0.0);
        for (const auto& [joint, _] : keys) {
            const auto e = empirical.find(joint);
            const auto x = exact.find(joint);
            const auto m = static_cast<std::ptrdiff_t>(instance.n_modes);
            table.row({cell(FockPattern(joint.begin(), joint.begin() + m)), cell(FockPattern(joint.begin() + m, joint.end())),
                       cell(e == empirical.end() ? 0.0 : e->second), cell(x == exact.end() ? 0.0 : x->second)});
        }
    } else {
        report["tvd"] = nullptr;
        for (const auto& [joint, prob] : empirical) {
            const auto m = static_cast<std::ptrdiff_t>(instance.n_modes);
            table.row({cell(FockPattern(joint.begin(), joint.begin() + m)),
                       cell(FockPattern(joint.begin() + m, joint.end())), cell(prob), ""});
        }
    }
    report["gates"] = gates;
    report["pass"] = pass;

    write_output(cfg, "records.jsonl", dump_records(run.records));
    write_output(cfg, "heralded_distribution.csv", table.str());
    const auto path = write_output(cfg, "sample_summary.json", dump_document(report));
    std::printf("sample: %zu draws, %zu accepted (%.4g, analytic %.4g)%s -> %s\n", samples, run.accepted,
                run.acceptance_fraction, p,
                oracle ? (", tvd " + format_number(report["tvd"].get<double>())).c_str() : "", path.string().c_str());
    return pass ? kPass : kGateFailed;
}

}  // namespace dcegbs::cli
