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


// dcegbs: batch front end for the resonator-pair boson sampling toolkit.

#include <cstdio>
#include <exception>
#include <functional>

#include <CLI11.hpp>

#include "commands.hpp"
#include "dcegbs/error.hpp"
#include "output.hpp"

int main(int argc, char** argv) {
    using namespace dcegbs::cli;
    CLI::App app{"Boson sampling with dynamically modulated coupled resonators"};
    app.require_subcommand(1);

    std::string config;
    std::uint64_t seed = 0;
    std::string out;
    std::size_t samples = 0;
    int cutoff = 0;
    std::string oracle;

    struct Entry {
        const char* name;
        const char* help;
        int (*run)(const RunConfig&);
    };
    const Entry entries[] = {
        {"spectrum", "Mode spectra, resonance table and addressability report", cmd_spectrum},
        {"compile", "Compile a target instance into a pump schedule", cmd_compile},
        {"sample", "Run scattershot sampling and compare with the permanent oracle", cmd_sample},
        {"verify", "Run the cross-module equivalence suites", cmd_verify},
        {"estimate", "Feasibility estimate and parameter sweep", cmd_estimate},
    };
    std::vector<CLI::App*> subs;
    for (const auto& e : entries) {
        auto* sub = app.add_subcommand(e.name, e.help);
        sub->add_option("--config", config, "Run config (JSON)")->required()->check(CLI::ExistingFile);
        sub->add_option("--seed", seed, "Seed override");
        sub->add_option("--out", out, "Output directory override");
        sub->add_option("--samples", samples, "Sample count override");
        sub->add_option("--cutoff", cutoff, "Fock cutoff override");
        sub->add_option("--oracle", oracle, "Permanent oracle comparison")->check(CLI::IsMember({"on", "off"}));
        subs.push_back(sub);
    }
    CLI11_PARSE(app, argc, argv);

    for (std::size_t k = 0; k < subs.size(); ++k) {
        const auto* sub = subs[k];
        if (!sub->parsed()) continue;
        Overrides o;
        if (sub->count("--seed")) o.seed = seed;
        if (sub->count("--out")) o.out = out;
        if (sub->count("--samples")) o.samples = samples;
        if (sub->count("--cutoff")) o.cutoff = cutoff;
        if (sub->count("--oracle")) o.oracle = oracle == "on";
        try {
            return entries[k].run(load_run_config(config, o));
        } catch (const dcegbs::Error& e) {
            std::fprintf(stderr, "%s: %s\n", entries[k].name, e.what());
            return kError;
        } catch (const std::exception& e) {
            std::fprintf(stderr, "%s: unexpected failure: %s\n", entries[k].name, e.what());
            return kError;
        }
    }
    return kError;
}
