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

#include "dcegbs/scattershot.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "dcegbs/combinatorics.hpp"
#include "dcegbs/error.hpp"

namespace dcegbs {
namespace {

constexpr int kMaxOraclePhotons = 4;
constexpr int kMaxOracleModes = 10;

// Every pattern of `total` photons over `modes` modes, in lexicographic order.
void compositions(int modes, int total, FockPattern& current, int k, std::vector<FockPattern>& out) {
    if (k == modes - 1) {
        current[k] = total;
        out.push_back(current);
        return;
    }
    for (int c = total; c >= 0; --c) {
        current[k] = c;
        compositions(modes, total - c, current, k + 1, out);
    }
}

std::vector<FockPattern> compositions(int modes, int total) {
    std::vector<FockPattern> out;
    FockPattern current(modes, 0);
    compositions(modes, total, current, 0, out);
    return out;
}

bool collision_free(const FockPattern& p) {
    return std::all_of(p.begin(), p.end(), [](int c) { return c <= 1; });
}

int total(const FockPattern& p) { return std::accumulate(p.begin(), p.end(), 0); }

}  // namespace

GaussianState prepare_scattershot_state(int pairs, double r, double phi) {
    if (pairs < 1) throw Error(ErrorKind::InvalidConfig, "need at least one pair");
    return prepare_scattershot_state(std::vector<SqueezeSpec>(pairs, SqueezeSpec{r, phi}));
}

GaussianState prepare_scattershot_state(const std::vector<SqueezeSpec>& squeezers) {
    const int m = static_cast<int>(squeezers.size());
    if (m < 1) throw Error(ErrorKind::InvalidConfig, "need at least one pair");
    GaussianState state(2 * m);
    for (int k = 0; k < m; ++k) {
        if (!(squeezers[k].r >= 0.0)) throw Error(ErrorKind::InvalidConfig, "squeezing r must be >= 0");
        state = apply_two_mode_squeeze(state, k, m + k, squeezers[k].r, squeezers[k].phi);
    }
    return state;
}

ScattershotRun run_scattershot(const ResonatorPair& cfg, const TargetInstance& instance, std::size_t n_samples,
                               int n_target, std::uint64_t seed, const ScattershotOptions& options) {
    instance.validate();
    if (n_target < 0) throw Error(ErrorKind::InvalidConfig, "n_target must be >= 0");
    const int m = instance.n_modes;

    ScattershotRun run;
    GaussianState state(1);
    std::vector<int> network(m), idle(m);
    if (options.route == ScattershotOptions::Route::Direct) {
        std::iota(network.begin(), network.end(), 0);
        std::iota(idle.begin(), idle.end(), m);
        state = prepare_scattershot_state(instance.squeezers);
        state = state.transformed(SymplecticTransform::from_unitary(instance.unitary).embed(2 * m, network));
    } else {
        cfg.validate();
        const auto placement = scattershot_placement(m);
        for (int k = 0; k < m; ++k) {
            network[k] = engine_index(cfg, placement.modes[k]);
            idle[k] = engine_index(cfg, placement.modes[m + k]);
        }
        state = GaussianState(cfg.total_modes());
        for (int k = 0; k < m; ++k)
            state = apply_two_mode_squeeze(state, network[k], idle[k], instance.squeezers[k].r,
                                           instance.squeezers[k].phi);
        run.compiled = schedule_from_ops(cfg, reck_decompose(instance.unitary), network_placement(m), options.compile);
        state = state.transformed(schedule_transform(cfg, run.compiled->schedule, options.compile.resonance));
    }

    const auto table = photon_distribution_total(state, 2 * n_target);
    run.leakage = table.leakage;
    const DiscreteSampler sampler(table.probabilities);
    std::mt19937_64 rng(seed);
    run.records.reserve(n_samples);
    for (std::size_t d = 0; d < n_samples; ++d) {
        const FockPattern& joint = table.patterns[sampler.draw(rng)];
        ScattershotRecord rec;
        rec.herald.reserve(m);
        rec.output.reserve(m);
        for (int k = 0; k < m; ++k) {
            rec.herald.push_back(joint[idle[k]]);
            rec.output.push_back(joint[network[k]]);
        }
        rec.accepted = total(rec.herald) == n_target;
        rec.seed = seed;
        rec.draw = d;
        run.accepted += rec.accepted ? 1 : 0;
        run.records.push_back(std::move(rec));
    }
    if (run.accepted == 0) {
        std::ostringstream msg;
        msg << "no record heralded " << n_target << " photons in " << n_samples << " draws";
        throw Error(ErrorKind::NoAcceptedSamples, msg.str());
    }
    run.acceptance_fraction = static_cast<double>(run.accepted) / static_cast<double>(n_samples);
    return run;
}

std::map<FockPattern, double> conditional_distribution_oracle(const ComplexMatrix& u, const FockPattern& herald,
                                                              int n) {
    const int modes = static_cast<int>(u.rows());
    if (n > kMaxOraclePhotons || modes > kMaxOracleModes) {
        std::ostringstream msg;
        msg << "oracle limited to " << kMaxOraclePhotons << " photons and " << kMaxOracleModes << " modes";
        throw Error(ErrorKind::MatrixTooLarge, msg.str());
    }
    if (static_cast<int>(herald.size()) != modes || total(herald) != n)
        throw Error(ErrorKind::InvalidConfig, "herald pattern must have one count per mode summing to n");
    double herald_factorials = 1.0;
    for (int c : herald) herald_factorials *= factorial(c);

    std::map<FockPattern, double> out;
    for (const auto& t : compositions(modes, n)) {
        double output_factorials = 1.0;
        for (int c : t) output_factorials *= factorial(c);
        const Complex perm = permanent(repeat_submatrix(u, t, herald));
        out.emplace(t, std::norm(perm) / (herald_factorials * output_factorials));
    }
    return out;
}

FockPattern joint_pattern(const FockPattern& herald, const FockPattern& output) {
    FockPattern key = herald;
    key.insert(key.end(), output.begin(), output.end());
    return key;
}

std::map<FockPattern, double> heralded_oracle(const ComplexMatrix& u, int n) {
    std::vector<FockPattern> heralds;
    for (const auto& s : compositions(static_cast<int>(u.rows()), n))
        if (collision_free(s)) heralds.push_back(s);
    std::map<FockPattern, double> out;
    const double weight = 1.0 / static_cast<double>(heralds.size());
    for (const auto& s : heralds)
        for (const auto& [t, p] : conditional_distribution_oracle(u, s, n)) out.emplace(joint_pattern(s, t), weight * p);
    return out;
}

std::map<FockPattern, double> heralded_empirical(const std::vector<ScattershotRecord>& records) {
    std::map<FockPattern, double> counts;
    std::size_t kept = 0;
    for (const auto& rec : records) {
        if (!rec.accepted || !collision_free(rec.herald)) continue;
        counts[joint_pattern(rec.herald, rec.output)] += 1.0;
        ++kept;
    }
    for (auto& [key, value] : counts) value /= static_cast<double>(kept);
    return counts;
}

double heralding_probability(const std::vector<SqueezeSpec>& squeezers, int n) {
    if (n < 0) return 0.0;
    std::vector<double> dist(n + 1, 0.0);
    dist[0] = 1.0;
    for (const auto& s : squeezers) {
        const double p = std::pow(std::tanh(s.r), 2);
        std::vector<double> next(n + 1, 0.0);
        for (int a = 0; a <= n; ++a)
            for (int k = 0; a + k <= n; ++k) next[a + k] += dist[a] * (1.0 - p) * std::pow(p, k);
        dist = std::move(next);
    }
    const double below = std::accumulate(dist.begin(), dist.end(), 0.0);
    return dist[n] / below;
}

ParityReadout parity_readout(const FockPattern& pattern, const std::vector<double>& couplings,
                             const RealMatrix& detunings) {
    const int modes = static_cast<int>(pattern.size());
    if (!couplings.empty() && static_cast<int>(couplings.size()) != modes)
        throw Error(ErrorKind::InvalidConfig, "one coupling per mode is required");
    if (detunings.size() > 0 && (detunings.rows() != modes || couplings.empty()))
        throw Error(ErrorKind::InvalidConfig, "detunings need one row per mode and matching couplings");

    ParityReadout out;
    for (int k = 0; k < modes; ++k) {
        if (pattern[k] < 0) throw Error(ErrorKind::InvalidConfig, "photon counts must be >= 0");
        out.parities.push_back(pattern[k] % 2 == 0 ? Parity::Even : Parity::Odd);
        if (pattern[k] >= 2) out.aliased_modes.push_back(k);
    }
    for (int k = 0; k < static_cast<int>(detunings.rows()); ++k)
        for (int a = 0; a < static_cast<int>(detunings.cols()); ++a)
            out.plan.push_back({k, a, kPi * couplings[k] * couplings[k] / detunings(k, a)});
    return out;
}

ExperimentEstimate experiment_estimate(const ResonatorPair& cfg, const PumpSchedule& schedule,
                                       double measurement_time, const ResonanceOptions& options) {
    if (!(measurement_time >= 0.0)) throw Error(ErrorKind::InvalidConfig, "measurement time must be >= 0");
    ExperimentEstimate est;
    est.pulse_count = schedule.pulses.size();
    est.pulse_time = schedule.total_duration();
    est.measurement_time = measurement_time;

    double beta_sq = 0.0;
    std::size_t squeezers = 0;
    for (const auto& pulse : schedule.pulses) {
        if (pulse.intent != PulseIntent::Squeeze) continue;
        const double beta = std::abs(pulse_bogoliubov_resonant(cfg, pulse, pulse.j, pulse.l, options).value);
        est.max_beta = std::max(est.max_beta, beta);
        beta_sq += beta * beta;
        ++squeezers;
    }
    if (squeezers > 0) est.mean_photons_per_pair = beta_sq / static_cast<double>(squeezers);
    if (est.mean_photons_per_pair > 0.0) {
        // Absorb rounding so that |beta| = 0.1 maps to exactly 100.
        est.repetitions = std::ceil(1.0 / est.mean_photons_per_pair * (1.0 - 1e-12));
    }

    const double cycle = est.pulse_time + measurement_time;
    if (est.attainable() && std::isfinite(cycle) && cycle > 0.0) est.event_rate = 1.0 / (est.repetitions * cycle);
    return est;
}

PumpSchedule feasibility_schedule(const ResonatorPair& cfg, int n_photons, double amplitude, double duration, int j,
                                  int l) {
    if (n_photons < 1) throw Error(ErrorKind::InvalidConfig, "n_photons must be >= 1");
    const int pairs = n_photons * n_photons;
    const int splitters = pairs * (pairs - 1) / 2;
    PumpSchedule schedule;
    auto add = [&](PulseIntent intent, ResonanceKind kind, int count) {
        PumpPulse pulse;
        pulse.intent = intent;
        pulse.pump_frequency = resonance_frequency(cfg, j, l, kind);
        pulse.amplitude = amplitude;
        pulse.duration = duration;
        pulse.j = j;
        pulse.l = l;
        pulse.validate(cfg);
        schedule.pulses.insert(schedule.pulses.end(), count, pulse);
    };
    add(PulseIntent::Squeeze, ResonanceKind::Plus, pairs);
    if (splitters > 0) add(PulseIntent::BeamSplit, ResonanceKind::Minus, splitters);
    return schedule;
}

}  // namespace dcegbs
