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

#include "dcegbs/compiler.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include <Eigen/QR>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/tools/roots.hpp>

#include "dcegbs/error.hpp"

namespace dcegbs {
namespace {

constexpr double kUnitaryTolerance = 1e-10;
constexpr double kBesselPeak = 1.8411837813406593;  // first zero of J1'

double wrap_phase(double phi) {
    double out = std::fmod(phi, 2.0 * kPi);
    if (out < 0.0) out += 2.0 * kPi;
    return out;
}

ComplexMatrix ginibre(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0 / std::sqrt(2.0));
    ComplexMatrix z(n, n);
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r) z(r, c) = Complex(normal(rng), normal(rng));
    return z;
}

ComplexMatrix bs_matrix(int n, int i, int j, double theta, double phi) {
    ComplexMatrix m = ComplexMatrix::Identity(n, n);
    const double c = std::cos(theta), s = std::sin(theta);
    m(i, i) = c;
    m(j, j) = c;
    m(i, j) = -std::polar(s, -phi);
    m(j, i) = std::polar(s, phi);
    return m;
}

void check_op_modes(int n, const ElementaryOp& op) {
    auto bad = [n](int k) { return k < 0 || k >= n; };
    if (bad(op.mode_a) || bad(op.mode_b) || (op.kind != OpKind::PhaseShift && op.mode_a == op.mode_b)) {
        std::ostringstream msg;
        msg << "op modes (" << op.mode_a << ", " << op.mode_b << ") invalid for " << n << " modes";
        throw Error(ErrorKind::InvalidModeIndex, msg.str());
    }
}

bool same_resonance(const Resonance& r, int j, int l, ResonanceKind kind) {
    return r.j == j && r.l == l && r.kind == kind;
}

void check_addressable(const ResonatorPair& cfg, const std::vector<Resonance>& table, int j, int l,
                       ResonanceKind kind, double frequency, double tolerance) {
    for (const auto& r : table) {
        if (same_resonance(r, j, l, kind)) continue;
        if (std::abs(r.frequency - frequency) <= tolerance * frequency) {
            std::ostringstream msg;
            msg << to_string(kind) << " resonance of (j=" << j << ", l=" << l << ") at " << frequency
                << " rad/s collides with " << to_string(r.kind) << " (j=" << r.j << ", l=" << r.l << ") at "
                << r.frequency;
            throw Error(ErrorKind::FrequencyCollision, msg.str());
        }
    }
    (void)cfg;
}

// Orders a logical pair into (left, right) resonator modes.
struct CrossPair {
    ModeRef left;
    ModeRef right;
    bool swapped = false;  // the op's first mode is the right one
};

CrossPair cross_pair(const ModeRef& a, const ModeRef& b) {
    if (a.side == b.side) {
        std::ostringstream msg;
        msg << "modes " << to_string(a.side) << a.index << " and " << to_string(b.side) << b.index
            << " share a resonator, where sum and difference frequencies are not unique";
        throw Error(ErrorKind::FrequencyCollision, msg.str());
    }
    if (a.side == Side::Left) return {a, b, false};
    return {b, a, true};
}

}  // namespace

void TargetInstance::validate() const {
    if (n_modes < 1) throw Error(ErrorKind::InvalidConfig, "n_modes must be >= 1");
    if (unitary.rows() != n_modes || unitary.cols() != n_modes)
        throw Error(ErrorKind::InvalidConfig, "unitary must be n_modes x n_modes");
    if (static_cast<int>(squeezers.size()) != n_modes)
        throw Error(ErrorKind::InvalidConfig, "one squeezer per network mode is required");
    for (const auto& s : squeezers)
        if (!(s.r >= 0.0) || !std::isfinite(s.r) || !std::isfinite(s.phi))
            throw Error(ErrorKind::InvalidConfig, "squeezer parameters must be finite with r >= 0");
    const double err = unitarity_error(unitary);
    if (err > kUnitaryTolerance) {
        std::ostringstream msg;
        msg << "unitarity error " << err;
        throw Error(ErrorKind::NotUnitary, msg.str());
    }
    if (real_only) {
        if (unitary.imag().cwiseAbs().maxCoeff() > kUnitaryTolerance)
            throw Error(ErrorKind::InvalidConfig, "real_only instance has a complex unitary");
        for (const auto& s : squeezers) {
            double p = wrap_phase(s.phi);
            if (std::min({p, std::abs(p - kPi), 2.0 * kPi - p}) > 1e-12)
                throw Error(ErrorKind::InvalidConfig, "real_only instance needs squeezer phases 0 or pi");
        }
    }
}

ComplexMatrix haar_random_unitary(int n, std::uint64_t seed) {
    if (n < 1) throw Error(ErrorKind::InvalidConfig, "dimension must be >= 1");
    Eigen::HouseholderQR<ComplexMatrix> qr(ginibre(n, seed));
    ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
    const ComplexMatrix& r = qr.matrixQR();
    for (int k = 0; k < n; ++k) {
        const double mag = std::abs(r(k, k));
        if (mag > 0.0) q.col(k) *= r(k, k) / mag;
    }
    return q;
}

RealMatrix random_real_orthogonal(int n, std::uint64_t seed) {
    if (n < 1) throw Error(ErrorKind::InvalidConfig, "dimension must be >= 1");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    RealMatrix g(n, n);
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r) g(r, c) = normal(rng);
    Eigen::HouseholderQR<RealMatrix> qr(g);
    RealMatrix q = qr.householderQ() * RealMatrix::Identity(n, n);
    for (int k = 0; k < n; ++k)
        if (qr.matrixQR()(k, k) < 0.0) q.col(k) *= -1.0;
    return q;
}

double unitarity_error(const ComplexMatrix& u) {
    if (u.rows() != u.cols()) return std::numeric_limits<double>::infinity();
    const auto n = u.rows();
    if (n == 0) return 0.0;
    return (u.adjoint() * u - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
}

std::vector<ElementaryOp> reck_decompose(const ComplexMatrix& u) {
    const double err = unitarity_error(u);
    if (err > kUnitaryTolerance) {
        std::ostringstream msg;
        msg << "unitarity error " << err << " exceeds " << kUnitaryTolerance;
        throw Error(ErrorKind::NotUnitary, msg.str());
    }
    const int n = static_cast<int>(u.rows());
    ComplexMatrix w = u;
    std::vector<ElementaryOp> nulling;
    for (int col = 0; col + 1 < n; ++col) {
        for (int row = n - 1; row > col; --row) {
            const Complex a = w(row - 1, col);
            const Complex b = w(row, col);
            double theta = 0.0, phi = 0.0;
            if (std::abs(b) > 0.0) {
                theta = std::atan2(std::abs(b), std::abs(a));
                phi = std::abs(a) > 0.0 ? std::arg(-(b / std::abs(b)) / (a / std::abs(a))) : 0.0;
            }
            const ComplexMatrix t = bs_matrix(n, row - 1, row, theta, phi);
            w.middleRows(row - 1, 2) = (t.block(row - 1, row - 1, 2, 2) * w.middleRows(row - 1, 2)).eval();
            nulling.push_back(ElementaryOp::beam_splitter(row - 1, row, theta, phi));
        }
    }
    std::vector<ElementaryOp> ops;
    ops.reserve(n + nulling.size());
    for (int k = 0; k < n; ++k) ops.push_back(ElementaryOp::phase_shift(k, wrap_phase(std::arg(w(k, k)))));
    for (auto it = nulling.rbegin(); it != nulling.rend(); ++it)
        ops.push_back(ElementaryOp::beam_splitter(it->mode_a, it->mode_b, it->value, wrap_phase(it->phi + kPi)));
    return ops;
}

ComplexMatrix reconstruct_unitary(int n_modes, const std::vector<ElementaryOp>& ops) {
    ComplexMatrix m = ComplexMatrix::Identity(n_modes, n_modes);
    for (const auto& op : ops) {
        check_op_modes(n_modes, op);
        switch (op.kind) {
            case OpKind::PhaseShift:
                m.row(op.mode_a) *= std::polar(1.0, op.phi);
                break;
            case OpKind::BeamSplitter:
                m = (bs_matrix(n_modes, op.mode_a, op.mode_b, op.value, op.phi) * m).eval();
                break;
            case OpKind::TwoModeSqueeze:
                throw Error(ErrorKind::InvalidConfig, "squeezers have no mode-space unitary");
        }
    }
    return m;
}

SymplecticTransform ops_transform(int n_modes, const std::vector<ElementaryOp>& ops) {
    auto total = SymplecticTransform::identity(n_modes);
    for (const auto& op : ops) {
        check_op_modes(n_modes, op);
        switch (op.kind) {
            case OpKind::PhaseShift:
                total = phase_shift_transform(n_modes, op.mode_a, op.phi).compose(total);
                break;
            case OpKind::BeamSplitter:
                total = beam_splitter_transform(n_modes, op.mode_a, op.mode_b, op.value, op.phi).compose(total);
                break;
            case OpKind::TwoModeSqueeze:
                total = two_mode_squeeze_transform(n_modes, op.mode_a, op.mode_b, op.value, op.phi).compose(total);
                break;
        }
    }
    return total;
}

int engine_index(const ResonatorPair& cfg, ModeRef mode) {
    cfg.check_mode(mode);
    return mode.side == Side::Left ? mode.index - 1 : cfg.modes_left + mode.index - 1;
}

ModePlacement network_placement(int n_network) {
    if (n_network < 1) throw Error(ErrorKind::InvalidConfig, "network needs at least one mode");
    ModePlacement p;
    for (int k = 0; k < n_network; ++k)
        p.modes.push_back(k % 2 == 0 ? ModeRef{Side::Right, k / 2 + 1} : ModeRef{Side::Left, k / 2 + 1});
    return p;
}

ModePlacement scattershot_placement(int n_network) {
    ModePlacement p = network_placement(n_network);
    const int right_used = (n_network + 1) / 2;
    const int left_used = n_network / 2;
    int next_left = left_used, next_right = right_used;
    for (int k = 0; k < n_network; ++k) {
        if (p.modes[k].side == Side::Right)
            p.modes.push_back({Side::Left, ++next_left});
        else
            p.modes.push_back({Side::Right, ++next_right});
    }
    return p;
}

CompiledSchedule schedule_from_ops(const ResonatorPair& cfg, const std::vector<ElementaryOp>& ops,
                                   const ModePlacement& placement, const CompileOptions& options) {
    cfg.validate();
    for (const auto& m : placement.modes) cfg.check_mode(m);
    const auto& policy = options.policy;
    if (policy.mode == AmplitudePolicy::Mode::Randomized &&
        !(policy.amplitude_min > 0.0 && policy.amplitude_max >= policy.amplitude_min))
        throw Error(ErrorKind::InvalidConfig, "randomized amplitude range must satisfy 0 < min <= max");
    if (policy.mode == AmplitudePolicy::Mode::Fixed && !(policy.amplitude > 0.0))
        throw Error(ErrorKind::InvalidConfig, "fixed amplitude must be positive");

    const auto table = resonance_table(cfg);
    std::mt19937_64 rng(policy.seed);
    std::uniform_real_distribution<double> draw(policy.amplitude_min, policy.amplitude_max);

    CompiledSchedule out;
    if (policy.mode == AmplitudePolicy::Mode::Randomized) out.schedule.amplitude_seed = policy.seed;

    for (const auto& op : ops) {
        check_op_modes(placement.size(), op);
        const ModeRef a = placement.modes[op.mode_a];

        if (op.kind == OpKind::PhaseShift) {
            PumpPulse frame;
            frame.intent = PulseIntent::Idle;
            frame.phase = wrap_phase(op.phi);
            frame.frame_mode = a;
            out.schedule.pulses.push_back(frame);
            out.targets.push_back(0.0);
            continue;
        }

        const CrossPair pair = cross_pair(a, placement.modes[op.mode_b]);
        const bool squeeze = op.kind == OpKind::TwoModeSqueeze;
        const ResonanceKind kind = squeeze ? ResonanceKind::Plus : ResonanceKind::Minus;
        const int j = pair.right.index, l = pair.left.index;
        const double pump = resonance_frequency(cfg, j, l, kind);
        check_addressable(cfg, table, j, l, kind, pump, options.collision_tolerance);

        const double target = squeeze ? std::sinh(op.value) : op.value;
        if (!(target >= 0.0) || !std::isfinite(target))
            throw Error(ErrorKind::InvalidConfig, "op magnitude must be finite and >= 0");
        if (squeeze && target > options.beta_max) {
            std::ostringstream msg;
            msg << "squeezer r = " << op.value << " needs |beta| = " << target << " above " << options.beta_max;
            throw Error(ErrorKind::UnreachableCoefficient, msg.str());
        }

        double amplitude = policy.mode == AmplitudePolicy::Mode::Fixed ? policy.amplitude : draw(rng);
        const double rate = resonant_rate(cfg, j, l, kind, amplitude);
        double duration = target / std::abs(rate);
        const double rwa_time = options.resonance.rwa_min / pump * (1.0 + 1e-9);
        if (target > 0.0 && duration < rwa_time) {
            if (!policy.lower_amplitude_for_rwa) {
                std::ostringstream msg;
                msg << "pulse needs omega_p t = " << pump * duration << " below " << options.resonance.rwa_min;
                throw Error(ErrorKind::RWAInvalid, msg.str());
            }
            duration = rwa_time;
            const double unit_rate = std::abs(resonant_rate(cfg, j, l, kind, 1.0));
            amplitude = std::cbrt(target / (unit_rate * duration));
            out.warnings.push_back("lowered amplitude to meet the rotating-wave gate");
        }

        double phase = op.phi;
        if (!squeeze && pair.swapped) phase = kPi - phase;
        if (rate < 0.0) phase += kPi;

        PumpPulse pulse;
        pulse.intent = squeeze ? PulseIntent::Squeeze : PulseIntent::BeamSplit;
        pulse.pump_frequency = pump;
        pulse.amplitude = target > 0.0 ? amplitude : 0.0;
        pulse.duration = target > 0.0 ? duration : 0.0;
        pulse.phase = wrap_phase(phase);
        pulse.j = j;
        pulse.l = l;
        pulse.validate(cfg);

        const double realized = std::abs(pulse_bogoliubov_resonant(cfg, pulse, j, l, options.resonance).value);
        if (target > 0.0)
            out.max_relative_error = std::max(out.max_relative_error, std::abs(realized - target) / target);
        if (squeeze) out.max_beta = std::max(out.max_beta, realized);
        out.schedule.pulses.push_back(pulse);
        out.targets.push_back(target);
    }
    return out;
}

std::vector<ElementaryOp> instance_ops(const TargetInstance& instance) {
    instance.validate();
    const int n = instance.n_modes;
    std::vector<ElementaryOp> ops;
    for (int k = 0; k < n; ++k)
        ops.push_back(ElementaryOp::two_mode_squeeze(k, n + k, instance.squeezers[k].r, instance.squeezers[k].phi));
    for (auto op : reck_decompose(instance.unitary)) ops.push_back(op);
    return ops;
}

CompiledSchedule compile_instance(const ResonatorPair& cfg, const TargetInstance& instance,
                                  const CompileOptions& options) {
    return schedule_from_ops(cfg, instance_ops(instance), scattershot_placement(instance.n_modes), options);
}

SymplecticTransform schedule_transform(const ResonatorPair& cfg, const PumpSchedule& schedule,
                                       const ResonanceOptions& options) {
    cfg.validate();
    schedule.validate(cfg);
    const int n = cfg.total_modes();
    auto total = SymplecticTransform::identity(n);
    for (const auto& pulse : schedule.pulses) {
        if (pulse.intent == PulseIntent::Idle) {
            if (pulse.frame_mode) {
                total = phase_shift_transform(n, engine_index(cfg, *pulse.frame_mode), pulse.phase).compose(total);
            } else {
                for (Side side : {Side::Left, Side::Right})
                    for (int k = 1; k <= cfg.modes(side); ++k)
                        total = phase_shift_transform(n, engine_index(cfg, {side, k}),
                                                      -cfg.frequency(side, k) * pulse.duration)
                                    .compose(total);
            }
            continue;
        }
        const double c = pulse_bogoliubov_resonant(cfg, pulse, pulse.j, pulse.l, options).value;
        const double phase = pulse.phase + (c < 0.0 ? kPi : 0.0);
        const int left = engine_index(cfg, {Side::Left, pulse.l});
        const int right = engine_index(cfg, {Side::Right, pulse.j});
        if (pulse.intent == PulseIntent::Squeeze)
            total = two_mode_squeeze_transform(n, left, right, std::asinh(std::abs(c)), phase).compose(total);
        else
            total = beam_splitter_transform(n, left, right, std::abs(c), phase).compose(total);
    }
    return total;
}

double flux_amplitude_for_coupling(double target, double calibration) {
    if (!(calibration > 0.0)) throw Error(ErrorKind::InvalidConfig, "calibration constant must be positive");
    const double peak = calibration * boost::math::cyl_bessel_j(1, kBesselPeak);
    if (!(target >= 0.0) || target > peak) {
        std::ostringstream msg;
        msg << "coupling " << target << " outside the first branch [0, " << peak << "]";
        throw Error(ErrorKind::OutOfBranch, msg.str());
    }
    if (target == 0.0) return 0.0;
    if (target == peak) return kBesselPeak / (2.0 * kPi);
    auto f = [&](double x) { return calibration * boost::math::cyl_bessel_j(1, x) - target; };
    std::uintmax_t iterations = 200;
    auto [lo, hi] = boost::math::tools::toms748_solve(f, 0.0, kBesselPeak, -target, peak - target,
                                                      boost::math::tools::eps_tolerance<double>(52), iterations);
    return 0.5 * (lo + hi) / (2.0 * kPi);
}

MultitoneDrive multitone_schedule(const ResonatorPair& cfg, const ComplexMatrix& coupling,
                                  const ComplexMatrix& squeezing, double duration, double calibration,
                                  const CompileOptions& options) {
    cfg.validate();
    auto check_shape = [&](const ComplexMatrix& m, const char* name) {
        if (m.rows() != cfg.modes_right || m.cols() != cfg.modes_left) {
            std::ostringstream msg;
            msg << name << " must be " << cfg.modes_right << " x " << cfg.modes_left;
            throw Error(ErrorKind::InvalidConfig, msg.str());
        }
    };
    check_shape(coupling, "coupling");
    check_shape(squeezing, "squeezing");
    if (!(duration > 0.0) || !std::isfinite(duration))
        throw Error(ErrorKind::InvalidConfig, "drive duration must be positive");

    const auto table = resonance_table(cfg);
    MultitoneDrive drive;
    drive.duration = duration;
    auto add = [&](int r, int c, Complex value, ResonanceKind kind) {
        if (value == Complex(0.0)) return;
        Tone tone;
        tone.j = r + 1;
        tone.l = c + 1;
        tone.kind = kind;
        tone.coefficient = value;
        tone.frequency = resonance_frequency(cfg, tone.j, tone.l, kind);
        check_addressable(cfg, table, tone.j, tone.l, kind, tone.frequency, options.collision_tolerance);
        if (kind == ResonanceKind::Plus && std::abs(value) * duration > options.beta_max) {
            std::ostringstream msg;
            msg << "|xi| t = " << std::abs(value) * duration << " above " << options.beta_max;
            throw Error(ErrorKind::UnreachableCoefficient, msg.str());
        }
        try {
            tone.flux_ratio = flux_amplitude_for_coupling(std::abs(value), calibration);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::OutOfBranch) throw;
            throw Error(ErrorKind::UnreachableCoefficient, e.what());
        }
        drive.tones.push_back(tone);
    };
    for (int r = 0; r < cfg.modes_right; ++r)
        for (int c = 0; c < cfg.modes_left; ++c) {
            add(r, c, coupling(r, c), ResonanceKind::Minus);
            add(r, c, squeezing(r, c), ResonanceKind::Plus);
        }
    return drive;
}

HamiltonianStep multitone_hamiltonian(const ResonatorPair& cfg, const MultitoneDrive& drive) {
    cfg.validate();
    const int n = cfg.total_modes();
    ComplexMatrix g = ComplexMatrix::Zero(n, n);
    ComplexMatrix z = ComplexMatrix::Zero(n, n);
    for (const auto& tone : drive.tones) {
        const int r = engine_index(cfg, {Side::Right, tone.j});
        const int l = engine_index(cfg, {Side::Left, tone.l});
        if (tone.kind == ResonanceKind::Minus) {
            g(r, l) += tone.coefficient;
            g(l, r) += std::conj(tone.coefficient);
        } else {
            z(r, l) += tone.coefficient;
            z(l, r) += tone.coefficient;
        }
    }
    return HamiltonianStep::quadratic(std::move(g), std::move(z), drive.duration);
}

}  // namespace dcegbs
