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

#include "dcegbs/physics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "dcegbs/error.hpp"

namespace dcegbs {

namespace {

double parity_sign(int n) { return (n % 2 == 0) ? 1.0 : -1.0; }

void check_pair(const ResonatorPair& cfg, int j, int l) {
    cfg.check_mode({Side::Right, j});
    cfg.check_mode({Side::Left, l});
}

// Adaptive Gauss-Kronrod on [a, b]. Throws when the error estimate is not
// below the requested tolerance.
template <class F>
double integrate(F f, double a, double b, const QuadratureOptions& options, double* error_out = nullptr) {
    if (a == b) {
        if (error_out) *error_out = 0.0;
        return 0.0;
    }
    // Boost reports the Kronrod/Gauss gap on [-1, 1] without the interval
    // scale, so integrate over the unit interval and rescale here.
    const double width = b - a;
    double error = 0.0;
    double l1 = 0.0;
    double value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        [&](double s) { return f(a + width * s); }, 0.0, 1.0, options.max_depth, options.relative_tolerance, &error,
        &l1);
    value *= width;
    error *= std::abs(width);
    l1 *= std::abs(width);
    const double bound = std::max(10.0 * options.relative_tolerance * l1, options.absolute_tolerance);
    if (!(error <= bound)) {
        std::ostringstream msg;
        msg << "error estimate " << error << " exceeds tolerance " << bound;
        throw Error(ErrorKind::QuadratureNotConverged, msg.str());
    }
    if (error_out) *error_out = error;
    return value;
}

Complex unit_phase_integral(double nu, double t) {
    // int_0^t exp(i nu s) ds, stable for nu t -> 0
    double x = nu * t;
    if (std::abs(x) < 1e-4) {
        return t * Complex(1.0 - x * x / 6.0, x / 2.0 - x * x * x / 24.0);
    }
    return (std::exp(Complex(0.0, x)) - 1.0) / Complex(0.0, nu);
}

}  // namespace

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidConfig: return "InvalidConfig";
        case ErrorKind::InvalidPulse: return "InvalidPulse";
        case ErrorKind::DegenerateResonance: return "DegenerateResonance";
        case ErrorKind::QuadratureNotConverged: return "QuadratureNotConverged";
        case ErrorKind::OffResonance: return "OffResonance";
        case ErrorKind::RWAInvalid: return "RWAInvalid";
        case ErrorKind::InvalidModeIndex: return "InvalidModeIndex";
        case ErrorKind::NotSymplectifiable: return "NotSymplectifiable";
        case ErrorKind::CutoffTooSmall: return "CutoffTooSmall";
        case ErrorKind::StateSpaceTooLarge: return "StateSpaceTooLarge";
        case ErrorKind::MatrixTooLarge: return "MatrixTooLarge";
        case ErrorKind::OddDimension: return "OddDimension";
        case ErrorKind::NotSymmetric: return "NotSymmetric";
        case ErrorKind::LeakageExceeded: return "LeakageExceeded";
        case ErrorKind::NotUnitary: return "NotUnitary";
        case ErrorKind::UnreachableCoefficient: return "UnreachableCoefficient";
        case ErrorKind::FrequencyCollision: return "FrequencyCollision";
        case ErrorKind::OutOfBranch: return "OutOfBranch";
        case ErrorKind::NoAcceptedSamples: return "NoAcceptedSamples";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

std::string_view to_string(Side side) { return side == Side::Left ? "left" : "right"; }

std::string_view to_string(ResonanceKind kind) { return kind == ResonanceKind::Plus ? "plus" : "minus"; }

std::string_view to_string(PulseIntent intent) {
    switch (intent) {
        case PulseIntent::Squeeze: return "squeeze";
        case PulseIntent::BeamSplit: return "beam_split";
        case PulseIntent::Idle: return "idle";
    }
    return "idle";
}

void ResonatorPair::validate() const {
    auto fail = [](const std::string& what) { throw Error(ErrorKind::InvalidConfig, what); };
    if (!(length_left > 0.0) || !std::isfinite(length_left)) fail("length_left must be positive");
    if (!(length_right > 0.0) || !std::isfinite(length_right)) fail("length_right must be positive");
    if (!(speed > 0.0) || !std::isfinite(speed)) fail("speed must be positive");
    if (modes_left < 1) fail("modes_left must be at least 1");
    if (modes_right < 1) fail("modes_right must be at least 1");
}

double ResonatorPair::wavenumber(Side side, int index) const { return index * kPi / length(side); }

double ResonatorPair::frequency(Side side, int index) const { return speed * wavenumber(side, index); }

void ResonatorPair::check_mode(ModeRef mode) const {
    if (mode.index < 1 || mode.index > modes(mode.side)) {
        std::ostringstream msg;
        msg << to_string(mode.side) << " mode " << mode.index << " outside cutoff " << modes(mode.side);
        throw Error(ErrorKind::InvalidModeIndex, msg.str());
    }
}

void PumpPulse::validate(const ResonatorPair& cfg) const {
    auto fail = [](const std::string& what) { throw Error(ErrorKind::InvalidPulse, what); };
    if (intent != PulseIntent::Idle && !(pump_frequency > 0.0)) fail("pump_frequency must be positive");
    if (pump_frequency < 0.0 || !std::isfinite(pump_frequency)) fail("pump_frequency must be finite and >= 0");
    if (!(duration >= 0.0) || !std::isfinite(duration)) fail("duration must be >= 0");
    if (!(amplitude >= 0.0) || !std::isfinite(amplitude)) fail("amplitude must be >= 0");
    if (!std::isfinite(phase)) fail("phase must be finite");
    if (!(relative_amplitude(cfg) < 1.0)) fail("relative amplitude A/L' must be < 1");
    if (intent != PulseIntent::Idle) check_pair(cfg, j, l);
    if (frame_mode) cfg.check_mode(*frame_mode);
}

double PumpSchedule::total_duration() const {
    double total = 0.0;
    for (const auto& p : pulses) total += p.duration;
    return total;
}

void PumpSchedule::validate(const ResonatorPair& cfg) const {
    for (const auto& p : pulses) p.validate(cfg);
}

std::vector<double> mode_frequencies(const ResonatorPair& cfg, Side side) {
    cfg.validate();
    std::vector<double> out;
    out.reserve(cfg.modes(side));
    for (int n = 1; n <= cfg.modes(side); ++n) out.push_back(cfg.frequency(side, n));
    return out;
}

double resonance_frequency(const ResonatorPair& cfg, int j, int l, ResonanceKind kind) {
    cfg.validate();
    check_pair(cfg, j, l);
    double right = cfg.frequency(Side::Right, j);
    double left = cfg.frequency(Side::Left, l);
    if (kind == ResonanceKind::Plus) return right + left;
    double diff = std::abs(right - left);
    if (diff <= 1e-12 * std::max(right, left)) {
        std::ostringstream msg;
        msg << "omega'_" << j << " == omega_" << l << ", beam-splitter pump frequency would be zero";
        throw Error(ErrorKind::DegenerateResonance, msg.str());
    }
    return diff;
}

StaticCoefficients static_bogoliubov(const ResonatorPair& cfg, int j, int l, double amplitude) {
    cfg.validate();
    check_pair(cfg, j, l);
    StaticCoefficients out;
    double delta = amplitude / cfg.length_right;
    if (delta >= 0.1) {
        std::ostringstream msg;
        msg << "relative amplitude " << delta << " >= 0.1, first-order expansion unreliable";
        out.warnings.push_back(msg.str());
    }
    const double L = cfg.length_left;
    const double Lp = cfg.length_right;
    double prefactor = -parity_sign(l) * j * l * kPi * kPi * kPi * amplitude * amplitude / (6.0 * L) * delta;
    out.alpha = prefactor * (l / L - j / Lp);
    out.beta = prefactor * (l / L + j / Lp);
    return out;
}

NumericStaticCoefficients static_bogoliubov_numeric(const ResonatorPair& cfg, int j, int l, double amplitude,
                                                    const QuadratureOptions& options) {
    cfg.validate();
    check_pair(cfg, j, l);
    if (!(amplitude >= 0.0)) throw Error(ErrorKind::InvalidPulse, "amplitude must be >= 0");
    const double c = cfg.speed;
    const double L = cfg.length_left;
    const double delta = amplitude / cfg.length_right;
    if (!(delta < 1.0)) throw Error(ErrorKind::InvalidPulse, "relative amplitude A/L' must be < 1");

    const double k_left = cfg.wavenumber(Side::Left, l);
    const double omega_left = cfg.frequency(Side::Left, l);
    const double k_right = cfg.wavenumber(Side::Right, j) / (1.0 - delta);
    const double omega_right = cfg.frequency(Side::Right, j) / (1.0 - delta);

    // t = 0 values: u = sin(k_l (x + L)), d_t u = -i omega_l u;
    //               v = sin(k'_j (x - A) / (1 - delta)), d_t v = -i omega'_j / (1 - delta) v.
    auto u = [&](double x) { return std::sin(k_left * (x + L)); };
    auto v = [&](double x) { return std::sin(k_right * (x - amplitude)); };

    double error = 0.0;
    // Integrate in s = x / A so the integrand scale does not shrink with A.
    double overlap =
        amplitude * integrate([&](double s) { return u(amplitude * s) * v(amplitude * s); }, 0.0, 1.0, options, &error);
    error *= amplitude;

    const Complex I(0.0, 1.0);
    // (v d_t u - u d_t v) weights the overlap by the frequency difference and
    // (v d_t u* - u* d_t v) by the frequency sum.
    Complex diff_weighted = (I / c) * (-I * omega_left + I * omega_right) * overlap;
    Complex sum_weighted = (-I / c) * (I * omega_left + I * omega_right) * overlap;

    NumericStaticCoefficients out;
    out.alpha = diff_weighted;
    out.beta = sum_weighted;
    out.error_estimate = error * (omega_left + omega_right) / c;
    return out;
}

Complex klein_gordon_product(const ResonatorPair& cfg, ModeRef u, ModeRef v, const QuadratureOptions& options) {
    cfg.validate();
    cfg.check_mode(u);
    cfg.check_mode(v);
    if (u.side != v.side) return {0.0, 0.0};
    const double lo = u.side == Side::Left ? -cfg.length_left : 0.0;
    const double hi = u.side == Side::Left ? 0.0 : cfg.length_right;
    const double shift = u.side == Side::Left ? cfg.length_left : 0.0;
    const double ku = cfg.wavenumber(u.side, u.index);
    const double kv = cfg.wavenumber(v.side, v.index);
    const double norm = 1.0 / std::sqrt(kPi * u.index) / std::sqrt(kPi * v.index);
    auto f = [&](double x) { return norm * std::sin(ku * (x + shift)) * std::sin(kv * (x + shift)); };
    // Split at the nodes so each panel is smooth and short.
    const int panels = 4 * std::max(u.index, v.index);
    double sum = 0.0;
    for (int p = 0; p < panels; ++p) {
        double a = lo + (hi - lo) * p / panels;
        double b = lo + (hi - lo) * (p + 1) / panels;
        sum += integrate(f, a, b, options);
    }
    // (u, v) = (i/c) int (u* d_t v - v d_t u*) = (omega_u + omega_v)/c int u v
    double weight = (cfg.frequency(u) + cfg.frequency(v)) / cfg.speed;
    return {weight * sum, 0.0};
}

Complex oscillating_integral(double detuning, double pump_frequency, double t) {
    // sin(w s) = (e^{i w s} - e^{-i w s}) / 2i
    Complex forward = unit_phase_integral(pump_frequency - detuning, t);
    Complex backward = unit_phase_integral(-pump_frequency - detuning, t);
    return (forward - backward) / Complex(0.0, 2.0);
}

Complex oscillating_integral_quadrature(double detuning, double pump_frequency, double t,
                                        const QuadratureOptions& options) {
    if (t == 0.0) return {0.0, 0.0};
    const double fastest = std::abs(pump_frequency) + std::abs(detuning);
    // Panels no longer than half the fastest period.
    const double panel = fastest > 0.0 ? kPi / fastest : t;
    const auto panels = static_cast<long>(std::ceil(t / panel));
    auto re = [&](double s) { return std::cos(detuning * s) * std::sin(pump_frequency * s); };
    auto im = [&](double s) { return -std::sin(detuning * s) * std::sin(pump_frequency * s); };
    double sum_re = 0.0;
    double sum_im = 0.0;
    for (long p = 0; p < panels; ++p) {
        double a = t * static_cast<double>(p) / static_cast<double>(panels);
        double b = t * static_cast<double>(p + 1) / static_cast<double>(panels);
        sum_re += integrate(re, a, b, options);
        sum_im += integrate(im, a, b, options);
    }
    return {sum_re, sum_im};
}

PulseCoefficients pulse_bogoliubov_numeric(const ResonatorPair& cfg, const PumpPulse& pulse, int j, int l,
                                           const PulseNumericOptions& options) {
    cfg.validate();
    check_pair(cfg, j, l);
    pulse.validate(cfg);

    Complex static_alpha;
    Complex static_beta;
    if (options.static_source == StaticSource::Numeric) {
        auto s = static_bogoliubov_numeric(cfg, j, l, pulse.amplitude, options.quadrature);
        static_alpha = s.alpha;
        static_beta = s.beta;
    } else {
        auto s = static_bogoliubov(cfg, j, l, pulse.amplitude);
        static_alpha = s.alpha;
        static_beta = s.beta;
    }

    const double right = cfg.frequency(Side::Right, j);
    const double left = cfg.frequency(Side::Left, l);
    const double minus = right - left;
    const double plus = right + left;

    // The pump phase enters as sin(w s + phi).
    auto integral = [&](double detuning) {
        const double t = pulse.duration;
        if (options.time_integral == TimeIntegral::ClosedForm) {
            Complex fwd = unit_phase_integral(pulse.pump_frequency - detuning, t);
            Complex bwd = unit_phase_integral(-pulse.pump_frequency - detuning, t);
            return (std::exp(Complex(0.0, pulse.phase)) * fwd - std::exp(Complex(0.0, -pulse.phase)) * bwd) /
                   Complex(0.0, 2.0);
        }
        // sin(w s + phi) = cos(phi) sin(w s) + sin(phi) cos(w s); cos(w s) = sin(w s + pi/2)
        Complex sin_part = oscillating_integral_quadrature(detuning, pulse.pump_frequency, t, options.quadrature);
        Complex cos_part{0.0, 0.0};
        if (pulse.phase != 0.0) {
            // int e^{-i d s} cos(w s) ds via the same panelled rule
            const double fastest = std::abs(pulse.pump_frequency) + std::abs(detuning);
            const double panel = fastest > 0.0 ? kPi / fastest : t;
            const auto panels = std::max(1L, static_cast<long>(std::ceil(t / panel)));
            auto re = [&](double s) { return std::cos(detuning * s) * std::cos(pulse.pump_frequency * s); };
            auto im = [&](double s) { return -std::sin(detuning * s) * std::cos(pulse.pump_frequency * s); };
            double sr = 0.0;
            double si = 0.0;
            for (long p = 0; p < panels && t > 0.0; ++p) {
                double a = t * static_cast<double>(p) / static_cast<double>(panels);
                double b = t * static_cast<double>(p + 1) / static_cast<double>(panels);
                sr += integrate(re, a, b, options.quadrature);
                si += integrate(im, a, b, options.quadrature);
            }
            cos_part = {sr, si};
        }
        return std::cos(pulse.phase) * sin_part + std::sin(pulse.phase) * cos_part;
    };

    const Complex I(0.0, 1.0);
    PulseCoefficients out;
    out.alpha = I * minus * static_alpha * integral(minus);
    out.beta = I * plus * static_beta * integral(plus);
    return out;
}

double resonant_rate(const ResonatorPair& cfg, int j, int l, ResonanceKind kind, double amplitude) {
    const double pump = resonance_frequency(cfg, j, l, kind);
    const double c = cfg.speed;
    const double magnitude = cfg.frequency(Side::Right, j) * cfg.frequency(Side::Left, l) * pump * pump * amplitude *
                             amplitude * amplitude / (12.0 * c * c * c);
    const double sign = parity_sign(l) * (kind == ResonanceKind::Plus ? -1.0 : 1.0);
    return sign * magnitude;
}

ResonantCoefficient pulse_bogoliubov_resonant(const ResonatorPair& cfg, const PumpPulse& pulse, int j, int l,
                                              const ResonanceOptions& options) {
    cfg.validate();
    check_pair(cfg, j, l);
    pulse.validate(cfg);

    const double plus = resonance_frequency(cfg, j, l, ResonanceKind::Plus);
    std::optional<double> minus;
    try {
        minus = resonance_frequency(cfg, j, l, ResonanceKind::Minus);
    } catch (const Error&) {
        // degenerate pair, only the Plus resonance exists
    }

    ResonantCoefficient out;
    auto near = [&](double res) { return std::abs(pulse.pump_frequency - res) <= options.detuning_tolerance * res; };
    if (near(plus)) {
        out.kind = ResonanceKind::Plus;
    } else if (minus && near(*minus)) {
        out.kind = ResonanceKind::Minus;
    } else {
        std::ostringstream msg;
        msg << "pump " << pulse.pump_frequency << " rad/s matches neither " << plus << " (plus)";
        if (minus) msg << " nor " << *minus << " (minus)";
        msg << " for j=" << j << ", l=" << l;
        throw Error(ErrorKind::OffResonance, msg.str());
    }

    if (pulse.duration == 0.0) return out;
    const double wt = pulse.pump_frequency * pulse.duration;
    if (wt < options.rwa_min) {
        std::ostringstream msg;
        msg << "omega_p t = " << wt << " below " << options.rwa_min;
        throw Error(ErrorKind::RWAInvalid, msg.str());
    }

    const double c = cfg.speed;
    const double A = pulse.amplitude;
    const double w = pulse.pump_frequency;
    double value = parity_sign(l) * cfg.frequency(Side::Right, j) * cfg.frequency(Side::Left, l) * w * w * A * A * A *
                   pulse.duration / (12.0 * c * c * c);
    if (out.kind == ResonanceKind::Plus) value = -value;
    out.value = value;
    if (out.kind == ResonanceKind::Plus && std::abs(value) >= 0.1) {
        std::ostringstream msg;
        msg << "|beta| = " << std::abs(value) << " >= 0.1, outside the perturbative regime";
        out.warnings.push_back(msg.str());
    }
    return out;
}

std::vector<Resonance> resonance_table(const ResonatorPair& cfg) {
    cfg.validate();
    std::vector<Resonance> out;
    for (int j = 1; j <= cfg.modes_right; ++j) {
        for (int l = 1; l <= cfg.modes_left; ++l) {
            const double right = cfg.frequency(Side::Right, j);
            const double left = cfg.frequency(Side::Left, l);
            out.push_back({j, l, ResonanceKind::Minus, std::abs(right - left)});
            out.push_back({j, l, ResonanceKind::Plus, right + left});
        }
    }
    return out;
}

std::vector<Collision> addressability_report(const ResonatorPair& cfg, double tolerance) {
    auto table = resonance_table(cfg);
    std::vector<Collision> out;
    for (std::size_t a = 0; a < table.size(); ++a) {
        for (std::size_t b = a + 1; b < table.size(); ++b) {
            double sep = std::abs(table[a].frequency - table[b].frequency);
            if (sep <= tolerance) out.push_back({table[a], table[b], sep});
        }
    }
    return out;
}

}  // namespace dcegbs
