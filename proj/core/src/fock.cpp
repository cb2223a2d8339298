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

#include "dcegbs/fock.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <unsupported/Eigen/MatrixFunctions>

#include "dcegbs/error.hpp"

namespace dcegbs {

namespace {

constexpr Complex kI{0.0, 1.0};

std::size_t checked_dimension(int n_modes, int levels) {
    const double dim = std::pow(static_cast<double>(levels), n_modes);
    if (dim > static_cast<double>(kMaxEnumerableOutcomes)) {
        std::ostringstream msg;
        msg << levels << "^" << n_modes << " basis states exceed " << kMaxEnumerableOutcomes;
        throw Error(ErrorKind::StateSpaceTooLarge, msg.str());
    }
    return static_cast<std::size_t>(dim);
}

void check_step_modes(int n_modes, const HamiltonianStep& step) {
    auto bad = [&](int k) { return k < 0 || k >= n_modes; };
    switch (step.kind) {
        case HamiltonianStep::Kind::PhaseShift:
            if (bad(step.i)) throw Error(ErrorKind::InvalidModeIndex, "phase shift mode out of range");
            break;
        case HamiltonianStep::Kind::TwoModeSqueeze:
        case HamiltonianStep::Kind::BeamSplitter:
            if (bad(step.i) || bad(step.j) || step.i == step.j) {
                throw Error(ErrorKind::InvalidModeIndex, "two-mode step needs distinct in-range modes");
            }
            break;
        case HamiltonianStep::Kind::Quadratic:
            if (step.coupling.rows() != n_modes || step.coupling.cols() != n_modes || step.squeezing.rows() != n_modes ||
                step.squeezing.cols() != n_modes) {
                throw Error(ErrorKind::InvalidModeIndex, "quadratic step matrices must match the mode count");
            }
            break;
    }
}

// exp(K) on two modes with `levels` states each, local index n_i + levels * n_j.
ComplexMatrix two_mode_propagator(const HamiltonianStep& step, int levels) {
    const int dim = levels * levels;
    ComplexMatrix k = ComplexMatrix::Zero(dim, dim);
    const double area = step.strength * step.duration;
    const Complex e = std::polar(1.0, step.phase);
    auto at = [levels](int ni, int nj) { return ni + levels * nj; };
    for (int ni = 0; ni < levels; ++ni) {
        for (int nj = 0; nj < levels; ++nj) {
            const int col = at(ni, nj);
            if (step.kind == HamiltonianStep::Kind::TwoModeSqueeze) {
                // r (e^{i phi} a_i^dag a_j^dag - e^{-i phi} a_i a_j)
                if (ni + 1 < levels && nj + 1 < levels) {
                    k(at(ni + 1, nj + 1), col) += area * e * std::sqrt((ni + 1.0) * (nj + 1.0));
                }
                if (ni > 0 && nj > 0) {
                    k(at(ni - 1, nj - 1), col) -= area * std::conj(e) * std::sqrt(1.0 * ni * nj);
                }
            } else {
                // theta (e^{i phi} a_j^dag a_i - e^{-i phi} a_i^dag a_j)
                if (ni > 0 && nj + 1 < levels) {
                    k(at(ni - 1, nj + 1), col) += area * e * std::sqrt(ni * (nj + 1.0));
                }
                if (nj > 0 && ni + 1 < levels) {
                    k(at(ni + 1, nj - 1), col) -= area * std::conj(e) * std::sqrt(nj * (ni + 1.0));
                }
            }
        }
    }
    return k.exp();
}

std::vector<std::size_t> strides_for(int n_modes, int levels) {
    std::vector<std::size_t> s(n_modes);
    std::size_t acc = 1;
    for (int k = 0; k < n_modes; ++k) {
        s[k] = acc;
        acc *= static_cast<std::size_t>(levels);
    }
    return s;
}

double apply_two_mode(TruncatedFockState& state, const HamiltonianStep& step, int padding) {
    const int levels = state.cutoff + 1;
    const int padded = levels + padding;
    const ComplexMatrix prop = two_mode_propagator(step, padded);
    const auto strides = strides_for(state.n_modes, levels);
    const std::size_t dim = static_cast<std::size_t>(state.amplitudes.size());
    const std::size_t si = strides[step.i];
    const std::size_t sj = strides[step.j];

    double leaked = 0.0;
    ComplexVector local(padded * padded);
    for (std::size_t base = 0; base < dim; ++base) {
        if ((base / si) % levels != 0 || (base / sj) % levels != 0) continue;
        local.setZero();
        bool any = false;
        for (int nj = 0; nj < levels; ++nj) {
            for (int ni = 0; ni < levels; ++ni) {
                const Complex v = state.amplitudes[base + ni * si + nj * sj];
                local[ni + padded * nj] = v;
                any = any || v != Complex(0.0, 0.0);
            }
        }
        if (!any) continue;
        const ComplexVector out = prop * local;
        for (int nj = 0; nj < padded; ++nj) {
            for (int ni = 0; ni < padded; ++ni) {
                const Complex v = out[ni + padded * nj];
                if (ni < levels && nj < levels) {
                    state.amplitudes[base + ni * si + nj * sj] = v;
                } else {
                    leaked += std::norm(v);
                }
            }
        }
    }
    return leaked;
}

// H psi for the quadratic Hamiltonian on a box with `levels` states per mode.
ComplexVector apply_quadratic_hamiltonian(const HamiltonianStep& step, const ComplexVector& psi, int n_modes,
                                          int levels) {
    const auto strides = strides_for(n_modes, levels);
    const std::size_t dim = static_cast<std::size_t>(psi.size());
    ComplexVector out = ComplexVector::Zero(psi.size());
    std::vector<int> digits(n_modes, 0);
    for (std::size_t idx = 0; idx < dim; ++idx) {
        if (idx > 0) {
            for (int k = 0; k < n_modes; ++k) {
                if (++digits[k] < levels) break;
                digits[k] = 0;
            }
        }
        const Complex amp = psi[idx];
        if (amp == Complex(0.0, 0.0)) continue;
        for (int a = 0; a < n_modes; ++a) {
            for (int b = 0; b < n_modes; ++b) {
                // G_ab a_a^dag a_b
                const Complex g = step.coupling(a, b);
                if (g != Complex(0.0, 0.0) && digits[b] > 0) {
                    if (a == b) {
                        out[idx] += g * static_cast<double>(digits[a]) * amp;
                    } else if (digits[a] + 1 < levels) {
                        out[idx - strides[b] + strides[a]] +=
                            g * std::sqrt(static_cast<double>(digits[b]) * (digits[a] + 1.0)) * amp;
                    }
                }
            }
            for (int b = a; b < n_modes; ++b) {
                const Complex z = step.squeezing(a, b);
                if (z == Complex(0.0, 0.0)) continue;
                const double half = (a == b) ? 0.5 : 1.0;
                if (a == b) {
                    const int n = digits[a];
                    if (n + 2 < levels) out[idx + 2 * strides[a]] += half * z * std::sqrt((n + 1.0) * (n + 2.0)) * amp;
                    if (n >= 2) out[idx - 2 * strides[a]] += half * std::conj(z) * std::sqrt(n * (n - 1.0)) * amp;
                } else {
                    const int na = digits[a];
                    const int nb = digits[b];
                    if (na + 1 < levels && nb + 1 < levels) {
                        out[idx + strides[a] + strides[b]] += z * std::sqrt((na + 1.0) * (nb + 1.0)) * amp;
                    }
                    if (na > 0 && nb > 0) {
                        out[idx - strides[a] - strides[b]] += std::conj(z) * std::sqrt(1.0 * na * nb) * amp;
                    }
                }
            }
        }
    }
    return out;
}

double apply_quadratic(TruncatedFockState& state, const HamiltonianStep& step, int padding) {
    const int levels = state.cutoff + 1;
    int padded = levels + padding;
    while (padded > levels && std::pow(static_cast<double>(padded), state.n_modes) > kMaxEnumerableOutcomes) --padded;
    checked_dimension(state.n_modes, padded);
    const auto small = strides_for(state.n_modes, levels);
    const auto big = strides_for(state.n_modes, padded);

    auto embed_index = [&](std::size_t idx) {
        std::size_t out = 0;
        for (int k = 0; k < state.n_modes; ++k) out += ((idx / small[k]) % levels) * big[k];
        return out;
    };

    const auto big_dim = checked_dimension(state.n_modes, padded);
    ComplexVector psi = ComplexVector::Zero(static_cast<Eigen::Index>(big_dim));
    for (Eigen::Index idx = 0; idx < state.amplitudes.size(); ++idx) {
        psi[static_cast<Eigen::Index>(embed_index(idx))] = state.amplitudes[idx];
    }

    // exp(-i H t) psi by a Taylor series on substeps with ||H h|| <= 1/2.
    double bound = 0.0;
    bound += step.coupling.cwiseAbs().sum() * padded;
    bound += step.squeezing.cwiseAbs().sum() * padded;
    const double t = step.duration;
    const int substeps = std::max(1, static_cast<int>(std::ceil(2.0 * bound * std::abs(t))));
    const double h = t / substeps;
    for (int s = 0; s < substeps; ++s) {
        ComplexVector term = psi;
        ComplexVector sum = psi;
        for (int k = 1; k < 80; ++k) {
            term = apply_quadratic_hamiltonian(step, term, state.n_modes, padded) * (-kI * h / static_cast<double>(k));
            sum += term;
            if (term.norm() < 1e-17 * sum.norm()) break;
        }
        psi = std::move(sum);
    }

    double kept = 0.0;
    for (Eigen::Index idx = 0; idx < state.amplitudes.size(); ++idx) {
        state.amplitudes[idx] = psi[static_cast<Eigen::Index>(embed_index(idx))];
        kept += std::norm(state.amplitudes[idx]);
    }
    return std::max(0.0, psi.squaredNorm() - kept);
}

}  // namespace

HamiltonianStep HamiltonianStep::two_mode_squeeze(int i, int j, double r, double phi) {
    HamiltonianStep s;
    s.kind = Kind::TwoModeSqueeze;
    s.i = i;
    s.j = j;
    s.strength = r;
    s.phase = phi;
    return s;
}

HamiltonianStep HamiltonianStep::beam_splitter(int i, int j, double theta, double phi) {
    HamiltonianStep s;
    s.kind = Kind::BeamSplitter;
    s.i = i;
    s.j = j;
    s.strength = theta;
    s.phase = phi;
    return s;
}

HamiltonianStep HamiltonianStep::phase_shift(int i, double phi) {
    HamiltonianStep s;
    s.kind = Kind::PhaseShift;
    s.i = i;
    s.strength = phi;
    return s;
}

HamiltonianStep HamiltonianStep::quadratic(ComplexMatrix coupling, ComplexMatrix squeezing, double duration) {
    HamiltonianStep s;
    s.kind = Kind::Quadratic;
    s.coupling = std::move(coupling);
    s.squeezing = std::move(squeezing);
    s.duration = duration;
    return s;
}

SymplecticTransform quadratic_transform(const ComplexMatrix& coupling, const ComplexMatrix& squeezing,
                                        double duration) {
    const auto n = coupling.rows();
    // d/dt (a, a^dag) = -i [[G, Z], [-Z*, -G*]] (a, a^dag)
    ComplexMatrix m(2 * n, 2 * n);
    m << coupling, squeezing, -squeezing.conjugate(), -coupling.conjugate();
    const ComplexMatrix e = (-kI * duration * m).exp();
    return SymplecticTransform::from_bogoliubov(e.topLeftCorner(n, n), e.topRightCorner(n, n));
}

SymplecticTransform step_transform(int n_modes, const HamiltonianStep& step) {
    check_step_modes(n_modes, step);
    const double area = step.strength * step.duration;
    switch (step.kind) {
        case HamiltonianStep::Kind::TwoModeSqueeze:
            if (area < 0.0) return two_mode_squeeze_transform(n_modes, step.i, step.j, -area, step.phase + kPi);
            return two_mode_squeeze_transform(n_modes, step.i, step.j, area, step.phase);
        case HamiltonianStep::Kind::BeamSplitter:
            return beam_splitter_transform(n_modes, step.i, step.j, area, step.phase);
        case HamiltonianStep::Kind::PhaseShift:
            return phase_shift_transform(n_modes, step.i, area);
        case HamiltonianStep::Kind::Quadratic:
            return quadratic_transform(step.coupling, step.squeezing, step.duration);
    }
    return SymplecticTransform::identity(n_modes);
}

double TruncatedFockState::total_leakage() const {
    double total = 0.0;
    for (double l : step_leakage) total += l;
    return total;
}

TruncatedFockState TruncatedFockState::vacuum(int n_modes, int cutoff) {
    if (n_modes < 1) throw Error(ErrorKind::InvalidConfig, "need at least one mode");
    if (cutoff < 0) throw Error(ErrorKind::CutoffTooSmall, "cutoff must be >= 0");
    TruncatedFockState s;
    s.n_modes = n_modes;
    s.cutoff = cutoff;
    s.amplitudes = ComplexVector::Zero(static_cast<Eigen::Index>(checked_dimension(n_modes, cutoff + 1)));
    s.amplitudes[0] = 1.0;
    return s;
}

void fock_apply(TruncatedFockState& state, const HamiltonianStep& step, const FockEvolveOptions& options) {
    check_step_modes(state.n_modes, step);
    double leaked = 0.0;
    switch (step.kind) {
        case HamiltonianStep::Kind::PhaseShift: {
            const auto strides = strides_for(state.n_modes, state.cutoff + 1);
            const double phi = step.strength * step.duration;
            for (Eigen::Index idx = 0; idx < state.amplitudes.size(); ++idx) {
                const auto n = (static_cast<std::size_t>(idx) / strides[step.i]) % (state.cutoff + 1);
                state.amplitudes[idx] *= std::polar(1.0, phi * static_cast<double>(n));
            }
            break;
        }
        case HamiltonianStep::Kind::TwoModeSqueeze:
        case HamiltonianStep::Kind::BeamSplitter:
            leaked = apply_two_mode(state, step, options.padding);
            break;
        case HamiltonianStep::Kind::Quadratic:
            leaked = apply_quadratic(state, step, options.padding);
            break;
    }
    state.step_leakage.push_back(leaked);
    if (leaked > options.max_step_leakage) {
        std::ostringstream msg;
        msg << "step leaked " << leaked << " past cutoff " << state.cutoff;
        throw Error(ErrorKind::LeakageExceeded, msg.str());
    }
}

TruncatedFockState fock_evolve(int n_modes, const std::vector<HamiltonianStep>& schedule, int cutoff,
                               const FockEvolveOptions& options) {
    TruncatedFockState state = TruncatedFockState::vacuum(n_modes, cutoff);
    for (const auto& step : schedule) fock_apply(state, step, options);
    return state;
}

FockDistribution fock_distribution(const TruncatedFockState& state) {
    FockDistribution out;
    FockPattern digits(state.n_modes, 0);
    double sum = 0.0;
    for (Eigen::Index idx = 0; idx < state.amplitudes.size(); ++idx) {
        if (idx > 0) {
            for (int k = 0; k < state.n_modes; ++k) {
                if (++digits[k] <= state.cutoff) break;
                digits[k] = 0;
            }
        }
        const double p = std::norm(state.amplitudes[idx]);
        sum += p;
        if (p > 0.0) out.probabilities.emplace(digits, p);
    }
    out.leakage = std::max(0.0, 1.0 - sum);
    return out;
}

FockDistribution to_fock_distribution(const TruncatedDistribution& table) {
    FockDistribution out;
    for (std::size_t k = 0; k < table.patterns.size(); ++k) {
        if (table.probabilities[k] > 0.0) out.probabilities.emplace(table.patterns[k], table.probabilities[k]);
    }
    out.leakage = table.leakage;
    return out;
}

double total_variation_distance(const std::map<FockPattern, double>& p, const std::map<FockPattern, double>& q) {
    double sum = 0.0;
    auto ip = p.begin();
    auto iq = q.begin();
    while (ip != p.end() || iq != q.end()) {
        if (iq == q.end() || (ip != p.end() && ip->first < iq->first)) {
            sum += std::abs(ip->second);
            ++ip;
        } else if (ip == p.end() || iq->first < ip->first) {
            sum += std::abs(iq->second);
            ++iq;
        } else {
            sum += std::abs(ip->second - iq->second);
            ++ip;
            ++iq;
        }
    }
    return 0.5 * sum;
}

}  // namespace dcegbs
