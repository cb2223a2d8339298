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

#include "dcegbs/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "dcegbs/combinatorics.hpp"
#include "dcegbs/error.hpp"

namespace dcegbs {

namespace {

void check_mode_index(int n_modes, int i) {
    if (i < 0 || i >= n_modes) {
        std::ostringstream msg;
        msg << "mode " << i << " outside [0, " << n_modes << ")";
        throw Error(ErrorKind::InvalidModeIndex, msg.str());
    }
}

void check_mode_pair(int n_modes, int i, int j) {
    check_mode_index(n_modes, i);
    check_mode_index(n_modes, j);
    if (i == j) throw Error(ErrorKind::InvalidModeIndex, "two-mode operation needs distinct modes");
}

double max_abs(const RealMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

RealMatrix symmetrized(const RealMatrix& m) { return 0.5 * (m + m.transpose()); }

}  // namespace

RealMatrix symplectic_form(int n_modes) {
    RealMatrix omega = RealMatrix::Zero(2 * n_modes, 2 * n_modes);
    omega.topRightCorner(n_modes, n_modes).setIdentity();
    omega.bottomLeftCorner(n_modes, n_modes) = -RealMatrix::Identity(n_modes, n_modes);
    return omega;
}

SymplecticTransform::SymplecticTransform(RealMatrix matrix) : matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols() || matrix_.rows() % 2 != 0) {
        throw Error(ErrorKind::NotSymplectifiable, "symplectic matrix must be square of even size");
    }
    double residual = symplectic_residual();
    if (!(residual <= kSymplecticTolerance)) {
        std::ostringstream msg;
        msg << "residual " << residual << " exceeds " << kSymplecticTolerance;
        throw Error(ErrorKind::NotSymplectifiable, msg.str());
    }
}

SymplecticTransform SymplecticTransform::identity(int n_modes) {
    return SymplecticTransform(RealMatrix::Identity(2 * n_modes, 2 * n_modes));
}

SymplecticTransform SymplecticTransform::from_bogoliubov(const ComplexMatrix& u, const ComplexMatrix& v) {
    const auto n = u.rows();
    RealMatrix s(2 * n, 2 * n);
    s.topLeftCorner(n, n) = (u + v).real();
    s.topRightCorner(n, n) = -(u - v).imag();
    s.bottomLeftCorner(n, n) = (u + v).imag();
    s.bottomRightCorner(n, n) = (u - v).real();
    return SymplecticTransform(std::move(s));
}

SymplecticTransform SymplecticTransform::from_unitary(const ComplexMatrix& u) {
    return from_bogoliubov(u, ComplexMatrix::Zero(u.rows(), u.cols()));
}

double SymplecticTransform::symplectic_residual() const {
    const RealMatrix omega = symplectic_form(n_modes());
    return max_abs(matrix_ * omega * matrix_.transpose() - omega);
}

SymplecticTransform SymplecticTransform::compose(const SymplecticTransform& first) const {
    return SymplecticTransform(matrix_ * first.matrix_);
}

SymplecticTransform SymplecticTransform::embed(int n_modes, const std::vector<int>& modes) const {
    const int m = this->n_modes();
    if (static_cast<int>(modes.size()) != m) throw Error(ErrorKind::InvalidModeIndex, "embedding size mismatch");
    for (int k : modes) check_mode_index(n_modes, k);
    RealMatrix out = RealMatrix::Identity(2 * n_modes, 2 * n_modes);
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            out(modes[a], modes[b]) = matrix_(a, b);
            out(modes[a], n_modes + modes[b]) = matrix_(a, m + b);
            out(n_modes + modes[a], modes[b]) = matrix_(m + a, b);
            out(n_modes + modes[a], n_modes + modes[b]) = matrix_(m + a, m + b);
        }
    }
    return SymplecticTransform(std::move(out));
}

GaussianState::GaussianState(int n_modes)
    : n_modes_(n_modes),
      covariance_(RealMatrix::Identity(2 * n_modes, 2 * n_modes)),
      mean_(RealVector::Zero(2 * n_modes)) {
    if (n_modes < 1) throw Error(ErrorKind::InvalidConfig, "a Gaussian state needs at least one mode");
}

GaussianState::GaussianState(RealMatrix covariance)
    : n_modes_(static_cast<int>(covariance.rows() / 2)),
      covariance_(std::move(covariance)),
      mean_(RealVector::Zero(covariance_.rows())) {
    if (covariance_.rows() != covariance_.cols() || covariance_.rows() % 2 != 0 || n_modes_ < 1) {
        throw Error(ErrorKind::InvalidConfig, "covariance must be square with even size");
    }
    if (max_abs(covariance_ - covariance_.transpose()) > 1e-12 * std::max(1.0, max_abs(covariance_))) {
        throw Error(ErrorKind::InvalidConfig, "covariance must be symmetric");
    }
    covariance_ = symmetrized(covariance_);
}

double GaussianState::min_uncertainty_eigenvalue() const {
    ComplexMatrix h = covariance_.cast<Complex>() + Complex(0.0, 1.0) * symplectic_form(n_modes_).cast<Complex>();
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

bool GaussianState::is_physical(double tolerance) const { return min_uncertainty_eigenvalue() >= -tolerance; }

GaussianState GaussianState::transformed(const SymplecticTransform& s) const {
    if (s.n_modes() != n_modes_) throw Error(ErrorKind::InvalidModeIndex, "transform size does not match state");
    return GaussianState(symmetrized(s.matrix() * covariance_ * s.matrix().transpose()));
}

GaussianState vacuum_state(int n_modes) { return GaussianState(n_modes); }

SymplecticTransform two_mode_squeeze_transform(int n_modes, int i, int j, double r, double phi) {
    check_mode_pair(n_modes, i, j);
    if (!(r >= 0.0)) throw Error(ErrorKind::InvalidConfig, "squeezing parameter must be >= 0");
    ComplexMatrix u = ComplexMatrix::Identity(n_modes, n_modes);
    ComplexMatrix v = ComplexMatrix::Zero(n_modes, n_modes);
    u(i, i) = u(j, j) = std::cosh(r);
    v(i, j) = v(j, i) = std::polar(std::sinh(r), phi);
    return SymplecticTransform::from_bogoliubov(u, v);
}

SymplecticTransform beam_splitter_transform(int n_modes, int i, int j, double theta, double phi) {
    check_mode_pair(n_modes, i, j);
    ComplexMatrix u = ComplexMatrix::Identity(n_modes, n_modes);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    u(i, i) = c;
    u(j, j) = c;
    u(i, j) = -std::polar(s, -phi);
    u(j, i) = std::polar(s, phi);
    return SymplecticTransform::from_unitary(u);
}

SymplecticTransform phase_shift_transform(int n_modes, int i, double phi) {
    check_mode_index(n_modes, i);
    ComplexMatrix u = ComplexMatrix::Identity(n_modes, n_modes);
    u(i, i) = std::polar(1.0, phi);
    return SymplecticTransform::from_unitary(u);
}

GaussianState apply_two_mode_squeeze(const GaussianState& state, int i, int j, double r, double phi) {
    return state.transformed(two_mode_squeeze_transform(state.n_modes(), i, j, r, phi));
}

GaussianState apply_beam_splitter(const GaussianState& state, int i, int j, double theta, double phi) {
    return state.transformed(beam_splitter_transform(state.n_modes(), i, j, theta, phi));
}

GaussianState apply_phase_shift(const GaussianState& state, int i, double phi) {
    return state.transformed(phase_shift_transform(state.n_modes(), i, phi));
}

RealMatrix project_to_symplectic(const RealMatrix& near_symplectic) {
    const int n = static_cast<int>(near_symplectic.rows() / 2);
    const RealMatrix omega = symplectic_form(n);
    RealMatrix x = near_symplectic;
    for (int iter = 0; iter < 100; ++iter) {
        RealMatrix inv_t = x.inverse().transpose();
        RealMatrix next = 0.5 * (x + omega * inv_t * omega.transpose());
        const double step = max_abs(next - x);
        x = std::move(next);
        if (step < 1e-15 * std::max(1.0, max_abs(x))) break;
    }
    return x;
}

SymplecticProjection bogoliubov_to_symplectic(const BogoliubovPair& pair) {
    const auto n = pair.alpha.rows();
    if (pair.alpha.cols() != n || pair.beta.rows() != n || pair.beta.cols() != n || n == 0) {
        throw Error(ErrorKind::NotSymplectifiable, "Bogoliubov pair must be square with matching blocks");
    }
    // a'^dag_l = sum_j (-beta_jl a_j + alpha_jl a^dag_j)  =>  a' = alpha^dag a - beta^dag a^dag
    const ComplexMatrix u = pair.alpha.adjoint();
    const ComplexMatrix v = -pair.beta.adjoint();
    RealMatrix s(2 * n, 2 * n);
    s.topLeftCorner(n, n) = (u + v).real();
    s.topRightCorner(n, n) = -(u - v).imag();
    s.bottomLeftCorner(n, n) = (u + v).imag();
    s.bottomRightCorner(n, n) = (u - v).real();

    const RealMatrix omega = symplectic_form(static_cast<int>(n));
    SymplecticProjection out;
    out.residual_before = max_abs(s * omega * s.transpose() - omega);
    if (out.residual_before > 0.05) {
        std::ostringstream msg;
        msg << "symplectic residual " << out.residual_before << " exceeds 0.05";
        throw Error(ErrorKind::NotSymplectifiable, msg.str());
    }
    RealMatrix projected = out.residual_before <= 1e-14 ? s : project_to_symplectic(s);
    out.residual_after = max_abs(projected * omega * projected.transpose() - omega);
    out.transform = SymplecticTransform(std::move(projected));
    return out;
}

std::vector<double> mean_photon_numbers(const GaussianState& state) {
    const int n = state.n_modes();
    std::vector<double> out(n);
    for (int k = 0; k < n; ++k) {
        out[k] = (state.covariance()(k, k) + state.covariance()(n + k, n + k)) / 4.0 - 0.5;
    }
    return out;
}

double total_mean_photon_number(const GaussianState& state) {
    double total = 0.0;
    for (double v : mean_photon_numbers(state)) total += v;
    return total;
}

FockKernel fock_kernel(const GaussianState& state) {
    const int n = state.n_modes();
    // hbar = 1 covariance in the (a, a^dag) basis, a = (x + i p) / sqrt(2).
    const ComplexMatrix sigma = (state.covariance() / 2.0).cast<Complex>();
    ComplexMatrix r(2 * n, 2 * n);
    const ComplexMatrix id = ComplexMatrix::Identity(n, n);
    const Complex i(0.0, 1.0);
    r << id, i * id, id, -i * id;
    r /= std::sqrt(2.0);
    const ComplexMatrix sigma_q = r * sigma * r.adjoint() + 0.5 * ComplexMatrix::Identity(2 * n, 2 * n);
    const ComplexMatrix sigma_q_inv = sigma_q.inverse();
    ComplexMatrix x = ComplexMatrix::Zero(2 * n, 2 * n);
    x.topRightCorner(n, n).setIdentity();
    x.bottomLeftCorner(n, n).setIdentity();
    const ComplexMatrix a = x * (ComplexMatrix::Identity(2 * n, 2 * n) - sigma_q_inv);

    const double mixed = a.topRightCorner(n, n).cwiseAbs().maxCoeff();
    if (mixed > 1e-8) {
        std::ostringstream msg;
        msg << "state is not pure (off-diagonal block " << mixed << ")";
        throw Error(ErrorKind::NotSymplectifiable, msg.str());
    }
    FockKernel out;
    out.b = a.topLeftCorner(n, n);
    out.b = 0.5 * (out.b + out.b.transpose()).eval();
    out.vacuum_probability = 1.0 / std::sqrt(sigma_q.determinant().real());
    return out;
}

namespace {

// Amplitudes G(n) = haf(B_n) / sqrt(n!) on the box 0 <= n_k <= dims_k - 1.
std::vector<Complex> box_amplitudes(const ComplexMatrix& b, const std::vector<int>& dims) {
    const int n = static_cast<int>(dims.size());
    std::vector<std::size_t> stride(n);
    std::size_t total = 1;
    for (int k = 0; k < n; ++k) {
        stride[k] = total;
        total *= static_cast<std::size_t>(dims[k]);
    }
    std::vector<Complex> g(total, Complex(0.0, 0.0));
    g[0] = 1.0;
    std::vector<int> digits(n, 0);
    for (std::size_t idx = 1; idx < total; ++idx) {
        for (int k = 0; k < n; ++k) {
            if (++digits[k] < dims[k]) break;
            digits[k] = 0;
        }
        int k = 0;
        while (digits[k] == 0) ++k;
        const std::size_t base = idx - stride[k];
        Complex acc{0.0, 0.0};
        for (int l = 0; l < n; ++l) {
            const int m_l = digits[l] - (l == k ? 1 : 0);
            if (m_l <= 0) continue;
            acc += b(k, l) * std::sqrt(static_cast<double>(m_l)) * g[base - stride[l]];
        }
        g[idx] = acc / std::sqrt(static_cast<double>(digits[k]));
    }
    return g;
}

}  // namespace

double pattern_probability(const FockKernel& kernel, const FockPattern& pattern) {
    const auto n = static_cast<std::size_t>(kernel.b.rows());
    if (pattern.size() != n) throw Error(ErrorKind::InvalidModeIndex, "pattern length does not match mode count");
    int total = 0;
    double norm = 1.0;
    for (int c : pattern) {
        if (c < 0) throw Error(ErrorKind::InvalidModeIndex, "negative photon count");
        total += c;
        norm *= factorial(c);
    }
    if (total % 2 != 0) return 0.0;
    if (total <= kMaxHafnianSize) {
        const Complex h = hafnian(repeat_rows_cols(kernel.b, pattern));
        return kernel.vacuum_probability * std::norm(h) / norm;
    }
    std::vector<int> dims(pattern.size());
    for (std::size_t k = 0; k < pattern.size(); ++k) dims[k] = pattern[k] + 1;
    const auto g = box_amplitudes(kernel.b, dims);
    return kernel.vacuum_probability * std::norm(g.back());
}

TruncatedDistribution photon_distribution(const GaussianState& state, int cutoff) {
    if (cutoff < 0) throw Error(ErrorKind::CutoffTooSmall, "cutoff must be >= 0");
    const int n = state.n_modes();
    const double outcomes = std::pow(static_cast<double>(cutoff + 1), n);
    if (outcomes > static_cast<double>(kMaxEnumerableOutcomes)) {
        std::ostringstream msg;
        msg << (cutoff + 1) << "^" << n << " outcomes exceed " << kMaxEnumerableOutcomes;
        throw Error(ErrorKind::StateSpaceTooLarge, msg.str());
    }
    const FockKernel kernel = fock_kernel(state);
    const std::vector<int> dims(n, cutoff + 1);
    const auto g = box_amplitudes(kernel.b, dims);

    TruncatedDistribution out;
    out.patterns.reserve(g.size());
    out.probabilities.reserve(g.size());
    FockPattern digits(n, 0);
    double sum = 0.0;
    for (std::size_t idx = 0; idx < g.size(); ++idx) {
        if (idx > 0) {
            for (int k = 0; k < n; ++k) {
                if (++digits[k] <= cutoff) break;
                digits[k] = 0;
            }
        }
        const double p = kernel.vacuum_probability * std::norm(g[idx]);
        out.patterns.push_back(digits);
        out.probabilities.push_back(p);
        sum += p;
    }
    out.leakage = std::max(0.0, 1.0 - sum);
    return out;
}

TruncatedDistribution photon_distribution_total(const GaussianState& state, int max_total) {
    if (max_total < 0) throw Error(ErrorKind::CutoffTooSmall, "photon budget must be >= 0");
    const int n = state.n_modes();
    // C(n + T, T) patterns
    double count = 1.0;
    for (int t = 1; t <= max_total; ++t) count = count * (n + t) / t;
    if (count > static_cast<double>(kMaxEnumerableOutcomes)) {
        throw Error(ErrorKind::StateSpaceTooLarge, "too many patterns below the photon budget");
    }
    const FockKernel kernel = fock_kernel(state);

    // Patterns ordered by total photon number; within a level, by the
    // recursive composition order.
    std::vector<FockPattern> patterns{FockPattern(n, 0)};
    std::map<FockPattern, std::size_t> index{{patterns[0], 0}};
    std::size_t level_begin = 0;
    for (int t = 1; t <= max_total; ++t) {
        const std::size_t level_end = patterns.size();
        for (std::size_t p = level_begin; p < level_end; ++p) {
            // extend only at or after the last occupied mode to avoid duplicates
            int last = 0;
            for (int k = 0; k < n; ++k) {
                if (patterns[p][k] > 0) last = k;
            }
            for (int k = last; k < n; ++k) {
                FockPattern next = patterns[p];
                ++next[k];
                index.emplace(next, patterns.size());
                patterns.push_back(std::move(next));
            }
        }
        level_begin = level_end;
    }

    std::vector<Complex> g(patterns.size(), Complex(0.0, 0.0));
    g[0] = 1.0;
    for (std::size_t p = 1; p < patterns.size(); ++p) {
        const FockPattern& pat = patterns[p];
        int k = 0;
        while (pat[k] == 0) ++k;
        FockPattern m = pat;
        --m[k];
        Complex acc{0.0, 0.0};
        for (int l = 0; l < n; ++l) {
            if (m[l] == 0) continue;
            FockPattern prev = m;
            --prev[l];
            acc += kernel.b(k, l) * std::sqrt(static_cast<double>(m[l])) * g[index.at(prev)];
        }
        g[p] = acc / std::sqrt(static_cast<double>(pat[k]));
    }

    TruncatedDistribution out;
    out.patterns = std::move(patterns);
    out.probabilities.resize(g.size());
    double sum = 0.0;
    for (std::size_t p = 0; p < g.size(); ++p) {
        out.probabilities[p] = kernel.vacuum_probability * std::norm(g[p]);
        sum += out.probabilities[p];
    }
    out.leakage = std::max(0.0, 1.0 - sum);
    return out;
}

double fock_probability(const GaussianState& state, const FockPattern& pattern, int cutoff) {
    if (static_cast<int>(pattern.size()) != state.n_modes()) {
        throw Error(ErrorKind::InvalidModeIndex, "pattern length does not match mode count");
    }
    for (int c : pattern) {
        if (c < 0 || c > cutoff) throw Error(ErrorKind::CutoffTooSmall, "pattern entry outside the cutoff");
    }
    const TruncatedDistribution table = photon_distribution(state, cutoff);
    if (table.leakage > 1e-6) {
        std::ostringstream msg;
        msg << "probability mass " << table.leakage << " beyond cutoff " << cutoff;
        throw Error(ErrorKind::CutoffTooSmall, msg.str());
    }
    return pattern_probability(fock_kernel(state), pattern);
}

DiscreteSampler::DiscreteSampler(const std::vector<double>& weights) {
    cumulative_.reserve(weights.size());
    double sum = 0.0;
    for (double w : weights) {
        sum += std::max(0.0, w);
        cumulative_.push_back(sum);
    }
    if (!(sum > 0.0)) throw Error(ErrorKind::InvalidConfig, "sampling weights sum to zero");
    for (double& c : cumulative_) c /= sum;
    cumulative_.back() = 1.0;
}

std::size_t DiscreteSampler::draw(std::mt19937_64& rng) const {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    return static_cast<std::size_t>(std::min<std::ptrdiff_t>(it - cumulative_.begin(),
                                                             static_cast<std::ptrdiff_t>(cumulative_.size()) - 1));
}

SampleBatch sample_patterns(const GaussianState& state, std::size_t n_samples, int cutoff, std::uint64_t seed) {
    const TruncatedDistribution table = photon_distribution(state, cutoff);
    const DiscreteSampler sampler(table.probabilities);
    std::mt19937_64 rng(seed);
    SampleBatch out;
    out.leakage = table.leakage;
    out.samples.reserve(n_samples);
    for (std::size_t s = 0; s < n_samples; ++s) out.samples.push_back(table.patterns[sampler.draw(rng)]);
    return out;
}

}  // namespace dcegbs
