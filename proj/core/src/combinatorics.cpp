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

#include "dcegbs/combinatorics.hpp"

#include <cstdint>
#include <sstream>
#include <vector>

#include "dcegbs/error.hpp"

namespace dcegbs {

namespace {

Complex hafnian_recursive(const ComplexMatrix& b, std::vector<int>& remaining) {
    if (remaining.empty()) return {1.0, 0.0};
    // Match the first remaining index with each of the others.
    const int first = remaining.front();
    Complex total{0.0, 0.0};
    for (std::size_t k = 1; k < remaining.size(); ++k) {
        const Complex weight = b(first, remaining[k]);
        if (weight == Complex(0.0, 0.0)) continue;
        std::vector<int> rest;
        rest.reserve(remaining.size() - 2);
        for (std::size_t m = 1; m < remaining.size(); ++m) {
            if (m != k) rest.push_back(remaining[m]);
        }
        total += weight * hafnian_recursive(b, rest);
    }
    return total;
}

}  // namespace

Complex permanent(const ComplexMatrix& w) {
    const auto n = static_cast<int>(w.rows());
    if (w.cols() != w.rows()) throw Error(ErrorKind::MatrixTooLarge, "permanent needs a square matrix");
    if (n > kMaxPermanentSize) {
        std::ostringstream msg;
        msg << "permanent of size " << n << " exceeds " << kMaxPermanentSize;
        throw Error(ErrorKind::MatrixTooLarge, msg.str());
    }
    if (n == 0) return {1.0, 0.0};

    // Ryser: perm(W) = (-1)^n sum_{S} (-1)^{|S|} prod_i sum_{j in S} W_ij,
    // visiting subsets in Gray-code order so each step adds or removes one column.
    std::vector<Complex> row_sums(n, Complex(0.0, 0.0));
    Complex total{0.0, 0.0};
    std::uint64_t gray = 0;
    const std::uint64_t count = std::uint64_t{1} << n;
    int subset_size = 0;
    for (std::uint64_t k = 1; k < count; ++k) {
        const std::uint64_t next = k ^ (k >> 1);
        const std::uint64_t changed = next ^ gray;
        const int col = __builtin_ctzll(changed);
        const bool added = (next & changed) != 0;
        gray = next;
        subset_size += added ? 1 : -1;
        for (int i = 0; i < n; ++i) row_sums[i] += added ? w(i, col) : -w(i, col);
        Complex product{1.0, 0.0};
        for (int i = 0; i < n; ++i) product *= row_sums[i];
        total += ((subset_size % 2) == 0) ? product : -product;
    }
    return (n % 2 == 0) ? total : -total;
}

Complex hafnian(const ComplexMatrix& b) {
    const auto n = static_cast<int>(b.rows());
    if (b.cols() != b.rows()) throw Error(ErrorKind::NotSymmetric, "hafnian needs a square matrix");
    if (n % 2 != 0) throw Error(ErrorKind::OddDimension, "hafnian of odd dimension");
    if (n > kMaxHafnianSize) {
        std::ostringstream msg;
        msg << "hafnian of size " << n << " exceeds " << kMaxHafnianSize;
        throw Error(ErrorKind::MatrixTooLarge, msg.str());
    }
    if (n == 0) return {1.0, 0.0};
    const double scale = b.cwiseAbs().maxCoeff();
    if ((b - b.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(scale, 1.0)) {
        throw Error(ErrorKind::NotSymmetric, "hafnian needs a symmetric matrix");
    }
    std::vector<int> indices(n);
    for (int k = 0; k < n; ++k) indices[k] = k;
    return hafnian_recursive(b, indices);
}

ComplexMatrix repeat_submatrix(const ComplexMatrix& m, const std::vector<int>& row_counts,
                               const std::vector<int>& col_counts) {
    std::vector<int> rows;
    std::vector<int> cols;
    for (std::size_t k = 0; k < row_counts.size(); ++k) rows.insert(rows.end(), row_counts[k], static_cast<int>(k));
    for (std::size_t k = 0; k < col_counts.size(); ++k) cols.insert(cols.end(), col_counts[k], static_cast<int>(k));
    ComplexMatrix out(rows.size(), cols.size());
    for (std::size_t a = 0; a < rows.size(); ++a) {
        for (std::size_t c = 0; c < cols.size(); ++c) out(a, c) = m(rows[a], cols[c]);
    }
    return out;
}

ComplexMatrix repeat_rows_cols(const ComplexMatrix& m, const std::vector<int>& counts) {
    return repeat_submatrix(m, counts, counts);
}

double factorial(int n) {
    double out = 1.0;
    for (int k = 2; k <= n; ++k) out *= k;
    return out;
}

}  // namespace dcegbs
