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

#pragma once

#include "dcegbs/types.hpp"

namespace dcegbs {

inline constexpr int kMaxPermanentSize = 20;
inline constexpr int kMaxHafnianSize = 12;

/// Ryser's formula with Gray-code row-sum updates, O(2^n n).
/// Throws MatrixTooLarge for n > 20.
Complex permanent(const ComplexMatrix& w);

/// Sum over perfect matchings of a symmetric matrix of even dimension <= 12.
/// The empty matrix has hafnian 1.
Complex hafnian(const ComplexMatrix& b);

/// Matrix with row/column k repeated counts[k] times.
ComplexMatrix repeat_rows_cols(const ComplexMatrix& m, const std::vector<int>& counts);

/// Rows repeated by row_counts, columns by col_counts.
ComplexMatrix repeat_submatrix(const ComplexMatrix& m, const std::vector<int>& row_counts,
                               const std::vector<int>& col_counts);

double factorial(int n);

}  // namespace dcegbs
