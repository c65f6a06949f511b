// Copyright 2026 The ldiqec Authors
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

#include <cstddef>
#include <span>
#include <vector>

#include "ldiqec/matrix.hpp"

namespace ldiqec {

/// Reduced row echelon form over GF(p).
struct EchelonForm {
    Int p = 2;
    Matrix reduced;                  ///< nonzero rows first, each with pivot entry 1
    std::vector<std::size_t> pivots;  ///< pivot column of row i, i < rank

    std::size_t rank() const { return pivots.size(); }
    /// True when `v` reduces to zero against the echelon rows.
    bool contains(std::span<const Int> v) const;
};

EchelonForm row_reduce(const Matrix& m, Int p);

std::size_t rank_mod(const Matrix& m, Int p);

/// Basis (as rows) of { e : m * e = 0 mod p }. Each basis vector has a 1 in
/// its free column and zeros in the other free columns.
Matrix kernel_mod(const Matrix& m, Int p);

}  // namespace ldiqec
