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

#include "ldiqec/modp.hpp"

#include "ldiqec/errors.hpp"

namespace ldiqec {

EchelonForm row_reduce(const Matrix& m, Int p) {
    EchelonForm out;
    out.p = p;
    out.reduced = m.reduced(p);
    Matrix& a = out.reduced;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
        std::size_t pivot = lead;
        while (pivot < a.rows() && a(pivot, col) == 0) {
            ++pivot;
        }
        if (pivot == a.rows()) {
            continue;
        }
        a.swap_rows(pivot, lead);
        Int inv = inverse_mod(a(lead, col), p);
        for (auto& e : a.row(lead)) {
            e = (e * inv) % p;
        }
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == lead || a(r, col) == 0) {
                continue;
            }
            Int factor = a(r, col);
            for (std::size_t c = 0; c < a.cols(); ++c) {
                a(r, c) = mod_floor(a(r, c) - factor * a(lead, c), p);
            }
        }
        out.pivots.push_back(col);
        ++lead;
    }
    return out;
}

bool EchelonForm::contains(std::span<const Int> v) const {
    if (v.size() != reduced.cols()) {
        throw LengthMismatchError(reduced.cols(), v.size());
    }
    std::vector<Int> work(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        work[i] = mod_floor(v[i], p);
    }
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        Int factor = work[pivots[r]];
        if (factor == 0) {
            continue;
        }
        auto row = reduced.row(r);
        for (std::size_t c = 0; c < work.size(); ++c) {
            work[c] = mod_floor(work[c] - factor * row[c], p);
        }
    }
    for (Int e : work) {
        if (e != 0) {
            return false;
        }
    }
    return true;
}

std::size_t rank_mod(const Matrix& m, Int p) { return row_reduce(m, p).rank(); }

Matrix kernel_mod(const Matrix& m, Int p) {
    EchelonForm ef = row_reduce(m, p);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : ef.pivots) {
        is_pivot[c] = true;
    }
    Matrix basis(0, m.cols());
    std::vector<Int> v(m.cols());
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) {
            continue;
        }
        std::fill(v.begin(), v.end(), 0);
        v[free] = 1;
        for (std::size_t r = 0; r < ef.pivots.size(); ++r) {
            v[ef.pivots[r]] = mod_floor(-ef.reduced(r, free), p);
        }
        basis.append_row(v);
    }
    return basis;
}

}  // namespace ldiqec
