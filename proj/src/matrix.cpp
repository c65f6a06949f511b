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

#include "ldiqec/matrix.hpp"

#include <sstream>
#include <utility>

#include "ldiqec/errors.hpp"

namespace ldiqec {

Matrix::Matrix(std::initializer_list<std::initializer_list<Int>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) {
            throw LengthMismatchError(cols_, r.size());
        }
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::from_rows(const std::vector<std::vector<Int>>& rows, std::size_t cols) {
    Matrix m(0, cols);
    for (const auto& r : rows) {
        m.append_row(r);
    }
    return m;
}

void Matrix::append_row(std::span<const Int> values) {
    if (values.size() != cols_) {
        throw LengthMismatchError(cols_, values.size());
    }
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) {
        return;
    }
    auto ra = row(a);
    auto rb = row(b);
    for (std::size_t c = 0; c < cols_; ++c) {
        std::swap(ra[c], rb[c]);
    }
}

void Matrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) {
        return;
    }
    for (std::size_t r = 0; r < rows_; ++r) {
        std::swap((*this)(r, a), (*this)(r, b));
    }
}

Int Matrix::max_abs() const {
    Int best = 0;
    for (Int e : data_) {
        best = std::max(best, e < 0 ? checked_sub(0, e) : e);
    }
    return best;
}

Matrix Matrix::reduced(Int p) const {
    Matrix out = *this;
    for (auto& e : out.data_) {
        e = mod_floor(e, p);
    }
    return out;
}

std::vector<std::vector<Int>> Matrix::to_rows() const {
    std::vector<std::vector<Int>> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        auto view = row(r);
        out.emplace_back(view.begin(), view.end());
    }
    return out;
}

std::string Matrix::str() const {
    std::ostringstream out;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out << (c ? " " : "") << (*this)(r, c);
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace ldiqec
