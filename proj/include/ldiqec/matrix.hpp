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
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "ldiqec/arith.hpp"

namespace ldiqec {

/// Dense row-major integer matrix.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    Matrix(std::initializer_list<std::initializer_list<Int>> rows);

    static Matrix from_rows(const std::vector<std::vector<Int>>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Int> row(std::size_t r) { return std::span<Int>(data_).subspan(r * cols_, cols_); }
    std::span<const Int> row(std::size_t r) const {
        return std::span<const Int>(data_).subspan(r * cols_, cols_);
    }

    void append_row(std::span<const Int> values);
    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);

    Int max_abs() const;
    /// Entrywise reduction into {0, ..., p-1}.
    Matrix reduced(Int p) const;
    std::vector<std::vector<Int>> to_rows() const;
    std::string str() const;

    bool operator==(const Matrix&) const = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

}  // namespace ldiqec
