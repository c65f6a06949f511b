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

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "ldiqec/phi.hpp"

namespace ldiqec {

/// Explicit q^n x q^n matrix of a Pauli word. Test oracle only; construction is
/// refused above 64 x 64.
class DensePauli {
  public:
    static constexpr std::size_t kMaxDim = 64;

    Int q() const { return q_; }
    std::size_t n() const { return n_; }
    std::size_t dim() const { return dim_; }
    std::complex<double> at(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }

    DensePauli operator*(const DensePauli& rhs) const;

    bool is_unitary(double tol = 1e-10) const;
    /// max |this - scale * other| <= tol
    bool approx_equal(const DensePauli& other, std::complex<double> scale = 1.0, double tol = 1e-10) const;

    friend DensePauli realize_dense(const PhiVector& u, Int q);

  private:
    DensePauli(Int q, std::size_t n, std::size_t dim);

    Int q_;
    std::size_t n_;
    std::size_t dim_;
    std::vector<std::complex<double>> data_;
};

/// Kronecker product of X^{x_t} Z^{z_t}, register 0 most significant.
/// X|j> = |j+1 mod q>, Z|j> = w^j |j>, w = exp(2 pi i / q).
/// Throws std::length_error when q^n > 64.
DensePauli realize_dense(const PhiVector& u, Int q);

/// The c in {0..q-1} with a*b = w^c * b*a, or nullopt if the two are not
/// related by such a phase.
std::optional<Int> commutation_phase(const DensePauli& a, const DensePauli& b, double tol = 1e-10);

}  // namespace ldiqec
