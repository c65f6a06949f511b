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

#include "ldiqec/dense_pauli.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ldiqec/errors.hpp"

namespace ldiqec {

namespace {

std::complex<double> root_of_unity(Int q, Int power) {
    double angle = 2.0 * std::numbers::pi * static_cast<double>(mod_floor(power, q)) / static_cast<double>(q);
    return {std::cos(angle), std::sin(angle)};
}

}  // namespace

DensePauli::DensePauli(Int q, std::size_t n, std::size_t dim)
    : q_(q), n_(n), dim_(dim), data_(dim * dim, std::complex<double>(0.0, 0.0)) {}

DensePauli realize_dense(const PhiVector& u, Int q) {
    if (!is_prime(q)) {
        throw NotPrimeError(q);
    }
    std::size_t dim = 1;
    for (std::size_t t = 0; t < u.n(); ++t) {
        dim *= static_cast<std::size_t>(q);
        if (dim > DensePauli::kMaxDim) {
            throw std::length_error("dense realization limited to q^n <= 64");
        }
    }
    DensePauli out(q, u.n(), dim);
    // X^a Z^b |j> = w^{b j} |j + a>, applied digit by digit.
    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t row = 0;
        std::complex<double> amp = 1.0;
        std::size_t rest = col;
        std::size_t place = dim;
        for (std::size_t t = 0; t < u.n(); ++t) {
            place /= static_cast<std::size_t>(q);
            Int digit = static_cast<Int>(rest / place);
            rest %= place;
            Int a = mod_floor(u.x(t), q);
            Int b = mod_floor(u.z(t), q);
            amp *= root_of_unity(q, b * digit);
            row += static_cast<std::size_t>(mod_floor(digit + a, q)) * place;
        }
        out.data_[row * dim + col] = amp;
    }
    return out;
}

DensePauli DensePauli::operator*(const DensePauli& rhs) const {
    if (dim_ != rhs.dim_) {
        throw LengthMismatchError(dim_, rhs.dim_);
    }
    DensePauli out(q_, n_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t k = 0; k < dim_; ++k) {
            auto a = at(i, k);
            if (a == 0.0) {
                continue;
            }
            for (std::size_t j = 0; j < dim_; ++j) {
                out.data_[i * dim_ + j] += a * rhs.at(k, j);
            }
        }
    }
    return out;
}

bool DensePauli::is_unitary(double tol) const {
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            std::complex<double> acc = 0.0;
            for (std::size_t k = 0; k < dim_; ++k) {
                acc += std::conj(at(k, i)) * at(k, j);
            }
            std::complex<double> expected = (i == j) ? 1.0 : 0.0;
            if (std::abs(acc - expected) > tol) {
                return false;
            }
        }
    }
    return true;
}

bool DensePauli::approx_equal(const DensePauli& other, std::complex<double> scale, double tol) const {
    if (dim_ != other.dim_) {
        return false;
    }
    for (std::size_t i = 0; i < data_.size(); ++i) {
        if (std::abs(data_[i] - scale * other.data_[i]) > tol) {
            return false;
        }
    }
    return true;
}

std::optional<Int> commutation_phase(const DensePauli& a, const DensePauli& b, double tol) {
    DensePauli ab = a * b;
    DensePauli ba = b * a;
    for (Int c = 0; c < a.q(); ++c) {
        if (ab.approx_equal(ba, root_of_unity(a.q(), c), tol)) {
            return c;
        }
    }
    return std::nullopt;
}

}  // namespace ldiqec
