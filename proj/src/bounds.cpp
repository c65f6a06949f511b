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

#include "ldiqec/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "ldiqec/errors.hpp"

namespace ldiqec {

namespace {

void check_bound_args(Int max_entry, unsigned distance) {
    if (max_entry < 1) {
        throw std::invalid_argument("B must be at least 1");
    }
    if (distance < 2) {
        throw std::invalid_argument("d must be at least 2");
    }
}

}  // namespace

std::string CssCutoff::str() const { return is_integer ? ceiling.str() : "sqrt(" + squared.str() + ")"; }

double CssCutoff::approx() const { return std::sqrt(squared.convert_to<double>()); }

CssCutoff p_star_css(Int max_entry, unsigned distance) {
    check_bound_args(max_entry, distance);
    CssCutoff out;
    out.max_entry = max_entry;
    out.distance = distance;
    const unsigned m = distance - 1;
    out.squared = pow_big(BigInt(max_entry), 2 * m) * pow_big(BigInt(m), m);
    BigInt root = isqrt(out.squared);
    out.is_integer = root * root == out.squared;
    out.ceiling = out.is_integer ? root : root + 1;
    return out;
}

BigInt p_star_general(Int max_entry, unsigned distance) {
    check_bound_args(max_entry, distance);
    const unsigned m = distance - 1;
    return pow_big(BigInt(max_entry), 2 * m) * pow_big(BigInt(2 * m), m);
}

BigInt b_bound(unsigned k, Int q) {
    if (!is_prime(q)) {
        throw NotPrimeError(q);
    }
    BigInt qm1 = q - 1;
    return (2 + BigInt(k) * qm1) * qm1;
}

GqhbResult gqhb_holds(unsigned n, unsigned k, unsigned d, Int q) {
    if (!is_prime(q)) {
        throw NotPrimeError(q);
    }
    if (k > n || d < 1) {
        throw std::invalid_argument("need n >= k >= 0 and d >= 1");
    }
    GqhbResult out;
    BigInt per_site = BigInt(q) * q - 1;
    for (unsigned j = 0; j <= (d - 1) / 2; ++j) {
        out.lhs += binomial(n, j) * pow_big(per_site, j);
    }
    out.rhs = pow_big(BigInt(q), n - k);
    out.holds = out.lhs <= out.rhs;
    return out;
}

BigInt next_safe_prime(const BigInt& bound) {
    if (bound < 0) {
        throw std::invalid_argument("bound must be non-negative");
    }
    return next_prime_above(bound);
}

BigInt next_safe_prime(const CssCutoff& cutoff) {
    // cutoff < p  <=>  p >= ceiling, except that an integral cutoff excludes itself.
    BigInt candidate = cutoff.is_integer ? cutoff.ceiling + 1 : cutoff.ceiling;
    while (!is_prime(candidate)) {
        ++candidate;
    }
    return candidate;
}

PromiseBounds promise_bounds(Int max_entry, unsigned distance) {
    PromiseBounds out;
    out.p_general = p_star_general(max_entry, distance);
    out.p_css = p_star_css(max_entry, distance);
    out.next_safe_prime_general = next_safe_prime(out.p_general);
    out.next_safe_prime_css = next_safe_prime(out.p_css);
    return out;
}

}  // namespace ldiqec
