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

#include <string>

#include "ldiqec/arith.hpp"

namespace ldiqec {

/// CSS cutoff B^{d-1} (d-1)^{(d-1)/2}. Irrational whenever (d-1)^{d-1} is not a
/// perfect square, so it is kept as its exact square and compared against
/// primes by squaring.
struct CssCutoff {
    Int max_entry = 1;
    unsigned distance = 2;
    BigInt squared;   ///< B^{2(d-1)} (d-1)^{d-1}
    BigInt ceiling;   ///< least integer >= the cutoff
    bool is_integer = true;

    /// cutoff < p, decided exactly.
    bool below(const BigInt& p) const { return p > 0 && squared < p * p; }
    /// Integer value when exact, else "sqrt(<squared>)".
    std::string str() const;
    /// Decimal approximation, for display only.
    double approx() const;
};

/// Requires B >= 1, d >= 2.
CssCutoff p_star_css(Int max_entry, unsigned distance);

/// B^{2(d-1)} (2(d-1))^{d-1}. Requires B >= 1, d >= 2.
BigInt p_star_general(Int max_entry, unsigned distance);

/// (2 + k(q-1))(q-1): ceiling on the largest LDI entry reachable from a code mod q.
BigInt b_bound(unsigned k, Int q);

struct GqhbResult {
    bool holds = false;
    BigInt lhs;  ///< sum_{j <= floor((d-1)/2)} C(n, j) (q^2 - 1)^j
    BigInt rhs;  ///< q^{n-k}
};

GqhbResult gqhb_holds(unsigned n, unsigned k, unsigned d, Int q);

/// Least prime strictly above `bound`.
BigInt next_safe_prime(const BigInt& bound);
/// Least prime strictly above the (possibly irrational) CSS cutoff.
BigInt next_safe_prime(const CssCutoff& cutoff);

struct PromiseBounds {
    BigInt p_general;
    CssCutoff p_css;
    BigInt next_safe_prime_general;
    BigInt next_safe_prime_css;
};

PromiseBounds promise_bounds(Int max_entry, unsigned distance);

}  // namespace ldiqec
