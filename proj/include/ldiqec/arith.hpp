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

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ldiqec {

/// Matrix entries and exponents. Every arithmetic step on these goes through
/// the checked helpers below, so an overflow surfaces as an exception rather
/// than a silently wrong symplectic product.
using Int = std::int64_t;

/// Unbounded integers for bounds, binomial sums and determinants.
using BigInt = boost::multiprecision::cpp_int;

inline Int checked_add(Int a, Int b) {
    Int out;
    if (__builtin_add_overflow(a, b, &out)) {
        throw std::overflow_error("integer overflow in addition");
    }
    return out;
}

inline Int checked_sub(Int a, Int b) {
    Int out;
    if (__builtin_sub_overflow(a, b, &out)) {
        throw std::overflow_error("integer overflow in subtraction");
    }
    return out;
}

inline Int checked_mul(Int a, Int b) {
    Int out;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw std::overflow_error("integer overflow in multiplication");
    }
    return out;
}

/// Wide accumulator for sums of products.
__extension__ typedef __int128 Wide;

inline Int narrow(Wide v) {
    if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min()) {
        throw std::overflow_error("integer overflow narrowing accumulator");
    }
    return static_cast<Int>(v);
}

/// Residue in {0, ..., m-1}.
inline Int mod_floor(Int a, Int m) {
    Int r = a % m;
    return r < 0 ? r + m : r;
}

/// Residue in the symmetric system: values above m/2 map to r - m.
/// For m = 2 this is {0, 1}.
inline Int symmetric_residue(Int a, Int m) {
    Int r = mod_floor(a, m);
    return (2 * r > m) ? r - m : r;
}

/// Deterministic trial division; moduli in this library are small.
bool is_prime(Int q);

/// Miller-Rabin backed primality for unbounded values.
bool is_prime(const BigInt& v);

/// Least prime strictly greater than `bound` (bound >= 0).
BigInt next_prime_above(const BigInt& bound);

/// Multiplicative inverse modulo prime p; a must be nonzero mod p.
Int inverse_mod(Int a, Int p);

BigInt binomial(unsigned n, unsigned k);

BigInt pow_big(const BigInt& base, unsigned exponent);

/// floor(sqrt(v)) for v >= 0.
BigInt isqrt(const BigInt& v);

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace ldiqec
