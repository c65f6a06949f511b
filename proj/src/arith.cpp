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

#include "ldiqec/arith.hpp"

#include <boost/multiprecision/miller_rabin.hpp>
#include <boost/random/mersenne_twister.hpp>

namespace ldiqec {

bool is_prime(Int q) {
    if (q < 2) {
        return false;
    }
    if (q < 4) {
        return true;
    }
    if (q % 2 == 0) {
        return false;
    }
    for (Int f = 3; f <= q / f; f += 2) {
        if (q % f == 0) {
            return false;
        }
    }
    return true;
}

bool is_prime(const BigInt& v) {
    if (v < 2) {
        return false;
    }
    if (v <= std::numeric_limits<Int>::max()) {
        return is_prime(static_cast<Int>(v));
    }
    boost::random::mt19937 gen(0x5eed);
    return boost::multiprecision::miller_rabin_test(v, 25, gen);
}

BigInt next_prime_above(const BigInt& bound) {
    BigInt candidate = bound < 1 ? BigInt(2) : bound + 1;
    while (!is_prime(candidate)) {
        ++candidate;
    }
    return candidate;
}

Int inverse_mod(Int a, Int p) {
    Int t = 0;
    Int new_t = 1;
    Int r = p;
    Int new_r = mod_floor(a, p);
    if (new_r == 0) {
        throw std::domain_error("zero has no inverse");
    }
    while (new_r != 0) {
        Int quotient = r / new_r;
        Int tmp = t - quotient * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - quotient * new_r;
        r = new_r;
        new_r = tmp;
    }
    return mod_floor(t, p);
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) {
        return 0;
    }
    BigInt out = 1;
    for (unsigned i = 1; i <= k; ++i) {
        out *= (n - k + i);
        out /= i;
    }
    return out;
}

BigInt pow_big(const BigInt& base, unsigned exponent) {
    return boost::multiprecision::pow(base, exponent);
}

BigInt isqrt(const BigInt& v) {
    if (v < 0) {
        throw std::domain_error("isqrt of negative value");
    }
    return boost::multiprecision::sqrt(v);
}

}  // namespace ldiqec
