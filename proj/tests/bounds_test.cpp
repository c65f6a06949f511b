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

#include "gtest/gtest.h"
#include "oracles.hpp"

using namespace ldiqec;

TEST(bounds, p_star_css) {
    auto c = p_star_css(1, 3);
    ASSERT_EQ(c.squared, 4);
    ASSERT_EQ(c.ceiling, 2);
    ASSERT_TRUE(c.is_integer);
    ASSERT_EQ(c.str(), "2");

    ASSERT_EQ(p_star_css(1, 2).ceiling, 1);
    ASSERT_EQ(p_star_css(2, 3).ceiling, 8);

    // (d-1)^{(d-1)/2} with d = 4: sqrt(27).
    auto irrational = p_star_css(1, 4);
    ASSERT_FALSE(irrational.is_integer);
    ASSERT_EQ(irrational.squared, 27);
    ASSERT_EQ(irrational.ceiling, 6);
    ASSERT_EQ(irrational.str(), "sqrt(27)");
    ASSERT_FALSE(irrational.below(5));
    ASSERT_TRUE(irrational.below(6));
    ASSERT_NEAR(irrational.approx(), std::sqrt(27.0), 1e-9);

    ASSERT_THROW(p_star_css(0, 3), std::invalid_argument);
    ASSERT_THROW(p_star_css(1, 1), std::invalid_argument);
}

TEST(bounds, p_star_css_matches_floating_point) {
    for (Int b = 1; b <= 4; ++b) {
        for (unsigned d = 2; d <= 7; ++d) {
            double value = std::pow(double(b), d - 1) * std::pow(double(d - 1), (d - 1) / 2.0);
            auto c = p_star_css(b, d);
            ASSERT_EQ(c.ceiling, BigInt(static_cast<long long>(std::ceil(value - 1e-9))));
            ASSERT_EQ(c.is_integer, std::abs(value - std::round(value)) < 1e-9);
        }
    }
}

TEST(bounds, p_star_general) {
    ASSERT_EQ(p_star_general(1, 3), 16);
    ASSERT_EQ(p_star_general(1, 2), 2);
    ASSERT_EQ(p_star_general(3, 3), 1296);
    // 7^{2*9} * 18^9, beyond 64 bits.
    BigInt expected = pow_big(7, 18) * pow_big(18, 9);
    ASSERT_EQ(p_star_general(7, 10), expected);
}

TEST(bounds, css_cutoff_is_roughly_square_root) {
    for (Int b = 1; b <= 3; ++b) {
        for (unsigned d = 2; d <= 6; ++d) {
            auto c = p_star_css(b, d);
            // (B^{d-1} (d-1)^{(d-1)/2})^2 * 2^{d-1} = p*.
            ASSERT_EQ(c.squared * pow_big(2, d - 1), p_star_general(b, d));
        }
    }
}

TEST(bounds, b_bound) {
    ASSERT_EQ(b_bound(1, 2), 3);
    ASSERT_EQ(b_bound(0, 2), 2);
    ASSERT_EQ(b_bound(7, 3), 32);
}

TEST(bounds, gqhb) {
    auto a = gqhb_holds(5, 1, 3, 2);
    ASSERT_TRUE(a.holds);
    ASSERT_EQ(a.lhs, 16);
    ASSERT_EQ(a.rhs, 16);
    auto b = gqhb_holds(7, 1, 3, 2);
    ASSERT_TRUE(b.holds);
    ASSERT_EQ(b.lhs, 22);
    ASSERT_EQ(b.rhs, 64);
    auto c = gqhb_holds(6, 2, 3, 2);
    ASSERT_FALSE(c.holds);
    ASSERT_EQ(c.lhs, 19);
    ASSERT_EQ(c.rhs, 16);
}

TEST(bounds, gqhb_matches_direct_sum) {
    for (unsigned n = 1; n <= 12; ++n) {
        for (unsigned k = 0; k <= n; ++k) {
            for (unsigned d = 1; d <= 5; ++d) {
                for (Int q : {2, 3, 5}) {
                    long double lhs = 0;
                    for (unsigned j = 0; j <= (d - 1) / 2; ++j) {
                        long double binom = 1;
                        for (unsigned i = 0; i < j; ++i) {
                            binom = binom * (n - i) / (i + 1);
                        }
                        lhs += binom * std::pow((long double)(q * q - 1), j);
                    }
                    long double rhs = std::pow((long double)q, n - k);
                    auto g = gqhb_holds(n, k, d, q);
                    ASSERT_EQ(g.lhs, BigInt(static_cast<long long>(std::llround(lhs))));
                    ASSERT_EQ(g.rhs, BigInt(static_cast<long long>(std::llround(rhs))));
                    ASSERT_EQ(g.holds, lhs <= rhs);
                }
            }
        }
    }
}

TEST(bounds, next_safe_prime) {
    ASSERT_EQ(next_safe_prime(BigInt(2)), 3);
    ASSERT_EQ(next_safe_prime(BigInt(16)), 17);
    ASSERT_EQ(next_safe_prime(BigInt(8)), 11);
    ASSERT_EQ(next_safe_prime(BigInt(0)), 2);
    ASSERT_EQ(next_safe_prime(p_star_css(1, 4)), 7);
    ASSERT_EQ(next_safe_prime(p_star_css(1, 3)), 3);
    for (long long v = 0; v < 2000; ++v) {
        long long expected = v + 1;
        while (!oracle::is_prime(expected)) {
            ++expected;
        }
        ASSERT_EQ(next_safe_prime(BigInt(v)), expected);
    }
}

TEST(bounds, promise_bounds) {
    auto b = promise_bounds(1, 3);
    ASSERT_EQ(b.p_general, 16);
    ASSERT_EQ(b.p_css.ceiling, 2);
    ASSERT_EQ(b.next_safe_prime_general, 17);
    ASSERT_EQ(b.next_safe_prime_css, 3);
}

TEST(arith, primality) {
    for (long long v = -3; v < 5000; ++v) {
        ASSERT_EQ(is_prime(static_cast<Int>(v)), oracle::is_prime(v)) << v;
        ASSERT_EQ(is_prime(BigInt(v)), oracle::is_prime(v)) << v;
    }
    BigInt mersenne = pow_big(2, 127) - 1;
    ASSERT_TRUE(is_prime(mersenne));
    ASSERT_FALSE(is_prime(mersenne + 2));
}

TEST(arith, helpers) {
    ASSERT_EQ(mod_floor(-1, 3), 2);
    ASSERT_EQ(symmetric_residue(2, 3), -1);
    ASSERT_EQ(symmetric_residue(1, 2), 1);
    ASSERT_EQ(symmetric_residue(3, 5), -2);
    ASSERT_EQ(symmetric_residue(2, 5), 2);
    for (Int p : {2, 3, 5, 7, 11}) {
        for (Int a = 1; a < p; ++a) {
            ASSERT_EQ(mod_floor(a * inverse_mod(a, p), p), 1);
        }
    }
    ASSERT_EQ(binomial(7, 2), 21);
    ASSERT_EQ(binomial(3, 5), 0);
    ASSERT_EQ(isqrt(BigInt(27)), 5);
    ASSERT_EQ(isqrt(BigInt(36)), 6);
    ASSERT_THROW(checked_mul(Int{1} << 62, 4), std::overflow_error);
    ASSERT_THROW(checked_add(std::numeric_limits<Int>::max(), 1), std::overflow_error);
}
