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

#include "ldiqec/distance.hpp"

#include <random>

#include "gtest/gtest.h"
#include "ldiqec/errors.hpp"
#include "ldiqec/random_code.hpp"
#include "oracles.hpp"

using namespace ldiqec;

namespace {

StabilizerCode steane() { return StabilizerCode::create(oracle::load_rows("steane.txt"), 7, 2); }
LdiCode steane_ldi() { return LdiCode::certify(oracle::load_rows("steane_ldi_css.txt"), 7, 2); }

PhiVector ivec(std::vector<Int> entries) { return PhiVector::from_entries(entries, Ring::integers()); }

}  // namespace

TEST(distance, steane_exact) {
    auto d = distance_exact(steane(), 3);
    ASSERT_TRUE(d.is_exact());
    ASSERT_EQ(d.value, 3u);
    ASSERT_EQ(d.str(), "3");
    ASSERT_TRUE(d.witness.has_value());
    ASSERT_EQ(pauli_weight(*d.witness), 3u);
    ASSERT_FALSE(syndrome(steane(), *d.witness).detected());
}

TEST(distance, steane_ldi_other_primes) {
    for (Int p : {3, 5}) {
        auto d = distance_exact(reduce_mod(steane_ldi(), p), 3);
        ASSERT_TRUE(d.is_exact());
        ASSERT_EQ(d.value, 3u);
        ASSERT_EQ(d.prime, p);
    }
}

TEST(distance, wmax_gives_lower_bound) {
    auto d = distance_exact(steane(), 1);
    ASSERT_FALSE(d.is_exact());
    ASSERT_EQ(d.value, 2u);
    ASSERT_EQ(d.str(), ">=2");
    ASSERT_FALSE(d.witness.has_value());
}

TEST(distance, single_generator) {
    auto code = StabilizerCode::create(Matrix{{1, 1, 0, 0}}, 2, 2);
    auto d = distance_exact(code, 2);
    ASSERT_TRUE(d.is_exact());
    ASSERT_EQ(d.value, 1u);
    ASSERT_EQ(d.witness->str(), "(1 0 | 0 0)");
}

TEST(distance, no_logical_operators) {
    auto code = StabilizerCode::create(Matrix{{1, 1, 0, 0}, {0, 0, 1, 1}}, 2, 2);
    auto d = distance_exact(code, 2);
    ASSERT_FALSE(d.is_exact());
    ASSERT_EQ(d.value, 3u);
}

TEST(distance, budget) {
    DistanceOptions options;
    options.candidate_budget = 10;
    auto d = distance_exact(steane(), 3, options);
    ASSERT_FALSE(d.is_exact());
    ASSERT_TRUE(d.budget_exhausted);
    ASSERT_LE(d.value, 3u);
}

TEST(distance, threads_do_not_change_result) {
    auto code = reduce_mod(steane_ldi(), 5);
    auto one = distance_exact(code, 3);
    for (unsigned t : {2u, 3u, 8u}) {
        DistanceOptions options;
        options.threads = t;
        auto many = distance_exact(code, 3, options);
        ASSERT_EQ(many.value, one.value);
        ASSERT_EQ(many.witness, one.witness);
    }
}

TEST(distance, matches_oracle_on_random_codes) {
    std::mt19937_64 rng(77);
    int checked = 0;
    while (checked < 150) {
        std::size_t n = 1 + rng() % 3;
        Int q = checked % 2 == 0 ? 2 : 3;
        std::size_t r = rng() % (n + 1);
        auto code = random_commuting_code(n, r, q, rng);
        if (!code) {
            continue;
        }
        auto expected = oracle::distance(code->matrix(), n, q);
        auto d = distance_exact(*code, n);
        if (expected) {
            ASSERT_TRUE(d.is_exact()) << code->matrix().str();
            ASSERT_EQ(d.value, *expected) << code->matrix().str();
        } else {
            ASSERT_FALSE(d.is_exact());
            ASSERT_EQ(d.value, n + 1);
        }
        ++checked;
    }
}

TEST(distance, css_distance_steane) {
    auto css = is_css(steane());
    auto d = css_distance(*css, 2, 3);
    ASSERT_EQ(d.dx.str(), "3");
    ASSERT_EQ(d.dz.str(), "3");
    ASSERT_EQ(d.overall().str(), "3");
    ASSERT_TRUE(d.dx.witness->is_pure_x());
    ASSERT_TRUE(d.dz.witness->is_pure_z());

    auto at5 = css_distance(*is_css(reduce_mod(steane_ldi(), 5)), 5, 3);
    ASSERT_EQ(at5.dx.str(), "3");
    ASSERT_EQ(at5.dz.str(), "3");
}

TEST(distance, css_identity_block) {
    // X block = I_3 and no Z rows: no pure Z error survives, and every pure X
    // error is a stabilizer.
    Matrix rows{{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}};
    auto css = is_css(StabilizerCode::create(rows, 3, 3));
    auto d = css_distance(*css, 3, 3);
    ASSERT_EQ(d.dz.str(), ">=4");
    ASSERT_EQ(d.dx.str(), ">=4");
}

TEST(distance, css_matches_exact_on_random_css) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 120; ++trial) {
        std::size_t n = 2 + rng() % 4;
        std::size_t rx = rng() % n;
        std::size_t rz = rng() % (n - rx + 1);
        Int q = trial % 2 == 0 ? 2 : 3;
        auto code = random_css_code(n, rx, rz, q, rng);
        auto exact = distance_exact(*code, n);
        auto split = css_distance(*is_css(*code), q, n).overall();
        ASSERT_EQ(split.kind, exact.kind) << code->matrix().str();
        ASSERT_EQ(split.value, exact.value) << code->matrix().str();
    }
}

TEST(distance, combine_min) {
    DistanceResult exact3{DistanceKind::Exact, 3};
    DistanceResult exact2{DistanceKind::Exact, 2};
    DistanceResult atleast4{DistanceKind::AtLeast, 4};
    DistanceResult atleast2{DistanceKind::AtLeast, 2};
    ASSERT_EQ(combine_min(exact3, exact2).str(), "2");
    ASSERT_EQ(combine_min(exact3, atleast4).str(), "3");
    ASSERT_EQ(combine_min(exact3, atleast2).str(), ">=2");
    ASSERT_EQ(combine_min(atleast4, atleast2).str(), ">=2");
}

TEST(classify, examples) {
    auto e = ivec({0, 0, 1, 1});
    auto unavoidable = classify_error(Matrix{{1, -1, 0, 0}}, 2, e);
    ASSERT_EQ(unavoidable.kind, ErrorClass::Kind::Unavoidable);

    auto artifact = classify_error(Matrix{{1, 1, 0, 0}}, 2, e);
    ASSERT_EQ(artifact.kind, ErrorClass::Kind::Artifact);
    ASSERT_EQ(artifact.index, 0u);
    ASSERT_EQ(artifact.value, 2);
    ASSERT_EQ(artifact.str(), "artifact(generator 1, syndrome 2)");

    auto detectable = classify_error(Matrix{{1, 1, 0, 0}}, 3, e);
    ASSERT_EQ(detectable.kind, ErrorClass::Kind::Detectable);

    auto ldi = steane_ldi();
    for (std::size_t i = 0; i < ldi.num_generators(); ++i) {
        for (Int p : {2, 3, 7}) {
            ASSERT_EQ(classify_error(ldi, p, ldi.generator(i)).kind, ErrorClass::Kind::InGroup);
        }
    }
    ASSERT_THROW(classify_error(ldi, 4, ldi.generator(0)), NotPrimeError);
}

TEST(classify, witnesses_are_unavoidable_or_artifact) {
    auto ldi = steane_ldi();
    for (Int p : {2, 3, 5, 7}) {
        auto d = distance_exact(reduce_mod(ldi, p), 3);
        auto c = classify_error(ldi, p, *d.witness);
        ASSERT_TRUE(c.kind == ErrorClass::Kind::Unavoidable || c.kind == ErrorClass::Kind::Artifact);
        if (c.kind == ErrorClass::Kind::Artifact) {
            ASSERT_EQ(mod_floor(c.value, p), 0);
            ASSERT_NE(c.value, 0);
        }
    }
}

TEST(minor_scan, two_by_two) {
    auto report = minor_scan(Matrix{{1, 1}, {1, -1}}, 2, 2);
    ASSERT_EQ(report.minors, 1u);
    ASSERT_EQ(report.max_abs_det, 2);
    ASSERT_EQ(report.hadamard_bound, 2);
    ASSERT_EQ(report.artifact_minors.size(), 1u);
    ASSERT_EQ(report.artifact_minors[0].det, -2);
}

TEST(minor_scan, entries) {
    Matrix block{{3, 0, 1}, {6, -3, 2}};
    auto report = minor_scan(block, 1, 3);
    ASSERT_EQ(report.minors, 6u);
    ASSERT_EQ(report.artifact_minors.size(), 3u);
    for (const auto& m : report.artifact_minors) {
        ASSERT_EQ(mod_floor(static_cast<Int>(m.det), 3), 0);
    }
}

TEST(minor_scan, steane_x_block) {
    auto css = css_split(oracle::load_rows("steane_ldi_css.txt"));
    auto report = minor_scan(css->xblock, 2, 3);
    ASSERT_LE(report.max_abs_det, 2);
    ASSERT_TRUE(report.artifact_minors.empty());
    ASSERT_EQ(report.minors, 3u * 21u);
    ASSERT_THROW(minor_scan(css->xblock, 2, 3, 10), BudgetExceededError);
}

TEST(minor_scan, hadamard_bound_holds) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t w = 1 + trial % 3;
        Matrix block = oracle::random_matrix(w + 1, w + 2, -2, 2, rng);
        auto report = minor_scan(block, w, 5);
        ASSERT_LE(report.max_abs_det, report.hadamard_bound);
    }
}

TEST(determinant, matches_cofactor_expansion) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t m = 1 + trial % 5;
        Matrix a = oracle::random_matrix(m, m, -4, 4, rng);
        std::vector<std::vector<long long>> rows(m, std::vector<long long>(m));
        for (std::size_t r = 0; r < m; ++r) {
            for (std::size_t c = 0; c < m; ++c) {
                rows[r][c] = a(r, c);
            }
        }
        ASSERT_EQ(determinant(a), BigInt(oracle::determinant(rows)));
    }
    ASSERT_EQ(determinant(Matrix(0, 0)), 1);
}
