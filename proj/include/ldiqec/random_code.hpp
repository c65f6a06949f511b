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
#include <cstdint>
#include <optional>
#include <random>

#include "ldiqec/distance.hpp"
#include "ldiqec/stabilizer.hpp"

namespace ldiqec {

/// One attempt at r independent, pairwise commuting, nonzero rows mod q.
/// Each row is resampled up to `row_attempts` times; nullopt when a row
/// cannot be placed.
std::optional<StabilizerCode> random_commuting_code(std::size_t n, std::size_t r, Int q, std::mt19937_64& rng,
                                                    std::size_t row_attempts = 1000);

/// Random CSS code with rx X rows of full rank and rz Z rows drawn from the
/// kernel of the X block. Requires rx + rz <= n.
std::optional<StabilizerCode> random_css_code(std::size_t n, std::size_t rx, std::size_t rz, Int q,
                                              std::mt19937_64& rng, std::size_t attempts = 1000);

struct RandomCodeRequest {
    std::size_t n = 1;
    std::size_t k = 0;
    std::size_t d = 1;
    Int q = 2;
    std::size_t trials = 1000;
    std::uint64_t seed = 0;
    DistanceOptions distance;
};

struct RandomCodeResult {
    std::optional<StabilizerCode> code;
    std::optional<DistanceResult> distance;
    std::size_t trials_used = 0;
};

/// Rejection sampling: the first sample whose distance_exact reaches d.
/// Deterministic for a fixed seed. Throws std::invalid_argument on k > n or
/// a composite q.
RandomCodeResult random_code(const RandomCodeRequest& request);

}  // namespace ldiqec
