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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ldiqec/bounds.hpp"
#include "ldiqec/distance.hpp"
#include "ldiqec/ldi.hpp"
#include "ldiqec/matrix.hpp"
#include "ldiqec/stabilizer.hpp"

namespace ldiqec {

/// N x (2^N - 1) binary matrix; column j holds j + 1 in binary, most
/// significant bit in row 0. Requires N >= 2.
Matrix parity_check(unsigned N);

/// [[2^N - 1, 2^N - 1 - 2N]] over q = 2 with X block = Z block = parity_check(N).
/// Requires N >= 3.
StabilizerCode hamming_css(unsigned N);

/// Certified B = 1 LDI form of hamming_css(N). The inductive sign pattern is
/// built as a candidate and audited; failing stages are repaired by a sign
/// search with lifts in {0, +-1}. Appends one line per decision to `log`.
/// Throws NotLdiError if the repair search also fails.
LdiCode hamming_ldi(unsigned N, std::vector<std::string>* log = nullptr);

struct HammingMember {
    unsigned N = 3;
    Matrix parity;
    StabilizerCode css;
    std::optional<LdiCode> ldi;
    std::vector<std::string> log;
};

HammingMember hamming_member(unsigned N, bool with_ldi);

struct FamilyRow {
    Int prime;
    CssDistance distance;
};

struct FamilyCertificate {
    unsigned N = 3;
    Int max_entry = 1;
    CssCutoff p_css;
    std::vector<FamilyRow> rows;

    /// Exact distance 3 at every tested prime.
    bool all_distance_three() const;
};

FamilyCertificate certify_family_member(unsigned N, std::span<const Int> primes, std::size_t wmax = 3,
                                        const DistanceOptions& options = {});

}  // namespace ldiqec
