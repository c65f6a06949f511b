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
#include <string>
#include <vector>

#include "ldiqec/arith.hpp"
#include "ldiqec/ldi.hpp"
#include "ldiqec/matrix.hpp"
#include "ldiqec/phi.hpp"
#include "ldiqec/stabilizer.hpp"

namespace ldiqec {

enum class DistanceKind { Exact, AtLeast };

struct DistanceResult {
    DistanceKind kind = DistanceKind::AtLeast;
    std::size_t value = 0;
    /// Minimum-weight undetectable error outside the group, when Exact.
    std::optional<PhiVector> witness;
    Int prime = 2;
    /// Stopped at `value` because the candidate budget would be exceeded.
    bool budget_exhausted = false;
    /// A nonzero group element lighter than the distance was seen.
    bool degenerate = false;

    bool is_exact() const { return kind == DistanceKind::Exact; }
    /// "3" or ">=4"
    std::string str() const;
};

struct DistanceOptions {
    /// Cap on enumerated candidates across all weights (supports for css_distance).
    std::uint64_t candidate_budget = 100'000'000;
    /// Worker threads for distance_exact; output does not depend on this.
    unsigned threads = 1;
};

/// Enumerates errors by weight 1..wmax: supports in colex order, then per
/// register values in odometer order with the lowest register's pair scaled
/// so its first nonzero coordinate is 1. The first error with zero syndrome
/// mod q that lies outside the row space is the witness.
DistanceResult distance_exact(const StabilizerCode& code, std::size_t wmax, const DistanceOptions& options = {});

struct CssDistance {
    DistanceResult dx;  ///< pure-X errors against the z-block
    DistanceResult dz;  ///< pure-Z errors against the x-block
    /// min(dx, dz) with AtLeast handled conservatively.
    DistanceResult overall() const;
};

/// Block-wise distance: for each support, the kernel of the check block
/// restricted to it is searched for a full-support vector outside the other
/// block's row space mod p.
CssDistance css_distance(const CssStructure& css, Int p, std::size_t wmax, const DistanceOptions& options = {});

/// min of two results; Exact(a) vs AtLeast(b) is Exact(a) only when a < b.
DistanceResult combine_min(const DistanceResult& a, const DistanceResult& b);

struct ErrorClass {
    enum class Kind { Detectable, InGroup, Unavoidable, Artifact };
    Kind kind = Kind::Detectable;
    std::size_t index = 0;  ///< Artifact: first generator with a nonzero integer syndrome
    Int value = 0;          ///< Artifact: that integer syndrome

    std::string str() const;
};

/// Integer syndrome of e against integer rows, then its reduction mod p.
/// Nonzero reduction: Detectable. Otherwise InGroup if e is in the row space
/// mod p; else Unavoidable when every integer syndrome is 0, Artifact when not.
ErrorClass classify_error(const Matrix& rows, Int p, const PhiVector& e);
ErrorClass classify_error(const LdiCode& ldi, Int p, const PhiVector& e);

struct ArtifactMinor {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
    BigInt det;
};

struct MinorScanReport {
    std::size_t block_rows = 0;
    std::size_t block_cols = 0;
    std::size_t w = 0;
    std::uint64_t minors = 0;
    BigInt max_abs_det;
    BigInt hadamard_bound;  ///< ceil(B^w w^{w/2}), B the largest |entry| in the block
    std::vector<ArtifactMinor> artifact_minors;  ///< det != 0 and det = 0 mod p
};

/// Exact determinants of every w x w minor. Throws BudgetExceededError when
/// C(rows, w) * C(cols, w) exceeds `budget`.
MinorScanReport minor_scan(const Matrix& block, std::size_t w, Int p, std::uint64_t budget = 10'000'000);

/// Fraction-free exact determinant of a square matrix.
BigInt determinant(const Matrix& square);

}  // namespace ldiqec
