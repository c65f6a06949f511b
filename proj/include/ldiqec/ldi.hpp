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
#include <vector>

#include "ldiqec/matrix.hpp"
#include "ldiqec/phi.hpp"
#include "ldiqec/stabilizer.hpp"

namespace ldiqec {

/// Integer generator matrix whose pairwise symplectic products are exactly
/// zero, so that its reduction modulo any prime commutes. Remembers the prime
/// it was built from; reducing mod that prime gives a valid code.
class LdiCode {
  public:
    /// Throws NotLdiError on a nonzero integer product, and the StabilizerCode
    /// errors when the reduction mod `origin_q` is not a valid code.
    static LdiCode certify(const Matrix& rows, std::size_t n, Int origin_q);

    std::size_t n() const { return n_; }
    std::size_t k() const { return n_ - rows_.rows(); }
    Int origin_q() const { return origin_q_; }
    std::size_t num_generators() const { return rows_.rows(); }
    const Matrix& matrix() const { return rows_; }
    PhiVector generator(std::size_t i) const;
    /// B: largest absolute entry.
    Int max_entry() const { return rows_.max_abs(); }

    bool operator==(const LdiCode&) const = default;

  private:
    LdiCode(Matrix rows, std::size_t n, Int origin_q) : rows_(std::move(rows)), n_(n), origin_q_(origin_q) {}

    Matrix rows_;
    std::size_t n_ = 0;
    Int origin_q_ = 2;
};

struct GramViolation {
    std::size_t first;   ///< 0-based generator index, first < second
    std::size_t second;
    Int value;
    bool operator==(const GramViolation&) const = default;
};

struct LdiReport {
    Int max_entry = 0;  ///< B
    Matrix gram;        ///< gram(i, j) = symplectic_product(row i, row j)
    std::vector<GramViolation> violations;
    bool css = false;

    bool certified() const { return violations.empty(); }
};

/// Audits an integer generator matrix (rows of length 2n).
LdiReport verify_ldi(const Matrix& rows);

/// Canonical form, integer lift, then Z1 += L with L(i, j) = <s_i, s_j> for
/// i > j. The result is congruent to canonical_form(code).code mod q.
LdiCode ldi_prescriptive(const StabilizerCode& code, Lift lift = Lift::Symmetric);

/// CSS-preserving lift: X block to [I A] form, A lifted, Z rows completed
/// over the integers from their free coordinates. Keeps the identity columns
/// in both blocks, so the reduction keeps full rank at every prime.
/// Throws std::invalid_argument for a non-CSS input.
LdiCode ldi_css_lift(const StabilizerCode& code);

/// Reduction into {0..p-1}; the result commutes at every p. Throws
/// NotPrimeError, or DependentRowsError if the rank drops mod p.
StabilizerCode reduce_mod(const LdiCode& ldi, Int p);

enum class SignSearchStatus {
    Found,
    Unsatisfiable,   ///< every lift assignment was refuted
    BudgetExceeded,  ///< gave up before finishing
};

struct SignSearchOptions {
    /// Largest |entry| allowed; 0 means q - 1 (all lifts with |v| < q).
    Int max_abs = 0;
    std::uint64_t node_budget = 10'000'000;
};

struct SignSearchResult {
    SignSearchStatus status = SignSearchStatus::Unsatisfiable;
    std::optional<LdiCode> code;
    std::uint64_t nodes = 0;
};

/// Backtracking over integer lifts of every nonzero entry (last row first,
/// entries left to right, smaller |v| first, positive first on ties), pruned
/// on partial Gram sums. Bounds are tried 1, 2, ... so the first hit has
/// minimal B and is the first assignment in that order at that B.
SignSearchResult ldi_sign_search(const StabilizerCode& code, const SignSearchOptions& options = {});

}  // namespace ldiqec
