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
#include <string>
#include <variant>
#include <vector>

#include "ldiqec/matrix.hpp"
#include "ldiqec/phi.hpp"

namespace ldiqec {

namespace detail {
struct CodeAccess;
}

/// Generators of a commuting subgroup over a prime modulus q. Holds exactly
/// n - k independent, pairwise commuting, nonzero rows; k is derived.
class StabilizerCode {
  public:
    /// Validating constructor. Rows are reduced mod q first.
    /// Throws NotPrimeError, LengthMismatchError, NonCommutingError or
    /// DependentRowsError.
    static StabilizerCode create(const Matrix& rows, std::size_t n, Int q);
    static StabilizerCode create(const std::vector<PhiVector>& rows, std::size_t n, Int q);

    std::size_t n() const { return n_; }
    Int q() const { return q_; }
    std::size_t k() const { return n_ - rows_.rows(); }
    std::size_t num_generators() const { return rows_.rows(); }

    /// (n - k) x 2n matrix, entries in {0..q-1}.
    const Matrix& matrix() const { return rows_; }
    PhiVector generator(std::size_t i) const;
    std::vector<PhiVector> generators() const;

    bool operator==(const StabilizerCode&) const = default;

  private:
    StabilizerCode(Matrix rows, std::size_t n, Int q) : rows_(std::move(rows)), n_(n), q_(q) {}

    friend struct detail::CodeAccess;

    Matrix rows_;
    std::size_t n_ = 0;
    Int q_ = 2;
};

/// The spelled-out `new_code` entry point.
inline StabilizerCode new_code(const Matrix& rows, std::size_t n, Int q) {
    return StabilizerCode::create(rows, n, q);
}

// Parameter-preserving moves. All indices are 0-based.

/// Relabel generators a and b.
struct RowSwap {
    std::size_t a;
    std::size_t b;
    bool operator==(const RowSwap&) const = default;
};
/// Relabel registers a and b (x and z columns move together).
struct RegisterSwap {
    std::size_t a;
    std::size_t b;
    bool operator==(const RegisterSwap&) const = default;
};
/// Multiply generator `row` by `factor` (1..q-1 for codes mod q).
struct RowScale {
    std::size_t row;
    Int factor;
    bool operator==(const RowScale&) const = default;
};
/// Add generator `src` to generator `dst`.
struct RowAdd {
    std::size_t src;
    std::size_t dst;
    bool operator==(const RowAdd&) const = default;
};
/// Fourier move on one register: (x, z) -> (-z, x).
struct Dft {
    std::size_t reg;
    bool operator==(const Dft&) const = default;
};

using Move = std::variant<RowSwap, RegisterSwap, RowScale, RowAdd, Dft>;

std::string to_string(const Move& move);

/// Applies a move to a generator matrix (rows of length 2n). With a modulus
/// the touched entries are reduced mod it. Throws IndexError on bad indices.
void apply_move_in_place(Matrix& rows, const Move& move, std::optional<Int> modulus);

/// Returns the moved code; n, k and q are unchanged.
/// Throws IndexError for out-of-range indices or a zero scale factor.
StabilizerCode apply_move(const StabilizerCode& code, const Move& move);

struct CanonicalResult {
    StabilizerCode code;  ///< [I X2 | Z1 Z2] mod q
    std::vector<Move> moves;
    /// register_order[i] is the input register now sitting at position i.
    std::vector<std::size_t> register_order;
};

/// Gauss-Jordan elimination mod q using only moves: leftmost available
/// x-column pivot, lowest row on ties; when no x pivot remains a Dft turns a
/// z entry into one, followed by a RegisterSwap.
CanonicalResult canonical_form(const StabilizerCode& code);

/// Pure-X / pure-Z split of a generator set.
struct CssStructure {
    Matrix xblock;  ///< r_x x n, x-halves of the pure-X generators
    Matrix zblock;  ///< r_z x n, z-halves of the pure-Z generators
    std::vector<std::size_t> x_rows;  ///< generator index of each xblock row
    std::vector<std::size_t> z_rows;
    std::vector<std::size_t> register_order;  ///< identity unless produced by to_css
    std::vector<std::size_t> dft_registers;   ///< registers given a Dft to reach this form

    std::size_t n() const { return xblock.cols(); }
};

/// Splits rows (length 2n) into pure-X and pure-Z generators; nullopt if some
/// row has both halves nonzero. Zero rows are rejected too.
std::optional<CssStructure> css_split(const Matrix& rows);

std::optional<CssStructure> is_css(const StabilizerCode& code);

struct CssConversion {
    StabilizerCode code;
    std::vector<Move> moves;
    std::vector<std::size_t> dft_registers;
};

/// Looks for Dft subsets (smallest first, then lexicographic) after which row
/// operations alone give pure-X / pure-Z generators. Exhaustive for n <= 20,
/// a greedy register-by-register search above that.
std::optional<CssConversion> to_css(const StabilizerCode& code);

struct Syndrome {
    std::vector<Int> integer;  ///< product of the symmetric lift of each generator with e
    std::vector<Int> reduced;  ///< the same mod q
    bool detected() const;
};

/// Component i is symplectic_product(lift(s_i), e); e is used as stored.
Syndrome syndrome(const StabilizerCode& code, const PhiVector& e);

}  // namespace ldiqec
