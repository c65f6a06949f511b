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
#include <string_view>
#include <vector>

#include "ldiqec/arith.hpp"

namespace ldiqec {

/// How a residue mod q is carried to the integers.
enum class Lift {
    Symmetric,    ///< {-floor(q/2), ..., floor(q/2)}, {0, 1} when q = 2
    NonNegative,  ///< {0, ..., q-1}
};

/// Either arithmetic mod a prime q, or the unbounded integers ("inf").
class Ring {
  public:
    /// Throws NotPrimeError unless q is prime.
    static Ring mod(Int q);
    static Ring integers() { return Ring(std::nullopt); }

    bool is_integers() const { return !modulus_.has_value(); }
    /// Throws std::logic_error for the integer ring.
    Int modulus() const;
    const std::optional<Int>& modulus_opt() const { return modulus_; }

    Int reduce(Int v) const { return modulus_ ? mod_floor(v, *modulus_) : v; }

    /// "2", "3", ... or "inf".
    std::string str() const;

    bool operator==(const Ring&) const = default;

  private:
    explicit Ring(std::optional<Int> modulus) : modulus_(modulus) {}
    std::optional<Int> modulus_;
};

/// Exponent vector (x_1 .. x_n | z_1 .. z_n) of a generalized Pauli word with
/// the global phase quotiented out. Entries are kept reduced into the ring's
/// canonical range.
class PhiVector {
  public:
    PhiVector(std::vector<Int> x, std::vector<Int> z, Ring ring);

    /// Build from a flat length-2n list laid out as x-half then z-half.
    static PhiVector from_entries(std::span<const Int> entries, Ring ring);
    static PhiVector zero(std::size_t n, Ring ring);

    std::size_t n() const { return n_; }
    const Ring& ring() const { return ring_; }

    std::span<const Int> entries() const { return entries_; }
    std::span<const Int> x() const { return std::span<const Int>(entries_).first(n_); }
    std::span<const Int> z() const { return std::span<const Int>(entries_).subspan(n_); }
    Int x(std::size_t t) const { return entries_[t]; }
    Int z(std::size_t t) const { return entries_[n_ + t]; }

    bool is_zero() const;
    bool is_pure_x() const;
    bool is_pure_z() const;
    /// Largest absolute entry.
    Int max_abs() const;

    /// Same entries reduced into Mod(p).
    PhiVector reduced(Int p) const;
    /// Integer-ring copy; residues are lifted with `lift` when the source is mod q.
    PhiVector lifted(Lift lift = Lift::Symmetric) const;

    /// "(1 0 0 1 | 0 -1 0 1)"
    std::string str() const;

    bool operator==(const PhiVector&) const = default;

  private:
    PhiVector(std::size_t n, std::vector<Int> entries, Ring ring);

    std::size_t n_;
    std::vector<Int> entries_;
    Ring ring_;
};

/// Per-register exponents of X^a Z^b.
struct RegisterPower {
    Int x_power = 0;
    Int z_power = 0;
    bool operator==(const RegisterPower&) const = default;
};

/// Tensor product of X^a Z^b factors, one per register.
struct PauliWord {
    std::vector<RegisterPower> factors;
    Ring ring = Ring::integers();

    /// Parses whitespace-separated factors such as "X Z^-1 I XZ".
    /// Each factor is `I` or `X[^a]` followed by optional `Z[^b]`.
    static PauliWord parse(std::string_view text, Ring ring);
};

PhiVector phi_map(const PauliWord& word);

/// x(u).z(v) - z(u).x(v) over the integers, whatever the ring tags say.
Int symplectic_product(const PhiVector& u, const PhiVector& v);

/// Entrywise sum in the shared ring.
PhiVector compose(const PhiVector& u, const PhiVector& v);

/// Number of registers carrying a non-identity factor.
std::size_t pauli_weight(const PhiVector& u);

}  // namespace ldiqec
