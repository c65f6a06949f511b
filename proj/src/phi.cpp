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

#include "ldiqec/phi.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "ldiqec/errors.hpp"

namespace ldiqec {

Ring Ring::mod(Int q) {
    if (!is_prime(q)) {
        throw NotPrimeError(q);
    }
    return Ring(q);
}

Int Ring::modulus() const {
    if (!modulus_) {
        throw std::logic_error("integer ring has no modulus");
    }
    return *modulus_;
}

std::string Ring::str() const { return modulus_ ? std::to_string(*modulus_) : "inf"; }

PhiVector::PhiVector(std::size_t n, std::vector<Int> entries, Ring ring)
    : n_(n), entries_(std::move(entries)), ring_(ring) {
    for (auto& e : entries_) {
        e = ring_.reduce(e);
    }
}

PhiVector::PhiVector(std::vector<Int> x, std::vector<Int> z, Ring ring) : n_(x.size()), ring_(ring) {
    if (x.size() != z.size()) {
        throw LengthMismatchError(x.size(), z.size());
    }
    entries_ = std::move(x);
    entries_.insert(entries_.end(), z.begin(), z.end());
    for (auto& e : entries_) {
        e = ring_.reduce(e);
    }
}

PhiVector PhiVector::from_entries(std::span<const Int> entries, Ring ring) {
    if (entries.size() % 2 != 0) {
        throw LengthMismatchError(entries.size() + 1, entries.size());
    }
    return PhiVector(entries.size() / 2, std::vector<Int>(entries.begin(), entries.end()), ring);
}

PhiVector PhiVector::zero(std::size_t n, Ring ring) { return PhiVector(n, std::vector<Int>(2 * n, 0), ring); }

bool PhiVector::is_zero() const {
    for (Int e : entries_) {
        if (e != 0) {
            return false;
        }
    }
    return true;
}

bool PhiVector::is_pure_x() const {
    for (Int e : z()) {
        if (e != 0) {
            return false;
        }
    }
    return true;
}

bool PhiVector::is_pure_z() const {
    for (Int e : x()) {
        if (e != 0) {
            return false;
        }
    }
    return true;
}

Int PhiVector::max_abs() const {
    Int best = 0;
    for (Int e : entries_) {
        Int a = e < 0 ? checked_sub(0, e) : e;
        best = std::max(best, a);
    }
    return best;
}

PhiVector PhiVector::reduced(Int p) const { return PhiVector(n_, entries_, Ring::mod(p)); }

PhiVector PhiVector::lifted(Lift lift) const {
    std::vector<Int> out = entries_;
    if (!ring_.is_integers() && lift == Lift::Symmetric) {
        Int q = ring_.modulus();
        for (auto& e : out) {
            e = symmetric_residue(e, q);
        }
    }
    return PhiVector(n_, std::move(out), Ring::integers());
}

std::string PhiVector::str() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i == n_) {
            out << " |";
        }
        if (i > 0) {
            out << ' ';
        }
        out << entries_[i];
    }
    if (n_ == 0) {
        out << '|';
    }
    out << ')';
    return out.str();
}

namespace {

/// Reads an optional `^<signed int>` suffix starting at `pos`.
Int parse_exponent(std::string_view token, std::size_t& pos) {
    if (pos >= token.size() || token[pos] != '^') {
        return 1;
    }
    ++pos;
    std::size_t start = pos;
    if (pos < token.size() && (token[pos] == '-' || token[pos] == '+')) {
        ++pos;
    }
    while (pos < token.size() && std::isdigit(static_cast<unsigned char>(token[pos]))) {
        ++pos;
    }
    std::string digits(token.substr(start, pos - start));
    if (!digits.empty() && digits[0] == '+') {
        digits.erase(0, 1);
    }
    Int value = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || end != digits.data() + digits.size()) {
        throw std::invalid_argument("bad exponent in Pauli factor '" + std::string(token) + "'");
    }
    return value;
}

}  // namespace

PauliWord PauliWord::parse(std::string_view text, Ring ring) {
    PauliWord word;
    word.ring = ring;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
        RegisterPower power;
        std::size_t pos = 0;
        if (token == "I") {
            word.factors.push_back(power);
            continue;
        }
        if (pos < token.size() && token[pos] == 'X') {
            ++pos;
            power.x_power = parse_exponent(token, pos);
        }
        if (pos < token.size() && token[pos] == 'Z') {
            ++pos;
            power.z_power = parse_exponent(token, pos);
        }
        if (pos != token.size() || pos == 0) {
            throw std::invalid_argument("bad Pauli factor '" + token + "'");
        }
        word.factors.push_back(power);
    }
    return word;
}

PhiVector phi_map(const PauliWord& word) {
    std::vector<Int> x;
    std::vector<Int> z;
    x.reserve(word.factors.size());
    z.reserve(word.factors.size());
    for (const auto& f : word.factors) {
        x.push_back(f.x_power);
        z.push_back(f.z_power);
    }
    return PhiVector(std::move(x), std::move(z), word.ring);
}

Int symplectic_product(const PhiVector& u, const PhiVector& v) {
    if (u.n() != v.n()) {
        throw LengthMismatchError(u.n(), v.n());
    }
    Wide acc = 0;
    for (std::size_t t = 0; t < u.n(); ++t) {
        acc += static_cast<Wide>(u.x(t)) * v.z(t);
        acc -= static_cast<Wide>(u.z(t)) * v.x(t);
    }
    return narrow(acc);
}

PhiVector compose(const PhiVector& u, const PhiVector& v) {
    if (u.n() != v.n()) {
        throw LengthMismatchError(u.n(), v.n());
    }
    if (!(u.ring() == v.ring())) {
        throw RingMismatchError("cannot compose vectors over rings " + u.ring().str() + " and " +
                                v.ring().str());
    }
    std::vector<Int> sum(u.entries().begin(), u.entries().end());
    for (std::size_t i = 0; i < sum.size(); ++i) {
        sum[i] = checked_add(sum[i], v.entries()[i]);
    }
    return PhiVector::from_entries(sum, u.ring());
}

std::size_t pauli_weight(const PhiVector& u) {
    std::size_t weight = 0;
    for (std::size_t t = 0; t < u.n(); ++t) {
        if (u.x(t) != 0 || u.z(t) != 0) {
            ++weight;
        }
    }
    return weight;
}

}  // namespace ldiqec
