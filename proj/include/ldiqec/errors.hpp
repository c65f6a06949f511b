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
#include <stdexcept>
#include <string>

#include "ldiqec/arith.hpp"

namespace ldiqec {

/// Base of every library error. Callers that only need a message catch this.
class LdiError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class NotPrimeError : public LdiError {
  public:
    explicit NotPrimeError(Int value)
        : LdiError("modulus " + std::to_string(value) + " is not prime"), value(value) {}
    Int value;
};

class LengthMismatchError : public LdiError {
  public:
    LengthMismatchError(std::size_t expected, std::size_t actual)
        : LdiError("length mismatch: expected " + std::to_string(expected) + ", got " +
                   std::to_string(actual)),
          expected(expected),
          actual(actual) {}
    std::size_t expected;
    std::size_t actual;
};

class RingMismatchError : public LdiError {
  public:
    using LdiError::LdiError;
};

/// Generators `first` and `second` (0-based) have a nonzero product mod q.
/// The message uses 1-based generator numbers.
class NonCommutingError : public LdiError {
  public:
    NonCommutingError(std::size_t first, std::size_t second, Int value)
        : LdiError("generators " + std::to_string(first + 1) + " and " + std::to_string(second + 1) +
                   " do not commute (product " + std::to_string(value) + ")"),
          first(first),
          second(second),
          value(value) {}
    std::size_t first;
    std::size_t second;
    Int value;
};

class DependentRowsError : public LdiError {
  public:
    DependentRowsError(std::size_t rank, std::size_t rows)
        : LdiError("generators are linearly dependent (rank " + std::to_string(rank) + " of " +
                   std::to_string(rows) + " rows)"),
          rank(rank),
          rows(rows) {}
    std::size_t rank;
    std::size_t rows;
};

class IndexError : public LdiError {
  public:
    using LdiError::LdiError;
};

/// A search hit its node or candidate budget before finishing.
class BudgetExceededError : public LdiError {
  public:
    using LdiError::LdiError;
};

/// Integer commutation check failed on rows that were expected to be LDI.
class NotLdiError : public LdiError {
  public:
    using LdiError::LdiError;
};

class ParseError : public LdiError {
  public:
    ParseError(std::size_t line, const std::string& what)
        : LdiError("line " + std::to_string(line) + ": " + what), line(line) {}
    std::size_t line;
};

}  // namespace ldiqec
