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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ldiqec/ldi.hpp"
#include "ldiqec/matrix.hpp"
#include "ldiqec/stabilizer.hpp"

namespace ldiqec {

/// Line-oriented text form of a generator matrix:
///
///     # comment
///     mod 2            (or: mod inf)
///     origin 2         (only with mod inf)
///     n 7
///     rows 6
///     1 1 1 1 0 0 0 | 0 0 0 0 0 0 0
///
/// Rows carry 2n signed integers; the `|` between halves is optional on input
/// and always written on output. Entries are kept exactly as read.
struct CodeFile {
    std::vector<std::string> comments;  ///< text after '#', verbatim
    std::optional<Int> modulus;         ///< empty for "inf"
    std::optional<Int> origin;          ///< required iff modulus is empty
    std::size_t n = 0;
    Matrix rows;

    bool is_ldi() const { return !modulus.has_value(); }

    /// Mod-q file: validated code. Inf file: its reduction at the origin prime.
    StabilizerCode to_stabilizer() const;
    /// Inf file only; certified.
    LdiCode to_ldi() const;

    bool operator==(const CodeFile&) const = default;
};

/// Throws ParseError carrying the 1-based line number.
CodeFile parse_code_file(std::istream& in);
CodeFile parse_code_file(const std::string& text);
CodeFile load_code_file(const std::string& path);

std::string format_code_file(const CodeFile& file);
void save_code_file(const std::string& path, const CodeFile& file);

CodeFile to_code_file(const StabilizerCode& code, std::vector<std::string> comments = {});
CodeFile to_code_file(const LdiCode& code, std::vector<std::string> comments = {});

}  // namespace ldiqec
