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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ldiqec {

enum ExitCode : int {
    kExitOk = 0,
    kExitInvalid = 2,
    kExitBudget = 3,
    kExitParse = 4,
};

/// Command bodies behind the `ldiqec` executable. Each writes its report to
/// `out`, diagnostics to `err`, and returns an exit code.

int cmd_inspect(const std::string& path, std::ostream& out, std::ostream& err);

struct LdiArgs {
    std::string input;
    std::string method = "prescriptive";  ///< or "signs"
    std::optional<std::string> output;    ///< stdout when empty
    std::optional<unsigned> distance;     ///< computed when empty
};
int cmd_ldi(const LdiArgs& args, std::ostream& out, std::ostream& err);

struct DistanceArgs {
    std::string input;
    std::optional<std::int64_t> p;
    std::optional<std::size_t> wmax;
    bool css = false;
    bool csv = false;
    unsigned threads = 1;
};
int cmd_distance(const DistanceArgs& args, std::ostream& out, std::ostream& err);

struct BoundsArgs {
    std::optional<unsigned> n;
    std::optional<unsigned> k;
    std::optional<unsigned> d;
    std::optional<std::int64_t> q;
    std::optional<std::int64_t> B;
};
int cmd_bounds(const BoundsArgs& args, std::ostream& out, std::ostream& err);

struct HammingArgs {
    unsigned N = 3;
    bool ldi = false;
    std::optional<std::string> output;
};
int cmd_hamming(const HammingArgs& args, std::ostream& out, std::ostream& err);

struct SweepArgs {
    std::string input;
    std::vector<std::int64_t> primes;
    std::optional<std::size_t> wmax;
    std::optional<std::string> output;  ///< CSV path; stdout when empty
};
int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err);

struct RandomArgs {
    std::size_t n = 1;
    std::size_t k = 0;
    std::size_t d = 1;
    std::int64_t q = 2;
    std::size_t trials = 1000;
    std::uint64_t seed = 0;
    bool strict_gqhb = false;
    std::optional<std::string> output;
};
int cmd_random(const RandomArgs& args, std::ostream& out, std::ostream& err);

}  // namespace ldiqec
