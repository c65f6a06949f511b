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

#include "ldiqec/budget.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace ldiqec {

std::uint64_t search_budget(std::uint64_t fallback) {
    const char* raw = std::getenv(kBudgetEnvVar);
    if (raw == nullptr) {
        return fallback;
    }
    std::uint64_t value = 0;
    auto [end, ec] = std::from_chars(raw, raw + std::strlen(raw), value);
    if (ec != std::errc() || *end != '\0' || value == 0) {
        return fallback;
    }
    return value;
}

}  // namespace ldiqec
