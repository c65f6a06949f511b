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

#include "ldiqec/random_code.hpp"

#include <stdexcept>

#include "ldiqec/modp.hpp"

namespace ldiqec {

namespace {

Int draw(std::mt19937_64& rng, Int q) { return static_cast<Int>(rng() % static_cast<std::uint64_t>(q)); }

std::vector<Int> random_row(std::size_t len, Int q, std::mt19937_64& rng) {
    std::vector<Int> row(len);
    for (auto& e : row) {
        e = draw(rng, q);
    }
    return row;
}

bool commutes_with_all(const Matrix& rows, std::span<const Int> row, Int q) {
    PhiVector candidate = PhiVector::from_entries(row, Ring::mod(q));
    for (std::size_t i = 0; i < rows.rows(); ++i) {
        if (mod_floor(symplectic_product(PhiVector::from_entries(rows.row(i), Ring::mod(q)), candidate), q) != 0) {
            return false;
        }
    }
    return true;
}

}  // namespace

std::optional<StabilizerCode> random_commuting_code(std::size_t n, std::size_t r, Int q, std::mt19937_64& rng,
                                                    std::size_t row_attempts) {
    Matrix rows(0, 2 * n);
    for (std::size_t i = 0; i < r; ++i) {
        bool placed = false;
        for (std::size_t attempt = 0; attempt < row_attempts && !placed; ++attempt) {
            auto row = random_row(2 * n, q, rng);
            if (!commutes_with_all(rows, row, q)) {
                continue;
            }
            Matrix extended = rows;
            extended.append_row(row);
            if (rank_mod(extended, q) == i + 1) {
                rows = std::move(extended);
                placed = true;
            }
        }
        if (!placed) {
            return std::nullopt;
        }
    }
    return StabilizerCode::create(rows, n, q);
}

std::optional<StabilizerCode> random_css_code(std::size_t n, std::size_t rx, std::size_t rz, Int q,
                                              std::mt19937_64& rng, std::size_t attempts) {
    if (rx + rz > n) {
        throw std::invalid_argument("random_css_code needs rx + rz <= n");
    }
    for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
        Matrix x(0, n);
        for (std::size_t i = 0; i < rx; ++i) {
            x.append_row(random_row(n, q, rng));
        }
        if (rank_mod(x, q) != rx) {
            continue;
        }
        Matrix kernel = rx == 0 ? Matrix(0, n) : kernel_mod(x, q);
        if (rx == 0) {
            for (std::size_t c = 0; c < n; ++c) {
                std::vector<Int> unit(n, 0);
                unit[c] = 1;
                kernel.append_row(unit);
            }
        }
        Matrix z(0, n);
        for (std::size_t i = 0; i < rz; ++i) {
            std::vector<Int> row(n, 0);
            for (std::size_t b = 0; b < kernel.rows(); ++b) {
                Int coeff = draw(rng, q);
                for (std::size_t c = 0; c < n; ++c) {
                    row[c] = mod_floor(row[c] + coeff * kernel(b, c), q);
                }
            }
            z.append_row(row);
        }
        if (rank_mod(z, q) != rz) {
            continue;
        }
        Matrix rows(0, 2 * n);
        for (std::size_t i = 0; i < rx; ++i) {
            std::vector<Int> row(2 * n, 0);
            std::copy(x.row(i).begin(), x.row(i).end(), row.begin());
            rows.append_row(row);
        }
        for (std::size_t i = 0; i < rz; ++i) {
            std::vector<Int> row(2 * n, 0);
            std::copy(z.row(i).begin(), z.row(i).end(), row.begin() + static_cast<std::ptrdiff_t>(n));
            rows.append_row(row);
        }
        return StabilizerCode::create(rows, n, q);
    }
    return std::nullopt;
}

RandomCodeResult random_code(const RandomCodeRequest& request) {
    if (request.k > request.n) {
        throw std::invalid_argument("k exceeds n");
    }
    if (!is_prime(request.q)) {
        throw std::invalid_argument("q = " + std::to_string(request.q) + " is not prime");
    }
    std::mt19937_64 rng(request.seed);
    RandomCodeResult out;
    const std::size_t r = request.n - request.k;
    for (std::size_t trial = 0; trial < request.trials; ++trial) {
        out.trials_used = trial + 1;
        auto code = random_commuting_code(request.n, r, request.q, rng);
        if (!code) {
            continue;
        }
        if (request.d <= 1) {
            out.code = std::move(code);
            return out;
        }
        DistanceResult d = distance_exact(*code, request.d - 1, request.distance);
        if (!d.is_exact() && !d.budget_exhausted) {
            out.code = std::move(code);
            out.distance = std::move(d);
            return out;
        }
    }
    return out;
}

}  // namespace ldiqec
