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

#include "ldiqec/hamming.hpp"

#include <numeric>
#include <stdexcept>

#include "ldiqec/errors.hpp"

namespace ldiqec {

Matrix parity_check(unsigned N) {
    if (N < 2 || N > 20) {
        throw std::invalid_argument("parity_check needs 2 <= N <= 20");
    }
    const std::size_t cols = (std::size_t{1} << N) - 1;
    Matrix h(N, cols);
    for (std::size_t j = 0; j < cols; ++j) {
        const std::size_t value = j + 1;
        for (unsigned r = 0; r < N; ++r) {
            h(r, j) = static_cast<Int>((value >> (N - 1 - r)) & 1u);
        }
    }
    return h;
}

namespace {

Matrix css_rows(const Matrix& xblock, const Matrix& zblock) {
    const std::size_t n = xblock.cols();
    Matrix rows(0, 2 * n);
    std::vector<Int> row(2 * n);
    for (std::size_t r = 0; r < xblock.rows(); ++r) {
        std::fill(row.begin(), row.end(), 0);
        std::copy(xblock.row(r).begin(), xblock.row(r).end(), row.begin());
        rows.append_row(row);
    }
    for (std::size_t r = 0; r < zblock.rows(); ++r) {
        std::fill(row.begin(), row.end(), 0);
        std::copy(zblock.row(r).begin(), zblock.row(r).end(), row.begin() + static_cast<std::ptrdiff_t>(n));
        rows.append_row(row);
    }
    return rows;
}

/// H_1 = [1]; H_{M+1} = [[1, 1...1, 0...0], [0, H_M, H_M]].
Matrix recursive_parity(unsigned N) {
    Matrix h{{1}};
    for (unsigned m = 1; m < N; ++m) {
        const std::size_t width = h.cols();
        Matrix next(m + 1, 2 * width + 1);
        next(0, 0) = 1;
        for (std::size_t c = 0; c < width; ++c) {
            next(0, 1 + c) = 1;
        }
        for (std::size_t r = 0; r < h.rows(); ++r) {
            for (std::size_t c = 0; c < width; ++c) {
                next(r + 1, 1 + c) = h(r, c);
                next(r + 1, 1 + width + c) = h(r, c);
            }
        }
        h = std::move(next);
    }
    return h;
}

Matrix z_half(const Matrix& rows, std::size_t from_row) {
    const std::size_t n = rows.cols() / 2;
    Matrix out(0, n);
    for (std::size_t r = from_row; r < rows.rows(); ++r) {
        out.append_row(rows.row(r).subspan(n));
    }
    return out;
}

bool rows_sum_to_zero(const Matrix& block) {
    for (std::size_t r = 0; r < block.rows(); ++r) {
        Int sum = 0;
        for (Int e : block.row(r)) {
            sum += e;
        }
        if (sum != 0) {
            return false;
        }
    }
    return true;
}

void note(std::vector<std::string>* log, std::string line) {
    if (log != nullptr) {
        log->push_back(std::move(line));
    }
}

/// Sign search over the mod-2 pattern of [X; Z] with equal halves. The X rows
/// go last so the search fixes them first and leaves them unsigned.
Matrix repair(const Matrix& candidate, std::size_t n, std::vector<std::string>* log, const std::string& stage) {
    const std::size_t half = candidate.rows() / 2;
    Matrix swapped(0, candidate.cols());
    for (std::size_t r = 0; r < candidate.rows(); ++r) {
        swapped.append_row(candidate.row((r + half) % candidate.rows()));
    }
    StabilizerCode pattern = StabilizerCode::create(swapped.reduced(2), n, 2);
    SignSearchOptions options;
    options.max_abs = 1;
    SignSearchResult found = ldi_sign_search(pattern, options);
    if (found.status != SignSearchStatus::Found) {
        throw NotLdiError(stage + ": sign repair failed (" +
                          (found.status == SignSearchStatus::BudgetExceeded ? "budget exceeded" : "unsatisfiable") +
                          ")");
    }
    note(log, stage + ": repaired by sign search (" + std::to_string(found.nodes) + " nodes)");
    Matrix out(0, candidate.cols());
    for (std::size_t r = 0; r < candidate.rows(); ++r) {
        out.append_row(found.code->matrix().row((r + half) % candidate.rows()));
    }
    return out;
}

/// Alternating (-1 1)^reps (-1); empty when it does not fill `slot` entries.
std::optional<std::vector<Int>> alternating_pattern(std::size_t reps, std::size_t slot) {
    if (2 * reps + 1 != slot) {
        return std::nullopt;
    }
    std::vector<Int> v(slot);
    for (std::size_t i = 0; i < slot; ++i) {
        v[i] = (i % 2 == 0) ? -1 : 1;
    }
    return v;
}

}  // namespace

StabilizerCode hamming_css(unsigned N) {
    if (N < 3) {
        throw std::invalid_argument("the Hamming family starts at N = 3");
    }
    Matrix h = parity_check(N);
    return StabilizerCode::create(css_rows(h, h), h.cols(), 2);
}

LdiCode hamming_ldi(unsigned N, std::vector<std::string>* log) {
    if (N < 3) {
        throw std::invalid_argument("the Hamming family starts at N = 3");
    }
    // Base case on the recursive column order.
    Matrix h = recursive_parity(3);
    Matrix rows = repair(css_rows(h, h), h.cols(), nullptr, "N=3");
    for (std::size_t r = 0; r < h.rows(); ++r) {
        for (std::size_t c = 0; c < h.cols(); ++c) {
            if (rows(r, c) != h(r, c)) {
                throw std::logic_error("hamming_ldi: base case signed the X block");
            }
        }
    }
    Matrix zblock = z_half(rows, 3);
    note(log, "N=3: base Z block from sign search");
    if (!rows_sum_to_zero(zblock)) {
        note(log, "N=3: base Z block rows do not sum to zero; the inductive step will need repair");
    }

    for (unsigned m = 3; m < N; ++m) {
        const std::size_t slot = (std::size_t{1} << m) - 1;
        const std::string stage = "N=" + std::to_string(m + 1);
        Matrix next_h = recursive_parity(m + 1);
        const std::size_t n = next_h.cols();

        // Repetition counts to try for the alternating first Z row.
        const std::size_t half = std::size_t{1} << (m - 1);
        std::optional<Matrix> accepted;
        for (std::size_t reps : {half - 2, half - 1}) {
            auto v = alternating_pattern(reps, slot);
            if (!v) {
                note(log, stage + ": pattern (-1 1)^" + std::to_string(reps) + " (-1) has length " +
                              std::to_string(2 * reps + 1) + ", slot needs " + std::to_string(slot) + "; rejected");
                continue;
            }
            Matrix next_z(m + 1, n);
            next_z(0, 0) = 1;
            for (std::size_t c = 0; c < slot; ++c) {
                next_z(0, 1 + c) = (*v)[c];
            }
            for (std::size_t r = 0; r < zblock.rows(); ++r) {
                for (std::size_t c = 0; c < slot; ++c) {
                    next_z(r + 1, 1 + c) = zblock(r, c);
                    next_z(r + 1, 1 + slot + c) = zblock(r, c);
                }
            }
            Matrix candidate = css_rows(next_h, next_z);
            LdiReport report = verify_ldi(candidate);
            if (report.certified()) {
                note(log, stage + ": pattern (-1 1)^" + std::to_string(reps) + " (-1) certified");
                accepted = std::move(candidate);
                break;
            }
            note(log, stage + ": pattern (-1 1)^" + std::to_string(reps) + " (-1) has " +
                          std::to_string(report.violations.size()) + " violations");
        }
        if (!accepted) {
            Matrix pattern = css_rows(next_h, next_h);
            accepted = repair(pattern, n, log, stage);
        }
        zblock = z_half(*accepted, m + 1);
    }

    // Reorder registers from the recursive layout to ascending column values.
    Matrix rec = recursive_parity(N);
    const std::size_t n = rec.cols();
    Matrix full = css_rows(rec, zblock);
    std::vector<std::size_t> target(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t value = 0;
        for (unsigned r = 0; r < N; ++r) {
            value = (value << 1) | static_cast<std::size_t>(rec(r, c));
        }
        target[c] = value - 1;
    }
    std::size_t swaps = 0;
    for (std::size_t pos = 0; pos < n; ++pos) {
        while (target[pos] != pos) {
            std::size_t dest = target[pos];
            apply_move_in_place(full, RegisterSwap{pos, dest}, std::nullopt);
            std::swap(target[pos], target[dest]);
            ++swaps;
        }
    }
    note(log, "N=" + std::to_string(N) + ": " + std::to_string(swaps) + " register swaps to ascending column order");

    LdiCode out = LdiCode::certify(full, n, 2);
    if (!(out.matrix().reduced(2) == hamming_css(N).matrix())) {
        throw std::logic_error("hamming_ldi: reduction mod 2 differs from hamming_css");
    }
    if (out.max_entry() != 1) {
        throw NotLdiError("hamming_ldi: B = " + std::to_string(out.max_entry()));
    }
    return out;
}

HammingMember hamming_member(unsigned N, bool with_ldi) {
    HammingMember member{N, parity_check(N), hamming_css(N), std::nullopt, {}};
    if (with_ldi) {
        member.ldi = hamming_ldi(N, &member.log);
    }
    return member;
}

bool FamilyCertificate::all_distance_three() const {
    for (const auto& row : rows) {
        DistanceResult d = row.distance.overall();
        if (!d.is_exact() || d.value != 3) {
            return false;
        }
    }
    return true;
}

FamilyCertificate certify_family_member(unsigned N, std::span<const Int> primes, std::size_t wmax,
                                        const DistanceOptions& options) {
    LdiCode ldi = hamming_ldi(N);
    FamilyCertificate out;
    out.N = N;
    out.max_entry = ldi.max_entry();
    out.p_css = p_star_css(out.max_entry, 3);
    for (Int p : primes) {
        StabilizerCode code = reduce_mod(ldi, p);
        auto css = is_css(code);
        if (!css) {
            throw std::logic_error("certify_family_member: reduction lost CSS structure");
        }
        out.rows.push_back({p, css_distance(*css, p, wmax, options)});
    }
    return out;
}

}  // namespace ldiqec
