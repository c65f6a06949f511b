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

#include "ldiqec/stabilizer.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ldiqec/errors.hpp"
#include "ldiqec/modp.hpp"

namespace ldiqec {

namespace detail {
struct CodeAccess {
    static StabilizerCode make(Matrix rows, std::size_t n, Int q) { return StabilizerCode(std::move(rows), n, q); }
    static Matrix& rows(StabilizerCode& code) { return code.rows_; }
};
}  // namespace detail

using detail::CodeAccess;

StabilizerCode StabilizerCode::create(const Matrix& rows, std::size_t n, Int q) {
    if (!is_prime(q)) {
        throw NotPrimeError(q);
    }
    if (rows.cols() != 2 * n && rows.rows() > 0) {
        throw LengthMismatchError(2 * n, rows.cols());
    }
    Matrix reduced = rows.rows() == 0 ? Matrix(0, 2 * n) : rows.reduced(q);
    for (std::size_t i = 0; i < reduced.rows(); ++i) {
        PhiVector u = PhiVector::from_entries(reduced.row(i), Ring::integers());
        for (std::size_t j = i + 1; j < reduced.rows(); ++j) {
            PhiVector v = PhiVector::from_entries(reduced.row(j), Ring::integers());
            Int value = mod_floor(symplectic_product(u, v), q);
            if (value != 0) {
                throw NonCommutingError(i, j, value);
            }
        }
    }
    std::size_t rank = rank_mod(reduced, q);
    if (rank != reduced.rows()) {
        throw DependentRowsError(rank, reduced.rows());
    }
    return StabilizerCode(std::move(reduced), n, q);
}

StabilizerCode StabilizerCode::create(const std::vector<PhiVector>& rows, std::size_t n, Int q) {
    Matrix m(0, 2 * n);
    for (const auto& r : rows) {
        if (r.n() != n) {
            throw LengthMismatchError(n, r.n());
        }
        m.append_row(r.entries());
    }
    return create(m, n, q);
}

PhiVector StabilizerCode::generator(std::size_t i) const {
    return PhiVector::from_entries(rows_.row(i), Ring::mod(q_));
}

std::vector<PhiVector> StabilizerCode::generators() const {
    std::vector<PhiVector> out;
    out.reserve(rows_.rows());
    for (std::size_t i = 0; i < rows_.rows(); ++i) {
        out.push_back(generator(i));
    }
    return out;
}

std::string to_string(const Move& move) {
    std::ostringstream out;
    std::visit(
        [&](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, RowSwap>) {
                out << "row_swap(" << m.a << "," << m.b << ")";
            } else if constexpr (std::is_same_v<T, RegisterSwap>) {
                out << "register_swap(" << m.a << "," << m.b << ")";
            } else if constexpr (std::is_same_v<T, RowScale>) {
                out << "row_scale(" << m.row << "," << m.factor << ")";
            } else if constexpr (std::is_same_v<T, RowAdd>) {
                out << "row_add(" << m.src << "," << m.dst << ")";
            } else {
                out << "dft(" << m.reg << ")";
            }
        },
        move);
    return out.str();
}

namespace {

void check_index(std::size_t index, std::size_t bound, const char* what) {
    if (index >= bound) {
        throw IndexError(std::string(what) + " index " + std::to_string(index) + " out of range (size " +
                         std::to_string(bound) + ")");
    }
}

Int reduce_entry(Int v, std::optional<Int> modulus) { return modulus ? mod_floor(v, *modulus) : v; }

}  // namespace

void apply_move_in_place(Matrix& rows, const Move& move, std::optional<Int> modulus) {
    const std::size_t n = rows.cols() / 2;
    std::visit(
        [&](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, RowSwap>) {
                check_index(m.a, rows.rows(), "row");
                check_index(m.b, rows.rows(), "row");
                rows.swap_rows(m.a, m.b);
            } else if constexpr (std::is_same_v<T, RegisterSwap>) {
                check_index(m.a, n, "register");
                check_index(m.b, n, "register");
                rows.swap_cols(m.a, m.b);
                rows.swap_cols(n + m.a, n + m.b);
            } else if constexpr (std::is_same_v<T, RowScale>) {
                check_index(m.row, rows.rows(), "row");
                if (reduce_entry(m.factor, modulus) == 0) {
                    throw IndexError("row scale factor must be nonzero");
                }
                for (auto& e : rows.row(m.row)) {
                    e = reduce_entry(checked_mul(e, m.factor), modulus);
                }
            } else if constexpr (std::is_same_v<T, RowAdd>) {
                check_index(m.src, rows.rows(), "row");
                check_index(m.dst, rows.rows(), "row");
                if (m.src == m.dst) {
                    throw IndexError("row add needs distinct rows");
                }
                auto src = rows.row(m.src);
                auto dst = rows.row(m.dst);
                for (std::size_t c = 0; c < rows.cols(); ++c) {
                    dst[c] = reduce_entry(checked_add(dst[c], src[c]), modulus);
                }
            } else {
                check_index(m.reg, n, "register");
                for (std::size_t r = 0; r < rows.rows(); ++r) {
                    Int x = rows(r, m.reg);
                    Int z = rows(r, n + m.reg);
                    rows(r, m.reg) = reduce_entry(checked_sub(0, z), modulus);
                    rows(r, n + m.reg) = x;
                }
            }
        },
        move);
}

StabilizerCode apply_move(const StabilizerCode& code, const Move& move) {
    if (const auto* scale = std::get_if<RowScale>(&move)) {
        if (scale->factor < 1 || scale->factor >= code.q()) {
            throw IndexError("row scale factor must lie in 1..q-1");
        }
    }
    Matrix rows = code.matrix();
    apply_move_in_place(rows, move, code.q());
    return CodeAccess::make(std::move(rows), code.n(), code.q());
}

namespace {

/// Applies and records moves on a working matrix mod q.
class MoveLog {
  public:
    MoveLog(Matrix rows, Int q) : rows_(std::move(rows)), q_(q) {
        order_.resize(rows_.cols() / 2);
        std::iota(order_.begin(), order_.end(), 0);
    }

    void apply(const Move& move) {
        apply_move_in_place(rows_, move, q_);
        if (const auto* swap = std::get_if<RegisterSwap>(&move)) {
            std::swap(order_[swap->a], order_[swap->b]);
        }
        moves_.push_back(move);
    }

    /// rows_[dst] -= factor * rows_[src] through repeated RowAdd moves.
    void eliminate(std::size_t src, std::size_t dst, Int factor) {
        Int times = mod_floor(-factor, q_);
        for (Int t = 0; t < times; ++t) {
            apply(RowAdd{src, dst});
        }
    }

    /// Scales `row` so that entry `col` becomes 1, then clears column `col`
    /// from every row listed in `targets`.
    void pivot(std::size_t row, std::size_t col, std::span<const std::size_t> targets) {
        Int lead = rows_(row, col);
        if (lead != 1) {
            apply(RowScale{row, inverse_mod(lead, q_)});
        }
        for (std::size_t r : targets) {
            if (r != row && rows_(r, col) != 0) {
                eliminate(row, r, rows_(r, col));
            }
        }
    }

    const Matrix& rows() const { return rows_; }
    std::vector<Move> take_moves() { return std::move(moves_); }
    const std::vector<std::size_t>& register_order() const { return order_; }

  private:
    Matrix rows_;
    Int q_;
    std::vector<Move> moves_;
    std::vector<std::size_t> order_;
};

std::vector<std::size_t> iota_vec(std::size_t count, std::size_t start = 0) {
    std::vector<std::size_t> out(count);
    std::iota(out.begin(), out.end(), start);
    return out;
}

}  // namespace

CanonicalResult canonical_form(const StabilizerCode& code) {
    const std::size_t n = code.n();
    const std::size_t r = code.num_generators();
    MoveLog log(code.matrix(), code.q());
    const auto all_rows = iota_vec(r);

    for (std::size_t i = 0; i < r; ++i) {
        // Leftmost x column >= i with a nonzero entry in some row >= i.
        std::optional<std::pair<std::size_t, std::size_t>> found;
        for (std::size_t c = i; c < n && !found; ++c) {
            for (std::size_t row = i; row < r; ++row) {
                if (log.rows()(row, c) != 0) {
                    found = {row, c};
                    break;
                }
            }
        }
        if (!found) {
            // No x pivot left: bring a z entry over with a Dft.
            for (std::size_t c = i; c < n && !found; ++c) {
                for (std::size_t row = i; row < r; ++row) {
                    if (log.rows()(row, n + c) != 0) {
                        found = {row, c};
                        break;
                    }
                }
            }
            if (!found) {
                throw std::logic_error("canonical_form: no pivot for a validated code");
            }
            log.apply(Dft{found->second});
        }
        auto [row, col] = *found;
        if (col != i) {
            log.apply(RegisterSwap{col, i});
        }
        if (row != i) {
            log.apply(RowSwap{row, i});
        }
        log.pivot(i, i, all_rows);
    }
    CanonicalResult out{CodeAccess::make(log.rows(), n, code.q()), {}, log.register_order()};
    out.moves = log.take_moves();
    return out;
}

std::optional<CssStructure> css_split(const Matrix& rows) {
    const std::size_t n = rows.cols() / 2;
    CssStructure out;
    out.xblock = Matrix(0, n);
    out.zblock = Matrix(0, n);
    out.register_order = iota_vec(n);
    for (std::size_t i = 0; i < rows.rows(); ++i) {
        auto row = rows.row(i);
        bool x_zero = std::all_of(row.begin(), row.begin() + n, [](Int e) { return e == 0; });
        bool z_zero = std::all_of(row.begin() + n, row.end(), [](Int e) { return e == 0; });
        if (x_zero == z_zero) {
            return std::nullopt;
        }
        if (z_zero) {
            out.xblock.append_row(row.first(n));
            out.x_rows.push_back(i);
        } else {
            out.zblock.append_row(row.subspan(n));
            out.z_rows.push_back(i);
        }
    }
    return out;
}

std::optional<CssStructure> is_css(const StabilizerCode& code) { return css_split(code.matrix()); }

namespace {

/// rank(x-half) + rank(z-half) after applying Dft to the registers in `dft`.
/// Equals the generator count exactly when a CSS presentation exists.
std::size_t split_rank(const Matrix& rows, const std::vector<bool>& dft, Int q) {
    const std::size_t n = rows.cols() / 2;
    Matrix xs(rows.rows(), n);
    Matrix zs(rows.rows(), n);
    for (std::size_t r = 0; r < rows.rows(); ++r) {
        for (std::size_t t = 0; t < n; ++t) {
            xs(r, t) = dft[t] ? rows(r, n + t) : rows(r, t);
            zs(r, t) = dft[t] ? rows(r, t) : rows(r, n + t);
        }
    }
    return rank_mod(xs, q) + rank_mod(zs, q);
}

CssConversion convert_with_dfts(const StabilizerCode& code, const std::vector<bool>& dft) {
    const std::size_t n = code.n();
    const std::size_t r = code.num_generators();
    const Int q = code.q();
    MoveLog log(code.matrix(), q);
    std::vector<std::size_t> dft_regs;
    for (std::size_t t = 0; t < n; ++t) {
        if (dft[t]) {
            log.apply(Dft{t});
            dft_regs.push_back(t);
        }
    }
    // Echelon on the x-half: rows [0, rx) get x pivots, the rest become pure Z.
    std::size_t lead = 0;
    const auto all_rows = iota_vec(r);
    for (std::size_t c = 0; c < n && lead < r; ++c) {
        std::size_t pivot = lead;
        while (pivot < r && log.rows()(pivot, c) == 0) {
            ++pivot;
        }
        if (pivot == r) {
            continue;
        }
        if (pivot != lead) {
            log.apply(RowSwap{pivot, lead});
        }
        log.pivot(lead, c, all_rows);
        ++lead;
    }
    const std::size_t rx = lead;
    // Echelon on the z-half of the pure-Z rows.
    std::vector<std::pair<std::size_t, std::size_t>> z_pivots;
    const auto z_rows = iota_vec(r - rx, rx);
    for (std::size_t c = 0; c < n && lead < r; ++c) {
        std::size_t pivot = lead;
        while (pivot < r && log.rows()(pivot, n + c) == 0) {
            ++pivot;
        }
        if (pivot == r) {
            continue;
        }
        if (pivot != lead) {
            log.apply(RowSwap{pivot, lead});
        }
        log.pivot(lead, n + c, z_rows);
        z_pivots.emplace_back(lead, n + c);
        ++lead;
    }
    // Strip z content from the x rows using the pure-Z rows.
    for (std::size_t i = 0; i < rx; ++i) {
        for (auto [zr, zc] : z_pivots) {
            Int v = log.rows()(i, zc);
            if (v != 0) {
                log.eliminate(zr, i, v);
            }
        }
    }
    CssConversion out{CodeAccess::make(log.rows(), n, q), log.take_moves(), std::move(dft_regs)};
    return out;
}

}  // namespace

std::optional<CssConversion> to_css(const StabilizerCode& code) {
    if (is_css(code)) {
        return CssConversion{code, {}, {}};
    }
    const std::size_t n = code.n();
    const std::size_t r = code.num_generators();
    const Matrix& rows = code.matrix();
    std::vector<bool> dft(n, false);
    if (n <= 20) {
        for (std::size_t size = 0; size <= n; ++size) {
            // Lexicographic walk over `size`-subsets.
            std::vector<std::size_t> pick = iota_vec(size);
            while (true) {
                std::fill(dft.begin(), dft.end(), false);
                for (auto t : pick) {
                    dft[t] = true;
                }
                if (split_rank(rows, dft, code.q()) == r) {
                    auto out = convert_with_dfts(code, dft);
                    if (is_css(out.code)) {
                        return out;
                    }
                }
                std::size_t i = size;
                while (i > 0 && pick[i - 1] == n - size + i - 1) {
                    --i;
                }
                if (i == 0) {
                    break;
                }
                ++pick[i - 1];
                for (std::size_t j = i; j < size; ++j) {
                    pick[j] = pick[j - 1] + 1;
                }
            }
        }
        return std::nullopt;
    }
    // Greedy: toggle single registers while the split rank drops.
    std::size_t best = split_rank(rows, dft, code.q());
    bool improved = true;
    while (best > r && improved) {
        improved = false;
        for (std::size_t t = 0; t < n; ++t) {
            dft[t] = !dft[t];
            std::size_t candidate = split_rank(rows, dft, code.q());
            if (candidate < best) {
                best = candidate;
                improved = true;
            } else {
                dft[t] = !dft[t];
            }
        }
    }
    if (best != r) {
        return std::nullopt;
    }
    auto out = convert_with_dfts(code, dft);
    if (!is_css(out.code)) {
        return std::nullopt;
    }
    return out;
}

bool Syndrome::detected() const {
    return std::any_of(reduced.begin(), reduced.end(), [](Int v) { return v != 0; });
}

Syndrome syndrome(const StabilizerCode& code, const PhiVector& e) {
    if (e.n() != code.n()) {
        throw LengthMismatchError(code.n(), e.n());
    }
    Syndrome out;
    for (std::size_t i = 0; i < code.num_generators(); ++i) {
        PhiVector s = code.generator(i).lifted(Lift::Symmetric);
        Int value = symplectic_product(s, e);
        out.integer.push_back(value);
        out.reduced.push_back(mod_floor(value, code.q()));
    }
    return out;
}

}  // namespace ldiqec
