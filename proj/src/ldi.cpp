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

#include "ldiqec/ldi.hpp"

#include <cstdlib>
#include <stdexcept>

#include "ldiqec/errors.hpp"
#include "ldiqec/modp.hpp"

namespace ldiqec {

LdiCode LdiCode::certify(const Matrix& rows, std::size_t n, Int origin_q) {
    if (rows.rows() > 0 && rows.cols() != 2 * n) {
        throw LengthMismatchError(2 * n, rows.cols());
    }
    Matrix stored = rows.rows() == 0 ? Matrix(0, 2 * n) : rows;
    LdiReport report = verify_ldi(stored);
    if (!report.certified()) {
        const auto& v = report.violations.front();
        throw NotLdiError("generators " + std::to_string(v.first + 1) + " and " + std::to_string(v.second + 1) +
                          " have integer product " + std::to_string(v.value));
    }
    StabilizerCode::create(stored, n, origin_q);
    return LdiCode(std::move(stored), n, origin_q);
}

PhiVector LdiCode::generator(std::size_t i) const { return PhiVector::from_entries(rows_.row(i), Ring::integers()); }

LdiReport verify_ldi(const Matrix& rows) {
    LdiReport out;
    const std::size_t r = rows.rows();
    out.max_entry = rows.max_abs();
    out.gram = Matrix(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        PhiVector u = PhiVector::from_entries(rows.row(i), Ring::integers());
        for (std::size_t j = i + 1; j < r; ++j) {
            PhiVector v = PhiVector::from_entries(rows.row(j), Ring::integers());
            Int value = symplectic_product(u, v);
            out.gram(i, j) = value;
            out.gram(j, i) = -value;
            if (value != 0) {
                out.violations.push_back({i, j, value});
            }
        }
    }
    out.css = css_split(rows).has_value();
    return out;
}

namespace {

Matrix lift_matrix(const Matrix& m, Int q, Lift lift) {
    Matrix out = m;
    if (lift == Lift::Symmetric) {
        for (std::size_t r = 0; r < out.rows(); ++r) {
            for (auto& e : out.row(r)) {
                e = symmetric_residue(e, q);
            }
        }
    }
    return out;
}

Int row_product(const Matrix& m, std::size_t a, std::size_t b) {
    return symplectic_product(PhiVector::from_entries(m.row(a), Ring::integers()),
                              PhiVector::from_entries(m.row(b), Ring::integers()));
}

}  // namespace

LdiCode ldi_prescriptive(const StabilizerCode& code, Lift lift) {
    CanonicalResult canon = canonical_form(code);
    const Int q = code.q();
    Matrix lifted = lift_matrix(canon.code.matrix(), q, lift);
    const std::size_t n = code.n();
    const std::size_t r = lifted.rows();
    Matrix out = lifted;
    // Products are taken on the unmodified lift; the identity block makes
    // row i pick up L(j, i) - L(i, j) from the correction.
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            Int l = row_product(lifted, i, j);
            out(i, n + j) = checked_add(out(i, n + j), l);
        }
    }
    return LdiCode::certify(out, n, q);
}

LdiCode ldi_css_lift(const StabilizerCode& code) {
    auto css = is_css(code);
    if (!css) {
        throw std::invalid_argument("ldi_css_lift needs a CSS code");
    }
    const Int q = code.q();
    const std::size_t n = code.n();
    EchelonForm xform = row_reduce(css->xblock, q);
    std::vector<bool> is_pivot(n, false);
    for (auto c : xform.pivots) {
        is_pivot[c] = true;
    }
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c) {
        if (!is_pivot[c]) {
            free_cols.push_back(c);
        }
    }
    const std::size_t rx = xform.rank();
    Matrix xint = lift_matrix(xform.reduced, q, Lift::Symmetric);

    // The z-rows are fixed by their free coordinates; echelonize those.
    Matrix zfree(css->zblock.rows(), free_cols.size());
    for (std::size_t r = 0; r < css->zblock.rows(); ++r) {
        for (std::size_t f = 0; f < free_cols.size(); ++f) {
            zfree(r, f) = css->zblock(r, free_cols[f]);
        }
    }
    EchelonForm zform = row_reduce(zfree, q);
    if (zform.rank() != css->zblock.rows()) {
        throw std::logic_error("ldi_css_lift: z-block lost rank on its free columns");
    }

    Matrix out(0, 2 * n);
    std::vector<Int> row(2 * n);
    for (std::size_t i = 0; i < rx; ++i) {
        std::fill(row.begin(), row.end(), 0);
        for (std::size_t c = 0; c < n; ++c) {
            row[c] = xint(i, c);
        }
        out.append_row(row);
    }
    for (std::size_t r = 0; r < zform.rank(); ++r) {
        std::fill(row.begin(), row.end(), 0);
        for (std::size_t f = 0; f < free_cols.size(); ++f) {
            row[n + free_cols[f]] = symmetric_residue(zform.reduced(r, f), q);
        }
        for (std::size_t i = 0; i < rx; ++i) {
            Int acc = 0;
            for (auto c : free_cols) {
                acc = checked_add(acc, checked_mul(xint(i, c), row[n + c]));
            }
            row[n + xform.pivots[i]] = checked_sub(0, acc);
        }
        out.append_row(row);
    }
    return LdiCode::certify(out, n, q);
}

StabilizerCode reduce_mod(const LdiCode& ldi, Int p) {
    if (!is_prime(p)) {
        throw NotPrimeError(p);
    }
    return StabilizerCode::create(ldi.matrix().reduced(p), ldi.n(), p);
}

namespace {

class SignSearch {
  public:
    SignSearch(const StabilizerCode& code, std::uint64_t budget)
        : base_(code.matrix()), q_(code.q()), n_(code.n()), budget_(budget), work_(code.matrix()) {
        for (std::size_t r = 0; r < base_.rows(); ++r) {
            for (std::size_t c = 0; c < base_.cols(); ++c) {
                if (base_(r, c) != 0) {
                    vars_.push_back({r, c});
                }
            }
        }
    }

    /// Runs with |entry| <= bound. Returns true on a hit (left in work_).
    bool run(Int bound) {
        bound_ = bound;
        exhausted_budget_ = false;
        candidates_.assign(vars_.size(), {});
        for (std::size_t v = 0; v < vars_.size(); ++v) {
            Int res = base_(vars_[v].row, vars_[v].col);
            auto& list = candidates_[v];
            for (Int mag = 1; mag <= bound; ++mag) {
                if (mod_floor(mag, q_) == res) {
                    list.push_back(mag);
                }
                if (mod_floor(-mag, q_) == res) {
                    list.push_back(-mag);
                }
            }
        }
        partial_.assign(base_.rows(), std::vector<Int>(base_.rows(), 0));
        capacity_.assign(base_.rows(), std::vector<Int>(base_.rows(), 0));
        return descend(0);
    }

    bool budget_hit() const { return exhausted_budget_; }
    std::uint64_t nodes() const { return nodes_; }
    const Matrix& result() const { return work_; }

  private:
    struct Var {
        std::size_t row;
        std::size_t col;
    };

    std::size_t partner(std::size_t col) const { return col < n_ ? col + n_ : col - n_; }
    Int sign(std::size_t col) const { return col < n_ ? 1 : -1; }

    /// Partial products of `row` against each earlier row, and how much the
    /// row's unassigned entries can still change them.
    void start_row(std::size_t row, std::size_t first_var) {
        for (std::size_t j = 0; j < row; ++j) {
            partial_[row][j] = 0;
            Int cap = 0;
            for (std::size_t v = first_var; v < vars_.size() && vars_[v].row == row; ++v) {
                cap += bound_ * std::llabs(work_(j, partner(vars_[v].col)));
            }
            capacity_[row][j] = cap;
        }
    }

    bool descend(std::size_t v) {
        if (v == vars_.size()) {
            return true;
        }
        const auto [row, col] = vars_[v];
        if (v == 0 || vars_[v - 1].row != row) {
            start_row(row, v);
        }
        const std::size_t pc = partner(col);
        for (Int value : candidates_[v]) {
            if (++nodes_ > budget_) {
                exhausted_budget_ = true;
                return false;
            }
            work_(row, col) = value;
            auto& partial = partial_[row];
            auto& capacity = capacity_[row];
            bool feasible = true;
            for (std::size_t j = 0; j < row; ++j) {
                Int other = work_(j, pc);
                partial[j] += sign(col) * value * other;
                capacity[j] -= bound_ * std::llabs(other);
                if (std::llabs(partial[j]) > capacity[j]) {
                    feasible = false;
                }
            }
            if (feasible && descend(v + 1)) {
                return true;
            }
            for (std::size_t j = 0; j < row; ++j) {
                Int other = work_(j, pc);
                partial[j] -= sign(col) * value * other;
                capacity[j] += bound_ * std::llabs(other);
            }
            if (exhausted_budget_) {
                return false;
            }
        }
        work_(row, col) = base_(row, col);
        return false;
    }

    Matrix base_;
    Int q_;
    std::size_t n_;
    std::uint64_t budget_;
    Matrix work_;
    std::vector<Var> vars_;
    std::vector<std::vector<Int>> candidates_;
    std::vector<std::vector<Int>> partial_;
    std::vector<std::vector<Int>> capacity_;
    Int bound_ = 1;
    std::uint64_t nodes_ = 0;
    bool exhausted_budget_ = false;
};

}  // namespace

namespace {

Matrix reverse_rows(const Matrix& m) {
    Matrix out(0, m.cols());
    for (std::size_t r = m.rows(); r-- > 0;) {
        out.append_row(m.row(r));
    }
    return out;
}

}  // namespace

SignSearchResult ldi_sign_search(const StabilizerCode& code, const SignSearchOptions& options) {
    const Int q = code.q();
    const Int max_abs = options.max_abs > 0 ? std::min(options.max_abs, q - 1) : q - 1;
    // Rows are assigned last to first.
    StabilizerCode reversed = StabilizerCode::create(reverse_rows(code.matrix()), code.n(), q);
    SignSearch search(reversed, options.node_budget);
    SignSearchResult out;
    for (Int bound = 1; bound <= max_abs; ++bound) {
        if (search.run(bound)) {
            out.status = SignSearchStatus::Found;
            out.code = LdiCode::certify(reverse_rows(search.result()), code.n(), q);
            out.nodes = search.nodes();
            return out;
        }
        if (search.budget_hit()) {
            out.status = SignSearchStatus::BudgetExceeded;
            out.nodes = search.nodes();
            return out;
        }
    }
    out.status = SignSearchStatus::Unsatisfiable;
    out.nodes = search.nodes();
    return out;
}

}  // namespace ldiqec
