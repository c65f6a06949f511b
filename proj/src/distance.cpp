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

#include "ldiqec/distance.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "ldiqec/errors.hpp"
#include "ldiqec/modp.hpp"

namespace ldiqec {

std::string DistanceResult::str() const {
    return (kind == DistanceKind::Exact ? "" : ">=") + std::to_string(value);
}

namespace {

/// w-subsets of {0..n-1} in colexicographic order.
class Colex {
  public:
    Colex(std::size_t n, std::size_t w) : n_(n), c_(w) {
        for (std::size_t i = 0; i < w; ++i) {
            c_[i] = i;
        }
        valid_ = w <= n;
    }
    bool valid() const { return valid_; }
    const std::vector<std::size_t>& current() const { return c_; }
    void next() {
        const std::size_t w = c_.size();
        std::size_t i = 0;
        while (i < w) {
            std::size_t limit = (i + 1 < w) ? c_[i + 1] : n_;
            if (c_[i] + 1 < limit) {
                ++c_[i];
                for (std::size_t j = 0; j < i; ++j) {
                    c_[j] = j;
                }
                return;
            }
            ++i;
        }
        valid_ = false;
    }

  private:
    std::size_t n_;
    std::vector<std::size_t> c_;
    bool valid_ = true;
};

/// Register pairs (a, b) != (0, 0) in order of a*q + b.
std::vector<std::pair<Int, Int>> register_values(Int q, bool normalized) {
    std::vector<std::pair<Int, Int>> out;
    for (Int a = 0; a < q; ++a) {
        for (Int b = 0; b < q; ++b) {
            if (a == 0 && b == 0) {
                continue;
            }
            Int lead = a != 0 ? a : b;
            if (!normalized || lead == 1) {
                out.emplace_back(a, b);
            }
        }
    }
    return out;
}

struct LevelOutcome {
    std::optional<std::vector<Int>> witness;
    bool saw_group_element = false;
};

class ExactSearch {
  public:
    explicit ExactSearch(const StabilizerCode& code)
        : code_(code), q_(code.q()), n_(code.n()), echelon_(row_reduce(code.matrix(), code.q())) {
        first_values_ = register_values(q_, true);
        other_values_ = register_values(q_, false);
    }

    BigInt level_size(std::size_t w) const {
        return binomial(static_cast<unsigned>(n_), static_cast<unsigned>(w)) * first_values_.size() *
               pow_big(BigInt(other_values_.size()), static_cast<unsigned>(w - 1));
    }

    LevelOutcome scan_level(std::size_t w, unsigned threads) const {
        threads = std::max(1u, threads);
        std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
        std::atomic<bool> saw_group{false};
        std::vector<LevelOutcome> per_thread(threads);
        std::vector<std::uint64_t> per_thread_rank(threads, std::numeric_limits<std::uint64_t>::max());
        auto worker = [&](unsigned t) {
            Colex supports(n_, w);
            for (std::uint64_t index = 0; supports.valid(); ++index, supports.next()) {
                if (index % threads != t) {
                    continue;
                }
                if (index > best.load()) {
                    return;
                }
                bool group = false;
                auto hit = scan_support(supports.current(), group);
                if (group) {
                    saw_group = true;
                }
                if (hit) {
                    per_thread[t].witness = std::move(hit);
                    per_thread_rank[t] = index;
                    std::uint64_t cur = best.load();
                    while (index < cur && !best.compare_exchange_weak(cur, index)) {
                    }
                    return;
                }
            }
        };
        if (threads == 1) {
            worker(0);
        } else {
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < threads; ++t) {
                pool.emplace_back(worker, t);
            }
            for (auto& th : pool) {
                th.join();
            }
        }
        LevelOutcome out;
        std::uint64_t best_rank = std::numeric_limits<std::uint64_t>::max();
        for (unsigned t = 0; t < threads; ++t) {
            if (per_thread[t].witness && per_thread_rank[t] < best_rank) {
                best_rank = per_thread_rank[t];
                out.witness = per_thread[t].witness;
            }
        }
        out.saw_group_element = saw_group.load();
        return out;
    }

  private:
    /// Odometer over the support's values; last register varies fastest.
    std::optional<std::vector<Int>> scan_support(const std::vector<std::size_t>& support, bool& saw_group) const {
        const std::size_t w = support.size();
        const Matrix& g = code_.matrix();
        std::vector<std::size_t> digit(w, 0);
        std::vector<Int> e(2 * n_, 0);
        while (true) {
            for (std::size_t i = 0; i < w; ++i) {
                const auto& [a, b] = i == 0 ? first_values_[digit[i]] : other_values_[digit[i]];
                e[support[i]] = a;
                e[n_ + support[i]] = b;
            }
            bool commutes = true;
            for (std::size_t r = 0; r < g.rows() && commutes; ++r) {
                Int s = 0;
                for (auto t : support) {
                    s += g(r, t) * e[n_ + t] - g(r, n_ + t) * e[t];
                }
                commutes = mod_floor(s, q_) == 0;
            }
            if (commutes) {
                if (!echelon_.contains(e)) {
                    return e;
                }
                saw_group = true;
            }
            std::size_t pos = w;
            while (pos > 0) {
                --pos;
                std::size_t limit = pos == 0 ? first_values_.size() : other_values_.size();
                if (++digit[pos] < limit) {
                    break;
                }
                digit[pos] = 0;
                if (pos == 0) {
                    return std::nullopt;
                }
            }
        }
    }

    const StabilizerCode& code_;
    Int q_;
    std::size_t n_;
    EchelonForm echelon_;
    std::vector<std::pair<Int, Int>> first_values_;
    std::vector<std::pair<Int, Int>> other_values_;
};

}  // namespace

DistanceResult distance_exact(const StabilizerCode& code, std::size_t wmax, const DistanceOptions& options) {
    if (wmax < 1) {
        throw std::invalid_argument("wmax must be at least 1");
    }
    DistanceResult out;
    out.prime = code.q();
    ExactSearch search(code);
    BigInt spent = 0;
    bool saw_group = false;
    const std::size_t top = std::min(wmax, code.n());
    for (std::size_t w = 1; w <= top; ++w) {
        BigInt cost = search.level_size(w);
        if (spent + cost > options.candidate_budget) {
            out.kind = DistanceKind::AtLeast;
            out.value = w;
            out.budget_exhausted = true;
            return out;
        }
        spent += cost;
        LevelOutcome level = search.scan_level(w, options.threads);
        if (level.witness) {
            out.kind = DistanceKind::Exact;
            out.value = w;
            out.witness = PhiVector::from_entries(*level.witness, Ring::mod(code.q()));
            out.degenerate = saw_group;
            return out;
        }
        saw_group = saw_group || level.saw_group_element;
    }
    out.kind = DistanceKind::AtLeast;
    out.value = wmax + 1;
    return out;
}

DistanceResult combine_min(const DistanceResult& a, const DistanceResult& b) {
    if (a.is_exact() && b.is_exact()) {
        return a.value <= b.value ? a : b;
    }
    if (a.is_exact()) {
        return a.value < b.value ? a : b;
    }
    if (b.is_exact()) {
        return b.value < a.value ? b : a;
    }
    return a.value <= b.value ? a : b;
}

DistanceResult CssDistance::overall() const { return combine_min(dx, dz); }

namespace {

/// Pure errors e (length n) with checks * e = 0 mod p and e outside rowspace(other).
DistanceResult css_side(const Matrix& checks, const Matrix& other, Int p, std::size_t wmax, bool x_side,
                        std::uint64_t budget) {
    const std::size_t n = checks.cols();
    DistanceResult out;
    out.prime = p;
    EchelonForm span = row_reduce(other.rows() == 0 ? Matrix(0, n) : other, p);
    BigInt spent = 0;
    const std::size_t top = std::min(wmax, n);
    for (std::size_t w = 1; w <= top; ++w) {
        BigInt cost = binomial(static_cast<unsigned>(n), static_cast<unsigned>(w));
        if (spent + cost > budget) {
            out.kind = DistanceKind::AtLeast;
            out.value = w;
            out.budget_exhausted = true;
            return out;
        }
        spent += cost;
        for (Colex supports(n, w); supports.valid(); supports.next()) {
            const auto& s = supports.current();
            Matrix sub(checks.rows(), w);
            for (std::size_t r = 0; r < checks.rows(); ++r) {
                for (std::size_t i = 0; i < w; ++i) {
                    sub(r, i) = checks(r, s[i]);
                }
            }
            Matrix kernel = kernel_mod(sub, p);
            const std::size_t dim = kernel.rows();
            if (dim == 0) {
                continue;
            }
            // Coefficients over the kernel basis, first nonzero fixed to 1.
            std::vector<Int> coeff(dim, 0);
            std::vector<Int> local(w);
            std::vector<Int> full(n, 0);
            for (std::size_t lead = 0; lead < dim; ++lead) {
                std::fill(coeff.begin(), coeff.end(), 0);
                coeff[lead] = 1;
                while (true) {
                    bool full_support = true;
                    for (std::size_t i = 0; i < w; ++i) {
                        Int acc = 0;
                        for (std::size_t k = lead; k < dim; ++k) {
                            acc += coeff[k] * kernel(k, i);
                        }
                        local[i] = mod_floor(acc, p);
                        full_support = full_support && local[i] != 0;
                    }
                    if (full_support) {
                        std::fill(full.begin(), full.end(), 0);
                        for (std::size_t i = 0; i < w; ++i) {
                            full[s[i]] = local[i];
                        }
                        if (!span.contains(full)) {
                            std::vector<Int> entries(2 * n, 0);
                            std::copy(full.begin(), full.end(), entries.begin() + (x_side ? 0 : n));
                            out.kind = DistanceKind::Exact;
                            out.value = w;
                            out.witness = PhiVector::from_entries(entries, Ring::mod(p));
                            return out;
                        }
                    }
                    std::size_t pos = dim;
                    bool done = true;
                    while (pos > lead + 1) {
                        --pos;
                        if (++coeff[pos] < p) {
                            done = false;
                            break;
                        }
                        coeff[pos] = 0;
                    }
                    if (done) {
                        break;
                    }
                }
            }
        }
    }
    out.kind = DistanceKind::AtLeast;
    out.value = wmax + 1;
    return out;
}

}  // namespace

CssDistance css_distance(const CssStructure& css, Int p, std::size_t wmax, const DistanceOptions& options) {
    if (!is_prime(p)) {
        throw NotPrimeError(p);
    }
    if (wmax < 1) {
        throw std::invalid_argument("wmax must be at least 1");
    }
    const std::size_t n = css.n();
    Matrix xblock = css.xblock.rows() == 0 ? Matrix(0, n) : css.xblock;
    Matrix zblock = css.zblock.rows() == 0 ? Matrix(0, n) : css.zblock;
    CssDistance out;
    out.dx = css_side(zblock, xblock, p, wmax, true, options.candidate_budget);
    out.dz = css_side(xblock, zblock, p, wmax, false, options.candidate_budget);
    return out;
}

std::string ErrorClass::str() const {
    switch (kind) {
        case Kind::Detectable:
            return "detectable";
        case Kind::InGroup:
            return "in-group";
        case Kind::Unavoidable:
            return "unavoidable";
        case Kind::Artifact:
            return "artifact(generator " + std::to_string(index + 1) + ", syndrome " + std::to_string(value) + ")";
    }
    return "unknown";
}

ErrorClass classify_error(const Matrix& rows, Int p, const PhiVector& e) {
    if (!is_prime(p)) {
        throw NotPrimeError(p);
    }
    const std::size_t n = rows.cols() / 2;
    if (e.n() != n) {
        throw LengthMismatchError(n, e.n());
    }
    std::vector<Int> integer;
    for (std::size_t i = 0; i < rows.rows(); ++i) {
        integer.push_back(symplectic_product(PhiVector::from_entries(rows.row(i), Ring::integers()), e));
    }
    ErrorClass out;
    for (Int s : integer) {
        if (mod_floor(s, p) != 0) {
            out.kind = ErrorClass::Kind::Detectable;
            return out;
        }
    }
    EchelonForm group = row_reduce(rows, p);
    if (group.contains(e.entries())) {
        out.kind = ErrorClass::Kind::InGroup;
        return out;
    }
    for (std::size_t i = 0; i < integer.size(); ++i) {
        if (integer[i] != 0) {
            out.kind = ErrorClass::Kind::Artifact;
            out.index = i;
            out.value = integer[i];
            return out;
        }
    }
    out.kind = ErrorClass::Kind::Unavoidable;
    return out;
}

ErrorClass classify_error(const LdiCode& ldi, Int p, const PhiVector& e) { return classify_error(ldi.matrix(), p, e); }

BigInt determinant(const Matrix& square) {
    const std::size_t m = square.rows();
    if (square.cols() != m) {
        throw LengthMismatchError(m, square.cols());
    }
    if (m == 0) {
        return 1;
    }
    std::vector<BigInt> a(m * m);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < m; ++c) {
            a[r * m + c] = square(r, c);
        }
    }
    BigInt sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < m; ++k) {
        if (a[k * m + k] == 0) {
            std::size_t swap = k + 1;
            while (swap < m && a[swap * m + k] == 0) {
                ++swap;
            }
            if (swap == m) {
                return 0;
            }
            for (std::size_t c = 0; c < m; ++c) {
                std::swap(a[k * m + c], a[swap * m + c]);
            }
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < m; ++i) {
            for (std::size_t j = k + 1; j < m; ++j) {
                a[i * m + j] = (a[i * m + j] * a[k * m + k] - a[i * m + k] * a[k * m + j]) / prev;
            }
        }
        prev = a[k * m + k];
    }
    return sign * a[(m - 1) * m + (m - 1)];
}

MinorScanReport minor_scan(const Matrix& block, std::size_t w, Int p, std::uint64_t budget) {
    if (!is_prime(p)) {
        throw NotPrimeError(p);
    }
    if (w < 1 || w > std::min(block.rows(), block.cols())) {
        throw std::invalid_argument("minor size must lie in 1..min(rows, cols)");
    }
    BigInt total = binomial(static_cast<unsigned>(block.rows()), static_cast<unsigned>(w)) *
                   binomial(static_cast<unsigned>(block.cols()), static_cast<unsigned>(w));
    if (total > budget) {
        throw BudgetExceededError("minor scan needs " + total.str() + " determinants, budget " +
                                  std::to_string(budget));
    }
    MinorScanReport out;
    out.block_rows = block.rows();
    out.block_cols = block.cols();
    out.w = w;
    BigInt b = block.max_abs();
    BigInt squared = pow_big(b, static_cast<unsigned>(2 * w)) *
                     pow_big(BigInt(static_cast<unsigned>(w)), static_cast<unsigned>(w));
    BigInt root = isqrt(squared);
    out.hadamard_bound = root * root == squared ? root : root + 1;
    Matrix minor(w, w);
    for (Colex rows(block.rows(), w); rows.valid(); rows.next()) {
        for (Colex cols(block.cols(), w); cols.valid(); cols.next()) {
            const auto& rs = rows.current();
            const auto& cs = cols.current();
            for (std::size_t i = 0; i < w; ++i) {
                for (std::size_t j = 0; j < w; ++j) {
                    minor(i, j) = block(rs[i], cs[j]);
                }
            }
            BigInt det = determinant(minor);
            ++out.minors;
            BigInt mag = det < 0 ? BigInt(-det) : det;
            if (mag > out.max_abs_det) {
                out.max_abs_det = mag;
            }
            if (det != 0 && det % p == 0) {
                out.artifact_minors.push_back({rs, cs, det});
            }
        }
    }
    return out;
}

}  // namespace ldiqec
