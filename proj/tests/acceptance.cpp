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

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ldiqec/bounds.hpp"
#include "ldiqec/commands.hpp"
#include "ldiqec/dense_pauli.hpp"
#include "ldiqec/distance.hpp"
#include "ldiqec/hamming.hpp"
#include "ldiqec/ldi.hpp"
#include "ldiqec/phi.hpp"
#include "ldiqec/random_code.hpp"
#include "ldiqec/stabilizer.hpp"
#include "oracles.hpp"

using namespace ldiqec;

namespace {

constexpr double kPhaseTol = 1e-10;

struct Outcome {
    bool pass = false;
    std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

StabilizerCode steane() { return StabilizerCode::create(oracle::load_rows("steane.txt"), 7, 2); }

/// Rank mod p by plain elimination; kept separate from the library's.
std::size_t oracle_rank(std::vector<std::vector<Int>> m, Int p) {
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < m.size() && oracle::mod(m[pivot][c], p) == 0) {
            ++pivot;
        }
        if (pivot == m.size()) {
            continue;
        }
        std::swap(m[pivot], m[rank]);
        Int inv = 1;
        while (oracle::mod(inv * m[rank][c], p) != 1) {
            ++inv;
        }
        for (auto& e : m[rank]) {
            e = oracle::mod(e * inv, p);
        }
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r != rank && oracle::mod(m[r][c], p) != 0) {
                Int f = m[r][c];
                for (std::size_t k = 0; k < cols; ++k) {
                    m[r][k] = oracle::mod(m[r][k] - f * m[rank][k], p);
                }
            }
        }
        ++rank;
    }
    return rank;
}

std::vector<std::vector<Int>> rows_of(const Matrix& m) {
    std::vector<std::vector<Int>> out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out.emplace_back(m.row(r).begin(), m.row(r).end());
    }
    return out;
}

/// Whether some pure-X or pure-Z error of weight 1..wmax commutes with every
/// row mod p without lying in the row space.
bool has_light_logical(const Matrix& rows, std::size_t n, Int p, std::size_t wmax) {
    auto base = rows_of(rows);
    const std::size_t r = oracle_rank(base, p);
    bool found = false;
    for (int half = 0; half < 2 && !found; ++half) {
        oracle::for_each_vector(n, p, [&](const std::vector<Int>& v) {
            if (found) {
                return;
            }
            std::size_t w = 0;
            for (Int e : v) {
                w += e != 0 ? 1 : 0;
            }
            if (w == 0 || w > wmax) {
                return;
            }
            std::vector<Int> e(2 * n, 0);
            std::copy(v.begin(), v.end(), e.begin() + half * static_cast<std::ptrdiff_t>(n));
            for (const auto& row : base) {
                if (oracle::mod(oracle::product(row, e), p) != 0) {
                    return;
                }
            }
            auto extended = base;
            extended.push_back(e);
            if (oracle_rank(extended, p) > r) {
                found = true;
            }
        });
    }
    return found;
}

Outcome criterion1() {
    auto w2 = phi_map(PauliWord::parse("X Z^-1 I XZ", Ring::mod(2)));
    auto winf = phi_map(PauliWord::parse("X Z^-1 I XZ", Ring::integers()));
    if (w2.str() != "(1 0 0 1 | 0 1 0 1)") {
        return fail("phi_2 gave " + w2.str());
    }
    if (winf.str() != "(1 0 0 1 | 0 -1 0 1)") {
        return fail("phi_inf gave " + winf.str());
    }
    return {true, w2.str() + " and " + winf.str()};
}

Outcome criterion2() {
    for (const char* name : {"steane_ldi_canonical.txt", "steane_ldi_css.txt"}) {
        auto report = verify_ldi(oracle::load_rows(name));
        if (!report.certified() || report.max_entry != 1) {
            return fail(std::string(name) + " not certified with B=1");
        }
    }
    BoundsArgs args;
    args.B = 1;
    args.d = 3;
    std::ostringstream out;
    std::ostringstream err;
    int code = cmd_bounds(args, out, err);
    const std::string text = out.str();
    if (code != kExitOk || text.find("p*=16\n") == std::string::npos ||
        text.find("p*_CSS=2\n") == std::string::npos) {
        return fail("bounds output: " + text);
    }
    return {true, "both fixtures B=1, p*=16, p*_CSS=2"};
}

std::optional<LdiCode> g_steane;

Outcome criterion3() {
    Matrix printed = oracle::load_rows("steane_signs_candidate.txt");
    auto report = verify_ldi(printed);
    std::string detail;
    if (report.certified()) {
        g_steane = LdiCode::certify(printed, 7, 2);
        detail = "candidate certifies as printed";
    } else {
        const auto& v = report.violations.front();
        detail = std::to_string(report.violations.size()) + " violation(s), first " + std::to_string(v.first + 1) +
                 "," + std::to_string(v.second + 1) + " product " + std::to_string(v.value) + "; ";
        SignSearchOptions options;
        options.max_abs = 1;
        auto found = ldi_sign_search(StabilizerCode::create(printed.reduced(2), 7, 2), options);
        if (found.status != SignSearchStatus::Found) {
            return fail(detail + "sign search did not find a repair");
        }
        g_steane = *found.code;
        detail += "repaired in " + std::to_string(found.nodes) + " nodes";
    }
    if (g_steane->max_entry() != 1 || !verify_ldi(g_steane->matrix()).certified()) {
        return fail(detail + "; result not a certified B=1 code");
    }
    if (oracle::group(g_steane->matrix().reduced(2), 2) != oracle::group(steane().matrix(), 2)) {
        return fail(detail + "; mod-2 row space differs");
    }
    return {true, detail};
}

Outcome criterion4() {
    if (!g_steane) {
        return fail("no certified Steane code from criterion 3");
    }
    std::string detail;
    for (Int p : {2, 3, 5, 7, 11, 13}) {
        auto code = reduce_mod(*g_steane, p);
        auto css = is_css(code);
        if (!css) {
            return fail("not CSS at p=" + std::to_string(p));
        }
        auto d = css_distance(*css, p, 7).overall();
        if (!d.is_exact() || d.value != 3) {
            return fail("p=" + std::to_string(p) + " gave d=" + d.str());
        }
        detail += (detail.empty() ? "d=3 at p=" : ",") + std::to_string(p);
    }
    return {true, detail};
}

Outcome criterion5() {
    for (unsigned N : {3u, 4u, 5u}) {
        auto ldi = hamming_ldi(N);
        const std::size_t n = (std::size_t{1} << N) - 1;
        if (ldi.max_entry() != 1 || ldi.num_generators() != 2 * N || ldi.n() != n || ldi.k() != n - 2 * N ||
            !verify_ldi(ldi.matrix()).certified()) {
            return fail("hamming_ldi(" + std::to_string(N) + ") has wrong shape or B");
        }
    }
    const std::vector<Int> p4{2, 3, 5, 7};
    const std::vector<Int> p5{2, 3};
    if (!certify_family_member(4, p4).all_distance_three()) {
        return fail("N=4 distance sweep");
    }
    if (!certify_family_member(5, p5).all_distance_three()) {
        return fail("N=5 distance sweep");
    }
    return {true, "N=3,4,5 B=1; d=3 for N=4 at 2,3,5,7 and N=5 at 2,3"};
}

Outcome criterion6() {
    struct Case {
        unsigned n, k, d;
        Int q;
        bool holds;
        int lhs, rhs;
    };
    for (const Case& c : {Case{5, 1, 3, 2, true, 16, 16}, Case{7, 1, 3, 2, true, 22, 64}, Case{6, 2, 3, 2, false, 19, 16}}) {
        auto r = gqhb_holds(c.n, c.k, c.d, c.q);
        if (r.holds != c.holds || r.lhs != c.lhs || r.rhs != c.rhs) {
            return fail("(" + std::to_string(c.n) + "," + std::to_string(c.k) + ") gave " + r.lhs.str() + " vs " +
                        r.rhs.str());
        }
    }
    return {true, "16=16, 22<=64, 19>16"};
}

Outcome criterion7() {
    std::mt19937_64 rng(7);
    std::size_t codes = 0;
    std::size_t comparisons = 0;
    std::size_t attempts = 0;
    while (codes < 200) {
        if (++attempts > 200000) {
            return fail("only " + std::to_string(codes) + " usable codes drawn");
        }
        const Int q = (attempts % 2 == 0) ? 2 : 3;
        const std::size_t n = 3 + rng() % 3;
        const std::size_t rx = 1 + rng() % (n - 2);
        const std::size_t rz = 1 + rng() % (n - 1 - rx);
        auto code = random_css_code(n, rx, rz, q, rng);
        if (!code) {
            continue;
        }
        auto d = oracle::distance(code->matrix(), n, q);
        if (!d || *d < 2) {
            continue;
        }
        // Non-degenerate: no nonzero stabilizer lighter than d.
        bool degenerate = false;
        for (const auto& g : oracle::group(code->matrix(), q)) {
            std::size_t w = oracle::weight(g);
            if (w != 0 && w < *d) {
                degenerate = true;
                break;
            }
        }
        if (degenerate) {
            continue;
        }
        auto ldi = ldi_css_lift(*code);
        auto cutoff = p_star_css(ldi.max_entry(), static_cast<unsigned>(*d));
        bool tested = false;
        for (Int p = 2; p <= 23; ++p) {
            if (!oracle::is_prime(p) || !cutoff.below(BigInt(p))) {
                continue;
            }
            Matrix reduced = ldi.matrix().reduced(p);
            if (oracle_rank(rows_of(reduced), p) != ldi.num_generators()) {
                return fail("rank drop at p=" + std::to_string(p) + " for " + ldi.matrix().str());
            }
            bool lighter = false;
            if (p <= 3) {
                auto dp = oracle::distance(reduced, n, p);
                lighter = dp && *dp < *d;
            } else {
                lighter = has_light_logical(reduced, n, p, *d - 1);
            }
            if (lighter) {
                return fail("distance fell below " + std::to_string(*d) + " at p=" + std::to_string(p) + " for " +
                            ldi.matrix().str());
            }
            ++comparisons;
            tested = true;
        }
        if (tested) {
            ++codes;
        }
    }
    return {true, std::to_string(codes) + " codes, " + std::to_string(comparisons) + " prime comparisons, 0 counterexamples"};
}

/// Every stabilizer group on n registers mod q, keyed by its element set.
std::vector<Matrix> all_codes(std::size_t n, Int q) {
    using Group = std::set<std::vector<Int>>;
    std::vector<std::vector<Int>> vectors;
    oracle::for_each_vector(2 * n, q, [&](const std::vector<Int>& v) {
        if (oracle::weight(v) != 0) {
            vectors.push_back(v);
        }
    });
    std::map<Group, Matrix> level;
    for (const auto& v : vectors) {
        Matrix m(0, 2 * n);
        m.append_row(v);
        level.emplace(oracle::group(m, q), m);
    }
    std::vector<Matrix> out;
    while (!level.empty()) {
        std::map<Group, Matrix> next;
        for (const auto& [group, basis] : level) {
            out.push_back(basis);
            if (basis.rows() == n) {
                continue;
            }
            for (const auto& v : vectors) {
                if (group.count(v) != 0) {
                    continue;
                }
                bool commutes = true;
                for (std::size_t r = 0; r < basis.rows() && commutes; ++r) {
                    std::vector<Int> row(basis.row(r).begin(), basis.row(r).end());
                    commutes = oracle::mod(oracle::product(row, v), q) == 0;
                }
                if (!commutes) {
                    continue;
                }
                Matrix m = basis;
                m.append_row(v);
                auto g = oracle::group(m, q);
                if (next.count(g) == 0) {
                    next.emplace(std::move(g), std::move(m));
                }
            }
        }
        level = std::move(next);
    }
    return out;
}

bool distance_agrees(const Matrix& rows, std::size_t n, Int q) {
    auto expected = oracle::distance(rows, n, q);
    auto d = distance_exact(StabilizerCode::create(rows, n, q), n);
    if (expected) {
        return d.is_exact() && d.value == *expected;
    }
    return !d.is_exact() && d.value == n + 1;
}

Outcome criterion8() {
    std::size_t exhaustive = 0;
    std::size_t sampled = 0;
    for (Int q : {2, 3}) {
        for (std::size_t n = 1; n <= 4; ++n) {
            if (n < 4 || q == 2) {
                for (const Matrix& rows : all_codes(n, q)) {
                    if (!distance_agrees(rows, n, q)) {
                        return fail("distance mismatch on " + rows.str());
                    }
                    ++exhaustive;
                }
                continue;
            }
            std::mt19937_64 rng(8);
            std::size_t drawn = 0;
            while (drawn < 300) {
                auto code = random_commuting_code(n, 1 + rng() % n, q, rng);
                if (!code) {
                    continue;
                }
                if (!distance_agrees(code->matrix(), n, q)) {
                    return fail("distance mismatch on " + code->matrix().str());
                }
                ++drawn;
            }
            sampled += drawn;
        }
    }

    std::mt19937_64 rng(88);
    std::size_t pairs = 0;
    for (; pairs < 600; ++pairs) {
        const Int q = (pairs % 2 == 0) ? 2 : 3;
        const std::size_t n = 1 + rng() % 3;
        std::vector<Int> a(2 * n);
        std::vector<Int> b(2 * n);
        for (auto& e : a) {
            e = static_cast<Int>(rng() % q);
        }
        for (auto& e : b) {
            e = static_cast<Int>(rng() % q);
        }
        auto u = PhiVector::from_entries(a, Ring::mod(q));
        auto v = PhiVector::from_entries(b, Ring::mod(q));
        auto phase = commutation_phase(realize_dense(u, q), realize_dense(v, q), kPhaseTol);
        if (!phase) {
            return fail("no commutation phase for " + u.str() + ", " + v.str());
        }
        const bool commute_symplectic = oracle::mod(symplectic_product(u, v), q) == 0;
        if (commute_symplectic != (*phase == 0)) {
            return fail("commutation mismatch for " + u.str() + ", " + v.str());
        }
    }
    return {true, std::to_string(exhaustive) + " codes exhaustively, " + std::to_string(sampled) +
                      " sampled (n=4, q=3), " + std::to_string(pairs) + " dense pairs"};
}

Outcome criterion9() {
    std::mt19937_64 rng(9);
    std::size_t checked = 0;
    while (checked < 500) {
        const Int q = std::vector<Int>{2, 3, 5}[rng() % 3];
        const std::size_t n = 1 + rng() % 6;
        const std::size_t r = 1 + rng() % n;
        auto code = random_commuting_code(n, r, q, rng);
        if (!code) {
            continue;
        }
        auto ldi = ldi_prescriptive(*code);
        if (!verify_ldi(ldi.matrix()).certified()) {
            return fail("not certified: " + ldi.matrix().str());
        }
        if (!(ldi.matrix().reduced(q) == canonical_form(*code).code.matrix())) {
            return fail("reduction differs from canonical form for " + code->matrix().str());
        }
        ++checked;
    }
    return {true, std::to_string(checked) + " codes"};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"phi-map fixture", criterion1},          {"Steane LDI certification", criterion2},
        {"sign audit and repair", criterion3},    {"Steane distance sweep", criterion4},
        {"Hamming family", criterion5},           {"GQHB", criterion6},
        {"distance promise property", criterion7}, {"oracle equivalences", criterion8},
        {"prescriptive congruence", criterion9},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criteria[i].second();
        } catch (const std::exception& e) {
            outcome = fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %zu %s: %s (%.2f s)\n", outcome.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    outcome.detail.c_str(), secs);
        std::fflush(stdout);
        failures += outcome.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
