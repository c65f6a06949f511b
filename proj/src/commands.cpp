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

#include "ldiqec/commands.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "ldiqec/bounds.hpp"
#include "ldiqec/budget.hpp"
#include "ldiqec/code_file.hpp"
#include "ldiqec/distance.hpp"
#include "ldiqec/errors.hpp"
#include "ldiqec/hamming.hpp"
#include "ldiqec/ldi.hpp"
#include "ldiqec/random_code.hpp"

namespace ldiqec {

namespace {

int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const BudgetExceededError& e) {
        err << "budget exhausted: " << e.what() << '\n';
        return kExitBudget;
    } catch (const LdiError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
}

DistanceOptions distance_options(unsigned threads = 1) {
    DistanceOptions options;
    options.candidate_budget = search_budget(options.candidate_budget);
    options.threads = threads;
    return options;
}

/// Exact distance via the block search for CSS codes, full search otherwise.
DistanceResult code_distance(const StabilizerCode& code, std::size_t wmax, const DistanceOptions& options) {
    if (auto css = is_css(code)) {
        return css_distance(*css, code.q(), wmax, options).overall();
    }
    return distance_exact(code, wmax, options);
}

/// Re-validates, then writes to `path` or to `out`.
void emit(const CodeFile& file, const std::optional<std::string>& path, std::ostream& out) {
    if (file.is_ldi()) {
        file.to_ldi();
    } else {
        file.to_stabilizer();
    }
    if (path) {
        save_code_file(*path, file);
    } else {
        out << format_code_file(file);
    }
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

/// "d=3" or "d>=4"
std::string labelled(const std::string& name, const DistanceResult& r) {
    return name + (r.is_exact() ? "=" : "") + r.str();
}

void print_promise(std::ostream& out, Int max_entry, unsigned d) {
    PromiseBounds bounds = promise_bounds(max_entry, d);
    out << "p*=" << bounds.p_general << '\n';
    out << "p*_CSS=" << bounds.p_css.str();
    if (!bounds.p_css.is_integer) {
        std::ostringstream approx;
        approx.precision(6);
        approx << bounds.p_css.approx();
        out << " (~" << approx.str() << ")";
    }
    out << '\n';
    out << "next safe prime (general)=" << bounds.next_safe_prime_general << '\n';
    out << "next safe prime (CSS)=" << bounds.next_safe_prime_css << '\n';
}

std::size_t pair_count(std::size_t r) { return r * (r == 0 ? 0 : r - 1) / 2; }

}  // namespace

int cmd_inspect(const std::string& path, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        CodeFile file = load_code_file(path);
        const std::size_t r = file.rows.rows();
        const std::size_t k = r <= file.n ? file.n - r : 0;
        if (file.is_ldi()) {
            LdiReport report = verify_ldi(file.rows);
            out << "n=" << file.n << " k=" << k << " q=inf origin=" << *file.origin << " css=" << yes_no(report.css)
                << '\n';
            out << "B=" << report.max_entry << ", violations=" << report.violations.size() << '\n';
            out << "gram: " << pair_count(r) << " pairs, " << report.violations.size() << " nonzero\n";
            for (const auto& v : report.violations) {
                out << "violation: generators " << v.first + 1 << " and " << v.second + 1 << ", product " << v.value
                    << '\n';
            }
            if (!report.certified()) {
                return static_cast<int>(kExitInvalid);
            }
            file.to_ldi();
            return static_cast<int>(kExitOk);
        }
        const Int q = *file.modulus;
        std::size_t nonzero = 0;
        for (std::size_t i = 0; i < r; ++i) {
            PhiVector u = PhiVector::from_entries(file.rows.row(i), Ring::mod(q));
            for (std::size_t j = i + 1; j < r; ++j) {
                if (mod_floor(symplectic_product(u, PhiVector::from_entries(file.rows.row(j), Ring::mod(q))), q) != 0) {
                    ++nonzero;
                }
            }
        }
        const bool css = css_split(file.rows.reduced(q)).has_value();
        out << "n=" << file.n << " k=" << k << " q=" << q << " css=" << yes_no(css) << '\n';
        out << "gram: " << pair_count(r) << " pairs, " << nonzero << " nonzero mod " << q << '\n';
        file.to_stabilizer();
        return static_cast<int>(kExitOk);
    });
}

int cmd_ldi(const LdiArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&]() -> int {
        if (args.method != "prescriptive" && args.method != "signs") {
            throw std::invalid_argument("unknown method '" + args.method + "' (prescriptive or signs)");
        }
        CodeFile file = load_code_file(args.input);
        std::ostream& report = args.output ? out : err;
        std::optional<LdiCode> ldi;
        CodeFile result;
        if (file.is_ldi()) {
            ldi = file.to_ldi();
            result = file;
            report << "input is already LDI; unchanged\n";
        } else {
            StabilizerCode code = file.to_stabilizer();
            if (args.method == "prescriptive") {
                ldi = ldi_prescriptive(code);
            } else {
                SignSearchOptions options;
                options.node_budget = search_budget(options.node_budget);
                SignSearchResult found = ldi_sign_search(code, options);
                if (found.status == SignSearchStatus::BudgetExceeded) {
                    err << "sign search: budget of " << options.node_budget << " nodes exhausted\n";
                    return kExitBudget;
                }
                if (found.status == SignSearchStatus::Unsatisfiable) {
                    err << "sign search: no lift with entries below " << code.q() << " has zero products\n";
                    return kExitInvalid;
                }
                ldi = found.code;
            }
            std::vector<std::string> comments = file.comments;
            comments.push_back(" LDI form, method=" + args.method);
            result = to_code_file(*ldi, comments);
        }
        report << "method=" << (file.is_ldi() ? "none" : args.method) << '\n';
        report << "B=" << ldi->max_entry() << '\n';
        report << "css=" << yes_no(verify_ldi(ldi->matrix()).css) << '\n';

        int status = kExitOk;
        std::optional<unsigned> d = args.distance;
        if (!d) {
            StabilizerCode base = reduce_mod(*ldi, ldi->origin_q());
            DistanceResult dist = code_distance(base, base.n(), distance_options());
            report << labelled("d", dist) << " at q=" << ldi->origin_q() << '\n';
            if (dist.is_exact()) {
                d = static_cast<unsigned>(dist.value);
            } else if (dist.budget_exhausted) {
                status = kExitBudget;
            }
        } else {
            report << "d=" << *d << " (given)\n";
        }
        if (d && *d >= 2) {
            print_promise(report, ldi->max_entry(), *d);
        } else {
            report << "promise bounds need an exact distance of at least 2\n";
        }
        emit(result, args.output, out);
        return status;
    });
}

int cmd_distance(const DistanceArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&]() -> int {
        CodeFile file = load_code_file(args.input);
        std::optional<LdiCode> ldi;
        std::optional<StabilizerCode> code;
        if (file.is_ldi()) {
            ldi = file.to_ldi();
            code = reduce_mod(*ldi, args.p.value_or(*file.origin));
        } else {
            code = file.to_stabilizer();
            if (args.p && *args.p != code->q()) {
                throw std::invalid_argument("file is mod " + std::to_string(code->q()) +
                                            "; other primes need an LDI ('mod inf') file");
            }
        }
        const Int p = code->q();
        const std::size_t wmax = args.wmax.value_or(code->n());
        const DistanceOptions options = distance_options(args.threads);

        auto describe = [&](const std::string& label, const DistanceResult& r) {
            if (!r.witness) {
                return;
            }
            out << "witness" << label << ": " << r.witness->str();
            if (ldi) {
                out << " (" << classify_error(*ldi, p, *r.witness).str() << ")";
            }
            out << '\n';
        };

        bool exhausted = false;
        if (args.css) {
            auto css = is_css(*code);
            if (!css) {
                throw std::invalid_argument("--css needs pure-X and pure-Z generators");
            }
            CssDistance cd = css_distance(*css, p, wmax, options);
            DistanceResult d = cd.overall();
            exhausted = cd.dx.budget_exhausted || cd.dz.budget_exhausted;
            if (args.csv) {
                out << "p,dX,dZ,d\n" << p << ',' << cd.dx.str() << ',' << cd.dz.str() << ',' << d.str() << '\n';
            } else {
                out << "p=" << p << ' ' << labelled("dX", cd.dx) << ' ' << labelled("dZ", cd.dz) << ' ' << labelled("d", d)
                    << '\n';
                describe(" (X)", cd.dx);
                describe(" (Z)", cd.dz);
            }
        } else {
            DistanceResult d = distance_exact(*code, wmax, options);
            exhausted = d.budget_exhausted;
            if (args.csv) {
                out << "p,d\n" << p << ',' << d.str() << '\n';
            } else {
                out << "p=" << p << ' ' << labelled("d", d) << '\n';
                describe("", d);
                if (d.degenerate) {
                    out << "degenerate: a lighter nonzero stabilizer exists\n";
                }
            }
        }
        if (exhausted) {
            err << "candidate budget exhausted; the distance is a lower bound\n";
            return kExitBudget;
        }
        return kExitOk;
    });
}

int cmd_bounds(const BoundsArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&]() -> int {
        bool any = false;
        if (args.n && args.k && args.d && args.q) {
            any = true;
            GqhbResult g = gqhb_holds(*args.n, *args.k, *args.d, *args.q);
            if (!g.holds) {
                out << "GQHB fails (" << g.lhs << " > " << g.rhs << ")\n";
            } else if (g.lhs == g.rhs) {
                out << "GQHB holds with equality (" << g.lhs << " = " << g.rhs << ")\n";
            } else {
                out << "GQHB holds (" << g.lhs << " <= " << g.rhs << ")\n";
            }
        }
        if (args.B && args.d) {
            any = true;
            print_promise(out, *args.B, *args.d);
        }
        if (args.k && args.q && !(args.n && args.d)) {
            any = true;
            out << "B <= " << b_bound(*args.k, *args.q) << '\n';
        }
        if (!any) {
            err << "bounds: give --n --k --d --q (GQHB), --B --d (cutoffs) or --k --q (largest entry)\n";
            return kExitInvalid;
        }
        return kExitOk;
    });
}

int cmd_hamming(const HammingArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&]() -> int {
        if (args.N < 3) {
            throw std::invalid_argument("--N must be at least 3");
        }
        HammingMember member = hamming_member(args.N, args.ldi);
        const std::size_t n = member.css.n();
        const std::string params = "[[" + std::to_string(n) + "," + std::to_string(member.css.k()) + ",3]]_2";
        CodeFile file;
        if (member.ldi) {
            file = to_code_file(*member.ldi, {" quantum Hamming code " + params + ", N=" + std::to_string(args.N) +
                                              ", LDI form with B=1"});
        } else {
            file = to_code_file(member.css, {" quantum Hamming code " + params + ", N=" + std::to_string(args.N)});
        }
        emit(file, args.output, out);
        if (args.output) {
            out << "wrote " << params << (member.ldi ? " LDI" : "") << " to " << *args.output << '\n';
        }
        for (const auto& line : member.log) {
            err << line << '\n';
        }
        return kExitOk;
    });
}

int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&]() -> int {
        for (Int p : args.primes) {
            if (!is_prime(p)) {
                throw NotPrimeError(p);
            }
        }
        CodeFile file = load_code_file(args.input);
        if (!file.is_ldi()) {
            throw std::invalid_argument("sweep needs an LDI ('mod inf') file");
        }
        LdiCode ldi = file.to_ldi();
        const Int origin = ldi.origin_q();
        const bool css = css_split(ldi.matrix()).has_value();
        const std::size_t wmax = args.wmax.value_or(ldi.n());
        const DistanceOptions options = distance_options();

        auto measure = [&](Int p, std::optional<CssDistance>& split) {
            StabilizerCode code = reduce_mod(ldi, p);
            if (css) {
                split = css_distance(*is_css(code), p, wmax, options);
                return split->overall();
            }
            return distance_exact(code, wmax, options);
        };

        std::optional<CssDistance> unused;
        DistanceResult base = measure(origin, unused);
        std::ostringstream summary;
        summary << "B=" << ldi.max_entry() << " origin=" << origin << ' ' << labelled("d", base) << " css=" << yes_no(css)
                << '\n';
        std::optional<PromiseBounds> bounds;
        if (base.is_exact() && base.value >= 2) {
            bounds = promise_bounds(ldi.max_entry(), static_cast<unsigned>(base.value));
            summary << "p*=" << bounds->p_general << " p*_CSS=" << bounds->p_css.str() << '\n';
        }

        std::ostringstream csv;
        csv << "p,dX,dZ,d,within_css_promise,within_general_promise\n";
        for (Int p : args.primes) {
            csv << p << ',';
            std::optional<CssDistance> split;
            try {
                DistanceResult d = measure(p, split);
                if (split) {
                    csv << split->dx.str() << ',' << split->dz.str() << ',';
                } else {
                    csv << ",,";
                }
                csv << d.str() << ',';
            } catch (const DependentRowsError&) {
                csv << "rank-drop,rank-drop,rank-drop,";
            }
            const bool at_origin = p == origin;
            const bool within_css = css && bounds && (at_origin || bounds->p_css.below(BigInt(p)));
            const bool within_general = bounds && (at_origin || BigInt(p) > bounds->p_general);
            csv << yes_no(within_css) << ',' << yes_no(within_general) << '\n';
        }
        if (args.output) {
            std::ofstream f(*args.output);
            if (!f) {
                throw LdiError("cannot write '" + *args.output + "'");
            }
            f << csv.str();
            out << summary.str();
        } else {
            out << csv.str();
            err << summary.str();
        }
        return kExitOk;
    });
}

int cmd_random(const RandomArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&]() -> int {
        if (args.n == 0 || args.k > args.n) {
            throw std::invalid_argument("need n >= 1 and k <= n");
        }
        if (!is_prime(args.q)) {
            throw NotPrimeError(args.q);
        }
        if (args.strict_gqhb) {
            GqhbResult g = gqhb_holds(static_cast<unsigned>(args.n), static_cast<unsigned>(args.k),
                                      static_cast<unsigned>(args.d), args.q);
            if (!g.holds) {
                err << "refused: GQHB fails (" << g.lhs << " > " << g.rhs << ")\n";
                return kExitInvalid;
            }
        }
        RandomCodeRequest request;
        request.n = args.n;
        request.k = args.k;
        request.d = args.d;
        request.q = args.q;
        request.trials = args.trials;
        request.seed = args.seed;
        request.distance = distance_options();
        RandomCodeResult found = random_code(request);
        if (!found.code) {
            err << "no code with d >= " << args.d << " after " << found.trials_used << " trials\n";
            return kExitBudget;
        }
        DistanceResult d = distance_exact(*found.code, args.n, request.distance);
        std::ostringstream header;
        header << " random [[" << args.n << "," << args.k << "," << d.str() << "]]_" << args.q << " seed=" << args.seed
               << " trial=" << found.trials_used;
        std::ostream& report = args.output ? out : err;
        report << labelled("d", d) << " after " << found.trials_used << " trials\n";
        emit(to_code_file(*found.code, {header.str()}), args.output, out);
        return kExitOk;
    });
}

}  // namespace ldiqec
