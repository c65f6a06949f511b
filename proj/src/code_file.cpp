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

#include "ldiqec/code_file.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "ldiqec/errors.hpp"

namespace ldiqec {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

Int parse_int(const std::string& token, std::size_t line) {
    Int value = 0;
    const char* begin = token.data();
    const char* end = token.data() + token.size();
    if (begin != end && *begin == '+') {
        ++begin;
    }
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
        throw ParseError(line, "expected an integer, found '" + token + "'");
    }
    return value;
}

}  // namespace

CodeFile parse_code_file(std::istream& in) {
    CodeFile file;
    std::optional<std::size_t> declared_rows;
    bool have_mod = false;
    bool have_n = false;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') {
            raw.pop_back();
        }
        std::string line = trim(raw);
        if (line.empty()) {
            continue;
        }
        if (line[0] == '#') {
            file.comments.push_back(raw.substr(raw.find('#') + 1));
            continue;
        }
        std::istringstream tokens(line);
        std::string head;
        tokens >> head;
        if (head == "mod" || head == "origin" || head == "n" || head == "rows") {
            if (file.rows.rows() > 0) {
                throw ParseError(line_no, "header line '" + head + "' after matrix rows");
            }
            std::string value;
            std::string extra;
            if (!(tokens >> value) || (tokens >> extra)) {
                throw ParseError(line_no, "header '" + head + "' takes exactly one value");
            }
            if (head == "mod") {
                have_mod = true;
                if (value == "inf") {
                    file.modulus.reset();
                } else {
                    Int q = parse_int(value, line_no);
                    if (!is_prime(q)) {
                        throw ParseError(line_no, "modulus " + value + " is not prime");
                    }
                    file.modulus = q;
                }
            } else if (head == "origin") {
                Int q = parse_int(value, line_no);
                if (!is_prime(q)) {
                    throw ParseError(line_no, "origin " + value + " is not prime");
                }
                file.origin = q;
            } else {
                Int v = parse_int(value, line_no);
                if (v < 0) {
                    throw ParseError(line_no, "'" + head + "' must be non-negative");
                }
                if (head == "n") {
                    file.n = static_cast<std::size_t>(v);
                    have_n = true;
                    file.rows = Matrix(0, 2 * file.n);
                } else {
                    declared_rows = static_cast<std::size_t>(v);
                }
            }
            continue;
        }
        if (!have_mod || !have_n || !declared_rows) {
            throw ParseError(line_no, "matrix row before the 'mod', 'n' and 'rows' headers");
        }
        std::vector<Int> entries;
        std::istringstream row_tokens(line);
        std::string token;
        while (row_tokens >> token) {
            if (token == "|") {
                if (entries.size() != file.n) {
                    throw ParseError(line_no, "'|' after " + std::to_string(entries.size()) +
                                                  " entries, expected it after " + std::to_string(file.n));
                }
                continue;
            }
            entries.push_back(parse_int(token, line_no));
        }
        if (entries.size() != 2 * file.n) {
            throw ParseError(line_no, "row has " + std::to_string(entries.size()) + " entries, expected " +
                                          std::to_string(2 * file.n));
        }
        if (file.rows.rows() == *declared_rows) {
            throw ParseError(line_no, "more rows than the declared " + std::to_string(*declared_rows));
        }
        file.rows.append_row(entries);
    }
    if (!have_mod || !have_n || !declared_rows) {
        throw ParseError(line_no, "missing 'mod', 'n' or 'rows' header");
    }
    if (file.is_ldi() && !file.origin) {
        throw ParseError(line_no, "'mod inf' needs an 'origin' line");
    }
    if (!file.is_ldi() && file.origin) {
        throw ParseError(line_no, "'origin' is only allowed with 'mod inf'");
    }
    if (file.rows.rows() != *declared_rows) {
        throw ParseError(line_no, "declared " + std::to_string(*declared_rows) + " rows, found " +
                                      std::to_string(file.rows.rows()));
    }
    return file;
}

CodeFile parse_code_file(const std::string& text) {
    std::istringstream in(text);
    return parse_code_file(in);
}

CodeFile load_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(0, "cannot open '" + path + "'");
    }
    return parse_code_file(in);
}

std::string format_code_file(const CodeFile& file) {
    std::ostringstream out;
    for (const auto& c : file.comments) {
        out << '#' << c << '\n';
    }
    out << "mod " << (file.modulus ? std::to_string(*file.modulus) : "inf") << '\n';
    if (file.origin) {
        out << "origin " << *file.origin << '\n';
    }
    out << "n " << file.n << '\n';
    out << "rows " << file.rows.rows() << '\n';
    for (std::size_t r = 0; r < file.rows.rows(); ++r) {
        for (std::size_t c = 0; c < 2 * file.n; ++c) {
            if (c == file.n) {
                out << (c == 0 ? "|" : " |");
            }
            if (c > 0) {
                out << ' ';
            }
            out << file.rows(r, c);
        }
        if (file.n == 0) {
            out << '|';
        }
        out << '\n';
    }
    return out.str();
}

void save_code_file(const std::string& path, const CodeFile& file) {
    std::ofstream out(path);
    if (!out) {
        throw LdiError("cannot write '" + path + "'");
    }
    out << format_code_file(file);
}

StabilizerCode CodeFile::to_stabilizer() const {
    if (modulus) {
        return StabilizerCode::create(rows, n, *modulus);
    }
    return StabilizerCode::create(rows.reduced(*origin), n, *origin);
}

LdiCode CodeFile::to_ldi() const {
    if (modulus) {
        throw LdiError("file is mod " + std::to_string(*modulus) + ", not an LDI ('mod inf') file");
    }
    return LdiCode::certify(rows, n, *origin);
}

CodeFile to_code_file(const StabilizerCode& code, std::vector<std::string> comments) {
    CodeFile file;
    file.comments = std::move(comments);
    file.modulus = code.q();
    file.n = code.n();
    file.rows = code.matrix();
    return file;
}

CodeFile to_code_file(const LdiCode& code, std::vector<std::string> comments) {
    CodeFile file;
    file.comments = std::move(comments);
    file.origin = code.origin_q();
    file.n = code.n();
    file.rows = code.matrix();
    return file;
}

}  // namespace ldiqec
