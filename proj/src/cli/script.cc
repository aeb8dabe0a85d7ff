// Copyright 2026 The qgraph Authors
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

#include "qgraph/cli/script.h"

#include <cctype>
#include <charconv>
#include <map>
#include <optional>

#include "qgraph/errors.h"

namespace qgraph::cli {

namespace {

struct Arity {
    std::size_t vertices;
    std::size_t sets;
    bool word;
};

const std::map<std::string, Arity, std::less<>> &op_arity() {
    static const std::map<std::string, Arity, std::less<>> table = {
        {"cz", {2, 0, false}},        {"cnot", {2, 0, false}}, {"fx", {2, 0, false}}, {"fxw", {2, 0, false}},
        {"x", {1, 0, false}},         {"y", {1, 0, false}},    {"z", {1, 0, false}},  {"localcomp", {1, 0, false}},
        {"iac", {0, 2, false}},       {"iec", {0, 1, false}},  {"addvertex", {0, 0, false}},
        {"delete", {1, 0, true}},
    };
    return table;
}

class LineParser {
   public:
    LineParser(std::string_view line, const std::string &source, std::size_t line_no)
        : line_(line), source_(source), line_no_(line_no) {
    }

    [[noreturn]] void fail(const std::string &what) const {
        throw ParseError(source_, line_no_, what);
    }

    // Whitespace-separated tokens, except that a {...} set or a run of (...)
    // cycles forms a single token even if it contains spaces.
    std::vector<std::string> tokens() {
        std::vector<std::string> out;
        std::size_t i = 0;
        auto skip_ws = [&] {
            while (i < line_.size() && std::isspace(static_cast<unsigned char>(line_[i]))) {
                i++;
            }
        };
        while (true) {
            skip_ws();
            if (i >= line_.size()) {
                break;
            }
            std::size_t start = i;
            if (line_[i] == '{') {
                i = close(i, '}');
            } else if (line_[i] == '(') {
                while (true) {
                    i = close(i, ')');
                    std::size_t save = i;
                    skip_ws();
                    if (i >= line_.size() || line_[i] != '(') {
                        i = save;
                        break;
                    }
                }
            } else {
                while (i < line_.size() && !std::isspace(static_cast<unsigned char>(line_[i]))) {
                    i++;
                }
            }
            out.emplace_back(line_.substr(start, i - start));
        }
        return out;
    }

    std::size_t index(std::string_view token) const {
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
            fail("malformed vertex index '" + std::string(token) + "'");
        }
        return value;
    }

    std::vector<std::size_t> set(std::string_view token) const {
        if (token.size() < 2 || token.front() != '{' || token.back() != '}') {
            fail("malformed set '" + std::string(token) + "', expected {a,b,...}");
        }
        std::vector<std::size_t> out;
        std::string_view body = token.substr(1, token.size() - 2);
        if (trim(body).empty()) {
            return out;
        }
        std::size_t pos = 0;
        while (pos <= body.size()) {
            std::size_t comma = body.find(',', pos);
            if (comma == std::string_view::npos) {
                comma = body.size();
            }
            out.push_back(index(trim(body.substr(pos, comma - pos))));
            pos = comma + 1;
        }
        return out;
    }

    std::vector<std::vector<std::size_t>> cycles(std::string_view token) const {
        std::vector<std::vector<std::size_t>> out;
        std::size_t i = 0;
        while (i < token.size()) {
            if (std::isspace(static_cast<unsigned char>(token[i]))) {
                i++;
                continue;
            }
            if (token[i] != '(') {
                fail("malformed cycle notation '" + std::string(token) + "'");
            }
            std::size_t end = token.find(')', i);
            if (end == std::string_view::npos) {
                fail("unterminated cycle in '" + std::string(token) + "'");
            }
            std::vector<std::size_t> cycle;
            std::string_view body = token.substr(i + 1, end - i - 1);
            std::size_t p = 0;
            while (p < body.size()) {
                while (p < body.size() && (std::isspace(static_cast<unsigned char>(body[p])) || body[p] == ',')) {
                    p++;
                }
                std::size_t q = p;
                while (q < body.size() && !std::isspace(static_cast<unsigned char>(body[q])) && body[q] != ',') {
                    q++;
                }
                if (q > p) {
                    cycle.push_back(index(body.substr(p, q - p)));
                }
                p = q;
            }
            if (!cycle.empty()) {
                out.push_back(std::move(cycle));
            }
            i = end + 1;
        }
        if (token.empty()) {
            fail("missing permutation");
        }
        return out;
    }

   private:
    static std::string_view trim(std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
            s.remove_prefix(1);
        }
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
            s.remove_suffix(1);
        }
        return s;
    }

    std::size_t close(std::size_t open, char closer) const {
        std::size_t end = line_.find(closer, open);
        if (end == std::string_view::npos) {
            fail(std::string("missing '") + closer + "'");
        }
        return end + 1;
    }

    std::string_view line_;
    const std::string &source_;
    std::size_t line_no_;
};

void expect_args(const LineParser &p, const std::vector<std::string> &tokens, std::size_t want,
                 const std::string &usage) {
    if (tokens.size() != want) {
        p.fail("wrong number of arguments, expected '" + usage + "'");
    }
}

Command parse_op(const LineParser &p, const std::vector<std::string> &tokens, Command cmd) {
    if (tokens.size() < 2) {
        p.fail("missing operation name after 'op'");
    }
    auto it = op_arity().find(tokens[1]);
    if (it == op_arity().end()) {
        p.fail("unknown operation '" + tokens[1] + "'");
    }
    const Arity &arity = it->second;
    cmd.name = tokens[1];
    cmd.is_op = true;
    std::size_t want = 2 + arity.vertices + arity.sets + (arity.word ? 1 : 0);
    if (tokens.size() != want) {
        p.fail("op " + cmd.name + " takes " + std::to_string(want - 2) + " argument(s), got " +
               std::to_string(tokens.size() - 2));
    }
    std::size_t k = 2;
    for (std::size_t i = 0; i < arity.vertices; i++) {
        cmd.vertices.push_back(p.index(tokens[k++]));
    }
    if (arity.sets >= 1) {
        cmd.set1 = p.set(tokens[k++]);
    }
    if (arity.sets >= 2) {
        cmd.set2 = p.set(tokens[k++]);
    }
    if (arity.word) {
        cmd.word = tokens[k++];
        if (cmd.word != "blind" && cmd.word != "corrected") {
            p.fail("delete mode must be 'blind' or 'corrected', got '" + cmd.word + "'");
        }
    }
    return cmd;
}

void check_vertex(const Command &cmd, std::size_t v, std::size_t n, const std::string &source) {
    if (v >= n) {
        throw ParseError(source, cmd.line,
                         "vertex " + std::to_string(v) + " out of range (graph has " + std::to_string(n) +
                             " vertices at this point)");
    }
}

}  // namespace

OpScript parse_script(std::string_view text, const std::string &source) {
    OpScript script;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        line_no++;

        LineParser p(line, source, line_no);
        std::vector<std::string> tokens = p.tokens();
        if (tokens.empty() || tokens[0].starts_with('#')) {
            continue;
        }
        Command cmd;
        cmd.line = line_no;
        for (std::size_t i = 0; i < tokens.size(); i++) {
            cmd.text += (i ? " " : "") + tokens[i];
        }
        const std::string &head = tokens[0];
        if (head == "op") {
            script.commands.push_back(parse_op(p, tokens, std::move(cmd)));
            continue;
        }
        cmd.name = head;
        if (head == "assert") {
            expect_args(p, tokens, 2, "assert verify");
            if (tokens[1] != "verify") {
                p.fail("unknown assertion '" + tokens[1] + "'");
            }
            cmd.name = "verify";
        } else if (head == "measure") {
            expect_args(p, tokens, 2, "measure euler|odd");
            if (tokens[1] != "euler" && tokens[1] != "odd") {
                p.fail("measure takes 'euler' or 'odd', got '" + tokens[1] + "'");
            }
            cmd.word = tokens[1];
        } else if (head == "compare") {
            expect_args(p, tokens, 2, "compare <graphfile>");
            cmd.word = tokens[1];
        } else if (head == "automorphism") {
            expect_args(p, tokens, 2, "automorphism (a b ...)(c d ...)");
            cmd.cycles = p.cycles(tokens[1]);
        } else if (head == "vcompare") {
            expect_args(p, tokens, 3, "vcompare a b");
            cmd.vertices = {p.index(tokens[1]), p.index(tokens[2])};
        } else if (head == "readout") {
            expect_args(p, tokens, 1, "readout");
        } else {
            p.fail("unknown command '" + head + "'");
        }
        script.commands.push_back(std::move(cmd));
    }
    return script;
}

void check_script(const OpScript &script, std::size_t num_vertices, const std::string &source) {
    std::size_t n = num_vertices;
    for (const Command &cmd : script.commands) {
        for (std::size_t v : cmd.vertices) {
            check_vertex(cmd, v, n, source);
        }
        for (const auto *s : {&cmd.set1, &cmd.set2}) {
            for (std::size_t v : *s) {
                check_vertex(cmd, v, n, source);
            }
        }
        if (!cmd.cycles.empty()) {
            try {
                cycles_to_permutation(cmd.cycles, n);
            } catch (const std::exception &e) {
                throw ParseError(source, cmd.line, e.what());
            }
        }
        if (cmd.name == "addvertex") {
            n++;
        } else if (cmd.name == "delete") {
            n--;
        }
    }
}

std::vector<std::size_t> cycles_to_permutation(const std::vector<std::vector<std::size_t>> &cycles,
                                               std::size_t n) {
    std::vector<std::size_t> perm(n);
    for (std::size_t v = 0; v < n; v++) {
        perm[v] = v;
    }
    std::vector<bool> seen(n, false);
    for (const auto &cycle : cycles) {
        for (std::size_t i = 0; i < cycle.size(); i++) {
            std::size_t v = cycle[i];
            if (v >= n) {
                throw PreconditionError("cycle element " + std::to_string(v) + " out of range for " +
                                        std::to_string(n) + " vertices");
            }
            if (seen[v]) {
                throw PreconditionError("vertex " + std::to_string(v) + " appears in more than one cycle position");
            }
            seen[v] = true;
            perm[v] = cycle[(i + 1) % cycle.size()];
        }
    }
    return perm;
}

}  // namespace qgraph::cli
