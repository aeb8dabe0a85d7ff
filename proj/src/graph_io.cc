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

#include "qgraph/graph_io.h"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "qgraph/errors.h"

namespace qgraph {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            i++;
        }
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
            i++;
        }
        if (i > start) {
            tokens.push_back(line.substr(start, i - start));
        }
    }
    return tokens;
}

std::optional<std::size_t> parse_index(std::string_view token) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        return std::nullopt;
    }
    return value;
}

}  // namespace

Graph parse_graph(std::string_view text, const std::string &source) {
    std::optional<Graph> g;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        line_no++;

        auto tokens = split_ws(line);
        if (tokens.empty() || tokens[0].starts_with('#')) {
            continue;
        }
        if (tokens[0] == "graph") {
            if (g) {
                throw ParseError(source, line_no, "duplicate 'graph' header");
            }
            if (tokens.size() != 2) {
                throw ParseError(source, line_no, "expected 'graph <n>'");
            }
            auto n = parse_index(tokens[1]);
            if (!n) {
                throw ParseError(source, line_no, "malformed vertex count '" + std::string(tokens[1]) + "'");
            }
            g.emplace(*n);
        } else if (tokens[0] == "edge") {
            if (!g) {
                throw ParseError(source, line_no, "missing 'graph <n>' header before first edge");
            }
            if (tokens.size() != 3) {
                throw ParseError(source, line_no, "expected 'edge <u> <v>'");
            }
            auto u = parse_index(tokens[1]);
            auto v = parse_index(tokens[2]);
            if (!u || !v) {
                throw ParseError(source, line_no, "malformed vertex index");
            }
            if (*u >= g->num_vertices() || *v >= g->num_vertices()) {
                throw ParseError(source, line_no,
                                 "vertex index out of range for graph " + std::to_string(g->num_vertices()));
            }
            g->toggle_edge(*u, *v);
        } else {
            throw ParseError(source, line_no, "unknown directive '" + std::string(tokens[0]) + "'");
        }
        if (end == text.size()) {
            break;
        }
    }
    if (!g) {
        throw ParseError(source, 1, "missing 'graph <n>' header");
    }
    return *g;
}

std::string format_graph(const Graph &g) {
    std::ostringstream out;
    out << "graph " << g.num_vertices() << "\n";
    for (std::size_t u = 0; u < g.num_vertices(); u++) {
        if (g.has_loop(u)) {
            out << "edge " << u << " " << u << "\n";
        }
        for (std::size_t v : g.neighbor_list(u)) {
            if (v > u) {
                out << "edge " << u << " " << v << "\n";
            }
        }
    }
    return out.str();
}

Graph load_graph_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(path, 0, "cannot open file");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str(), path);
}

}  // namespace qgraph
