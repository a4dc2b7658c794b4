#pragma once

#include "gpss/graph.hpp"
#include "gpss/point.hpp"

#include <fstream>
#include <map>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gpss {

/// Input error carrying the 1-based line number it was found on.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

namespace detail {

// Strips '#' comments, yields whitespace-separated tokens per line.
inline std::vector<std::string> line_tokens(std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos)
        line = line.substr(0, hash);
    std::istringstream in{std::string(line)};
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;) tokens.push_back(std::move(tok));
    return tokens;
}

template <typename Fn>
void for_each_token_line(std::string_view text, Fn&& fn) {
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        ++line_no;
        auto tokens = line_tokens(text.substr(pos, eol - pos));
        if (!tokens.empty()) fn(line_no, tokens);
        pos = eol + 1;
    }
}

}  // namespace detail

/// Point file: one point per line, "X Y" with X, Y decimal integers or
/// fractions "num/den"; '#' starts a comment. Duplicate points are errors.
inline std::vector<Point> parse_points(std::string_view text) {
    std::vector<Point> points;
    std::map<Point, int> seen;
    detail::for_each_token_line(text, [&](int line_no, const std::vector<std::string>& toks) {
        if (toks.size() != 2)
            throw ParseError(line_no, "expected two coordinates, got " +
                                          std::to_string(toks.size()) + " tokens");
        Point p;
        try {
            p.x = Rational::parse(toks[0]);
            p.y = Rational::parse(toks[1]);
        } catch (const std::invalid_argument& e) {
            throw ParseError(line_no, e.what());
        }
        if (auto [it, inserted] = seen.emplace(p, line_no); !inserted)
            throw ParseError(line_no, "duplicate point (first seen on line " +
                                          std::to_string(it->second) + ")");
        points.push_back(std::move(p));
    });
    return points;
}

inline std::string render_points(std::span<const Point> points) {
    std::string out;
    for (const auto& p : points) {
        out += p.x.str();
        out += ' ';
        out += p.y.str();
        out += '\n';
    }
    return out;
}

/// Edge-list graph format: first line "n m", then m lines "i j" (1-based).
inline Graph parse_graph(std::string_view text) {
    int n = -1;
    long long m = -1;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> edge_lines;
    detail::for_each_token_line(text, [&](int line_no, const std::vector<std::string>& toks) {
        const auto parse_int = [&](const std::string& tok) {
            try {
                std::size_t used = 0;
                long long v = std::stoll(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                return v;
            } catch (const std::exception&) {
                throw ParseError(line_no, "malformed integer '" + tok + "'");
            }
        };
        if (n < 0) {
            if (toks.size() != 2) throw ParseError(line_no, "expected header 'n m'");
            const long long nv = parse_int(toks[0]);
            const long long mv = parse_int(toks[1]);
            if (nv < 0 || mv < 0) throw ParseError(line_no, "negative header value");
            n = static_cast<int>(nv);
            m = mv;
            return;
        }
        if (toks.size() != 2) throw ParseError(line_no, "expected edge 'i j'");
        const long long a = parse_int(toks[0]);
        const long long b = parse_int(toks[1]);
        if (a < 1 || a > n || b < 1 || b > n)
            throw ParseError(line_no, "edge endpoint out of range 1.." + std::to_string(n));
        if (a == b) throw ParseError(line_no, "self-loop");
        auto e = std::minmax(static_cast<int>(a), static_cast<int>(b));
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (edges[i] == std::make_pair(e.first, e.second))
                throw ParseError(line_no, "duplicate edge (first seen on line " +
                                              std::to_string(edge_lines[i]) + ")");
        edges.emplace_back(e.first, e.second);
        edge_lines.push_back(line_no);
    });
    if (n < 0) throw ParseError(1, "missing header 'n m'");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError(1, "header announces " + std::to_string(m) + " edges, found " +
                                std::to_string(edges.size()));
    return Graph(n, std::move(edges));
}

/// Whitespace/newline-separated non-negative indices; '#' comments allowed.
inline std::vector<int> parse_index_list(std::string_view text) {
    std::vector<int> indices;
    detail::for_each_token_line(text, [&](int line_no, const std::vector<std::string>& toks) {
        for (const auto& tok : toks) {
            try {
                std::size_t used = 0;
                long long v = std::stoll(tok, &used);
                if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
                indices.push_back(static_cast<int>(v));
            } catch (const std::exception&) {
                throw ParseError(line_no, "malformed index '" + tok + "'");
            }
        }
    });
    return indices;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

}  // namespace gpss
