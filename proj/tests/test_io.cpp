#include "gpss/io.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using gpss::Graph;
using gpss::parse_graph;
using gpss::parse_index_list;
using gpss::parse_points;
using gpss::ParseError;
using gpss::Point;
using gpss::Rational;
using gpss::render_points;

TEST_CASE("point files parse integers, fractions and comments") {
    const auto pts = parse_points("# header comment\n0 0\n1/2 -3   # trailing\n\n-2 5/7\n");
    REQUIRE(pts.size() == 3);
    CHECK(pts[0] == Point{Rational(0), Rational(0)});
    CHECK(pts[1] == Point{Rational(gpss::BigInt(1), gpss::BigInt(2)), Rational(-3)});
    CHECK(pts[2] == Point{Rational(-2), Rational(gpss::BigInt(5), gpss::BigInt(7))});
}

TEST_CASE("point file errors carry line numbers") {
    try {
        parse_points("0 0\n1 2 3\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    try {
        parse_points("0 0\n1 1\n0 0\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(std::string(e.what()).find("duplicate point") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_points("1 x\n"), ParseError);
    CHECK_THROWS_AS(parse_points("1/0 2\n"), ParseError);
}

TEST_CASE("render/parse round trip is bit exact") {
    std::mt19937_64 rng(43);
    std::vector<Point> pts;
    while (pts.size() < 50) {
        Point p = oracle::random_point(rng);
        if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    const std::string text = render_points(pts);
    CHECK(parse_points(text) == pts);
    CHECK(render_points(parse_points(text)) == text);
}

TEST_CASE("graph files parse and validate") {
    const Graph g = parse_graph("3 3\n1 2\n1 3\n2 3\n");
    CHECK(g.n == 3);
    CHECK(g.m() == 3);
    CHECK(g.edges == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});

    // edges are normalized to (low, high)
    const Graph rev = parse_graph("4 2\n3 1\n4 2\n");
    CHECK(rev.edges == std::vector<std::pair<int, int>>{{1, 3}, {2, 4}});
}

TEST_CASE("graph file errors carry line numbers") {
    try {
        parse_graph("3 2\n1 2\n2 2\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(std::string(e.what()).find("self-loop") != std::string::npos);
    }
    try {
        parse_graph("3 2\n1 2\n2 1\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(std::string(e.what()).find("duplicate edge") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_graph("3 2\n1 2\n1 4\n"), ParseError);  // out of range
    CHECK_THROWS_AS(parse_graph("3 2\n1 2\n"), ParseError);       // count mismatch
    CHECK_THROWS_AS(parse_graph(""), ParseError);                 // missing header
}

TEST_CASE("index lists parse across lines with comments") {
    CHECK(parse_index_list("0 3 5\n# comment\n7\n") == std::vector<int>{0, 3, 5, 7});
    CHECK(parse_index_list("").empty());
    CHECK_THROWS_AS(parse_index_list("1 -2\n"), ParseError);
    CHECK_THROWS_AS(parse_index_list("1 two\n"), ParseError);
}
