#include "gpss/order_type.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using gpss::order_type;
using gpss::OrderType;
using gpss::Point;
using gpss::Rational;
using gpss::same_order_type;

namespace {

Point pt(long long x, long long y) { return Point{Rational(x), Rational(y)}; }

std::vector<Point> unit_square() {
    return {pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 1)};
}

}  // namespace

TEST_CASE("order type of a single triangle") {
    const std::vector<Point> ccw{pt(0, 0), pt(1, 0), pt(0, 1)};
    const OrderType ot = order_type(ccw);
    CHECK(ot.n == 3);
    REQUIRE(ot.sigma.size() == 1);
    CHECK(ot.at(0, 1, 2) == 1);

    const OrderType degenerate = order_type(std::vector<Point>{pt(0, 0), pt(1, 0), pt(2, 0)});
    CHECK(degenerate.at(0, 1, 2) == 0);
}

TEST_CASE("order type of the unit square corners") {
    // Frozen from direct determinant evaluation of all four triples.
    const OrderType ot = order_type(unit_square());
    REQUIRE(ot.sigma.size() == 4);
    CHECK(ot.at(0, 1, 2) == 1);
    CHECK(ot.at(0, 1, 3) == 1);
    CHECK(ot.at(0, 2, 3) == -1);
    CHECK(ot.at(1, 2, 3) == -1);
}

TEST_CASE("sigma is stored over exactly C(n,3) triples and matches orientation") {
    std::mt19937_64 rng(23);
    std::vector<Point> pts;
    while (pts.size() < 7) {
        const Point p = oracle::random_point(rng);
        if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    const OrderType ot = order_type(pts);
    CHECK(ot.sigma.size() == 35);
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j)
            for (int k = j + 1; k < 7; ++k)
                CHECK(ot.at(i, j, k) == gpss::orientation(pts[i], pts[j], pts[k]));
}

TEST_CASE("duplicate points are rejected") {
    CHECK_THROWS_AS(order_type(std::vector<Point>{pt(0, 0), pt(1, 1), pt(0, 0)}),
                    std::invalid_argument);
}

TEST_CASE("same_order_type is reflexive and sees size mismatches") {
    const OrderType a = order_type(unit_square());
    CHECK(same_order_type(a, a));
    const OrderType b = order_type(std::vector<Point>{pt(0, 0), pt(1, 0), pt(0, 1)});
    CHECK_FALSE(same_order_type(a, b));
}

TEST_CASE("positive-determinant affine maps preserve the order type") {
    std::mt19937_64 rng(29);
    const std::vector<Point> pts = unit_square();
    for (int trial = 0; trial < 20; ++trial) {
        const auto map = oracle::random_positive_affine(rng);
        std::vector<Point> mapped;
        for (const auto& p : pts) mapped.push_back(map.apply(p));
        CHECK(same_order_type(order_type(pts), order_type(mapped)));
    }

    // The x-axis mirror flips every nonzero sign.
    std::vector<Point> mirrored;
    for (const auto& p : pts) mirrored.push_back(Point{-p.x, p.y});
    const OrderType a = order_type(pts);
    const OrderType m = order_type(mirrored);
    CHECK_FALSE(same_order_type(a, m));
    REQUIRE(a.sigma.size() == m.sigma.size());
    for (std::size_t i = 0; i < a.sigma.size(); ++i) CHECK(a.sigma[i] == -m.sigma[i]);
}

TEST_CASE("an x-translation by 2x+1 style maps keeps the order type") {
    // (x, y) -> (2x + 1, y) has determinant 2 > 0.
    const std::vector<Point> pts = unit_square();
    std::vector<Point> mapped;
    for (const auto& p : pts) mapped.push_back(Point{p.x * Rational(2) + Rational(1), p.y});
    CHECK(same_order_type(order_type(pts), order_type(mapped)));
}
