#pragma once

#include "gpss/rational.hpp"

#include <string>

namespace gpss {

/// Planar point with exact rational coordinates.
/// Ordered lexicographically by (x, y) for deterministic iteration.
struct Point {
    Rational x;
    Rational y;

    friend bool operator==(const Point& a, const Point& b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
    friend bool operator<(const Point& a, const Point& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }

    std::string str() const { return x.str() + " " + y.str(); }
};

inline Point midpoint(const Point& p, const Point& q) {
    const Rational half(1, 2);
    return Point{(p.x + q.x) * half, (p.y + q.y) * half};
}

}  // namespace gpss
