#pragma once

#include "gpss/point.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>

namespace gpss {

/// A line ax + by = c as a reduced, sign-normalized integer triple:
/// gcd(|a|,|b|,|c|) = 1 and a > 0, or a = 0 and b > 0. Every pair of
/// distinct points on one geometric line maps to the same triple, which
/// makes it usable as an exact grouping key.
struct CanonicalLine {
    BigInt a;
    BigInt b;
    BigInt c;

    friend bool operator==(const CanonicalLine& l, const CanonicalLine& r) {
        return l.a == r.a && l.b == r.b && l.c == r.c;
    }
    friend bool operator!=(const CanonicalLine& l, const CanonicalLine& r) { return !(l == r); }
    friend bool operator<(const CanonicalLine& l, const CanonicalLine& r) {
        if (l.a != r.a) return l.a < r.a;
        if (l.b != r.b) return l.b < r.b;
        return l.c < r.c;
    }

    bool contains(const Point& p) const {
        // a*xn/xd + b*yn/yd == c, cross-multiplied by the positive xd*yd.
        return a * p.x.num() * p.y.den() + b * p.y.num() * p.x.den() ==
               c * p.x.den() * p.y.den();
    }

    std::string str() const { return a.str() + " " + b.str() + " " + c.str(); }
};

/// Line through two distinct points. Throws on identical points.
inline CanonicalLine canonical_line(const Point& p, const Point& q) {
    if (p == q) throw std::invalid_argument("degenerate line: identical points");
    // Normal form over rationals: a = qy - py, b = px - qx, c = a*px + b*py.
    const Rational ar = q.y - p.y;
    const Rational br = p.x - q.x;
    const Rational cr = ar * p.x + br * p.y;
    // Clear denominators (all positive), then divide out the common gcd.
    const BigInt scale = lcm(lcm(ar.den(), br.den()), cr.den());
    BigInt a = ar.num() * (scale / ar.den());
    BigInt b = br.num() * (scale / br.den());
    BigInt c = cr.num() * (scale / cr.den());
    BigInt g = gcd(gcd(abs(a), abs(b)), abs(c));
    a /= g;
    b /= g;
    c /= g;
    if (a < 0 || (a.is_zero() && b < 0)) {
        a = -a;
        b = -b;
        c = -c;
    }
    return CanonicalLine{std::move(a), std::move(b), std::move(c)};
}

/// Intersection point of two lines; nullopt when parallel (or identical).
inline std::optional<Point> line_intersection(const CanonicalLine& l, const CanonicalLine& m) {
    const BigInt det = l.a * m.b - m.a * l.b;
    if (det.is_zero()) return std::nullopt;
    Rational x(l.c * m.b - m.c * l.b, det);
    Rational y(l.a * m.c - m.a * l.c, det);
    return Point{std::move(x), std::move(y)};
}

}  // namespace gpss
