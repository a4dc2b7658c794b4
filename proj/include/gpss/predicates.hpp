#pragma once

#include "gpss/point.hpp"

namespace gpss {

/// Sign of the cross product (q - p) x (r - p): +1 counter-clockwise,
/// -1 clockwise, 0 collinear (including coincident arguments). Exact.
///
/// Evaluated over cross-multiplied numerators so no intermediate gcd
/// reduction happens; denominators are positive by invariant.
inline int orientation(const Point& p, const Point& q, const Point& r) {
    // q - p = a1/b1 (x), a3/b3 (y);  r - p = a4/b4 (x), a2/b2 (y)
    const BigInt a1 = q.x.num() * p.x.den() - p.x.num() * q.x.den();
    const BigInt b1 = q.x.den() * p.x.den();
    const BigInt a2 = r.y.num() * p.y.den() - p.y.num() * r.y.den();
    const BigInt b2 = r.y.den() * p.y.den();
    const BigInt a3 = q.y.num() * p.y.den() - p.y.num() * q.y.den();
    const BigInt b3 = q.y.den() * p.y.den();
    const BigInt a4 = r.x.num() * p.x.den() - p.x.num() * r.x.den();
    const BigInt b4 = r.x.den() * p.x.den();
    const BigInt det = a1 * a2 * b3 * b4 - a3 * a4 * b1 * b2;
    return det.sign();
}

/// True iff p, q, r lie on one line; invariant under argument permutation.
inline bool collinear(const Point& p, const Point& q, const Point& r) {
    return orientation(p, q, r) == 0;
}

}  // namespace gpss
