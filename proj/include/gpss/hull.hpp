#pragma once

#include "gpss/predicates.hpp"

#include <algorithm>
#include <span>
#include <vector>

namespace gpss {

/// Extreme points of the convex hull (strictly convex vertices only; points
/// interior to hull edges do not count). Monotone chain with strict turns.
inline std::vector<Point> convex_hull_vertices(std::span<const Point> points) {
    std::vector<Point> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const int n = static_cast<int>(pts.size());
    if (n <= 2) return pts;
    std::vector<Point> hull(2 * n);
    int h = 0;
    for (int i = 0; i < n; ++i) {  // lower chain
        while (h >= 2 && orientation(hull[h - 2], hull[h - 1], pts[i]) <= 0) --h;
        hull[h++] = pts[i];
    }
    for (int i = n - 2, lower = h + 1; i >= 0; --i) {  // upper chain
        while (h >= lower && orientation(hull[h - 2], hull[h - 1], pts[i]) <= 0) --h;
        hull[h++] = pts[i];
    }
    hull.resize(h - 1);
    return hull;
}

/// Count of points that are not hull vertices (the paper's gamma).
inline long long inner_point_count(std::span<const Point> points) {
    return static_cast<long long>(points.size()) -
           static_cast<long long>(convex_hull_vertices(points).size());
}

}  // namespace gpss
