#pragma once

#include "gpss/point.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace gpss {

/// A problem instance: duplicate-free point list plus the target size k.
/// The dual parameter h = n - k is derived, not stored.
struct Instance {
    std::vector<Point> points;
    long long k = 0;

    Instance() = default;
    Instance(std::vector<Point> pts, long long target) : points(std::move(pts)), k(target) {
        if (k < 0) throw std::invalid_argument("target k must be non-negative");
        std::vector<Point> sorted = points;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("instance points must be pairwise distinct");
    }

    long long n() const { return static_cast<long long>(points.size()); }
    long long h() const { return n() - k; }
};

}  // namespace gpss
