#pragma once

#include "gpss/predicates.hpp"

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace gpss {

/// Order type of an ordered point sequence: the orientation sign of every
/// index triple i < j < k, stored in lexicographic triple order.
struct OrderType {
    int n = 0;
    std::vector<std::int8_t> sigma;

    /// Lexicographic rank of the triple (i, j, k), 0-based, i < j < k.
    static std::size_t rank(int n, int i, int j, int k) {
        auto choose2 = [](long long m) { return m * (m - 1) / 2; };
        auto choose3 = [&](long long m) { return m * (m - 1) * (m - 2) / 6; };
        const long long before_i = choose3(n) - choose3(n - i);
        const long long before_j = choose2(n - 1 - i) - choose2(n - j);
        return static_cast<std::size_t>(before_i + before_j + (k - j - 1));
    }

    std::int8_t at(int i, int j, int k) const {
        if (!(0 <= i && i < j && j < k && k < n))
            throw std::out_of_range("order type triple out of range");
        return sigma[rank(n, i, j, k)];
    }
};

inline OrderType order_type(std::span<const Point> points) {
    const int n = static_cast<int>(points.size());
    {
        std::vector<Point> sorted(points.begin(), points.end());
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("order type requires pairwise distinct points");
    }
    OrderType ot;
    ot.n = n;
    ot.sigma.reserve(n >= 3 ? static_cast<std::size_t>(n) * (n - 1) * (n - 2) / 6 : 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                ot.sigma.push_back(static_cast<std::int8_t>(
                    orientation(points[i], points[j], points[k])));
    return ot;
}

/// Identity of order types under the given orderings. A full search over
/// reorderings (combinatorial equivalence) is deliberately not performed.
inline bool same_order_type(const OrderType& a, const OrderType& b) {
    return a.n == b.n && a.sigma == b.sigma;
}

}  // namespace gpss
