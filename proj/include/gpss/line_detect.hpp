#pragma once

#include "gpss/line.hpp"
#include "gpss/predicates.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

namespace gpss {

/// A maximal set of collinear input points: every index in members lies on
/// line, and no other input point does.
struct LineGroup {
    CanonicalLine line;
    std::vector<int> members;  // sorted ascending

    int size() const { return static_cast<int>(members.size()); }
};

/// All maximal lines through at least min_size input points, sorted by
/// CanonicalLine order, members sorted ascending. Grouping every point pair
/// by its canonical line key makes the groups maximal by construction.
inline std::vector<LineGroup> line_groups(std::span<const Point> points, int min_size) {
    if (min_size < 2) throw std::invalid_argument("line_groups requires min_size >= 2");
    const int n = static_cast<int>(points.size());
    std::map<CanonicalLine, std::vector<int>> by_line;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            auto& members = by_line[canonical_line(points[i], points[j])];
            members.push_back(i);
            members.push_back(j);
        }
    }
    std::vector<LineGroup> groups;
    for (auto& [line, members] : by_line) {
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        if (static_cast<int>(members.size()) >= min_size)
            groups.push_back(LineGroup{line, std::move(members)});
    }
    return groups;
}

/// Maximal lines with >= 3 points: the collinearity structure of the set.
inline std::vector<LineGroup> collinear_groups(std::span<const Point> points) {
    return line_groups(points, 3);
}

/// Collinear groups with at least threshold members (threshold >= 3).
inline std::vector<LineGroup> heavy_lines(std::span<const Point> points, long long threshold) {
    if (threshold < 3) throw std::invalid_argument("heavy_lines requires threshold >= 3");
    std::vector<LineGroup> heavy;
    for (auto& g : collinear_groups(points))
        if (g.size() >= threshold) heavy.push_back(std::move(g));
    return heavy;
}

/// Maximum number of points on one line; min(n, 2) when no 3 are collinear.
inline int collinearity(std::span<const Point> points) {
    int best = static_cast<int>(std::min<std::size_t>(points.size(), 2));
    for (const auto& g : collinear_groups(points)) best = std::max(best, g.size());
    return best;
}

/// Per-point conflict statistics: measure(p) = sum over >=3-point lines L
/// through p of (|L| - 2), plus the indices of those lines in groups.
struct ConflictProfile {
    std::vector<LineGroup> groups;
    std::vector<long long> measure;            // one entry per point
    std::vector<std::vector<int>> lines;       // indices into groups, per point

    bool is_free(int point) const { return measure[point] == 0; }
};

inline ConflictProfile conflict_profile(std::span<const Point> points) {
    ConflictProfile profile;
    profile.groups = collinear_groups(points);
    profile.measure.assign(points.size(), 0);
    profile.lines.assign(points.size(), {});
    for (int g = 0; g < static_cast<int>(profile.groups.size()); ++g) {
        const auto& group = profile.groups[g];
        for (int member : group.members) {
            profile.measure[member] += group.size() - 2;
            profile.lines[member].push_back(g);
        }
    }
    return profile;
}

}  // namespace gpss
