#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gpss {

/// Simple undirected graph: vertex count plus a sorted set of edges.
/// Vertices are 1-based. No self-loops, no duplicate edges.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // each (i, j) with i < j, sorted

    Graph() = default;
    Graph(int vertex_count, std::vector<std::pair<int, int>> edge_list)
        : n(vertex_count) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
        edges.reserve(edge_list.size());
        for (auto [a, b] : edge_list) {
            if (a > b) std::swap(a, b);
            if (a == b) throw std::invalid_argument("self-loop");
            if (a < 1 || b > n) throw std::invalid_argument("edge endpoint out of range");
            edges.emplace_back(a, b);
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw std::invalid_argument("duplicate edge");
    }

    int m() const { return static_cast<int>(edges.size()); }
};

}  // namespace gpss
