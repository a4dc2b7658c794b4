#pragma once

#include "gpss/graph.hpp"
#include "gpss/instance.hpp"
#include "gpss/line.hpp"
#include "gpss/line_detect.hpp"
#include "gpss/predicates.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

namespace gpss {

/// Output of the graph-to-points transformation: one convex-position point
/// per vertex, one blocker per edge, and the combined instance point list
/// (convex points first, then blockers in sorted edge order).
struct PhiOutput {
    std::vector<Point> convex_points;
    std::vector<Point> blockers;
    std::vector<Point> instance;
};

namespace detail {

// Position of z along the segment pq, as the parameter t with
// z = p + t*(q - p); only meaningful when z lies on line(p, q).
inline Rational segment_parameter(const Point& p, const Point& q, const Point& z) {
    const Rational dx = q.x - p.x;
    if (!dx.is_zero()) return (z.x - p.x) / dx;
    return (z.y - p.y) / (q.y - p.y);
}

}  // namespace detail

/// Maps a graph to a point set in which the only collinear triples are
/// (p_i, p_j, b_e) for edges e = {v_i, v_j}: vertices become rational
/// points on the unit circle, and each edge gets a blocker placed on its
/// chord, dodging every line spanned by previously placed points.
inline PhiOutput phi(const Graph& g) {
    if (g.n < 1) throw std::invalid_argument("phi requires at least one vertex");
    PhiOutput out;
    out.convex_points.reserve(g.n);
    for (long long j = 1; j <= g.n; ++j) {
        const BigInt jj = j;
        const BigInt den = 1 + jj * jj;
        out.convex_points.push_back(
            Point{Rational(2 * jj, den), Rational(1 - jj * jj, den)});
    }
    for (const auto& [vi, vj] : g.edges) {
        const Point& pi = out.convex_points[vi - 1];
        const Point& pj = out.convex_points[vj - 1];
        const CanonicalLine chord = canonical_line(pi, pj);

        // Every line through two already-placed points that could spoil the
        // blocker: blocker pairs, convex pairs excluding the endpoints, and
        // blocker-convex pairs excluding the endpoints.
        std::vector<std::pair<const Point*, const Point*>> spoilers;
        const auto& bs = out.blockers;
        for (std::size_t a = 0; a < bs.size(); ++a)
            for (std::size_t b = a + 1; b < bs.size(); ++b)
                spoilers.emplace_back(&bs[a], &bs[b]);
        std::vector<const Point*> other_convex;
        for (int v = 1; v <= g.n; ++v)
            if (v != vi && v != vj) other_convex.push_back(&out.convex_points[v - 1]);
        for (std::size_t a = 0; a < other_convex.size(); ++a)
            for (std::size_t b = a + 1; b < other_convex.size(); ++b)
                spoilers.emplace_back(other_convex[a], other_convex[b]);
        for (const auto& blocker : bs)
            for (const Point* c : other_convex) spoilers.emplace_back(&blocker, c);

        // Mark where spoiler lines cross the open chord; the blocker is the
        // midpoint of p_i and the first mark, or the chord midpoint if none.
        std::optional<Rational> first_mark;
        for (const auto& [u, v] : spoilers) {
            const auto crossing = line_intersection(chord, canonical_line(*u, *v));
            if (!crossing) continue;
            const Rational t = detail::segment_parameter(pi, pj, *crossing);
            if (t.sign() <= 0 || t >= Rational(1)) continue;
            if (!first_mark || t < *first_mark) first_mark = t;
        }
        Point blocker;
        if (first_mark) {
            const Rational half = *first_mark / Rational(2);
            blocker = Point{pi.x + (pj.x - pi.x) * half, pi.y + (pj.y - pi.y) * half};
        } else {
            blocker = midpoint(pi, pj);
        }
        out.blockers.push_back(std::move(blocker));
    }
    out.instance = out.convex_points;
    out.instance.insert(out.instance.end(), out.blockers.begin(), out.blockers.end());
    return out;
}

/// Checks conditions on a transformation output by exhaustive scan:
/// (I)  a blocker is collinear with convex points p_i, p_j only for its own
///      edge, (II) no two blockers are collinear with a convex point,
/// (III) the blockers are in general position; plus: no four points of the
/// combined set are collinear.
inline bool validate_phi(const Graph& g, const PhiOutput& out) {
    const auto& cs = out.convex_points;
    const auto& bs = out.blockers;
    std::set<std::pair<int, int>> edge_set(g.edges.begin(), g.edges.end());
    // Condition I
    for (int e = 0; e < static_cast<int>(bs.size()); ++e)
        for (int i = 0; i < static_cast<int>(cs.size()); ++i)
            for (int j = i + 1; j < static_cast<int>(cs.size()); ++j)
                if (collinear(bs[e], cs[i], cs[j]) &&
                    !(g.edges[e] == std::make_pair(i + 1, j + 1)))
                    return false;
    // Condition II
    for (std::size_t a = 0; a < bs.size(); ++a)
        for (std::size_t b = a + 1; b < bs.size(); ++b)
            for (const auto& c : cs)
                if (collinear(bs[a], bs[b], c)) return false;
    // Condition III
    for (std::size_t a = 0; a < bs.size(); ++a)
        for (std::size_t b = a + 1; b < bs.size(); ++b)
            for (std::size_t c = b + 1; c < bs.size(); ++c)
                if (collinear(bs[a], bs[b], bs[c])) return false;
    // No four collinear
    for (const auto& group : collinear_groups(out.instance))
        if (group.size() >= 4) return false;
    return true;
}

/// Independent Set reduction: G has an independent set of size k iff the
/// transformed point set has k + |E| points in general position.
inline Instance reduce_independent_set(const Graph& g, long long k) {
    if (k < 0 || k > g.n) throw std::invalid_argument("independent set size out of range");
    return Instance(phi(g).instance, k + g.m());
}

/// Vertex Cover reduction: target k' = n + m - k, so the dual parameter of
/// the produced instance equals the sought cover size k exactly.
inline Instance reduce_vertex_cover(const Graph& g, long long k) {
    if (k < 0 || k > g.n) throw std::invalid_argument("vertex cover size out of range");
    Instance inst(phi(g).instance, g.n + g.m() - k);
    if (inst.h() != k) throw std::logic_error("vertex cover reduction: h != k");
    return inst;
}

/// The n*n integer grid {0..n-1}^2 in row-major order.
inline std::vector<Point> gen_grid(int n) {
    if (n < 1) throw std::invalid_argument("grid size must be positive");
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(n) * n);
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x) pts.push_back(Point{Rational(x), Rational(y)});
    return pts;
}

namespace detail {

// Exactly uniform draw from [0, bound) with a fixed-sequence generator, so
// outputs are identical across platforms.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t cut = std::numeric_limits<std::uint64_t>::max() / bound * bound;
    for (;;) {
        const std::uint64_t v = rng();
        if (v < cut) return v % bound;
    }
}

}  // namespace detail

/// n distinct integer points drawn uniformly without replacement from
/// {0..coord_bound}^2, in draw order; deterministic per seed.
inline std::vector<Point> gen_random(int n, int coord_bound, std::uint64_t seed) {
    if (n < 0 || coord_bound < 1) throw std::invalid_argument("bad generator parameters");
    const std::uint64_t side = static_cast<std::uint64_t>(coord_bound) + 1;
    if (static_cast<std::uint64_t>(n) > side * side)
        throw std::invalid_argument("more points requested than distinct cells exist");
    std::mt19937_64 rng(seed);
    std::set<std::uint64_t> taken;
    std::vector<Point> pts;
    pts.reserve(n);
    while (static_cast<int>(pts.size()) < n) {
        const std::uint64_t cell = detail::uniform_below(rng, side * side);
        if (!taken.insert(cell).second) continue;
        pts.push_back(Point{Rational(static_cast<long long>(cell % side)),
                            Rational(static_cast<long long>(cell / side))});
    }
    return pts;
}

}  // namespace gpss
