#pragma once

#include "gpss/instance.hpp"
#include "gpss/line_detect.hpp"
#include "gpss/rational.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace gpss {

enum class Verdict { Reduced, DecidedYes, DecidedNo };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Reduced: return "reduced";
        case Verdict::DecidedYes: return "yes";
        case Verdict::DecidedNo: return "no";
    }
    return "?";
}

/// One heavy-line firing: every point on line removed, k decremented by 2.
struct HeavyLineStep {
    CanonicalLine line;
    std::vector<Point> removed;
};

/// One point removed for being in conflict with nothing; k decremented by 1.
struct FreePointStep {
    Point removed;
};

/// One point removed for exceeding the conflict budget; k unchanged.
struct ConflictPointStep {
    Point removed;
    long long measure = 0;
};

using KernelStep = std::variant<HeavyLineStep, FreePointStep, ConflictPointStep>;

/// Ordered log of rule applications. Replaying it against the original
/// instance reproduces the kernel; replaying it backwards lifts solutions.
struct KernelTrace {
    std::vector<KernelStep> steps;

    long long heavy_line_count() const { return count<HeavyLineStep>(); }
    long long free_point_count() const { return count<FreePointStep>(); }
    long long conflict_point_count() const { return count<ConflictPointStep>(); }

private:
    template <typename T>
    long long count() const {
        long long c = 0;
        for (const auto& s : steps)
            if (std::holds_alternative<T>(s)) ++c;
        return c;
    }
};

struct KernelResult {
    Instance kernel;
    KernelTrace trace;
    Verdict verdict = Verdict::Reduced;
};

/// Rule 4.1 firing threshold: a line with at least C(k-2,2)+2 current
/// points is removed wholesale. Defined for k >= 3 (k = 3 gives 2).
inline long long heavy_line_threshold(long long k) {
    const long long m = k - 2;
    return m * (m - 1) / 2 + 2;
}

namespace detail {

// Uniform terminal checks: k > n is a no-instance; k <= 2 is a yes-instance
// (at most two points are vacuously in general position).
inline std::optional<Verdict> forced_verdict(long long n, long long k) {
    if (k > n) return Verdict::DecidedNo;
    if (k <= 2) return Verdict::DecidedYes;
    return std::nullopt;
}

inline KernelResult finish(std::vector<Point> points, long long k, KernelTrace trace) {
    KernelResult result;
    result.verdict = forced_verdict(static_cast<long long>(points.size()), k)
                         .value_or(Verdict::Reduced);
    result.kernel = Instance(std::move(points), std::max<long long>(k, 0));
    result.trace = std::move(trace);
    return result;
}

}  // namespace detail

/// Heavy-line rule, exhaustively: while some line holds at least
/// C(k-2,2)+2 of the current points, remove all of them and set k := k-2.
/// The threshold is recomputed as k drops; lines are re-derived from the
/// surviving points, so the loop is a true fixpoint.
inline KernelResult apply_rule_heavy_line(const Instance& inst) {
    std::vector<Point> pts = inst.points;
    long long k = inst.k;
    KernelTrace trace;
    while (!detail::forced_verdict(static_cast<long long>(pts.size()), k)) {
        const long long threshold = heavy_line_threshold(k);
        // Threshold 2 (k = 3) needs 2-point lines, which collinear_groups
        // does not report; group down to pairs in that case.
        const auto groups = line_groups(pts, threshold >= 3 ? 3 : 2);
        const LineGroup* target = nullptr;
        for (const auto& g : groups) {
            if (g.size() >= threshold) {
                target = &g;
                break;  // groups are in CanonicalLine order: first is smallest
            }
        }
        if (!target) break;
        HeavyLineStep step;
        step.line = target->line;
        for (int idx : target->members) step.removed.push_back(pts[idx]);
        std::vector<Point> survivors;
        survivors.reserve(pts.size() - target->members.size());
        for (int i = 0, drop = 0; i < static_cast<int>(pts.size()); ++i) {
            if (drop < static_cast<int>(target->members.size()) &&
                target->members[drop] == i) {
                ++drop;
                continue;
            }
            survivors.push_back(std::move(pts[i]));
        }
        pts = std::move(survivors);
        k -= 2;
        trace.steps.push_back(std::move(step));
    }
    return detail::finish(std::move(pts), k, std::move(trace));
}

/// Rule 4.7: delete every point in conflict with nothing (measure 0) and
/// decrease k by one per deletion. One pass is a fixpoint: removing points
/// that lie on no 3-point line cannot create or free other conflicts.
inline KernelResult apply_rule_free_point(const Instance& inst) {
    const auto profile = conflict_profile(inst.points);
    std::vector<Point> survivors;
    long long k = inst.k;
    KernelTrace trace;
    for (int i = 0; i < static_cast<int>(inst.points.size()); ++i) {
        if (profile.is_free(i)) {
            trace.steps.push_back(FreePointStep{inst.points[i]});
            --k;
        } else {
            survivors.push_back(inst.points[i]);
        }
    }
    return detail::finish(std::move(survivors), k, std::move(trace));
}

inline KernelResult apply_rule_conflict_with_budget(const Instance& inst, long long h) {
    const auto profile = conflict_profile(inst.points);
    std::vector<Point> survivors;
    KernelTrace trace;
    for (int i = 0; i < static_cast<int>(inst.points.size()); ++i) {
        if (profile.measure[i] > h) {
            trace.steps.push_back(ConflictPointStep{inst.points[i], profile.measure[i]});
        } else {
            survivors.push_back(inst.points[i]);
        }
    }
    return detail::finish(std::move(survivors), inst.k, std::move(trace));
}

/// Rule 4.8: with h = n - k of the given instance, delete (in one
/// simultaneous pass) every point whose conflict measure exceeds h.
/// k is unchanged; deleted points can never be part of a solution.
inline KernelResult apply_rule_conflict(const Instance& inst) {
    return apply_rule_conflict_with_budget(inst, inst.h());
}

/// Dual-parameter kernel: Rule 4.7 to fixpoint, Rule 4.8, repeated until
/// neither fires (Rule 4.8 deletions can free points, so a joint fixpoint
/// is needed before the size bound applies), then the 2h^2+h size check
/// with h frozen from the input instance. If the reduced instance is
/// larger than 2h^2+h, the input is a no-instance.
inline KernelResult kernelize_dual(const Instance& inst) {
    const long long h = inst.h();
    Instance current = inst;
    KernelTrace trace;
    Verdict verdict = Verdict::Reduced;
    for (;;) {
        KernelResult free_pass = apply_rule_free_point(current);
        for (auto& s : free_pass.trace.steps) trace.steps.push_back(std::move(s));
        current = std::move(free_pass.kernel);
        if (free_pass.verdict != Verdict::Reduced) {
            verdict = free_pass.verdict;
            break;
        }
        KernelResult conflict_pass = apply_rule_conflict_with_budget(current, h);
        const bool fired = !conflict_pass.trace.steps.empty();
        for (auto& s : conflict_pass.trace.steps) trace.steps.push_back(std::move(s));
        current = std::move(conflict_pass.kernel);
        if (conflict_pass.verdict != Verdict::Reduced) {
            verdict = conflict_pass.verdict;
            break;
        }
        if (!fired) break;
    }
    if (verdict == Verdict::Reduced && current.n() > 2 * h * h + h)
        verdict = Verdict::DecidedNo;
    return KernelResult{std::move(current), std::move(trace), verdict};
}

/// Size branch of the cubic kernel: for k >= 29337 any instance with
/// n >= 15k^3 points is a yes-instance outright.
inline bool primal_size_guarantee(const BigInt& k, const BigInt& n) {
    return k >= 29337 && n >= 15 * k * k * k;
}

/// Solution-size kernel: the heavy-line rule exhaustively, then the
/// guaranteed-yes size branch. Below the k >= 29337 regime no size bound
/// is claimed; only the collinearity bound C(k'-2,2)+1 holds.
inline KernelResult kernelize_primal(const Instance& inst) {
    KernelResult result = apply_rule_heavy_line(inst);
    if (result.verdict == Verdict::Reduced &&
        primal_size_guarantee(result.kernel.k, result.kernel.n()))
        result.verdict = Verdict::DecidedYes;
    return result;
}

/// Replays a trace forward against the original instance; used for audit
/// and round-trip checks. Throws if the trace does not match the instance.
inline Instance replay_trace(const Instance& original, const KernelTrace& trace) {
    std::vector<Point> pts = original.points;
    long long k = original.k;
    const auto remove_point = [&](const Point& p) {
        auto it = std::find(pts.begin(), pts.end(), p);
        if (it == pts.end())
            throw std::runtime_error("trace replay: point " + p.str() + " not present");
        pts.erase(it);
    };
    for (const auto& step : trace.steps) {
        if (const auto* heavy = std::get_if<HeavyLineStep>(&step)) {
            for (const auto& p : heavy->removed) remove_point(p);
            k -= 2;
        } else if (const auto* free = std::get_if<FreePointStep>(&step)) {
            remove_point(free->removed);
            k -= 1;
        } else {
            remove_point(std::get<ConflictPointStep>(step).removed);
        }
    }
    return Instance(std::move(pts), std::max<long long>(k, 0));
}

/// Reconstructs a solution for the original instance from a kernel
/// solution by replaying the trace in reverse. Free points are re-added
/// as-is (they conflict with nothing at their stage); each removed heavy
/// line contributes two of its points that are collinear with no two
/// points of the partial solution; conflict deletions contribute nothing.
inline std::vector<Point> lift_solution(const Instance& /*original*/,
                                        const KernelTrace& trace,
                                        std::vector<Point> kernel_solution) {
    std::vector<Point> solution = std::move(kernel_solution);
    for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
        if (const auto* heavy = std::get_if<HeavyLineStep>(&*it)) {
            // Pick two removed points that no pair of solution points sees
            // collinearly. The rule's threshold guarantees they exist when
            // the solution has the size the rule accounted for.
            std::vector<const Point*> usable;
            for (const auto& cand : heavy->removed) {
                bool clean = true;
                for (std::size_t a = 0; a < solution.size() && clean; ++a)
                    for (std::size_t b = a + 1; b < solution.size() && clean; ++b)
                        if (collinear(solution[a], solution[b], cand)) clean = false;
                if (clean) {
                    usable.push_back(&cand);
                    if (usable.size() == 2) break;
                }
            }
            if (usable.size() < 2)
                throw std::runtime_error("lift failed: no two usable points on removed line");
            solution.push_back(*usable[0]);
            solution.push_back(*usable[1]);
        } else if (const auto* free = std::get_if<FreePointStep>(&*it)) {
            solution.push_back(free->removed);
        }
        // ConflictPointStep: nothing to restore.
    }
    return solution;
}

/// Line-oriented trace serialization: one step per line, a step kind
/// followed by tab-separated exact rationals.
inline std::string serialize_trace(const KernelTrace& trace) {
    std::string out;
    for (const auto& step : trace.steps) {
        if (const auto* heavy = std::get_if<HeavyLineStep>(&step)) {
            out += "HEAVY_LINE\t" + heavy->line.a.str() + '\t' + heavy->line.b.str() +
                   '\t' + heavy->line.c.str();
            for (const auto& p : heavy->removed)
                out += '\t' + p.x.str() + '\t' + p.y.str();
        } else if (const auto* free = std::get_if<FreePointStep>(&step)) {
            out += "FREE_POINT\t" + free->removed.x.str() + '\t' + free->removed.y.str();
        } else {
            const auto& conflict = std::get<ConflictPointStep>(step);
            out += "CONFLICT_POINT\t" + conflict.removed.x.str() + '\t' +
                   conflict.removed.y.str() + '\t' + std::to_string(conflict.measure);
        }
        out += '\n';
    }
    return out;
}

inline KernelTrace parse_trace(std::string_view text) {
    KernelTrace trace;
    std::size_t pos = 0;
    int line_no = 0;
    const auto fail = [&](const std::string& what) {
        throw std::runtime_error("trace line " + std::to_string(line_no) + ": " + what);
    };
    while (pos < text.size()) {
        auto eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        ++line_no;
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::size_t start = 0;
        while (start <= line.size()) {
            auto tab = line.find('\t', start);
            if (tab == std::string_view::npos) tab = line.size();
            fields.emplace_back(line.substr(start, tab - start));
            start = tab + 1;
        }
        if (fields.empty()) continue;
        const std::string& kind = fields[0];
        if (kind == "HEAVY_LINE") {
            if (fields.size() < 4 || (fields.size() - 4) % 2 != 0) fail("malformed HEAVY_LINE");
            HeavyLineStep step;
            step.line.a = BigInt(fields[1]);
            step.line.b = BigInt(fields[2]);
            step.line.c = BigInt(fields[3]);
            for (std::size_t i = 4; i + 1 < fields.size(); i += 2)
                step.removed.push_back(
                    Point{Rational::parse(fields[i]), Rational::parse(fields[i + 1])});
            trace.steps.push_back(std::move(step));
        } else if (kind == "FREE_POINT") {
            if (fields.size() != 3) fail("malformed FREE_POINT");
            trace.steps.push_back(
                FreePointStep{Point{Rational::parse(fields[1]), Rational::parse(fields[2])}});
        } else if (kind == "CONFLICT_POINT") {
            if (fields.size() != 4) fail("malformed CONFLICT_POINT");
            trace.steps.push_back(ConflictPointStep{
                Point{Rational::parse(fields[1]), Rational::parse(fields[2])},
                std::stoll(fields[3])});
        } else {
            fail("unknown step kind '" + kind + "'");
        }
    }
    return trace;
}

}  // namespace gpss
