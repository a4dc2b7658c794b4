// gpss - exact toolkit for General Position Subset Selection instances:
// generators, kernelization, solvers, verification, order types, statistics.

#include "gpss/gpss.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitCap = 3;
constexpr int kExitYes = 10;
constexpr int kExitNo = 20;

// Flat text rendering of a report: scalars as "key: value", arrays as
// space-joined entries, nested arrays comma-joined.
std::string render_text(const Json& report) {
    std::string out;
    const auto scalar = [](const Json& v) -> std::string {
        if (v.is_string()) return v.get<std::string>();
        return v.dump();
    };
    for (const auto& [key, value] : report.items()) {
        out += key;
        out += ':';
        if (value.is_array()) {
            for (const auto& item : value) {
                out += ' ';
                if (item.is_array()) {
                    std::string joined;
                    for (const auto& part : item) {
                        if (!joined.empty()) joined += ',';
                        joined += scalar(part);
                    }
                    out += joined;
                } else {
                    out += scalar(item);
                }
            }
        } else {
            out += ' ';
            out += scalar(value);
        }
        out += '\n';
    }
    return out;
}

void emit(const Json& report, bool as_json) {
    if (as_json)
        std::cout << report.dump(2) << '\n';
    else
        std::cout << render_text(report);
}

Json point_json(const gpss::Point& p) { return p.x.str() + " " + p.y.str(); }

Json witness_json(const std::vector<gpss::Point>& pts, const std::vector<int>& chosen) {
    Json arr = Json::array();
    for (int idx : chosen) arr.push_back(point_json(pts[idx]));
    return arr;
}

long long max_denominator_bits(const std::vector<gpss::Point>& pts) {
    std::size_t bits = 1;
    for (const auto& p : pts) {
        bits = std::max(bits, msb(p.x.den()) + 1);
        bits = std::max(bits, msb(p.y.den()) + 1);
    }
    return static_cast<long long>(bits);
}

struct CommonFlags {
    bool json = false;
    bool timing = false;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_flag("--json", flags.json, "emit the report as a JSON object");
    cmd->add_flag("--timing", flags.timing, "print wall time to stderr");
}

class Stopwatch {
public:
    explicit Stopwatch(bool enabled) : enabled_(enabled) {}
    ~Stopwatch() {
        if (!enabled_) return;
        const auto elapsed = std::chrono::steady_clock::now() - start_;
        std::cerr << "time_ms: "
                  << std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count()
                  << '\n';
    }

private:
    bool enabled_;
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct GenerateArgs {
    int grid_n = 0;
    int rand_n = 0;
    int rand_bound = 7;
    std::uint64_t seed = 1;
    bool seed_given = false;
    std::string graph_path;
    std::optional<long long> is_k;
    std::optional<long long> vc_k;
    std::string out_path;
};

int run_generate_kind(const std::string& kind, GenerateArgs& args, const CommonFlags& flags) {
    Stopwatch watch(flags.timing);
    std::vector<gpss::Point> points;
    std::optional<long long> derived_k;
    if (kind == "grid") {
        points = gpss::gen_grid(args.grid_n);
    } else if (kind == "random") {
        std::uint64_t seed = args.seed;
        if (!args.seed_given) {
            if (const char* env = std::getenv("GPSS_SEED")) seed = std::stoull(env);
        }
        points = gpss::gen_random(args.rand_n, args.rand_bound, seed);
    } else {
        const gpss::Graph g = gpss::parse_graph(gpss::read_file(args.graph_path));
        const gpss::PhiOutput out = gpss::phi(g);
        if (out.instance.size() <= 40 && !gpss::validate_phi(g, out))
            throw std::logic_error("transformation output failed validation");
        points = out.instance;
        if (args.is_k) derived_k = *args.is_k + g.m();
        if (args.vc_k) derived_k = g.n + g.m() - *args.vc_k;
        std::cerr << "max_denominator_bits: " << max_denominator_bits(points) << '\n';
    }
    std::string text;
    if (derived_k) text += "# k=" + std::to_string(*derived_k) + "\n";
    text += gpss::render_points(points);
    if (args.out_path.empty()) {
        std::cout << text;
    } else {
        gpss::write_file(args.out_path, text);
        if (derived_k) std::cout << "k=" << *derived_k << '\n';
    }
    return kExitOk;
}

struct KernelizeArgs {
    std::string input;
    long long k = 0;
    std::string mode = "dual";
    std::string kernel_out;
    std::string trace_out;
};

int run_kernelize(const KernelizeArgs& args, const CommonFlags& flags) {
    Stopwatch watch(flags.timing);
    const auto points = gpss::parse_points(gpss::read_file(args.input));
    if (args.k < 0 || args.k > static_cast<long long>(points.size()))
        throw std::invalid_argument("k must be between 0 and n");
    const gpss::Instance inst(points, args.k);
    const gpss::KernelResult result =
        args.mode == "primal" ? gpss::kernelize_primal(inst) : gpss::kernelize_dual(inst);

    Json report;
    report["command"] = "kernelize";
    report["input"] = args.input;
    report["mode"] = args.mode;
    report["n"] = inst.n();
    report["k"] = inst.k;
    report["h"] = inst.h();
    report["verdict"] = gpss::to_string(result.verdict);
    report["kernel_n"] = result.kernel.n();
    report["kernel_k"] = result.kernel.k;
    report["kernel_collinearity"] =
        result.kernel.points.empty() ? 0 : gpss::collinearity(result.kernel.points);
    report["trace_steps"] = result.trace.steps.size();
    report["trace_heavy_line"] = result.trace.heavy_line_count();
    report["trace_free_point"] = result.trace.free_point_count();
    report["trace_conflict_point"] = result.trace.conflict_point_count();
    if (!args.kernel_out.empty()) {
        gpss::write_file(args.kernel_out, gpss::render_points(result.kernel.points));
        report["kernel_file"] = args.kernel_out;
    }
    if (!args.trace_out.empty()) {
        gpss::write_file(args.trace_out, gpss::serialize_trace(result.trace));
        report["trace_file"] = args.trace_out;
    }
    emit(report, flags.json);
    switch (result.verdict) {
        case gpss::Verdict::DecidedYes: return kExitYes;
        case gpss::Verdict::DecidedNo: return kExitNo;
        case gpss::Verdict::Reduced: return kExitOk;
    }
    return kExitOk;
}

struct SolveArgs {
    std::string input;
    long long k = -1;
    std::string algo = "auto";
    int workers = 1;
    int brute_cap = 22;
};

int run_solve(const SolveArgs& args, const CommonFlags& flags) {
    Stopwatch watch(flags.timing);
    const auto points = gpss::parse_points(gpss::read_file(args.input));
    const auto groups = gpss::collinear_groups(points);

    Json report;
    report["command"] = "solve";
    report["input"] = args.input;
    report["algo"] = args.algo;
    report["n"] = points.size();
    if (!points.empty()) report["collinearity"] = gpss::collinearity(points);
    report["line_groups"] = groups.size();

    if (args.algo == "greedy") {
        const gpss::Solution sol = gpss::solve_greedy(gpss::Instance(points, 0));
        report["verdict"] = "feasible";
        report["witness_size"] = sol.chosen.size();
        report["witness_indices"] = sol.chosen;
        report["witness_points"] = witness_json(points, sol.chosen);
        emit(report, flags.json);
        return kExitOk;
    }

    if (args.k < 0) throw std::invalid_argument("--k is required for algo " + args.algo);
    if (args.k > static_cast<long long>(points.size())) {
        report["k"] = args.k;
        report["verdict"] = "no";
        emit(report, flags.json);
        return kExitNo;
    }
    const gpss::Instance inst(points, args.k);
    report["k"] = inst.k;
    report["h"] = inst.h();

    gpss::SolveStats stats;
    gpss::Solution sol;
    if (args.algo == "brute") {
        sol = gpss::solve_brute(inst, args.brute_cap, &stats);
        report["nodes"] = stats.nodes;
    } else if (args.algo == "hitting") {
        sol = gpss::solve_hitting(inst, &stats, args.workers);
        report["nodes"] = stats.nodes;
    } else if (args.algo == "auto") {
        const gpss::AutoResult result = gpss::solve_auto_full(inst, args.workers);
        sol = result.solution;
        report["nodes"] = result.stats.nodes;
        report["rule_heavy_line"] = result.kernelization.trace.heavy_line_count();
        report["rule_free_point"] = result.kernelization.trace.free_point_count();
        report["rule_conflict_point"] = result.kernelization.trace.conflict_point_count();
        report["kernel_n"] = result.kernelization.kernel.n();
    } else {
        throw std::invalid_argument("unknown algo '" + args.algo + "'");
    }

    report["verdict"] = sol.yes() ? "yes" : "no";
    if (sol.yes()) {
        report["witness_size"] = sol.chosen.size();
        report["witness_indices"] = sol.chosen;
        report["witness_points"] = witness_json(points, sol.chosen);
    }
    emit(report, flags.json);
    return sol.yes() ? kExitYes : kExitNo;
}

struct VerifyArgs {
    std::string input;
    std::string solution;
};

int run_verify(const VerifyArgs& args, const CommonFlags& flags) {
    Stopwatch watch(flags.timing);
    const auto points = gpss::parse_points(gpss::read_file(args.input));
    const auto indices = gpss::parse_index_list(gpss::read_file(args.solution));

    Json report;
    report["command"] = "verify";
    report["input"] = args.input;
    report["solution"] = args.solution;
    report["n"] = points.size();
    report["candidate_size"] = indices.size();

    const bool ok = gpss::verify(points, indices);
    report["verdict"] = ok ? "general-position" : "violation";
    if (!ok) {
        // report the first violating triple in index order
        for (std::size_t a = 0; a < indices.size(); ++a)
            for (std::size_t b = a + 1; b < indices.size(); ++b)
                for (std::size_t c = b + 1; c < indices.size(); ++c)
                    if (gpss::collinear(points[indices[a]], points[indices[b]],
                                        points[indices[c]])) {
                        report["violating_triple"] =
                            Json::array({indices[a], indices[b], indices[c]});
                        report["violating_points"] = Json::array(
                            {point_json(points[indices[a]]), point_json(points[indices[b]]),
                             point_json(points[indices[c]])});
                        emit(report, flags.json);
                        return kExitNo;
                    }
    }
    emit(report, flags.json);
    return kExitOk;
}

struct OrderTypeArgs {
    std::string input;
    std::string other;
};

int run_ordertype(const OrderTypeArgs& args, const CommonFlags& flags) {
    Stopwatch watch(flags.timing);
    const auto points = gpss::parse_points(gpss::read_file(args.input));
    const gpss::OrderType ot = gpss::order_type(points);

    Json report;
    report["command"] = "ordertype";
    report["input"] = args.input;
    report["n"] = ot.n;
    if (args.other.empty()) {
        Json sigma = Json::array();
        std::size_t pos = 0;
        for (int i = 0; i < ot.n; ++i)
            for (int j = i + 1; j < ot.n; ++j)
                for (int k = j + 1; k < ot.n; ++k)
                    sigma.push_back(Json::array({i, j, k, ot.sigma[pos++]}));
        report["triples"] = sigma.size();
        report["sigma"] = std::move(sigma);
        emit(report, flags.json);
        return kExitOk;
    }
    const auto other_points = gpss::parse_points(gpss::read_file(args.other));
    const gpss::OrderType other = gpss::order_type(other_points);
    const bool same = gpss::same_order_type(ot, other);
    report["other"] = args.other;
    report["verdict"] = same ? "same" : "different";
    emit(report, flags.json);
    return same ? kExitOk : kExitNo;
}

struct StatsArgs {
    std::string input;
    int cover_cap = 16;
};

int run_stats(const StatsArgs& args, const CommonFlags& flags) {
    Stopwatch watch(flags.timing);
    const auto points = gpss::parse_points(gpss::read_file(args.input));
    const auto profile = gpss::conflict_profile(points);
    long long triples = 0;
    long long max_measure = 0;
    for (const auto& g : profile.groups) {
        const long long m = g.size();
        triples += m * (m - 1) * (m - 2) / 6;
    }
    for (long long m : profile.measure) max_measure = std::max(max_measure, m);

    Json report;
    report["command"] = "stats";
    report["input"] = args.input;
    report["n"] = points.size();
    report["collinearity"] = points.empty() ? 0 : gpss::collinearity(points);
    report["line_groups"] = profile.groups.size();
    report["collinear_triples"] = triples;
    report["max_conflict_measure"] = max_measure;
    report["inner_points"] = gpss::inner_point_count(points);
    const auto cover = gpss::min_line_cover(points, args.cover_cap);
    if (cover)
        report["line_cover"] = *cover;
    else
        report["line_cover"] = "unknown";
    report["max_denominator_bits"] = max_denominator_bits(points);
    emit(report, flags.json);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact General Position Subset Selection toolkit"};
    app.require_subcommand(1);
    std::ios::sync_with_stdio(false);

    // generate
    auto* generate = app.add_subcommand("generate", "produce point files");
    generate->require_subcommand(1);
    GenerateArgs gen_args;
    CommonFlags gen_flags;
    auto* gen_grid_cmd = generate->add_subcommand("grid", "n-by-n integer grid");
    gen_grid_cmd->add_option("--n", gen_args.grid_n, "grid side length")->required();
    gen_grid_cmd->add_option("--out", gen_args.out_path, "output file (default stdout)");
    add_common(gen_grid_cmd, gen_flags);
    auto* gen_rand_cmd = generate->add_subcommand("random", "random distinct integer points");
    gen_rand_cmd->add_option("--n", gen_args.rand_n, "number of points")->required();
    gen_rand_cmd->add_option("--bound", gen_args.rand_bound, "coordinates in 0..bound");
    auto* seed_opt = gen_rand_cmd->add_option("--seed", gen_args.seed, "generator seed");
    gen_rand_cmd->add_option("--out", gen_args.out_path, "output file (default stdout)");
    add_common(gen_rand_cmd, gen_flags);
    auto* gen_phi_cmd =
        generate->add_subcommand("phi", "graph-to-points hardness transformation");
    gen_phi_cmd->add_option("--graph", gen_args.graph_path, "edge-list graph file")->required();
    auto* is_opt = gen_phi_cmd->add_option("--is-k", gen_args.is_k,
                                           "independent-set target; prints derived k");
    auto* vc_opt = gen_phi_cmd->add_option("--vc-k", gen_args.vc_k,
                                           "vertex-cover target; prints derived k");
    is_opt->excludes(vc_opt);
    gen_phi_cmd->add_option("--out", gen_args.out_path, "output file (default stdout)");
    add_common(gen_phi_cmd, gen_flags);

    // kernelize
    KernelizeArgs kern_args;
    CommonFlags kern_flags;
    auto* kernelize = app.add_subcommand("kernelize", "apply data reduction rules");
    kernelize->add_option("--input", kern_args.input, "point file")->required();
    kernelize->add_option("--k", kern_args.k, "target subset size")->required();
    kernelize->add_option("--mode", kern_args.mode, "primal or dual")
        ->check(CLI::IsMember({"primal", "dual"}));
    kernelize->add_option("--kernel-out", kern_args.kernel_out, "write the kernel point file");
    kernelize->add_option("--trace-out", kern_args.trace_out, "write the reduction trace");
    add_common(kernelize, kern_flags);

    // solve
    SolveArgs solve_args;
    CommonFlags solve_flags;
    auto* solve = app.add_subcommand("solve", "decide and find witnesses");
    solve->add_option("--input", solve_args.input, "point file")->required();
    solve->add_option("--k", solve_args.k, "target subset size");
    solve->add_option("--algo", solve_args.algo, "brute, hitting, greedy, or auto")
        ->check(CLI::IsMember({"brute", "hitting", "greedy", "auto"}));
    solve->add_option("--workers", solve_args.workers, "search workers for hitting/auto")
        ->check(CLI::PositiveNumber);
    solve->add_option("--brute-cap", solve_args.brute_cap, "point cap for the brute oracle");
    add_common(solve, solve_flags);

    // verify
    VerifyArgs verify_args;
    CommonFlags verify_flags;
    auto* verify_cmd = app.add_subcommand("verify", "check a candidate solution");
    verify_cmd->add_option("--input", verify_args.input, "point file")->required();
    verify_cmd->add_option("--solution", verify_args.solution, "index list file")->required();
    add_common(verify_cmd, verify_flags);

    // ordertype
    OrderTypeArgs ot_args;
    CommonFlags ot_flags;
    auto* ordertype = app.add_subcommand("ordertype", "print or compare order types");
    ordertype->add_option("--input", ot_args.input, "point file")->required();
    ordertype->add_option("--other", ot_args.other, "second point file to compare");
    add_common(ordertype, ot_flags);

    // stats
    StatsArgs stats_args;
    CommonFlags stats_flags;
    auto* stats = app.add_subcommand("stats", "collinearity structure statistics");
    stats->add_option("--input", stats_args.input, "point file")->required();
    stats->add_option("--cover-cap", stats_args.cover_cap, "point cap for the line cover");
    add_common(stats, stats_flags);

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen_grid_cmd->parsed()) return run_generate_kind("grid", gen_args, gen_flags);
        if (gen_rand_cmd->parsed()) {
            gen_args.seed_given = seed_opt->count() > 0;
            return run_generate_kind("random", gen_args, gen_flags);
        }
        if (gen_phi_cmd->parsed()) return run_generate_kind("phi", gen_args, gen_flags);
        if (kernelize->parsed()) return run_kernelize(kern_args, kern_flags);
        if (solve->parsed()) return run_solve(solve_args, solve_flags);
        if (verify_cmd->parsed()) return run_verify(verify_args, verify_flags);
        if (ordertype->parsed()) return run_ordertype(ot_args, ot_flags);
        if (stats->parsed()) return run_stats(stats_args, stats_flags);
    } catch (const gpss::BruteCapError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    }
    return kExitOk;
}
