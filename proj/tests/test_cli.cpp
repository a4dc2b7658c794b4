// End-to-end checks of the command-line tool: exit codes, file formats,
// and report shape. The binary path comes in via GPSS_CLI_PATH.
#include "gpss/gpss.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code = -1;
    std::string output;
};

fs::path work_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "gpss_cli_tests";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

RunResult run_cli(const std::string& args) {
    const fs::path out_file = work_dir() / "cli_stdout.txt";
    const std::string command =
        std::string(GPSS_CLI_PATH) + " " + args + " > " + out_file.string() + " 2>/dev/null";
    const int status = std::system(command.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(status);
    std::ifstream in(out_file);
    r.output.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
    const fs::path p = work_dir() / name;
    std::ofstream out(p);
    out << content;
    return p.string();
}

std::string grid3_file() {
    static const std::string path =
        write_temp("grid3.pts", gpss::render_points(gpss::gen_grid(3)));
    return path;
}

}  // namespace

TEST_CASE("generate grid writes n^2 parseable points") {
    const RunResult r = run_cli("generate grid --n 3");
    CHECK(r.exit_code == 0);
    const auto pts = gpss::parse_points(r.output);
    CHECK(pts.size() == 9);
    CHECK(pts == gpss::gen_grid(3));
}

TEST_CASE("generate random is forced on a saturated grid") {
    const RunResult r = run_cli("generate random --n 4 --bound 1 --seed 7");
    CHECK(r.exit_code == 0);
    auto pts = gpss::parse_points(r.output);
    std::sort(pts.begin(), pts.end());
    CHECK(pts.size() == 4);
    CHECK(pts == gpss::gen_grid(2));
}

TEST_CASE("GPSS_SEED env var steers random generation when --seed is absent") {
    const fs::path out_file = work_dir() / "cli_stdout.txt";
    const std::string base = std::string(GPSS_CLI_PATH);
    const auto run_env = [&](const std::string& env_prefix, const std::string& args) {
        const std::string command =
            env_prefix + base + " " + args + " > " + out_file.string() + " 2>/dev/null";
        std::system(command.c_str());
        std::ifstream in(out_file);
        return std::string(std::istreambuf_iterator<char>(in),
                           std::istreambuf_iterator<char>());
    };
    const std::string seeded_env = run_env("GPSS_SEED=99 ", "generate random --n 6 --bound 7");
    const std::string seeded_flag = run_env("", "generate random --n 6 --bound 7 --seed 99");
    CHECK(seeded_env == seeded_flag);
    // explicit flag wins over the environment
    const std::string flag_wins =
        run_env("GPSS_SEED=5 ", "generate random --n 6 --bound 7 --seed 99");
    CHECK(flag_wins == seeded_flag);
}

TEST_CASE("generate phi emits the derived target as a comment") {
    const std::string graph = write_temp("k3.edges", "3 3\n1 2\n1 3\n2 3\n");
    const RunResult r = run_cli("generate phi --graph " + graph + " --is-k 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.rfind("# k=4\n", 0) == 0);
    CHECK(gpss::parse_points(r.output).size() == 6);

    const RunResult vc = run_cli("generate phi --graph " + graph + " --vc-k 2");
    CHECK(vc.exit_code == 0);
    CHECK(vc.output.rfind("# k=4\n", 0) == 0);
}

TEST_CASE("kernelize exit codes and artifacts") {
    const std::string kernel_out = (work_dir() / "kernel.pts").string();
    const std::string trace_out = (work_dir() / "kernel.trace").string();
    const RunResult reduced = run_cli("kernelize --input " + grid3_file() +
                                      " --k 6 --mode dual --kernel-out " + kernel_out +
                                      " --trace-out " + trace_out);
    CHECK(reduced.exit_code == 0);
    CHECK(reduced.output.find("verdict: reduced") != std::string::npos);
    // the 8-point kernel (center removed) and its one-step trace round trip
    const auto kernel_pts = gpss::parse_points(gpss::read_file(kernel_out));
    CHECK(kernel_pts.size() == 8);
    const auto trace = gpss::parse_trace(gpss::read_file(trace_out));
    REQUIRE(trace.steps.size() == 1);
    const auto replayed = gpss::replay_trace(gpss::Instance(gpss::gen_grid(3), 6), trace);
    CHECK(replayed.points == kernel_pts);

    const std::string gp = write_temp("gp.pts", "0 0\n2 0\n3 2\n1 3\n");
    CHECK(run_cli("kernelize --input " + gp + " --k 4 --mode dual").exit_code == 10);
    CHECK(run_cli("kernelize --input " + grid3_file() + " --k 12 --mode dual").exit_code == 2);
}

TEST_CASE("solve exit codes across algorithms") {
    CHECK(run_cli("solve --input " + grid3_file() + " --k 6 --algo hitting").exit_code == 10);
    CHECK(run_cli("solve --input " + grid3_file() + " --k 7 --algo brute").exit_code == 20);
    CHECK(run_cli("solve --input " + grid3_file() + " --k 6 --algo auto").exit_code == 10);
    const RunResult greedy = run_cli("solve --input " + grid3_file() + " --algo greedy");
    CHECK(greedy.exit_code == 0);
    CHECK(greedy.output.find("witness_size:") != std::string::npos);

    // cap exceeded for brute
    std::vector<gpss::Point> many;
    for (int i = 0; i < 23; ++i)
        many.push_back(gpss::Point{gpss::Rational(i), gpss::Rational(i * i)});
    const std::string big = write_temp("big.pts", gpss::render_points(many));
    CHECK(run_cli("solve --input " + big + " --k 3 --algo brute").exit_code == 3);
}

TEST_CASE("solve reports a verified witness") {
    const RunResult r = run_cli("solve --input " + grid3_file() + " --k 6 --algo auto --json");
    CHECK(r.exit_code == 10);
    // pull the witness indices back out of the JSON and verify them
    const auto json_start = r.output.find('{');
    REQUIRE(json_start != std::string::npos);
    const std::string blob = r.output.substr(json_start);
    const auto key = blob.find("\"witness_indices\"");
    REQUIRE(key != std::string::npos);
    const auto open = blob.find('[', key);
    const auto close = blob.find(']', open);
    std::vector<int> indices;
    for (std::size_t i = open + 1; i < close;) {
        while (i < close && !isdigit(blob[i])) ++i;
        if (i >= close) break;
        indices.push_back(std::atoi(blob.c_str() + i));
        while (i < close && isdigit(blob[i])) ++i;
    }
    CHECK(indices.size() >= 6);
    CHECK(gpss::verify(gpss::gen_grid(3), indices));
}

TEST_CASE("verify prints the violating triple") {
    const std::string row = write_temp("row.idx", "0 1 2\n");
    const RunResult bad = run_cli("verify --input " + grid3_file() + " --solution " + row);
    CHECK(bad.exit_code == 20);
    CHECK(bad.output.find("violating_triple: 0 1 2") != std::string::npos);

    const std::string good = write_temp("good.idx", "0 1 3\n");
    CHECK(run_cli("verify --input " + grid3_file() + " --solution " + good).exit_code == 0);

    const std::string empty = write_temp("empty.idx", "");
    CHECK(run_cli("verify --input " + grid3_file() + " --solution " + empty).exit_code == 0);

    const std::string oob = write_temp("oob.idx", "0 99\n");
    CHECK(run_cli("verify --input " + grid3_file() + " --solution " + oob).exit_code == 2);
}

TEST_CASE("ordertype compares files under the given orderings") {
    const std::string tri = write_temp("tri.pts", "0 0\n1 0\n0 1\n");
    const RunResult solo = run_cli("ordertype --input " + tri);
    CHECK(solo.exit_code == 0);
    CHECK(solo.output.find("sigma: 0,1,2,1") != std::string::npos);

    // positive-determinant affine image keeps the order type
    const std::string moved = write_temp("tri_moved.pts", "1 0\n3 0\n1 1\n");
    CHECK(run_cli("ordertype --input " + tri + " --other " + moved).exit_code == 0);

    const std::string mirrored = write_temp("tri_mirror.pts", "0 0\n-1 0\n0 1\n");
    CHECK(run_cli("ordertype --input " + tri + " --other " + mirrored).exit_code == 20);

    const std::string dup = write_temp("dup.pts", "0 0\n0 0\n");
    CHECK(run_cli("ordertype --input " + dup).exit_code == 2);
}

TEST_CASE("stats reports the grid fixture values") {
    const RunResult r = run_cli("stats --input " + grid3_file());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("n: 9") != std::string::npos);
    CHECK(r.output.find("collinearity: 3") != std::string::npos);
    CHECK(r.output.find("line_groups: 8") != std::string::npos);
    CHECK(r.output.find("collinear_triples: 8") != std::string::npos);
    CHECK(r.output.find("max_conflict_measure: 4") != std::string::npos);
    CHECK(r.output.find("inner_points: 5") != std::string::npos);
    CHECK(r.output.find("line_cover: 3") != std::string::npos);
}

TEST_CASE("parse errors exit with code 2 and a line number") {
    const std::string bad = write_temp("bad.pts", "0 0\n1 2 3\n");
    CHECK(run_cli("stats --input " + bad).exit_code == 2);
    CHECK(run_cli("solve --input " + bad + " --k 1").exit_code == 2);
    const std::string dup_edge = write_temp("bad.edges", "3 2\n1 2\n2 1\n");
    CHECK(run_cli("generate phi --graph " + dup_edge).exit_code == 2);
}
