#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <rainbow/rainbow.hpp>

#ifndef RAINBOW_CLI_PATH
#error "RAINBOW_CLI_PATH must point at the built binary"
#endif

namespace {

namespace fs = std::filesystem;
using namespace rainbow;

struct RunResult {
    int status = -1;
    std::string out;
    std::string err;
};

auto scratch() -> fs::path
{
    static const fs::path dir = [] {
        auto p = fs::temp_directory_path() / "rainbow_cli_tests";
        fs::create_directories(p);
        return p;
    }();
    return dir;
}

auto slurp(const fs::path & path) -> std::string
{
    std::ifstream in(path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

auto spit(const fs::path & path, const std::string & data) -> void
{
    std::ofstream out(path);
    out << data;
}

// run the binary through the shell; `env` is a prefix like VAR=value
auto run(const std::string & args, const std::string & env = "") -> RunResult
{
    static int counter = 0;
    const auto out_path = scratch() / ("stdout." + std::to_string(counter));
    const auto err_path = scratch() / ("stderr." + std::to_string(counter));
    ++counter;
    std::string cmd;
    if (! env.empty())
        cmd += env + ' ';
    cmd += std::string(RAINBOW_CLI_PATH) + ' ' + args + " >" + out_path.string() + " 2>" + err_path.string();
    const int raw = std::system(cmd.c_str());
    RunResult result;
    result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    return result;
}

// K4 with its unique proper 3-coloring: nu = 2 but every perfect matching
// repeats a color, so the rainbow matching number is 1
auto pinched_k4_text() -> std::string
{
    ColoredHypergraph h;
    h.n = 4;
    h.k = 2;
    h.edges = {make_edge({0, 1}, 0), make_edge({0, 2}, 1), make_edge({1, 2}, 2),
               make_edge({0, 3}, 2), make_edge({1, 3}, 1), make_edge({2, 3}, 0)};
    return serialize_chg(h);
}

auto cycle_pair_text() -> std::string
{
    ColoredHypergraph h;
    h.n = 24;
    h.k = 2;
    for (int i = 0; i < 24; ++i)
        h.edges.push_back(make_edge({i, (i + 1) % 24}, i));
    HypergraphFamily f;
    f.n = 24;
    f.k = 2;
    f.members = {h, h};
    return serialize_chf(f);
}

} // namespace

TEST_CASE("cli: help and argument errors")
{
    CHECK(run("--help").status == 0);
    CHECK(run("gen --help").status == 0);
    CHECK(run("").status == 2);            // a subcommand is required
    CHECK(run("frobnicate").status == 2);  // unknown subcommand
    CHECK(run("gen cover --n 10 --k 3").status == 2); // missing --s
    CHECK(run("solve").status == 2);       // missing --family
}

TEST_CASE("cli: gen cover writes valid rainbow instances")
{
    const auto direct = run("gen cover --n 10 --k 3 --s 2");
    REQUIRE(direct.status == 0);
    CHECK(direct.out.rfind("10 3 36\n", 0) == 0); // threshold(10,3,2) = 36 edges

    const auto path = (scratch() / "cover.chg").string();
    REQUIRE(run("gen cover --n 10 --k 3 --s 2 --out " + path).status == 0);
    CHECK(slurp(path) == direct.out);

    const auto check = run("check rainbow " + path);
    CHECK(check.status == 0);
    CHECK(check.out == "rainbow: ok\n");
    CHECK(run("check proper " + path).status == 0);
}

TEST_CASE("cli: gen clique and gen random")
{
    const auto clique_path = (scratch() / "clique.chg").string();
    REQUIRE(run("gen clique --n 12 --k 3 --s 2 --out " + clique_path).status == 0);
    CHECK(parse_chg(slurp(clique_path)).edge_count() == 10); // C(5,3)

    const auto a = run("gen random --n 10 --k 2 --m 9 --seed 5");
    REQUIRE(a.status == 0);
    CHECK(a.out.rfind("# seed 5\n# mode rainbow\n10 2 9\n", 0) == 0);
    const auto b = run("gen random --n 10 --k 2 --m 9 --seed 5");
    CHECK(a.out == b.out); // same seed, same instance

    const auto greedy = run("gen random --n 10 --k 2 --m 9 --seed 5 --mode greedy_proper");
    REQUIRE(greedy.status == 0);
    CHECK(greedy.out.rfind("# seed 5\n# mode greedy_proper\n", 0) == 0);

    const auto random_path = (scratch() / "random.chg").string();
    REQUIRE(run("gen random --n 10 --k 2 --m 9 --seed 5 --out " + random_path).status == 0);
    CHECK(run("check proper " + random_path).status == 0); // comments parse fine

    CHECK(run("gen random --n 10 --k 2 --m 50 --seed 5").status == 2); // m > C(10,2)
}

TEST_CASE("cli: check distinguishes verdicts from junk")
{
    const auto pinched = (scratch() / "pinched.chg").string();
    spit(pinched, pinched_k4_text());
    CHECK(run("check proper " + pinched).status == 0);
    const auto rainbow_miss = run("check rainbow " + pinched);
    CHECK(rainbow_miss.status == 1);
    CHECK(rainbow_miss.err.find("not rainbow") != std::string::npos);

    const auto improper = (scratch() / "improper.chg").string();
    spit(improper, "4 2 2\n0 1 0\n0 2 0\n");
    const auto verdict = run("check proper " + improper);
    CHECK(verdict.status == 1);
    CHECK(verdict.err.find("not proper") != std::string::npos);

    const auto out_of_range = (scratch() / "range.chg").string();
    spit(out_of_range, "4 2 1\n0 9 3\n");
    CHECK(run("check proper " + out_of_range).status == 2);

    const auto malformed = (scratch() / "malformed.chg").string();
    spit(malformed, "4 2 1\n0 1\n");
    const auto parse_error = run("check proper " + malformed);
    CHECK(parse_error.status == 2);
    CHECK(parse_error.err.find("line 2") != std::string::npos);

    CHECK(run("check proper " + (scratch() / "no-such-file.chg").string()).status == 2);
}

TEST_CASE("cli: solve reports witnesses and misses")
{
    HypergraphFamily f;
    f.n = 4;
    f.k = 2;
    ColoredHypergraph m0{4, 2, {make_edge({0, 1}, 0)}};
    ColoredHypergraph m1{4, 2, {make_edge({2, 3}, 1)}};
    f.members = {m0, m1};
    const auto found_path = (scratch() / "found.chf").string();
    spit(found_path, serialize_chf(f));
    const auto hit = run("solve --family " + found_path);
    REQUIRE(hit.status == 0);
    CHECK(hit.out == "0 0  # edge: 0 1  color: 0\n"
                     "1 0  # edge: 2 3  color: 1\n");

    const auto pair_path = (scratch() / "pair.chf").string();
    REQUIRE(run("gen complement-pair --k 2 --out " + pair_path).status == 0);
    const auto miss = run("solve --family " + pair_path);
    CHECK(miss.status == 1);
    CHECK(miss.err.find("no 2-rainbow matching") != std::string::npos);
    CHECK(run("solve --oracle --family " + pair_path).status == 1);
}

TEST_CASE("cli: solve can tolerate improper members on request")
{
    HypergraphFamily f;
    f.n = 4;
    f.k = 2;
    ColoredHypergraph m0{4, 2, {make_edge({0, 1}, 0), make_edge({0, 2}, 0)}};
    ColoredHypergraph m1{4, 2, {make_edge({2, 3}, 5)}};
    f.members = {m0, m1};
    const auto path = (scratch() / "improper.chf").string();
    spit(path, serialize_chf(f));
    CHECK(run("solve --family " + path).status == 2); // rejected up front
    CHECK(run("solve --allow-improper --family " + path).status == 0);
}

TEST_CASE("cli: the brute-force cap comes from the environment")
{
    const auto pair_path = (scratch() / "pair3.chf").string();
    REQUIRE(run("gen complement-pair --k 3 --out " + pair_path).status == 0);
    CHECK(run("solve --oracle --family " + pair_path).status == 1); // 400 products, fine
    const auto capped = run("solve --oracle --family " + pair_path, "RAINBOW_MATCH_BRUTE_CAP=100");
    CHECK(capped.status == 2);
    CHECK(capped.err.find("cap") != std::string::npos);
    CHECK(run("solve --oracle --family " + pair_path, "RAINBOW_MATCH_BRUTE_CAP=abc").status == 2);
    CHECK(run("solve --oracle --family " + pair_path, "RAINBOW_MATCH_BRUTE_CAP=-5").status == 2);
}

TEST_CASE("cli: matching numbers")
{
    const auto pinched = (scratch() / "pinched2.chg").string();
    spit(pinched, pinched_k4_text());
    const auto nu = run("nu --input " + pinched);
    REQUIRE(nu.status == 0);
    CHECK(nu.out == "2\n");
    const auto nur = run("nur --input " + pinched);
    REQUIRE(nur.status == 0);
    CHECK(nur.out == "1\n");
}

TEST_CASE("cli: prove emits a witness and a descent trace")
{
    const auto cycles = (scratch() / "cycles.chf").string();
    spit(cycles, cycle_pair_text());
    const auto trace_path = (scratch() / "descent.trace").string();
    const auto proved = run("prove --family " + cycles + " --trace " + trace_path);
    REQUIRE(proved.status == 0);
    CHECK(proved.out == "0 0  # edge: 0 1  color: 0\n"
                        "1 2  # edge: 2 3  color: 2\n");
    const auto trace = slurp(trace_path);
    CHECK(trace.rfind("0 arbitrary-edge 24 2 2 member=0 edge=0 vertices=0,1 color=0\n", 0) == 0);
    CHECK(trace.find("\n1 base-case 22 2 1") != std::string::npos);
}

TEST_CASE("cli: prove refuses families at the threshold")
{
    HypergraphFamily f;
    f.n = 24;
    f.k = 2;
    f.members = {cover_construction(24, 2, 2), cover_construction(24, 2, 2)};
    const auto path = (scratch() / "at-threshold.chf").string();
    spit(path, serialize_chf(f));
    const auto refused = run("prove --family " + path);
    CHECK(refused.status == 2);
    CHECK(refused.err.find("needs more than 23") != std::string::npos);

    HypergraphFamily small;
    small.n = 10;
    small.k = 2;
    small.members = {cover_construction(10, 2, 2), cover_construction(10, 2, 2)};
    const auto small_path = (scratch() / "small.chf").string();
    spit(small_path, serialize_chf(small));
    const auto too_small = run("prove --family " + small_path);
    CHECK(too_small.status == 2);
    CHECK(too_small.err.find("below 3k^2 s") != std::string::npos);
}

TEST_CASE("cli: verify sweep")
{
    const auto config_path = (scratch() / "sweep.json").string();
    spit(config_path, R"({"grid": [[12, 2, 1]], "trials": 5, "coloring_mode": "rainbow", "seed": 3, "engine": "both"})");
    const auto csv_path = (scratch() / "sweep.csv").string();
    const auto json_path = (scratch() / "sweep-report.json").string();
    const auto swept = run("verify sweep --config " + config_path + " --out " + csv_path + " --json " + json_path);
    REQUIRE(swept.status == 0);
    CHECK(swept.out == "records: 10  found: 10  valid: 10  exploratory: 0\n");

    const auto csv = slurp(csv_path);
    CHECK(csv.rfind("n,k,s,seed,engine,edges,found,valid,elapsed_ms\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 11);

    const auto report = nlohmann::json::parse(slurp(json_path));
    CHECK(report["records"].size() == 10);
    CHECK(report["summary"]["valid"] == 10);

    const auto bad_config = (scratch() / "bad.json").string();
    spit(bad_config, R"({"grid": [[12, 2, 1]], "trials": 5, "coloring_mode": "rainbow", "seed": 3, "engine": "both", "foo": 1})");
    const auto rejected = run("verify sweep --config " + bad_config + " --out " + csv_path);
    CHECK(rejected.status == 2);
    CHECK(rejected.err.find("foo") != std::string::npos);
}

TEST_CASE("cli: verify tightness and counterexample")
{
    const auto tight = run("verify tightness --n 24 --k 2 --s 2");
    REQUIRE(tight.status == 0);
    CHECK(tight.out.find("edges per member: 23 (expected 23)") != std::string::npos);
    CHECK(tight.out.find("found: false (expected false)") != std::string::npos);

    const auto pair = run("verify counterexample --k 3");
    REQUIRE(pair.status == 0);
    CHECK(pair.out.find("edges per member: 20 (expected 20)") != std::string::npos);
    CHECK(pair.out.find("single-member bound: 10") != std::string::npos);

    CHECK(run("verify tightness --n 5 --k 3 --s 2").status == 2); // n < k s
    CHECK(run("verify counterexample --k 5", "RAINBOW_MATCH_BRUTE_CAP=100").status == 2);
}
