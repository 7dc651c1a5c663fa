// command-line front end: generate, check, solve, prove, verify

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <rainbow/rainbow.hpp>

namespace {

using namespace rainbow;

// ----------------------------------------------------------------------------
// small plumbing
// ----------------------------------------------------------------------------

auto read_file(const std::string & path) -> std::string
{
    std::ifstream in(path);
    if (! in)
        throw InputError("cannot open '" + path + "' for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

auto write_output(const std::string & path, const std::string & data) -> void
{
    if (path.empty()) {
        std::cout << data;
        return;
    }
    std::ofstream out(path);
    if (! out)
        throw InputError("cannot open '" + path + "' for writing");
    out << data;
}

auto brute_cap_from_env() -> Count
{
    const char * raw = std::getenv("RAINBOW_MATCH_BRUTE_CAP");
    if (raw == nullptr)
        return SolveOptions{}.brute_cap;
    errno = 0;
    char * end = nullptr;
    const long long value = std::strtoll(raw, &end, 10);
    if (errno != 0 || end == raw || *end != '\0' || value <= 0)
        throw InputError("RAINBOW_MATCH_BRUTE_CAP must be a positive integer, got '" + std::string(raw) + "'");
    return static_cast<Count>(value);
}

auto print_witness(const HypergraphFamily & f, const RainbowMatching & m) -> void
{
    for (const auto & [i, e] : m.picks) {
        const auto & edge = f.members[static_cast<std::size_t>(i)].edges[static_cast<std::size_t>(e)];
        std::cout << i << ' ' << e << "  # edge:";
        for (Vertex v : edge.vertices)
            std::cout << ' ' << v;
        std::cout << "  color: " << edge.color << '\n';
    }
}

// structural problems are exit-2 material; coloring problems are verdicts
auto split_violations(const ValidationReport & report, std::vector<std::string> & structural,
                      std::vector<std::string> & coloring) -> void
{
    for (const auto & v : report.violations)
        (v.kind == ViolationKind::ProperColoring ? coloring : structural).push_back(v.message);
}

// ----------------------------------------------------------------------------
// subcommand bodies (each returns the process exit code)
// ----------------------------------------------------------------------------

auto run_gen_cover(int n, int k, int s, const std::string & out) -> int
{
    write_output(out, serialize_chg(cover_construction(n, k, s)));
    return 0;
}

auto run_gen_clique(int n, int k, int s, const std::string & out) -> int
{
    write_output(out, serialize_chg(clique_construction(n, k, s)));
    return 0;
}

auto run_gen_complement_pair(int k, const std::string & out) -> int
{
    write_output(out, serialize_chf(complement_pair(k)));
    return 0;
}

auto run_gen_random(const RandomInstanceSpec & spec, const std::string & out) -> int
{
    const auto h = random_instance(spec);
    std::string data = "# seed " + std::to_string(spec.seed) + "\n# mode " + to_string(spec.coloring_mode) + "\n";
    data += serialize_chg(h);
    write_output(out, data);
    return 0;
}

auto run_check(const std::string & path, bool want_rainbow) -> int
{
    const auto h = parse_chg(read_file(path));
    std::vector<std::string> structural, coloring;
    split_violations(validate(h), structural, coloring);
    if (! structural.empty()) {
        for (const auto & message : structural)
            std::cerr << "invalid: " << message << '\n';
        return 2;
    }
    if (want_rainbow) {
        if (! is_rainbow(h)) {
            std::cerr << "not rainbow: some color appears on two edges\n";
            return 1;
        }
        std::cout << "rainbow: ok\n";
        return 0;
    }
    if (! coloring.empty()) {
        for (const auto & message : coloring)
            std::cerr << "not proper: " << message << '\n';
        return 1;
    }
    std::cout << "proper: ok\n";
    return 0;
}

auto run_solve(const std::string & path, bool oracle, bool allow_improper) -> int
{
    const auto family = parse_chf(read_file(path));
    SolveOptions options;
    options.require_proper = ! allow_improper;
    options.brute_cap = brute_cap_from_env();
    const auto outcome = oracle ? brute_force_matching(family, options) : find_rainbow_matching(family, options);
    if (! outcome.found) {
        std::cerr << "no " << family.size() << "-rainbow matching\n";
        return 1;
    }
    print_witness(family, *outcome.matching);
    return 0;
}

auto run_count(const std::string & path, bool rainbow_number) -> int
{
    const auto h = parse_chg(read_file(path));
    std::cout << (rainbow_number ? rainbow_matching_number(h) : matching_number(h)) << '\n';
    return 0;
}

auto run_prove(const std::string & path, const std::string & trace_path) -> int
{
    const auto family = parse_chf(read_file(path));
    const auto result = theorem1_construct(family);
    if (! trace_path.empty())
        write_output(trace_path, render(result.trace));
    print_witness(family, result.matching);
    return 0;
}

auto run_verify_sweep(const std::string & config_path, const std::string & csv_path, const std::string & json_path)
    -> int
{
    nlohmann::json parsed;
    try {
        parsed = nlohmann::json::parse(read_file(config_path));
    }
    catch (const nlohmann::json::exception & ex) {
        throw InputError("sweep config: " + std::string(ex.what()));
    }
    const auto config = sweep_config_from_json(parsed);
    const auto report = sweep(config);
    write_output(csv_path, sweep_report_csv(report));
    if (! json_path.empty())
        write_output(json_path, sweep_report_json(report).dump(2) + "\n");
    Count found = 0, valid = 0, asserted = 0, misses = 0;
    for (const auto & r : report.records) {
        found += r.found ? 1 : 0;
        valid += r.valid ? 1 : 0;
        if (! r.exploratory) {
            ++asserted;
            if (! r.found || ! r.valid)
                ++misses;
        }
    }
    std::cout << "records: " << report.records.size() << "  found: " << found << "  valid: " << valid
              << "  exploratory: " << (report.records.size() - static_cast<std::size_t>(asserted)) << '\n';
    return misses == 0 ? 0 : 1;
}

auto run_verify_tightness(int n, int k, int s) -> int
{
    const auto report = tightness_check(n, k, s);
    std::cout << "edges per member: " << report.edges_per_member << " (expected " << report.expected_edges << ")\n";
    std::cout << s << "-rainbow matching found: " << (report.found ? "true" : "false") << " (expected false)\n";
    return report.ok() ? 0 : 1;
}

auto run_verify_counterexample(int k) -> int
{
    const auto report = counterexample_check(k, brute_cap_from_env());
    std::cout << "edges per member: " << report.edges_per_member << " (expected " << report.expected_edges << ")\n";
    std::cout << "single-member bound: " << report.single_threshold << '\n';
    std::cout << "members rainbow: " << (report.members_rainbow ? "true" : "false") << '\n';
    std::cout << "2-rainbow matching found: " << (report.found ? "true" : "false") << " (expected false)\n";
    return report.ok() ? 0 : 1;
}

} // namespace

auto main(int argc, char ** argv) -> int
{
    CLI::App app{"exact toolkit for rainbow matchings in colored uniform hypergraphs"};
    app.require_subcommand(1);
    int exit_code = 0;

    // gen ---------------------------------------------------------------
    auto * gen = app.add_subcommand("gen", "generate instances");
    gen->require_subcommand(1);
    struct {
        int n = 0, k = 0, s = 0;
        Count m = 0;
        std::uint64_t seed = 0;
        std::string mode = "rainbow";
        std::string out;
    } g;

    auto * gen_cover = gen->add_subcommand("cover", "every edge meets a fixed (s-1)-set");
    gen_cover->add_option("--n", g.n, "vertex count")->required();
    gen_cover->add_option("--k", g.k, "edge size")->required();
    gen_cover->add_option("--s", g.s, "family size the construction blocks")->required();
    gen_cover->add_option("--out", g.out, "output path (default stdout)");
    gen_cover->callback([&] { exit_code = run_gen_cover(g.n, g.k, g.s, g.out); });

    auto * gen_clique = gen->add_subcommand("clique", "all k-subsets of the first ks-1 vertices");
    gen_clique->add_option("--n", g.n, "vertex count")->required();
    gen_clique->add_option("--k", g.k, "edge size")->required();
    gen_clique->add_option("--s", g.s, "family size the construction blocks")->required();
    gen_clique->add_option("--out", g.out, "output path (default stdout)");
    gen_clique->callback([&] { exit_code = run_gen_clique(g.n, g.k, g.s, g.out); });

    auto * gen_pair = gen->add_subcommand("complement-pair", "two members on 2k vertices with no 2-rainbow matching");
    gen_pair->add_option("--k", g.k, "edge size")->required();
    gen_pair->add_option("--out", g.out, "output path (default stdout)");
    gen_pair->callback([&] { exit_code = run_gen_complement_pair(g.k, g.out); });

    auto * gen_random = gen->add_subcommand("random", "seeded uniform random instance");
    gen_random->add_option("--n", g.n, "vertex count")->required();
    gen_random->add_option("--k", g.k, "edge size")->required();
    gen_random->add_option("--m", g.m, "edge count")->required();
    gen_random->add_option("--seed", g.seed, "64-bit seed (default 0)");
    gen_random->add_option("--mode", g.mode, "rainbow or greedy_proper (default rainbow)");
    gen_random->add_option("--out", g.out, "output path (default stdout)");
    gen_random->callback([&] {
        RandomInstanceSpec spec;
        spec.n = g.n;
        spec.k = g.k;
        spec.m = g.m;
        spec.seed = g.seed;
        spec.coloring_mode = coloring_mode_from_string(g.mode);
        exit_code = run_gen_random(spec, g.out);
    });

    // check ---------------------------------------------------------------
    auto * check = app.add_subcommand("check", "validate a colored hypergraph file");
    check->require_subcommand(1);
    struct {
        std::string path;
    } c;
    auto * check_proper = check->add_subcommand("proper", "proper coloring: color classes are matchings");
    check_proper->add_option("file", c.path, "hypergraph file")->required();
    check_proper->callback([&] { exit_code = run_check(c.path, false); });
    auto * check_rainbow = check->add_subcommand("rainbow", "rainbow coloring: all edge colors distinct");
    check_rainbow->add_option("file", c.path, "hypergraph file")->required();
    check_rainbow->callback([&] { exit_code = run_check(c.path, true); });

    // solve / nur / nu ------------------------------------------------------
    struct {
        std::string family;
        std::string input;
        bool oracle = false;
        bool allow_improper = false;
    } s;
    auto * solve = app.add_subcommand("solve", "find an s-rainbow matching across a family");
    solve->add_option("--family", s.family, "family file")->required();
    solve->add_flag("--oracle", s.oracle, "use the exhaustive oracle instead of backtracking");
    solve->add_flag("--allow-improper", s.allow_improper, "accept members that are not properly colored");
    solve->callback([&] { exit_code = run_solve(s.family, s.oracle, s.allow_improper); });

    auto * nur = app.add_subcommand("nur", "rainbow matching number of one hypergraph");
    nur->add_option("--input", s.input, "hypergraph file")->required();
    nur->callback([&] { exit_code = run_count(s.input, true); });

    auto * nu = app.add_subcommand("nu", "matching number of one hypergraph");
    nu->add_option("--input", s.input, "hypergraph file")->required();
    nu->callback([&] { exit_code = run_count(s.input, false); });

    // prove ---------------------------------------------------------------
    struct {
        std::string family;
        std::string trace;
    } p;
    auto * prove = app.add_subcommand("prove", "construct a matching by the guaranteed descent");
    prove->add_option("--family", p.family, "family file")->required();
    prove->add_option("--trace", p.trace, "write the descent trace here");
    prove->callback([&] { exit_code = run_prove(p.family, p.trace); });

    // verify ---------------------------------------------------------------
    auto * verify = app.add_subcommand("verify", "batch checks and experiments");
    verify->require_subcommand(1);
    struct {
        std::string config;
        std::string out;
        std::string json;
        int n = 0, k = 0, s = 0;
    } v;
    auto * verify_sweep = verify->add_subcommand("sweep", "random-family sweep from a config file");
    verify_sweep->add_option("--config", v.config, "config file (keys: grid, trials, edges, coloring_mode, seed, engine)")
        ->required();
    verify_sweep->add_option("--out", v.out, "CSV report path")->required();
    verify_sweep->add_option("--json", v.json, "full structured report path");
    verify_sweep->callback([&] { exit_code = run_verify_sweep(v.config, v.out, v.json); });

    auto * verify_tightness = verify->add_subcommand("tightness", "the cover construction sits at the threshold");
    verify_tightness->add_option("--n", v.n, "vertex count")->required();
    verify_tightness->add_option("--k", v.k, "edge size")->required();
    verify_tightness->add_option("--s", v.s, "family size")->required();
    verify_tightness->callback([&] { exit_code = run_verify_tightness(v.n, v.k, v.s); });

    auto * verify_pair = verify->add_subcommand("counterexample", "the complement pair has no 2-rainbow matching");
    verify_pair->add_option("--k", v.k, "edge size")->required();
    verify_pair->callback([&] { exit_code = run_verify_counterexample(v.k); });

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    catch (const std::exception & ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 2;
    }
    return exit_code;
}
