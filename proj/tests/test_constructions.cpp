#include <catch2/catch_amalgamated.hpp>

#include <rainbow/constructions.hpp>
#include <rainbow/solver.hpp>

#include "oracles.hpp"

using namespace rainbow;

TEST_CASE("cover construction: every edge meets the first s-1 vertices")
{
    const auto h = cover_construction(24, 2, 2);
    CHECK(h.n == 24);
    CHECK(h.k == 2);
    CHECK(h.edge_count() == 23); // threshold(24,2,2), pinned by the additive oracle
    CHECK(h.edge_count() == oracle::threshold(24, 2, 2));
    CHECK(is_rainbow(h));
    for (const auto & e : h.edges)
        CHECK(e.vertices[0] == 0); // s-1 = 1: everything passes through vertex 0

    const auto big = cover_construction(54, 3, 2);
    CHECK(big.edge_count() == 1378);
    CHECK(big.edge_count() == oracle::threshold(54, 3, 2));

    const auto wide = cover_construction(36, 2, 3);
    CHECK(wide.edge_count() == 69);
    for (const auto & e : wide.edges)
        CHECK(e.vertices[0] <= 1); // meets {0, 1}

    CHECK(cover_construction(10, 2, 2).edge_count() == 9);
    CHECK(cover_construction(8, 3, 1).edges.empty()); // s = 1: nothing to block
}

TEST_CASE("cover construction colors follow the emission order")
{
    const auto h = cover_construction(10, 3, 2);
    CHECK(h.edge_count() == 36);
    for (std::size_t i = 0; i < h.edges.size(); ++i)
        CHECK(h.edges[i].color == static_cast<Color>(i));
    // colex order on the vertex sets
    for (std::size_t i = 1; i < h.edges.size(); ++i)
        CHECK(colex_rank(h.edges[i - 1].vertices) < colex_rank(h.edges[i].vertices));
}

TEST_CASE("cover construction matches the threshold across the whole grid")
{
    for (int n = 2; n <= 40; ++n)
        for (int k = 2; k <= 4 && k <= n; ++k)
            for (int s = 1; s <= 5 && s - 1 <= n; ++s) {
                CAPTURE(n, k, s);
                const auto h = cover_construction(n, k, s);
                REQUIRE(h.edge_count() == threshold(n, k, s));
                REQUIRE(h.edge_count() == oracle::threshold(n, k, s));
                REQUIRE(is_rainbow(h));
            }
}

TEST_CASE("cover construction rejects bad parameters")
{
    CHECK_THROWS_AS(cover_construction(4, 1, 2), InputError);
    CHECK_THROWS_AS(cover_construction(3, 4, 1), InputError);
    CHECK_THROWS_AS(cover_construction(4, 2, 0), InputError);
    CHECK_THROWS_AS(cover_construction(2, 2, 5), InputError); // prefix set larger than the universe
}

TEST_CASE("clique construction blocks s disjoint edges")
{
    const auto h = clique_construction(12, 3, 2);
    CHECK(h.n == 12);
    CHECK(h.edge_count() == 10); // C(5,3)
    CHECK(is_rainbow(h));
    for (const auto & e : h.edges)
        CHECK(e.vertices.back() <= 4); // all inside the first ks-1 = 5 vertices
    CHECK(oracle::nu(h) == 1);         // s - 1

    const auto g = clique_construction(12, 2, 4);
    CHECK(g.edge_count() == 21); // C(7,2)
    CHECK(oracle::nu(g) == 3);   // s - 1

    CHECK_THROWS_AS(clique_construction(12, 3, 1), InputError); // k > ks-1 when s = 1
    CHECK_THROWS_AS(clique_construction(4, 3, 2), InputError);  // ks-1 > n
    CHECK_THROWS_AS(clique_construction(12, 1, 3), InputError);
}

TEST_CASE("complement pair: equal-color collisions kill every disjoint choice")
{
    const auto f = complement_pair(2);
    REQUIRE(f.size() == 2);
    CHECK(f.n == 4);
    CHECK(f.k == 2);
    CHECK(f.members[0].edge_count() == 6);
    CHECK(f.members[1].edge_count() == 6);
    CHECK(is_rainbow(f.members[0]));
    CHECK(is_rainbow(f.members[1]));

    // member 0 carries colex ranks; member 1 carries the rank of the complement
    CHECK(f.members[0].edges[0].vertices == std::vector<Vertex>{0, 1});
    CHECK(f.members[0].edges[0].color == 0);
    CHECK(f.members[1].edges[0].vertices == std::vector<Vertex>{0, 1});
    CHECK(f.members[1].edges[0].color == 5); // rank of {2,3}
    CHECK(f.members[1].edges[5].color == 0); // {2,3} gets the rank of {0,1}

    // disjoint picks are forced onto complementary sets, which share a color
    CHECK_FALSE(oracle::exists_rainbow_matching(f));

    for (int k = 2; k <= 5; ++k) {
        CAPTURE(k);
        const auto pair = complement_pair(k);
        REQUIRE(pair.members[0].edge_count() == oracle::binomial(2 * k, k));
        REQUIRE(pair.members[0].edge_count() > oracle::binomial(2 * k - 1, k));
    }
    CHECK_FALSE(oracle::exists_rainbow_matching(complement_pair(3)));

    CHECK_THROWS_AS(complement_pair(1), InputError);
}

TEST_CASE("greedy first-fit coloring on the complete graph K4")
{
    std::vector<std::vector<Vertex>> edges;
    for (const auto & subset : all_k_subsets(4, 2))
        edges.push_back({subset.begin(), subset.end()});
    const auto h = greedy_proper_coloring(4, 2, edges);
    REQUIRE(h.edge_count() == 6);
    std::vector<Color> got;
    for (const auto & e : h.edges)
        got.push_back(e.color);
    CHECK(got == std::vector<Color>{0, 1, 2, 2, 1, 0});
    CHECK(is_properly_colored(h));
}

TEST_CASE("greedy coloring is always proper and never wasteful")
{
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        RandomInstanceSpec spec;
        spec.n = 9;
        spec.k = 3;
        spec.m = 12;
        spec.seed = seed;
        spec.coloring_mode = ColoringMode::GreedyProper;
        const auto h = random_instance(spec);
        CAPTURE(seed);
        REQUIRE(is_properly_colored(h));
        // first-fit: color c on an edge means colors 0..c-1 all blocked by
        // earlier intersecting edges
        for (std::size_t i = 0; i < h.edges.size(); ++i) {
            std::vector<char> blocked(static_cast<std::size_t>(h.edges[i].color), 0);
            for (std::size_t j = 0; j < i; ++j) {
                bool meets = false;
                for (Vertex v : h.edges[j].vertices)
                    if (h.edges[i].contains(v))
                        meets = true;
                if (meets && h.edges[j].color < h.edges[i].color)
                    blocked[static_cast<std::size_t>(h.edges[j].color)] = 1;
            }
            for (char b : blocked)
                REQUIRE(b == 1);
        }
    }
}

TEST_CASE("random instances are deterministic, distinct, and colex-ordered")
{
    RandomInstanceSpec spec;
    spec.n = 10;
    spec.k = 3;
    spec.m = 20;
    spec.seed = 0xDEADBEEF;
    const auto a = random_instance(spec);
    const auto b = random_instance(spec);
    CHECK(a == b);
    REQUIRE(a.edge_count() == 20);
    CHECK(is_rainbow(a));
    for (std::size_t i = 1; i < a.edges.size(); ++i)
        CHECK(colex_rank(a.edges[i - 1].vertices) < colex_rank(a.edges[i].vertices)); // distinct and sorted

    spec.seed = 1;
    CHECK_FALSE(random_instance(spec) == a);

    spec.m = binomial(10, 3); // the full population is fine
    CHECK(random_instance(spec).edge_count() == 120);
    spec.m = binomial(10, 3) + 1;
    CHECK_THROWS_AS(random_instance(spec), InputError);
    spec.m = 0;
    CHECK(random_instance(spec).edges.empty());
}

TEST_CASE("rainbow mode colors edges 0..m-1")
{
    RandomInstanceSpec spec;
    spec.n = 8;
    spec.k = 2;
    spec.m = 7;
    spec.seed = 42;
    const auto h = random_instance(spec);
    for (std::size_t i = 0; i < h.edges.size(); ++i)
        CHECK(h.edges[i].color == static_cast<Color>(i));
}

TEST_CASE("sample_distinct draws without replacement")
{
    SplitMix64 gen(7);
    const auto sample = sample_distinct(gen, 100, 20);
    REQUIRE(sample.size() == 20);
    for (std::size_t i = 1; i < sample.size(); ++i)
        REQUIRE(sample[i - 1] < sample[i]); // sorted and distinct
    for (Count r : sample)
        REQUIRE((r >= 0 && r < 100));

    SplitMix64 gen2(7);
    CHECK(sample_distinct(gen2, 100, 20) == sample); // same seed, same draw

    SplitMix64 gen3(7);
    const auto everything = sample_distinct(gen3, 15, 15);
    for (Count i = 0; i < 15; ++i)
        REQUIRE(everything[static_cast<std::size_t>(i)] == i);
}

TEST_CASE("seed derivation separates indices")
{
    const auto a = derive_seed(123, 0);
    const auto b = derive_seed(123, 1);
    const auto c = derive_seed(124, 0);
    CHECK(a != b);
    CHECK(a != c);
    CHECK(derive_seed(123, 0) == a); // pure function
}
