#include <catch2/catch_amalgamated.hpp>

#include <rainbow/binomial.hpp>

#include "oracles.hpp"

using namespace rainbow;

TEST_CASE("binomial agrees with the additive table everywhere it fits")
{
    for (int n = 0; n <= 66; ++n)
        for (int k = 0; k <= n; ++k)
            REQUIRE(binomial(n, k) == oracle::binomial(n, k));
}

TEST_CASE("binomial conventions and limits")
{
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK_THROWS_AS(binomial(-1, 0), InputError);
    CHECK(binomial(66, 33) == 7219428434016265740LL);
    CHECK(binomial(200, 1) == 200);
    CHECK(binomial(200, 199) == 200);
    CHECK_THROWS_AS(binomial(70, 35), OverflowError);
    CHECK_THROWS_AS(binomial(200, 100), OverflowError);
}

TEST_CASE("threshold values pinned by the table")
{
    // each value recomputed through the additive oracle as well
    struct Row {
        int n, k, s;
        Count expected;
    };
    const Row rows[] = {
        {24, 2, 2, 23},  {36, 2, 3, 69}, {54, 3, 2, 1378}, {4, 2, 2, 3},  {10, 2, 2, 9},
        {10, 3, 2, 36},  {12, 2, 3, 21}, {52, 2, 2, 51},   {2, 2, 2, 1},  {12, 2, 1, 0},
        {22, 2, 1, 0},
    };
    for (const auto & r : rows) {
        CAPTURE(r.n, r.k, r.s);
        CHECK(threshold(r.n, r.k, r.s) == r.expected);
        CHECK(threshold(r.n, r.k, r.s) == oracle::threshold(r.n, r.k, r.s));
    }
}

TEST_CASE("threshold handles the subtracted term vanishing")
{
    // n - s + 1 below zero: the subtrahend is zero by convention
    CHECK(threshold(3, 2, 5) == 3);
    CHECK(threshold(2, 2, 4) == 1);
    // n - s + 1 in [0, k): same result via C(small, k) = 0
    CHECK(threshold(4, 3, 4) == binomial(4, 3));
}

TEST_CASE("threshold rejects malformed parameters")
{
    CHECK_THROWS_AS(threshold(3, 4, 1), InputError);
    CHECK_THROWS_AS(threshold(-1, 0, 1), InputError);
    CHECK_THROWS_AS(threshold(5, -1, 1), InputError);
    CHECK_THROWS_AS(threshold(5, 2, 0), InputError);
}

TEST_CASE("threshold is strictly increasing in s while n >= k + s")
{
    for (int n = 1; n <= 60; ++n)
        for (int k = 1; k <= 5 && k <= n; ++k)
            for (int s = 2; s <= 10; ++s) {
                if (n < k + s)
                    continue;
                CAPTURE(n, k, s);
                REQUIRE(threshold(n, k, s) > threshold(n, k, s - 1));
            }
}

TEST_CASE("colex rank and unrank invert each other")
{
    for (int n = 0; n <= 12; ++n)
        for (int k = 0; k <= n && k <= 5; ++k) {
            const auto subsets = all_k_subsets(n, k);
            REQUIRE(static_cast<Count>(subsets.size()) == binomial(n, k));
            for (std::size_t i = 0; i < subsets.size(); ++i) {
                CAPTURE(n, k, i);
                REQUIRE(colex_rank(subsets[i]) == static_cast<Count>(i)); // enumeration follows rank order
                if (k > 0)
                    REQUIRE(colex_unrank(static_cast<Count>(i), k, n) == subsets[i]);
            }
        }
}

TEST_CASE("colex enumeration matches the bitmask walk")
{
    for (int n = 0; n <= 10; ++n)
        for (int k = 0; k <= n; ++k)
            REQUIRE(all_k_subsets(n, k) == oracle::subsets_by_mask(n, k));
}

TEST_CASE("colex basics")
{
    CHECK(colex_rank({0, 1, 2}) == 0);
    CHECK(colex_rank({1, 2, 3}) == 3);
    CHECK(colex_unrank(0, 3, 5) == std::vector<int>{0, 1, 2});
    CHECK_THROWS_AS(colex_unrank(10, 3, 4), InputError); // only 4 subsets exist
    CHECK_THROWS_AS(colex_unrank(-1, 2, 4), InputError);

    std::vector<int> v{0, 1};
    REQUIRE(next_colex(v, 3));
    CHECK(v == std::vector<int>{0, 2});
    REQUIRE(next_colex(v, 3));
    CHECK(v == std::vector<int>{1, 2});
    CHECK_FALSE(next_colex(v, 3));
    CHECK(v == std::vector<int>{1, 2}); // stays on the last subset

    CHECK(all_k_subsets(4, 0) == std::vector<std::vector<int>>{{}});
    CHECK(all_k_subsets(3, 4).empty());
}
