#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "rainbow/errors.hpp"

namespace rainbow {

using Count = std::int64_t;

// ============================================================================
// exact counting
// ============================================================================

// C(n, k), exact. Works in 128-bit intermediates and throws OverflowError if
// the running product leaves the 64-bit range, rather than wrapping. k outside
// [0, n] gives 0 by the usual convention.
inline auto binomial(int n, int k) -> Count
{
    if (n < 0)
        throw InputError("binomial: n must be non-negative, got " + std::to_string(n));
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    __int128 result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i; // divides exactly at every step
        if (result > static_cast<__int128>(INT64_MAX))
            throw OverflowError("binomial(" + std::to_string(n) + ", " + std::to_string(k) + ") exceeds 64 bits");
    }
    return static_cast<Count>(result);
}

// C(n, k) - C(n - s + 1, k): the edge-count bound that forces an s-rainbow
// matching. When n - s + 1 < 0 the subtracted term is 0 by convention.
inline auto threshold(int n, int k, int s) -> Count
{
    if (k < 0 || n < 0 || k > n)
        throw InputError("threshold: need 0 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
    if (s < 1)
        throw InputError("threshold: need s >= 1, got s=" + std::to_string(s));
    const int reduced = n - s + 1;
    return binomial(n, k) - (reduced >= 0 ? binomial(reduced, k) : 0);
}

// ============================================================================
// colexicographic order on k-subsets
// ============================================================================
//
// Sorted subsets v_1 < ... < v_k are ranked by rank(v) = sum_i C(v_i, i).
// Colex is the canonical enumeration order everywhere in this library: it
// needs no ambient n to rank, and complements are cheap to reason about.

inline auto colex_rank(const std::vector<int> & vertices) -> Count
{
    Count rank = 0;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        rank += binomial(vertices[i], static_cast<int>(i) + 1);
    return rank;
}

// Inverse of colex_rank for k-subsets of [0, n).
inline auto colex_unrank(Count rank, int k, int n) -> std::vector<int>
{
    if (k < 0 || n < 0 || k > n)
        throw InputError("colex_unrank: need 0 <= k <= n");
    if (rank < 0 || rank >= binomial(n, k))
        throw InputError("colex_unrank: rank " + std::to_string(rank) + " out of range");
    std::vector<int> vertices(static_cast<std::size_t>(k));
    int ceiling = n;
    for (int i = k; i >= 1; --i) {
        int c = ceiling - 1;          // largest c with C(c, i) <= rank
        while (binomial(c, i) > rank)
            --c;
        vertices[static_cast<std::size_t>(i) - 1] = c;
        rank -= binomial(c, i);
        ceiling = c;
    }
    return vertices;
}

// Advance a sorted k-subset of [0, n) to its colex successor. Returns false
// (leaving v at the last subset) when no successor exists.
inline auto next_colex(std::vector<int> & v, int n) -> bool
{
    const int k = static_cast<int>(v.size());
    for (int i = 0; i < k; ++i) {
        const int limit = (i + 1 < k) ? v[static_cast<std::size_t>(i) + 1] : n;
        if (v[static_cast<std::size_t>(i)] + 1 < limit) {
            ++v[static_cast<std::size_t>(i)];
            for (int j = 0; j < i; ++j)
                v[static_cast<std::size_t>(j)] = j;
            return true;
        }
    }
    return false;
}

// All k-subsets of [0, n) in colex order. Desk scale only: materialises the
// whole list.
inline auto all_k_subsets(int n, int k) -> std::vector<std::vector<int>>
{
    if (k < 0 || n < 0)
        throw InputError("all_k_subsets: negative parameters");
    std::vector<std::vector<int>> subsets;
    if (k > n)
        return subsets;
    std::vector<int> v(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        v[static_cast<std::size_t>(i)] = i;
    if (k == 0) {
        subsets.push_back({});
        return subsets;
    }
    do
        subsets.push_back(v);
    while (next_colex(v, n));
    return subsets;
}

} // namespace rainbow
