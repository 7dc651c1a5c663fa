#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rainbow/binomial.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/hypergraph.hpp"
#include "rainbow/prng.hpp"

namespace rainbow {

// ============================================================================
// extremal constructions
// ============================================================================

// All k-subsets of [0, n) that meet the cover set {0, ..., s-2}, each with a
// fresh color (colex emission order, color = emission index). This is the
// extremal example sitting exactly at the edge-count bound: it has
// threshold(n, k, s) edges, every matching uses a cover vertex, and no s
// pairwise disjoint edges exist.
inline auto cover_construction(int n, int k, int s) -> ColoredHypergraph
{
    if (k < 2 || k > n)
        throw InputError("cover_construction: need 2 <= k <= n");
    if (s < 1 || s - 1 > n)
        throw InputError("cover_construction: need 1 <= s and s - 1 <= n");

    ColoredHypergraph h;
    h.n = n;
    h.k = k;
    Color next_color = 0;
    for (auto & subset : all_k_subsets(n, k))
        if (! subset.empty() && subset.front() <= s - 2) // sorted, so front() is the minimum
            h.edges.push_back(ColoredEdge{std::move(subset), next_color++});
    return h;
}

// All k-subsets of {0, ..., ks-2}, rainbow-colored: a complete k-uniform
// clique on ks-1 vertices, whose matching number is s-1.
inline auto clique_construction(int n, int k, int s) -> ColoredHypergraph
{
    if (k < 2 || s < 1)
        throw InputError("clique_construction: need k >= 2 and s >= 1");
    if (k * s - 1 > n)
        throw InputError("clique_construction: need ks - 1 <= n");
    if (k > k * s - 1)
        throw InputError("clique_construction: need k <= ks - 1");

    ColoredHypergraph h;
    h.n = n;
    h.k = k;
    Color next_color = 0;
    for (auto & subset : all_k_subsets(k * s - 1, k))
        h.edges.push_back(ColoredEdge{std::move(subset), next_color++});
    return h;
}

// The sharpness pair on n = 2k vertices: H_1 is the complete k-uniform
// hypergraph rainbow-colored by colex rank, H_2 carries the same edges but
// colors each edge with the rank of its complement. Disjoint edges e in H_1
// and f in H_2 force f = [2k] \ e, so their colors collide and no 2-rainbow
// matching exists, even though both members beat the one-member clique bound
// C(2k-1, k).
inline auto complement_pair(int k) -> HypergraphFamily
{
    if (k < 2)
        throw InputError("complement_pair: need k >= 2");
    const int n = 2 * k;

    HypergraphFamily f;
    f.n = n;
    f.k = k;
    f.members.resize(2);
    for (auto & member : f.members) {
        member.n = n;
        member.k = k;
    }

    for (auto & subset : all_k_subsets(n, k)) {
        std::vector<Vertex> complement;
        complement.reserve(static_cast<std::size_t>(k));
        std::size_t at = 0;
        for (Vertex v = 0; v < n; ++v) {
            if (at < subset.size() && subset[at] == v)
                ++at;
            else
                complement.push_back(v);
        }
        const Color own_rank = static_cast<Color>(colex_rank(subset));
        const Color complement_rank = static_cast<Color>(colex_rank(complement));
        f.members[0].edges.push_back(ColoredEdge{subset, own_rank});
        f.members[1].edges.push_back(ColoredEdge{std::move(subset), complement_rank});
    }
    return f;
}

// ============================================================================
// random instances
// ============================================================================

enum class ColoringMode { Rainbow, GreedyProper };

inline auto to_string(ColoringMode mode) -> std::string
{
    return mode == ColoringMode::Rainbow ? "rainbow" : "greedy_proper";
}

struct RandomInstanceSpec {
    int n = 0;
    int k = 2;
    Count m = 0;
    std::uint64_t seed = 0;
    ColoringMode coloring_mode = ColoringMode::Rainbow;
};

// First-fit proper coloring: edges in the given order, each taking the
// smallest color id not already used by an earlier edge it intersects. The
// output is always properly colored, and no edge's color exceeds the number
// of earlier edges meeting it.
inline auto greedy_proper_coloring(int n, int k, const std::vector<std::vector<Vertex>> & edge_sets) -> ColoredHypergraph
{
    if (k < 2 || k > n)
        throw InputError("greedy_proper_coloring: need 2 <= k <= n");

    ColoredHypergraph h;
    h.n = n;
    h.k = k;
    std::vector<std::vector<Color>> colors_at(static_cast<std::size_t>(n));

    for (const auto & raw : edge_sets) {
        auto edge = make_edge(raw, 0);
        if (static_cast<int>(edge.vertices.size()) != k ||
            std::adjacent_find(edge.vertices.begin(), edge.vertices.end()) != edge.vertices.end())
            throw InputError("greedy_proper_coloring: edge is not a k-subset");
        for (Vertex v : edge.vertices)
            if (v < 0 || v >= n)
                throw InputError("greedy_proper_coloring: vertex " + std::to_string(v) + " out of range");

        std::vector<Color> blocked;
        for (Vertex v : edge.vertices)
            blocked.insert(blocked.end(), colors_at[static_cast<std::size_t>(v)].begin(),
                           colors_at[static_cast<std::size_t>(v)].end());
        std::sort(blocked.begin(), blocked.end());
        Color color = 0;
        for (Color b : blocked) {
            if (b > color)
                break;
            if (b == color)
                ++color;
        }

        edge.color = color;
        for (Vertex v : edge.vertices)
            colors_at[static_cast<std::size_t>(v)].push_back(color);
        h.edges.push_back(std::move(edge));
    }
    return h;
}

// m distinct k-subsets of [0, n), drawn uniformly without replacement by
// sampling colex ranks (Floyd's algorithm) and unranking — never by
// rejection over subsets. Edges are emitted in colex order and colored by the
// requested mode. Identical specs produce bit-identical hypergraphs.
inline auto random_instance(const RandomInstanceSpec & spec) -> ColoredHypergraph
{
    if (spec.k < 2 || spec.k > spec.n)
        throw InputError("random_instance: need 2 <= k <= n");
    const Count population = binomial(spec.n, spec.k);
    if (spec.m < 0 || spec.m > population)
        throw InputError("random_instance: need 0 <= m <= C(n, k) = " + std::to_string(population));

    SplitMix64 gen(spec.seed);
    auto ranks = sample_distinct(gen, population, spec.m);

    std::vector<std::vector<Vertex>> edge_sets;
    edge_sets.reserve(ranks.size());
    for (Count r : ranks)
        edge_sets.push_back(colex_unrank(r, spec.k, spec.n));

    if (spec.coloring_mode == ColoringMode::GreedyProper)
        return greedy_proper_coloring(spec.n, spec.k, edge_sets);

    ColoredHypergraph h;
    h.n = spec.n;
    h.k = spec.k;
    Color next_color = 0;
    for (auto & subset : edge_sets)
        h.edges.push_back(ColoredEdge{std::move(subset), next_color++});
    return h;
}

} // namespace rainbow
