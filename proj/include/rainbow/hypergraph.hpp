#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rainbow/binomial.hpp"
#include "rainbow/errors.hpp"

namespace rainbow {

using Vertex = int;
using Color = int;

// ============================================================================
// data model
// ============================================================================
//
// Vertices are dense 0-based ids in [0, n). Colors are opaque non-negative
// integers shared across a whole family; there is no palette object. All types
// are plain values: operations return fresh objects and never mutate their
// inputs, so concurrent reads are safe.

// A k-subset of vertices (kept sorted) together with one color.
struct ColoredEdge {
    std::vector<Vertex> vertices;
    Color color = 0;

    auto contains(Vertex v) const -> bool
    {
        return std::binary_search(vertices.begin(), vertices.end(), v);
    }

    friend auto operator==(const ColoredEdge &, const ColoredEdge &) -> bool = default;
};

// Canonical edge construction: sorts the vertex list.
inline auto make_edge(std::vector<Vertex> vertices, Color color) -> ColoredEdge
{
    std::sort(vertices.begin(), vertices.end());
    return ColoredEdge{std::move(vertices), color};
}

// One edge-colored k-uniform hypergraph. Edge storage keeps insertion order;
// no two edges may share both vertex set and color.
struct ColoredHypergraph {
    int n = 0;
    int k = 2;
    std::vector<ColoredEdge> edges;

    auto edge_count() const -> Count { return static_cast<Count>(edges.size()); }

    friend auto operator==(const ColoredHypergraph &, const ColoredHypergraph &) -> bool = default;
};

// An ordered family H_1, ..., H_s on a shared vertex set and color space.
struct HypergraphFamily {
    int n = 0;
    int k = 2;
    std::vector<ColoredHypergraph> members;

    auto size() const -> int { return static_cast<int>(members.size()); }

    friend auto operator==(const HypergraphFamily &, const HypergraphFamily &) -> bool = default;
};

// An s-rainbow matching: one (member index, edge index) pick per member,
// kept sorted by member index. The picked edges are pairwise vertex-disjoint
// and pairwise color-distinct.
struct RainbowMatching {
    std::vector<std::pair<int, int>> picks;

    friend auto operator==(const RainbowMatching &, const RainbowMatching &) -> bool = default;
};

// ============================================================================
// predicates and queries
// ============================================================================

// Proper coloring: at every vertex, the incident edges carry pairwise distinct
// colors (each color class is a matching).
inline auto is_properly_colored(const ColoredHypergraph & h) -> bool
{
    std::vector<std::pair<Vertex, Color>> incidences;
    for (const auto & e : h.edges)
        for (Vertex v : e.vertices)
            incidences.emplace_back(v, e.color);
    std::sort(incidences.begin(), incidences.end());
    return std::adjacent_find(incidences.begin(), incidences.end()) == incidences.end();
}

// Rainbow: all edge colors pairwise distinct.
inline auto is_rainbow(const ColoredHypergraph & h) -> bool
{
    std::vector<Color> colors;
    colors.reserve(h.edges.size());
    for (const auto & e : h.edges)
        colors.push_back(e.color);
    std::sort(colors.begin(), colors.end());
    return std::adjacent_find(colors.begin(), colors.end()) == colors.end();
}

inline auto degree(const ColoredHypergraph & h, Vertex v) -> Count
{
    if (v < 0 || v >= h.n)
        throw InputError("degree: vertex " + std::to_string(v) + " out of range [0, " + std::to_string(h.n) + ")");
    Count d = 0;
    for (const auto & e : h.edges)
        if (e.contains(v))
            ++d;
    return d;
}

// Per-vertex degrees in one pass.
inline auto degree_sequence(const ColoredHypergraph & h) -> std::vector<Count>
{
    std::vector<Count> degrees(static_cast<std::size_t>(h.n), 0);
    for (const auto & e : h.edges)
        for (Vertex v : e.vertices)
            ++degrees[static_cast<std::size_t>(v)];
    return degrees;
}

// ============================================================================
// deletions and links
// ============================================================================

// A hypergraph whose vertex ids were compacted, plus the relabeling in both
// directions: new_to_old[new_id] = old_id, old_to_new[old_id] = new_id or -1
// where the vertex was removed.
struct Relabeled {
    ColoredHypergraph graph;
    std::vector<Vertex> new_to_old;
    std::vector<Vertex> old_to_new;
};

// Induced subhypergraph on the complement of `removed`: drops every edge that
// meets a removed vertex and compacts the surviving ids.
inline auto delete_vertices(const ColoredHypergraph & h, const std::vector<Vertex> & removed) -> Relabeled
{
    std::vector<char> gone(static_cast<std::size_t>(h.n), 0);
    for (Vertex v : removed) {
        if (v < 0 || v >= h.n)
            throw InputError("delete_vertices: vertex " + std::to_string(v) + " out of range");
        gone[static_cast<std::size_t>(v)] = 1;
    }

    Relabeled result;
    result.old_to_new.assign(static_cast<std::size_t>(h.n), -1);
    for (Vertex v = 0; v < h.n; ++v)
        if (! gone[static_cast<std::size_t>(v)]) {
            result.old_to_new[static_cast<std::size_t>(v)] = static_cast<Vertex>(result.new_to_old.size());
            result.new_to_old.push_back(v);
        }

    result.graph.n = static_cast<int>(result.new_to_old.size());
    result.graph.k = h.k;
    for (const auto & e : h.edges) {
        if (std::any_of(e.vertices.begin(), e.vertices.end(),
                        [&](Vertex v) { return gone[static_cast<std::size_t>(v)]; }))
            continue;
        ColoredEdge mapped;
        mapped.color = e.color;
        mapped.vertices.reserve(e.vertices.size());
        for (Vertex v : e.vertices) // relabeling is monotone, order survives
            mapped.vertices.push_back(result.old_to_new[static_cast<std::size_t>(v)]);
        result.graph.edges.push_back(std::move(mapped));
    }
    return result;
}

inline auto delete_vertex(const ColoredHypergraph & h, Vertex v) -> Relabeled
{
    return delete_vertices(h, {v});
}

// Drop every edge colored c. Vertex set unchanged; unknown colors are a no-op.
inline auto delete_color(const ColoredHypergraph & h, Color c) -> ColoredHypergraph
{
    ColoredHypergraph result;
    result.n = h.n;
    result.k = h.k;
    for (const auto & e : h.edges)
        if (e.color != c)
            result.edges.push_back(e);
    return result;
}

// The link of v with a forbidden set F (v must belong to F): take every edge e
// with e ∩ F = {v} and record e \ {v}, inheriting its color. The result is
// (k-1)-uniform on the n - |F| surviving vertices, ids compacted. A 2-uniform
// source would produce a 1-uniform link, which is undefined here.
inline auto link(const ColoredHypergraph & h, Vertex v, const std::vector<Vertex> & forbidden) -> Relabeled
{
    if (h.k < 3)
        throw InputError("link: source must be at least 3-uniform (a 1-uniform link is undefined)");
    if (v < 0 || v >= h.n)
        throw InputError("link: vertex " + std::to_string(v) + " out of range");
    std::vector<char> banned(static_cast<std::size_t>(h.n), 0);
    for (Vertex u : forbidden) {
        if (u < 0 || u >= h.n)
            throw InputError("link: forbidden vertex " + std::to_string(u) + " out of range");
        banned[static_cast<std::size_t>(u)] = 1;
    }
    if (! banned[static_cast<std::size_t>(v)])
        throw InputError("link: vertex " + std::to_string(v) + " must belong to the forbidden set");

    Relabeled result;
    result.old_to_new.assign(static_cast<std::size_t>(h.n), -1);
    for (Vertex u = 0; u < h.n; ++u)
        if (! banned[static_cast<std::size_t>(u)]) {
            result.old_to_new[static_cast<std::size_t>(u)] = static_cast<Vertex>(result.new_to_old.size());
            result.new_to_old.push_back(u);
        }

    result.graph.n = static_cast<int>(result.new_to_old.size());
    result.graph.k = h.k - 1;
    for (const auto & e : h.edges) {
        if (! e.contains(v))
            continue;
        bool clean = true;
        for (Vertex u : e.vertices)
            if (u != v && banned[static_cast<std::size_t>(u)]) {
                clean = false;
                break;
            }
        if (! clean)
            continue;
        ColoredEdge mapped;
        mapped.color = e.color;
        mapped.vertices.reserve(e.vertices.size() - 1);
        for (Vertex u : e.vertices)
            if (u != v)
                mapped.vertices.push_back(result.old_to_new[static_cast<std::size_t>(u)]);
        result.graph.edges.push_back(std::move(mapped));
    }
    return result;
}

// ============================================================================
// validation
// ============================================================================

enum class ViolationKind {
    Uniformity,      // k < 2
    Arity,           // edge is not a k-subset (wrong size or repeated vertex)
    Representation,  // vertex list stored out of order
    VertexRange,     // vertex id outside [0, n)
    NegativeColor,
    DuplicateEdge,   // identical vertex set and identical color
    ProperColoring,  // two same-colored edges share a vertex
};

struct Violation {
    ViolationKind kind;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    auto ok() const -> bool { return violations.empty(); }
};

// Structural checks plus the proper-coloring check: the report is empty iff
// the hypergraph is valid AND properly colored. Violation messages carry the
// witnessing edge index / vertex.
inline auto validate(const ColoredHypergraph & h) -> ValidationReport
{
    ValidationReport report;
    auto flag = [&](ViolationKind kind, std::string message) {
        report.violations.push_back({kind, std::move(message)});
    };

    if (h.n < 0)
        flag(ViolationKind::VertexRange, "vertex count n is negative");
    if (h.k < 2)
        flag(ViolationKind::Uniformity, "uniformity k = " + std::to_string(h.k) + " but k >= 2 is required");

    for (std::size_t i = 0; i < h.edges.size(); ++i) {
        const auto & e = h.edges[i];
        const std::string where = "edge " + std::to_string(i);

        std::vector<Vertex> distinct(e.vertices);
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        if (static_cast<int>(distinct.size()) != h.k)
            flag(ViolationKind::Arity,
                 where + " has " + std::to_string(distinct.size()) + " distinct vertices, expected " + std::to_string(h.k));
        else if (! std::is_sorted(e.vertices.begin(), e.vertices.end()))
            flag(ViolationKind::Representation, where + " stores its vertices out of order");

        for (Vertex v : e.vertices)
            if (v < 0 || v >= h.n) {
                flag(ViolationKind::VertexRange,
                     where + " mentions vertex " + std::to_string(v) + " outside [0, " + std::to_string(h.n) + ")");
                break;
            }
        if (e.color < 0)
            flag(ViolationKind::NegativeColor, where + " has negative color " + std::to_string(e.color));
    }

    // exact duplicates: same sorted vertex set, same color
    {
        std::map<std::pair<std::vector<Vertex>, Color>, std::size_t> seen;
        for (std::size_t i = 0; i < h.edges.size(); ++i) {
            std::vector<Vertex> key(h.edges[i].vertices);
            std::sort(key.begin(), key.end());
            auto [it, fresh] = seen.try_emplace({std::move(key), h.edges[i].color}, i);
            if (! fresh)
                flag(ViolationKind::DuplicateEdge,
                     "edge " + std::to_string(i) + " duplicates edge " + std::to_string(it->second) +
                         " (same vertices, same color)");
        }
    }

    // proper coloring, with a witnessing vertex
    {
        std::map<std::pair<Vertex, Color>, std::size_t> seen;
        for (std::size_t i = 0; i < h.edges.size(); ++i)
            for (Vertex v : h.edges[i].vertices) {
                auto [it, fresh] = seen.try_emplace({v, h.edges[i].color}, i);
                if (! fresh && it->second != i)
                    flag(ViolationKind::ProperColoring,
                         "edges " + std::to_string(it->second) + " and " + std::to_string(i) +
                             " share color " + std::to_string(h.edges[i].color) + " at vertex " + std::to_string(v));
            }
    }

    return report;
}

// Family validation: every member validated, plus the shared-universe checks.
inline auto validate(const HypergraphFamily & f) -> ValidationReport
{
    ValidationReport report;
    if (f.size() < 1)
        report.violations.push_back({ViolationKind::Arity, "family has no members (s >= 1 required)"});
    for (int i = 0; i < f.size(); ++i) {
        const auto & m = f.members[static_cast<std::size_t>(i)];
        if (m.n != f.n || m.k != f.k)
            report.violations.push_back(
                {ViolationKind::Uniformity,
                 "member " + std::to_string(i) + " has (n=" + std::to_string(m.n) + ", k=" + std::to_string(m.k) +
                     "), family declares (n=" + std::to_string(f.n) + ", k=" + std::to_string(f.k) + ")"});
        for (auto & violation : validate(m).violations)
            report.violations.push_back(
                {violation.kind, "member " + std::to_string(i) + ": " + violation.message});
    }
    return report;
}

// ============================================================================
// matching checker
// ============================================================================
//
// Deliberately independent of any solver internals: checks the definition and
// nothing else, so solver and proof-engine outputs can be re-validated against
// it.

inline auto matching_violations(const HypergraphFamily & f, const RainbowMatching & m) -> std::vector<std::string>
{
    std::vector<std::string> problems;
    if (static_cast<int>(m.picks.size()) != f.size()) {
        problems.push_back("matching has " + std::to_string(m.picks.size()) + " picks for " +
                           std::to_string(f.size()) + " members");
        return problems;
    }
    std::vector<char> member_seen(static_cast<std::size_t>(f.size()), 0);
    for (const auto & [i, e] : m.picks) {
        if (i < 0 || i >= f.size()) {
            problems.push_back("pick names member " + std::to_string(i) + " out of range");
            return problems;
        }
        if (member_seen[static_cast<std::size_t>(i)]++)
            problems.push_back("member " + std::to_string(i) + " picked more than once");
        if (e < 0 || e >= static_cast<int>(f.members[static_cast<std::size_t>(i)].edges.size()))
            problems.push_back("pick (" + std::to_string(i) + ", " + std::to_string(e) + ") edge index out of range");
    }
    if (! problems.empty())
        return problems;

    for (std::size_t a = 0; a < m.picks.size(); ++a)
        for (std::size_t b = a + 1; b < m.picks.size(); ++b) {
            const auto & ea = f.members[static_cast<std::size_t>(m.picks[a].first)].edges[static_cast<std::size_t>(m.picks[a].second)];
            const auto & eb = f.members[static_cast<std::size_t>(m.picks[b].first)].edges[static_cast<std::size_t>(m.picks[b].second)];
            if (ea.color == eb.color)
                problems.push_back("picks " + std::to_string(a) + " and " + std::to_string(b) +
                                   " share color " + std::to_string(ea.color));
            for (Vertex v : ea.vertices)
                if (eb.contains(v)) {
                    problems.push_back("picks " + std::to_string(a) + " and " + std::to_string(b) +
                                       " share vertex " + std::to_string(v));
                    break;
                }
        }
    return problems;
}

inline auto is_valid_matching(const HypergraphFamily & f, const RainbowMatching & m) -> bool
{
    return matching_violations(f, m).empty();
}

} // namespace rainbow
