#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rainbow/errors.hpp"
#include "rainbow/hypergraph.hpp"

namespace rainbow {

// ============================================================================
// exact solvers
// ============================================================================

struct SolveOptions {
    // find_rainbow_matching normally insists on properly colored members;
    // lift for experiments on arbitrary colorings.
    bool require_proper = true;
    // brute_force_matching refuses products of member edge counts above this
    Count brute_cap = 10'000'000;
};

struct SolveOutcome {
    bool found = false;
    std::optional<RainbowMatching> matching;
    std::uint64_t nodes_explored = 0;
    std::chrono::duration<double, std::milli> elapsed{0};
};

namespace solver_detail {

    inline auto check_family(const HypergraphFamily & f, bool require_proper) -> void
    {
        auto report = validate(f);
        for (const auto & violation : report.violations) {
            if (violation.kind == ViolationKind::ProperColoring) {
                if (require_proper)
                    throw InputError("family is not properly colored (" + violation.message +
                                     "); lift require_proper to search anyway");
            }
            else
                throw InputError("invalid family: " + violation.message);
        }
    }

    inline auto compatible(const ColoredEdge & e, const std::vector<char> & used_vertex,
                           const std::vector<Color> & used_colors) -> bool
    {
        for (Color c : used_colors)
            if (c == e.color)
                return false;
        for (Vertex v : e.vertices)
            if (used_vertex[static_cast<std::size_t>(v)])
                return false;
        return true;
    }

    struct Search {
        const HypergraphFamily & family;
        std::vector<int> order;            // member indices, fewest edges first
        std::vector<char> used_vertex;
        std::vector<Color> used_colors;
        std::vector<int> chosen;           // edge index per position in `order`
        std::uint64_t nodes = 0;

        explicit Search(const HypergraphFamily & f) : family(f)
        {
            order.resize(static_cast<std::size_t>(f.size()));
            std::iota(order.begin(), order.end(), 0);
            std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
                return f.members[static_cast<std::size_t>(a)].edges.size() <
                       f.members[static_cast<std::size_t>(b)].edges.size();
            });
            used_vertex.assign(static_cast<std::size_t>(f.n), 0);
            chosen.assign(order.size(), -1);
        }

        // fail-first: every member from `from` onwards still needs one
        // compatible edge, otherwise this prefix is dead
        auto feasible(std::size_t from) const -> bool
        {
            for (std::size_t q = from; q < order.size(); ++q) {
                const auto & member = family.members[static_cast<std::size_t>(order[q])];
                if (std::none_of(member.edges.begin(), member.edges.end(),
                                 [&](const ColoredEdge & e) { return compatible(e, used_vertex, used_colors); }))
                    return false;
            }
            return true;
        }

        auto run(std::size_t position) -> bool
        {
            if (position == order.size())
                return true;
            const auto & member = family.members[static_cast<std::size_t>(order[position])];
            for (std::size_t e = 0; e < member.edges.size(); ++e) {
                const auto & edge = member.edges[e];
                if (! compatible(edge, used_vertex, used_colors))
                    continue;
                ++nodes;
                for (Vertex v : edge.vertices)
                    used_vertex[static_cast<std::size_t>(v)] = 1;
                used_colors.push_back(edge.color);
                chosen[position] = static_cast<int>(e);

                if (feasible(position + 1) && run(position + 1))
                    return true;

                chosen[position] = -1;
                used_colors.pop_back();
                for (Vertex v : edge.vertices)
                    used_vertex[static_cast<std::size_t>(v)] = 0;
            }
            return false;
        }
    };

} // namespace solver_detail

// Exhaustive backtracking search for an s-rainbow matching: one edge per
// member, pairwise vertex-disjoint and color-distinct. Members are processed
// fewest-edges-first (original indices restored in the witness); within a
// member, stored edge order. Deterministic: identical inputs give identical
// witnesses and node counts.
inline auto find_rainbow_matching(const HypergraphFamily & f, const SolveOptions & options = {}) -> SolveOutcome
{
    solver_detail::check_family(f, options.require_proper);

    const auto start = std::chrono::steady_clock::now();
    SolveOutcome outcome;
    solver_detail::Search search(f);
    if (search.feasible(0) && search.run(0)) {
        RainbowMatching matching;
        for (std::size_t p = 0; p < search.order.size(); ++p)
            matching.picks.emplace_back(search.order[p], search.chosen[p]);
        std::sort(matching.picks.begin(), matching.picks.end());
        outcome.found = true;
        outcome.matching = std::move(matching);
    }
    outcome.nodes_explored = search.nodes;
    outcome.elapsed = std::chrono::steady_clock::now() - start;
    return outcome;
}

// Independent oracle: enumerate the full product E(H_1) x ... x E(H_s) and
// test the definition directly. No ordering tricks, no pruning. Refuses
// products above options.brute_cap.
inline auto brute_force_matching(const HypergraphFamily & f, const SolveOptions & options = {}) -> SolveOutcome
{
    solver_detail::check_family(f, options.require_proper);

    __int128 product = 1;
    for (const auto & member : f.members) {
        product *= static_cast<Count>(member.edges.size());
        if (product > static_cast<__int128>(options.brute_cap))
            throw SizeError("brute_force_matching: tuple count exceeds cap " + std::to_string(options.brute_cap));
    }

    const auto start = std::chrono::steady_clock::now();
    SolveOutcome outcome;
    const int s = f.size();
    std::vector<std::size_t> pick(static_cast<std::size_t>(s), 0);
    bool exhausted = std::any_of(f.members.begin(), f.members.end(),
                                 [](const ColoredHypergraph & m) { return m.edges.empty(); });

    while (! exhausted) {
        ++outcome.nodes_explored;
        bool good = true;
        for (int a = 0; a < s && good; ++a)
            for (int b = a + 1; b < s && good; ++b) {
                const auto & ea = f.members[static_cast<std::size_t>(a)].edges[pick[static_cast<std::size_t>(a)]];
                const auto & eb = f.members[static_cast<std::size_t>(b)].edges[pick[static_cast<std::size_t>(b)]];
                if (ea.color == eb.color)
                    good = false;
                for (Vertex v : ea.vertices)
                    if (eb.contains(v))
                        good = false;
            }
        if (good) {
            RainbowMatching matching;
            for (int i = 0; i < s; ++i)
                matching.picks.emplace_back(i, static_cast<int>(pick[static_cast<std::size_t>(i)]));
            outcome.found = true;
            outcome.matching = std::move(matching);
            break;
        }
        // odometer
        int at = s - 1;
        while (at >= 0) {
            if (++pick[static_cast<std::size_t>(at)] < f.members[static_cast<std::size_t>(at)].edges.size())
                break;
            pick[static_cast<std::size_t>(at)] = 0;
            --at;
        }
        exhausted = at < 0;
    }
    outcome.elapsed = std::chrono::steady_clock::now() - start;
    return outcome;
}

namespace solver_detail {

    struct Bound {
        const ColoredHypergraph & h;
        bool rainbow_mode;
        std::vector<char> used_vertex;
        std::vector<Color> used_colors;
        Count best = 0;

        auto run(std::size_t index, Count current) -> void
        {
            best = std::max(best, current);
            const Count remaining = static_cast<Count>(h.edges.size() - index);
            if (remaining == 0 || current + remaining <= best)
                return; // trivial bound: even taking everything left cannot improve
            const auto & edge = h.edges[index];
            bool ok = true;
            if (rainbow_mode)
                for (Color c : used_colors)
                    if (c == edge.color) {
                        ok = false;
                        break;
                    }
            if (ok)
                for (Vertex v : edge.vertices)
                    if (used_vertex[static_cast<std::size_t>(v)]) {
                        ok = false;
                        break;
                    }
            if (ok) {
                for (Vertex v : edge.vertices)
                    used_vertex[static_cast<std::size_t>(v)] = 1;
                if (rainbow_mode)
                    used_colors.push_back(edge.color);
                run(index + 1, current + 1);
                if (rainbow_mode)
                    used_colors.pop_back();
                for (Vertex v : edge.vertices)
                    used_vertex[static_cast<std::size_t>(v)] = 0;
            }
            run(index + 1, current);
        }
    };

    inline auto maximum_matching(const ColoredHypergraph & h, bool rainbow_mode) -> Count
    {
        auto report = validate(h);
        for (const auto & violation : report.violations)
            if (violation.kind != ViolationKind::ProperColoring)
                throw InputError("invalid hypergraph: " + violation.message);
        Bound search{h, rainbow_mode, std::vector<char>(static_cast<std::size_t>(h.n), 0), {}, 0};
        search.run(0, 0);
        return search.best;
    }

} // namespace solver_detail

// nu(H): largest set of pairwise disjoint edges, colors ignored.
inline auto matching_number(const ColoredHypergraph & h) -> Count
{
    return solver_detail::maximum_matching(h, false);
}

// nu_r(H): largest pairwise disjoint AND pairwise color-distinct edge set.
inline auto rainbow_matching_number(const ColoredHypergraph & h) -> Count
{
    return solver_detail::maximum_matching(h, true);
}

} // namespace rainbow
