#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rainbow/binomial.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/hypergraph.hpp"

namespace rainbow {

// ============================================================================
// proof-extracted constructive search
// ============================================================================
//
// The three entry points below are the constructive reading of the existence
// argument for s-rainbow matchings: instead of a yes/no answer they walk the
// same case analysis the argument does, and every recursive call re-asserts
// the hypotheses it relies on. A PreconditionError on the outer call means the
// input genuinely fails the hypotheses; one raised deeper, or any
// ContradictionError, means the counting argument and the code disagree and is
// always a bug.

// Degree/color-class bounds steering the case analysis. Recomputed from
// (n, k, s) on demand, never cached: deletions change n between levels.
struct ProofThresholds {
    Count d_high = 0;      // k(s-1) C(n-2, k-2) + (s-1): vertex degree above this fires the high-degree branch
    Count d_low = 0;       // 2(s-1) C(n-2, k-2) + (s-1): the link-descent degree floor
    Count graph_deg = 0;   // 3(s-1): the k = 2 degree bound
    Count graph_color = 0; // 2(s-1): the k = 2 color-class bound
};

inline auto thresholds_for(int n, int k, int s) -> ProofThresholds
{
    if (n < 2 || k < 2 || s < 1)
        throw InputError("thresholds_for: need n >= 2, k >= 2, s >= 1");
    auto mul = [](Count a, Count b) -> Count {
        const __int128 wide = static_cast<__int128>(a) * b;
        if (wide > static_cast<__int128>(INT64_MAX))
            throw OverflowError("thresholds_for: 64-bit overflow");
        return static_cast<Count>(wide);
    };
    const Count pairs = binomial(n - 2, k - 2); // 1 when k == 2
    ProofThresholds th;
    th.d_high = mul(static_cast<Count>(k) * (s - 1), pairs) + (s - 1);
    th.d_low = mul(static_cast<Count>(2) * (s - 1), pairs) + (s - 1);
    th.graph_deg = 3 * static_cast<Count>(s - 1);
    th.graph_color = 2 * static_cast<Count>(s - 1);
    return th;
}

// ----------------------------------------------------------------------------
// traces
// ----------------------------------------------------------------------------

enum class TraceCase {
    HighDegreeVertex, // a vertex beat the degree bound; recurse with it deleted
    ColorClass,       // k = 2: a color class beat the class bound; recurse with it deleted
    ArbitraryEdge,    // take the first edge of member 0 and clean up around it
    ExtendScan,       // scan one member for an edge extending a recursive matching
    LinkDescent,      // degrees force s vertices whose links carry the recursion
    Lemma2Call,       // descend into the rainbow procedure (on links)
    Lemma1Call,       // descend into the k = 2 rainbow procedure
    BaseCase,         // s = 1: the first edge of the only member
    Failure,          // a guaranteed step failed; a ContradictionError follows
};

inline auto to_string(TraceCase c) -> const char *
{
    switch (c) {
    case TraceCase::HighDegreeVertex: return "high-degree-vertex";
    case TraceCase::ColorClass: return "color-class";
    case TraceCase::ArbitraryEdge: return "arbitrary-edge";
    case TraceCase::ExtendScan: return "extend-scan";
    case TraceCase::LinkDescent: return "link-descent";
    case TraceCase::Lemma2Call: return "lemma2-call";
    case TraceCase::Lemma1Call: return "lemma1-call";
    case TraceCase::BaseCase: return "base-case";
    case TraceCase::Failure: return "failure";
    }
    return "?";
}

struct TraceEntry {
    int depth = 0;
    TraceCase branch = TraceCase::BaseCase;
    int n = 0, k = 0, s = 0; // parameters of the call the entry belongs to
    std::string detail;      // chosen member / vertex / edge / color ids
};

struct ProofTrace {
    std::vector<TraceEntry> entries;
};

// line-oriented log: "depth case n k s detail..."
inline auto render(const ProofTrace & trace) -> std::string
{
    std::ostringstream out;
    for (const auto & e : trace.entries) {
        out << e.depth << ' ' << to_string(e.branch) << ' ' << e.n << ' ' << e.k << ' ' << e.s;
        if (! e.detail.empty())
            out << ' ' << e.detail;
        out << '\n';
    }
    return out.str();
}

struct ProofResult {
    RainbowMatching matching;
    ProofTrace trace;
};

// ----------------------------------------------------------------------------
// engine
// ----------------------------------------------------------------------------

namespace proof_detail {

    // a family derived from a parent by dropping one member and transforming
    // the rest; member_map sends sub indices back to parent indices, and
    // new_to_old (empty when ids were untouched) sends sub vertex ids back
    struct SubFamily {
        HypergraphFamily family;
        std::vector<int> member_map;
        std::vector<Vertex> new_to_old;
    };

    class ProofEngine {
    public:
        ProofTrace trace;

        auto lemma1(const HypergraphFamily & f, int depth) -> RainbowMatching
        {
            require_rainbow_family(f, depth, "lemma1", 5L * f.size(), "5s");
            if (f.k != 2)
                throw PreconditionError(context("lemma1", depth) + "family must be 2-uniform, got k = " + std::to_string(f.k));
            const int n = f.n, s = f.size();
            if (s == 1)
                return base_case(f, depth);

            const Count deg_bound = 3 * static_cast<Count>(s - 1);
            if (auto high = find_high_degree(f, deg_bound)) {
                const auto [i, v, d] = *high;
                note(depth, TraceCase::HighDegreeVertex, n, 2, s,
                     "member=" + std::to_string(i) + " vertex=" + std::to_string(v) + " degree=" + std::to_string(d) +
                         " bound=" + std::to_string(deg_bound));
                auto sub = drop_member_delete_vertex(f, i, v);
                auto lifted = lift(lemma1(sub.family, depth + 1), sub, f);
                return extend_at_vertex(f, lifted, i, v, depth, n, 2, s);
            }

            // no high-degree vertex: take the first edge of the first member;
            // rainbowness makes the edge of its color unique in every member
            const auto & e0 = f.members[0].edges[0];
            note(depth, TraceCase::ArbitraryEdge, n, 2, s,
                 "member=0 edge=0 vertices=" + join(e0.vertices) + " color=" + std::to_string(e0.color));
            auto sub = drop_member_delete_vertices_and_color(f, 0, e0.vertices, e0.color);
            auto lifted = lift(lemma1(sub.family, depth + 1), sub, f);
            insert_pick(lifted, 0, 0);
            return lifted;
        }

        auto lemma2(const HypergraphFamily & f, int depth) -> RainbowMatching
        {
            require_rainbow_family(f, depth, "lemma2", 3L * f.k * f.k * f.size(), "3k^2 s");
            const int n = f.n, k = f.k, s = f.size();
            if (k == 2) {
                note(depth, TraceCase::Lemma1Call, n, 2, s, "");
                return lemma1(f, depth + 1);
            }
            if (s == 1)
                return base_case(f, depth);

            const auto th = thresholds_for(n, k, s);
            if (auto high = find_high_degree(f, th.d_high)) {
                const auto [i, v, d] = *high;
                note(depth, TraceCase::HighDegreeVertex, n, k, s,
                     "member=" + std::to_string(i) + " vertex=" + std::to_string(v) + " degree=" + std::to_string(d) +
                         " bound=" + std::to_string(th.d_high));
                auto sub = drop_member_delete_vertex(f, i, v);
                auto lifted = lift(lemma2(sub.family, depth + 1), sub, f);
                return extend_at_vertex(f, lifted, i, v, depth, n, k, s);
            }

            if (auto done = attempt_drop_and_scan(f, th, depth, true))
                return *done;
            return link_descent(f, th, depth);
        }

        auto theorem1(const HypergraphFamily & f, int depth) -> RainbowMatching
        {
            require_proper_family(f, depth);
            const int s = f.size();
            if (s == 1)
                return base_case(f, depth);
            return f.k == 2 ? theorem1_graphs(f, depth) : theorem1_general(f, depth);
        }

        // The whole body of the link-descent branch, exposed so its
        // machinery stays testable: on families that satisfy the theorem's
        // hypotheses the earlier branches always succeed first at this
        // library's scale, so this path cannot fire end to end there.
        auto link_descent(const HypergraphFamily & f, const ProofThresholds & th, int depth) -> RainbowMatching
        {
            const int n = f.n, k = f.k, s = f.size();
            std::vector<Vertex> chosen;
            std::vector<char> taken(static_cast<std::size_t>(n), 0);
            for (int i = 0; i < s; ++i) {
                const auto degrees = degree_sequence(f.members[static_cast<std::size_t>(i)]);
                Vertex v = -1;
                for (Vertex u = 0; u < n; ++u)
                    if (! taken[static_cast<std::size_t>(u)] && degrees[static_cast<std::size_t>(u)] > th.d_low) {
                        v = u;
                        break;
                    }
                if (v < 0)
                    fail(depth, n, k, s,
                         "member " + std::to_string(i) + " has no unclaimed vertex of degree above " +
                             std::to_string(th.d_low) + ", which the counting argument rules out");
                taken[static_cast<std::size_t>(v)] = 1;
                chosen.push_back(v);
            }
            note(depth, TraceCase::LinkDescent, n, k, s, "vertices=" + join(chosen));

            HypergraphFamily links;
            links.n = n - s;
            links.k = k - 1;
            std::vector<Vertex> new_to_old;
            const Count transfer = threshold(n - s, k - 1, s);
            for (int i = 0; i < s; ++i) {
                auto rel = link(f.members[static_cast<std::size_t>(i)], chosen[static_cast<std::size_t>(i)], chosen);
                if (! is_rainbow(rel.graph))
                    fail(depth, n, k, s, "link at vertex " + std::to_string(chosen[static_cast<std::size_t>(i)]) +
                                             " is not rainbow although the member is properly colored");
                if (rel.graph.edge_count() <= transfer)
                    fail(depth, n, k, s,
                         "link transfer failed: member " + std::to_string(i) + " link has " +
                             std::to_string(rel.graph.edge_count()) + " edges, needs more than " + std::to_string(transfer));
                links.members.push_back(std::move(rel.graph));
                if (i == 0)
                    new_to_old = std::move(rel.new_to_old);
            }

            note(depth, TraceCase::Lemma2Call, n - s, k - 1, s, "");
            const auto sub = lemma2(links, depth + 1);

            RainbowMatching result;
            for (const auto & [i, e] : sub.picks) {
                const auto & ledge = links.members[static_cast<std::size_t>(i)].edges[static_cast<std::size_t>(e)];
                std::vector<Vertex> vertices;
                vertices.reserve(ledge.vertices.size() + 1);
                for (Vertex u : ledge.vertices)
                    vertices.push_back(new_to_old[static_cast<std::size_t>(u)]);
                vertices.push_back(chosen[static_cast<std::size_t>(i)]);
                std::sort(vertices.begin(), vertices.end());
                result.picks.emplace_back(i, locate_edge(f.members[static_cast<std::size_t>(i)], vertices, ledge.color, i));
            }
            std::sort(result.picks.begin(), result.picks.end());
            return result;
        }

    private:
        // ------------------------------------------------------------------
        // theorem cases
        // ------------------------------------------------------------------

        auto theorem1_graphs(const HypergraphFamily & f, int depth) -> RainbowMatching
        {
            const int n = f.n, s = f.size();
            const Count deg_bound = 3 * static_cast<Count>(s - 1);
            const Count class_bound = 2 * static_cast<Count>(s - 1);

            if (auto high = find_high_degree(f, deg_bound)) {
                const auto [i, v, d] = *high;
                note(depth, TraceCase::HighDegreeVertex, n, 2, s,
                     "member=" + std::to_string(i) + " vertex=" + std::to_string(v) + " degree=" + std::to_string(d) +
                         " bound=" + std::to_string(deg_bound));
                auto sub = drop_member_delete_vertex(f, i, v);
                auto lifted = lift(theorem1(sub.family, depth + 1), sub, f);
                return extend_at_vertex(f, lifted, i, v, depth, n, 2, s);
            }

            for (int i = 0; i < s; ++i) {
                std::map<Color, Count> class_sizes;
                for (const auto & e : f.members[static_cast<std::size_t>(i)].edges)
                    ++class_sizes[e.color];
                for (const auto & [c, size] : class_sizes) { // ascending color order
                    if (size <= class_bound)
                        continue;
                    note(depth, TraceCase::ColorClass, n, 2, s,
                         "member=" + std::to_string(i) + " color=" + std::to_string(c) + " size=" + std::to_string(size) +
                             " bound=" + std::to_string(class_bound));
                    auto sub = drop_member_delete_color(f, i, c);
                    auto lifted = lift(theorem1(sub.family, depth + 1), sub, f);
                    const auto used = used_sets(f, lifted);
                    const auto & member = f.members[static_cast<std::size_t>(i)];
                    for (std::size_t e = 0; e < member.edges.size(); ++e) {
                        if (member.edges[e].color != c)
                            continue;
                        if (touches(member.edges[e], used.first))
                            continue;
                        note(depth, TraceCase::ExtendScan, n, 2, s,
                             "member=" + std::to_string(i) + " edge=" + std::to_string(e) + " hit");
                        insert_pick(lifted, i, static_cast<int>(e));
                        return lifted;
                    }
                    fail(depth, n, 2, s,
                         "color class " + std::to_string(c) + " of member " + std::to_string(i) +
                             " has more than " + std::to_string(class_bound) +
                             " edges yet every one meets the recursive matching");
                }
            }

            // every degree <= 3(s-1) and every color class <= 2(s-1): take an
            // arbitrary edge and delete its endpoints and its whole color
            // class everywhere else; the surviving counts still clear the
            // next threshold, asserted below
            const auto & e0 = f.members[0].edges[0];
            note(depth, TraceCase::ArbitraryEdge, n, 2, s,
                 "member=0 edge=0 vertices=" + join(e0.vertices) + " color=" + std::to_string(e0.color));
            auto sub = drop_member_delete_vertices_and_color(f, 0, e0.vertices, e0.color);
            const Count transfer = threshold(n - 2, 2, s - 1);
            for (std::size_t j = 0; j < sub.family.members.size(); ++j)
                if (sub.family.members[j].edge_count() <= transfer)
                    fail(depth, n, 2, s,
                         "edge-count transfer failed: member " + std::to_string(sub.member_map[j]) + " keeps " +
                             std::to_string(sub.family.members[j].edge_count()) + " edges, needs more than " +
                             std::to_string(transfer));
            auto lifted = lift(theorem1(sub.family, depth + 1), sub, f);
            insert_pick(lifted, 0, 0);
            return lifted;
        }

        auto theorem1_general(const HypergraphFamily & f, int depth) -> RainbowMatching
        {
            const int n = f.n, k = f.k, s = f.size();
            const auto th = thresholds_for(n, k, s);

            if (auto high = find_high_degree(f, th.d_high)) {
                const auto [i, v, d] = *high;
                note(depth, TraceCase::HighDegreeVertex, n, k, s,
                     "member=" + std::to_string(i) + " vertex=" + std::to_string(v) + " degree=" + std::to_string(d) +
                         " bound=" + std::to_string(th.d_high));
                auto sub = drop_member_delete_vertex(f, i, v);
                auto lifted = lift(theorem1(sub.family, depth + 1), sub, f);
                return extend_at_vertex(f, lifted, i, v, depth, n, k, s);
            }

            if (auto done = attempt_drop_and_scan(f, th, depth, false))
                return *done;
            return link_descent(f, th, depth);
        }

        // ------------------------------------------------------------------
        // shared branch bodies
        // ------------------------------------------------------------------

        auto base_case(const HypergraphFamily & f, int depth) -> RainbowMatching
        {
            note(depth, TraceCase::BaseCase, f.n, f.k, 1, "member=0 edge=0");
            return RainbowMatching{{{0, 0}}};
        }

        // drop one member, find an (s-1)-rainbow matching among the rest at
        // the same n, then scan the dropped member for a compatible edge. The
        // scan is guaranteed when some member's s-th largest degree is at most
        // d_low (we pick the smallest such member); otherwise we attempt it
        // anyway with the member of smallest s-th degree and hand back
        // nothing on a miss, letting the caller descend to links.
        auto attempt_drop_and_scan(const HypergraphFamily & f, const ProofThresholds & th, int depth,
                                   bool rainbow_procedure) -> std::optional<RainbowMatching>
        {
            const int n = f.n, k = f.k, s = f.size();
            std::vector<Count> sth(static_cast<std::size_t>(s), 0);
            for (int i = 0; i < s; ++i) {
                auto degrees = degree_sequence(f.members[static_cast<std::size_t>(i)]);
                std::nth_element(degrees.begin(), degrees.begin() + (s - 1), degrees.end(), std::greater<>());
                sth[static_cast<std::size_t>(i)] = degrees[static_cast<std::size_t>(s) - 1];
            }
            int target = -1;
            bool guaranteed = false;
            for (int i = 0; i < s; ++i)
                if (sth[static_cast<std::size_t>(i)] <= th.d_low) {
                    target = i;
                    guaranteed = true;
                    break;
                }
            if (target < 0)
                target = static_cast<int>(std::min_element(sth.begin(), sth.end()) - sth.begin());

            note(depth, TraceCase::ExtendScan, n, k, s,
                 "member=" + std::to_string(target) + " sth_degree=" + std::to_string(sth[static_cast<std::size_t>(target)]) +
                     " d_low=" + std::to_string(th.d_low) + (guaranteed ? " guaranteed" : " unconditional"));

            auto sub = drop_member(f, target);
            auto lifted = rainbow_procedure ? lift(lemma2(sub.family, depth + 1), sub, f)
                                            : lift(theorem1(sub.family, depth + 1), sub, f);
            const auto used = used_sets(f, lifted);
            const auto & member = f.members[static_cast<std::size_t>(target)];
            for (std::size_t e = 0; e < member.edges.size(); ++e)
                if (! touches(member.edges[e], used.first) && ! color_used(member.edges[e].color, used.second)) {
                    note(depth, TraceCase::ExtendScan, n, k, s,
                         "member=" + std::to_string(target) + " edge=" + std::to_string(e) + " hit");
                    insert_pick(lifted, target, static_cast<int>(e));
                    return lifted;
                }
            if (guaranteed)
                fail(depth, n, k, s,
                     "member " + std::to_string(target) + " has s-th largest degree " +
                         std::to_string(sth[static_cast<std::size_t>(target)]) + " <= " + std::to_string(th.d_low) +
                         " yet no edge extends the recursive matching");
            note(depth, TraceCase::ExtendScan, n, k, s, "member=" + std::to_string(target) + " miss");
            return std::nullopt;
        }

        // scan member i for an edge through v compatible with the lifted
        // matching; guaranteed by the high-degree branch's counting
        auto extend_at_vertex(const HypergraphFamily & f, RainbowMatching & lifted, int i, Vertex v, int depth,
                              int n, int k, int s) -> RainbowMatching
        {
            const auto used = used_sets(f, lifted);
            const auto & member = f.members[static_cast<std::size_t>(i)];
            for (std::size_t e = 0; e < member.edges.size(); ++e) {
                const auto & edge = member.edges[e];
                if (! edge.contains(v) || touches(edge, used.first) || color_used(edge.color, used.second))
                    continue;
                note(depth, TraceCase::ExtendScan, n, k, s,
                     "member=" + std::to_string(i) + " vertex=" + std::to_string(v) + " edge=" + std::to_string(e) + " hit");
                insert_pick(lifted, i, static_cast<int>(e));
                return lifted;
            }
            fail(depth, n, k, s,
                 "vertex " + std::to_string(v) + " of member " + std::to_string(i) +
                     " beat the degree bound yet no incident edge extends the recursive matching");
        }

        // ------------------------------------------------------------------
        // preconditions
        // ------------------------------------------------------------------

        static auto context(const char * name, int depth) -> std::string
        {
            std::string where(name);
            if (depth > 0)
                where += " (recursive call, depth " + std::to_string(depth) + ")";
            return where + ": ";
        }

        static auto require_structure(const HypergraphFamily & f, const char * name, int depth) -> void
        {
            auto report = validate(f);
            for (const auto & violation : report.violations)
                if (violation.kind != ViolationKind::ProperColoring)
                    throw InputError(context(name, depth) + "invalid family: " + violation.message);
        }

        static auto require_edge_counts(const HypergraphFamily & f, const char * name, int depth) -> void
        {
            const Count needed = threshold(f.n, f.k, f.size());
            for (int i = 0; i < f.size(); ++i)
                if (f.members[static_cast<std::size_t>(i)].edge_count() <= needed)
                    throw PreconditionError(context(name, depth) + "member " + std::to_string(i) + " has " +
                                            std::to_string(f.members[static_cast<std::size_t>(i)].edge_count()) +
                                            " edges, needs more than " + std::to_string(needed));
        }

        static auto require_rainbow_family(const HypergraphFamily & f, int depth, const char * name, long min_n,
                                           const char * min_name) -> void
        {
            require_structure(f, name, depth);
            for (int i = 0; i < f.size(); ++i)
                if (! is_rainbow(f.members[static_cast<std::size_t>(i)]))
                    throw PreconditionError(context(name, depth) + "member " + std::to_string(i) + " is not rainbow");
            if (f.n < min_n)
                throw PreconditionError(context(name, depth) + "n = " + std::to_string(f.n) + " is below " + min_name +
                                        " = " + std::to_string(min_n));
            require_edge_counts(f, name, depth);
        }

        static auto require_proper_family(const HypergraphFamily & f, int depth) -> void
        {
            require_structure(f, "theorem1", depth);
            for (int i = 0; i < f.size(); ++i)
                if (! is_properly_colored(f.members[static_cast<std::size_t>(i)]))
                    throw PreconditionError(context("theorem1", depth) + "member " + std::to_string(i) +
                                            " is not properly colored");
            const long min_n = 3L * f.k * f.k * f.size();
            if (f.n < min_n)
                throw PreconditionError(context("theorem1", depth) + "n = " + std::to_string(f.n) +
                                        " is below 3k^2 s = " + std::to_string(min_n));
            require_edge_counts(f, "theorem1", depth);
        }

        // ------------------------------------------------------------------
        // plumbing
        // ------------------------------------------------------------------

        auto note(int depth, TraceCase branch, int n, int k, int s, std::string detail) -> void
        {
            trace.entries.push_back({depth, branch, n, k, s, std::move(detail)});
        }

        [[noreturn]] auto fail(int depth, int n, int k, int s, const std::string & message) -> void
        {
            note(depth, TraceCase::Failure, n, k, s, message);
            throw ContradictionError(message);
        }

        static auto join(const std::vector<Vertex> & vertices) -> std::string
        {
            std::string out;
            for (std::size_t i = 0; i < vertices.size(); ++i)
                out += (i ? "," : "") + std::to_string(vertices[i]);
            return out;
        }

        static auto touches(const ColoredEdge & e, const std::vector<char> & used_vertex) -> bool
        {
            return std::any_of(e.vertices.begin(), e.vertices.end(),
                               [&](Vertex v) { return used_vertex[static_cast<std::size_t>(v)]; });
        }

        static auto color_used(Color c, const std::vector<Color> & used) -> bool
        {
            return std::find(used.begin(), used.end(), c) != used.end();
        }

        static auto used_sets(const HypergraphFamily & f, const RainbowMatching & m)
            -> std::pair<std::vector<char>, std::vector<Color>>
        {
            std::vector<char> used_vertex(static_cast<std::size_t>(f.n), 0);
            std::vector<Color> used_colors;
            for (const auto & [i, e] : m.picks) {
                const auto & edge = f.members[static_cast<std::size_t>(i)].edges[static_cast<std::size_t>(e)];
                for (Vertex v : edge.vertices)
                    used_vertex[static_cast<std::size_t>(v)] = 1;
                used_colors.push_back(edge.color);
            }
            return {std::move(used_vertex), std::move(used_colors)};
        }

        static auto insert_pick(RainbowMatching & m, int member, int edge) -> void
        {
            m.picks.emplace_back(member, edge);
            std::sort(m.picks.begin(), m.picks.end());
        }

        // smallest member index, then smallest vertex id, with degree
        // strictly above the bound
        static auto find_high_degree(const HypergraphFamily & f, Count bound)
            -> std::optional<std::tuple<int, Vertex, Count>>
        {
            for (int i = 0; i < f.size(); ++i) {
                const auto degrees = degree_sequence(f.members[static_cast<std::size_t>(i)]);
                for (Vertex v = 0; v < f.n; ++v)
                    if (degrees[static_cast<std::size_t>(v)] > bound)
                        return std::make_tuple(i, v, degrees[static_cast<std::size_t>(v)]);
            }
            return std::nullopt;
        }

        static auto drop_member(const HypergraphFamily & f, int skip) -> SubFamily
        {
            SubFamily sub;
            sub.family.n = f.n;
            sub.family.k = f.k;
            for (int j = 0; j < f.size(); ++j)
                if (j != skip) {
                    sub.family.members.push_back(f.members[static_cast<std::size_t>(j)]);
                    sub.member_map.push_back(j);
                }
            return sub;
        }

        static auto drop_member_delete_vertex(const HypergraphFamily & f, int skip, Vertex v) -> SubFamily
        {
            SubFamily sub;
            sub.family.n = f.n - 1;
            sub.family.k = f.k;
            for (int j = 0; j < f.size(); ++j) {
                if (j == skip)
                    continue;
                auto rel = delete_vertex(f.members[static_cast<std::size_t>(j)], v);
                sub.family.members.push_back(std::move(rel.graph));
                sub.member_map.push_back(j);
                if (sub.new_to_old.empty())
                    sub.new_to_old = std::move(rel.new_to_old); // identical across members
            }
            return sub;
        }

        static auto drop_member_delete_color(const HypergraphFamily & f, int skip, Color c) -> SubFamily
        {
            SubFamily sub;
            sub.family.n = f.n;
            sub.family.k = f.k;
            for (int j = 0; j < f.size(); ++j)
                if (j != skip) {
                    sub.family.members.push_back(delete_color(f.members[static_cast<std::size_t>(j)], c));
                    sub.member_map.push_back(j);
                }
            return sub;
        }

        static auto drop_member_delete_vertices_and_color(const HypergraphFamily & f, int skip,
                                                          const std::vector<Vertex> & gone, Color c) -> SubFamily
        {
            SubFamily sub;
            sub.family.n = f.n - static_cast<int>(gone.size());
            sub.family.k = f.k;
            for (int j = 0; j < f.size(); ++j) {
                if (j == skip)
                    continue;
                auto rel = delete_vertices(f.members[static_cast<std::size_t>(j)], gone);
                sub.family.members.push_back(delete_color(rel.graph, c));
                sub.member_map.push_back(j);
                if (sub.new_to_old.empty())
                    sub.new_to_old = std::move(rel.new_to_old);
            }
            return sub;
        }

        // translate a sub-family matching back into parent coordinates,
        // recovering edge indices by content (vertex set + color identify an
        // edge uniquely, duplicates being outlawed)
        auto lift(const RainbowMatching & sub_matching, const SubFamily & sub, const HypergraphFamily & parent)
            -> RainbowMatching
        {
            RainbowMatching lifted;
            for (const auto & [j, e] : sub_matching.picks) {
                const auto & edge = sub.family.members[static_cast<std::size_t>(j)].edges[static_cast<std::size_t>(e)];
                std::vector<Vertex> vertices;
                vertices.reserve(edge.vertices.size());
                for (Vertex v : edge.vertices)
                    vertices.push_back(sub.new_to_old.empty() ? v : sub.new_to_old[static_cast<std::size_t>(v)]);
                const int i = sub.member_map[static_cast<std::size_t>(j)];
                lifted.picks.emplace_back(i, locate_edge(parent.members[static_cast<std::size_t>(i)], vertices, edge.color, i));
            }
            std::sort(lifted.picks.begin(), lifted.picks.end());
            return lifted;
        }

        static auto locate_edge(const ColoredHypergraph & member, const std::vector<Vertex> & vertices, Color c,
                                int member_index) -> int
        {
            for (std::size_t e = 0; e < member.edges.size(); ++e)
                if (member.edges[e].color == c && member.edges[e].vertices == vertices)
                    return static_cast<int>(e);
            throw ContradictionError("lifted edge is missing from member " + std::to_string(member_index) +
                                     ": the relabeling went wrong");
        }
    };

} // namespace proof_detail

// ----------------------------------------------------------------------------
// public entry points
// ----------------------------------------------------------------------------

namespace proof_detail {

    template <typename Run>
    auto run_checked(const HypergraphFamily & f, Run && run) -> ProofResult
    {
        ProofEngine engine;
        auto matching = run(engine);
        auto problems = matching_violations(f, matching);
        if (! problems.empty())
            throw ContradictionError("constructed matching failed independent validation: " + problems.front());
        return {std::move(matching), std::move(engine.trace)};
    }

} // namespace proof_detail

// k = 2, all members rainbow, n >= 5s, every member above threshold(n, 2, s):
// constructs an s-rainbow matching by the graph-case descent.
inline auto lemma1_construct(const HypergraphFamily & f) -> ProofResult
{
    return proof_detail::run_checked(f, [&](proof_detail::ProofEngine & e) { return e.lemma1(f, 0); });
}

// All members rainbow, n >= 3k^2 s, every member above threshold(n, k, s):
// induction on k and s; k = 2 delegates to the graph case.
inline auto lemma2_construct(const HypergraphFamily & f) -> ProofResult
{
    return proof_detail::run_checked(f, [&](proof_detail::ProofEngine & e) { return e.lemma2(f, 0); });
}

// All members properly colored, n >= 3k^2 s, every member above
// threshold(n, k, s): the full constructive existence argument.
inline auto theorem1_construct(const HypergraphFamily & f) -> ProofResult
{
    return proof_detail::run_checked(f, [&](proof_detail::ProofEngine & e) { return e.theorem1(f, 0); });
}

} // namespace rainbow
