#pragma once

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rainbow/errors.hpp"
#include "rainbow/hypergraph.hpp"

namespace rainbow {

// ============================================================================
// .chg / .chf text formats
// ============================================================================
//
// .chg  colored hypergraph: optional '#' comment lines, a header "n k m",
//       then m lines "v_1 ... v_k c" (0-based vertex ids, whitespace
//       separated).
// .chf  family: a line "family s", then s .chg blocks separated by lines
//       containing exactly "---".
//
// Parsers check syntax only (token counts, integer-ness); semantic problems
// like out-of-range vertices are validate()'s job, so a damaged file can still
// be loaded and diagnosed.

namespace io_detail {

    inline auto is_comment_or_blank(const std::string & line) -> bool
    {
        for (char ch : line) {
            if (ch == '#')
                return true;
            if (! std::isspace(static_cast<unsigned char>(ch)))
                return false;
        }
        return true; // all whitespace
    }

    inline auto parse_ints(const std::string & line, std::size_t line_number) -> std::vector<long long>
    {
        std::istringstream tokens(line);
        std::vector<long long> values;
        std::string token;
        while (tokens >> token) {
            try {
                std::size_t used = 0;
                values.push_back(std::stoll(token, &used));
                if (used != token.size())
                    throw std::invalid_argument(token);
            }
            catch (const std::exception &) {
                throw InputError("line " + std::to_string(line_number) + ": '" + token + "' is not an integer");
            }
        }
        return values;
    }

    // reads one .chg block starting at lines[cursor]; advances cursor past it
    inline auto parse_chg_block(const std::vector<std::string> & lines, std::size_t & cursor) -> ColoredHypergraph
    {
        auto next_content = [&]() -> const std::string * {
            while (cursor < lines.size() && is_comment_or_blank(lines[cursor]))
                ++cursor;
            return cursor < lines.size() ? &lines[cursor] : nullptr;
        };

        const std::string * header = next_content();
        if (header == nullptr)
            throw InputError("expected 'n k m' header, found end of input");
        auto head = parse_ints(*header, cursor + 1);
        if (head.size() != 3)
            throw InputError("line " + std::to_string(cursor + 1) + ": header must be exactly 'n k m'");
        if (head[2] < 0)
            throw InputError("line " + std::to_string(cursor + 1) + ": negative edge count");
        ++cursor;

        ColoredHypergraph h;
        h.n = static_cast<int>(head[0]);
        h.k = static_cast<int>(head[1]);
        const long long m = head[2];
        const std::size_t arity = h.k >= 0 ? static_cast<std::size_t>(h.k) : 0;

        for (long long i = 0; i < m; ++i) {
            const std::string * line = next_content();
            if (line == nullptr)
                throw InputError("expected " + std::to_string(m) + " edge lines, found " + std::to_string(i));
            auto values = parse_ints(*line, cursor + 1);
            if (values.size() != arity + 1)
                throw InputError("line " + std::to_string(cursor + 1) + ": expected " + std::to_string(arity) +
                                 " vertices and a color, got " + std::to_string(values.size()) + " values");
            std::vector<Vertex> vertices(values.begin(), values.end() - 1);
            h.edges.push_back(make_edge(std::move(vertices), static_cast<Color>(values.back())));
            ++cursor;
        }
        return h;
    }

    inline auto read_lines(std::istream & in) -> std::vector<std::string>
    {
        std::vector<std::string> lines;
        std::string line;
        while (std::getline(in, line)) {
            if (! line.empty() && line.back() == '\r')
                line.pop_back();
            lines.push_back(line);
        }
        return lines;
    }

    inline auto expect_nothing_more(const std::vector<std::string> & lines, std::size_t cursor) -> void
    {
        for (; cursor < lines.size(); ++cursor)
            if (! is_comment_or_blank(lines[cursor]))
                throw InputError("line " + std::to_string(cursor + 1) + ": trailing content after the declared edges");
    }

} // namespace io_detail

inline auto parse_chg(std::istream & in) -> ColoredHypergraph
{
    auto lines = io_detail::read_lines(in);
    std::size_t cursor = 0;
    auto h = io_detail::parse_chg_block(lines, cursor);
    io_detail::expect_nothing_more(lines, cursor);
    return h;
}

inline auto parse_chg(const std::string & text) -> ColoredHypergraph
{
    std::istringstream in(text);
    return parse_chg(in);
}

inline auto serialize_chg(const ColoredHypergraph & h) -> std::string
{
    std::ostringstream out;
    out << h.n << ' ' << h.k << ' ' << h.edges.size() << '\n';
    for (const auto & e : h.edges) {
        for (Vertex v : e.vertices)
            out << v << ' ';
        out << e.color << '\n';
    }
    return out.str();
}

inline auto parse_chf(std::istream & in) -> HypergraphFamily
{
    auto lines = io_detail::read_lines(in);
    std::size_t cursor = 0;
    while (cursor < lines.size() && io_detail::is_comment_or_blank(lines[cursor]))
        ++cursor;
    if (cursor >= lines.size())
        throw InputError("expected 'family s' header, found end of input");

    std::istringstream head(lines[cursor]);
    std::string keyword;
    long long s = -1;
    head >> keyword >> s;
    std::string leftover;
    if (keyword != "family" || s < 1 || (head >> leftover))
        throw InputError("line " + std::to_string(cursor + 1) + ": expected 'family s' with s >= 1");
    ++cursor;

    HypergraphFamily f;
    for (long long i = 0; i < s; ++i) {
        if (i > 0) {
            while (cursor < lines.size() && io_detail::is_comment_or_blank(lines[cursor]))
                ++cursor;
            if (cursor >= lines.size() || lines[cursor] != "---")
                throw InputError("expected '---' separator before member " + std::to_string(i));
            ++cursor;
        }
        auto member = io_detail::parse_chg_block(lines, cursor);
        if (i == 0) {
            f.n = member.n;
            f.k = member.k;
        }
        else if (member.n != f.n || member.k != f.k)
            throw InputError("member " + std::to_string(i) + " declares (n=" + std::to_string(member.n) +
                             ", k=" + std::to_string(member.k) + ") but the family started with (n=" +
                             std::to_string(f.n) + ", k=" + std::to_string(f.k) + ")");
        f.members.push_back(std::move(member));
    }
    io_detail::expect_nothing_more(lines, cursor);
    return f;
}

inline auto parse_chf(const std::string & text) -> HypergraphFamily
{
    std::istringstream in(text);
    return parse_chf(in);
}

inline auto serialize_chf(const HypergraphFamily & f) -> std::string
{
    std::ostringstream out;
    out << "family " << f.members.size() << '\n';
    for (std::size_t i = 0; i < f.members.size(); ++i) {
        if (i > 0)
            out << "---\n";
        out << serialize_chg(f.members[i]);
    }
    return out.str();
}

// ============================================================================
// structured-object serialization (JSON)
// ============================================================================
//
// Field names mirror the type definitions exactly: n, k, members, edges,
// vertices, color.

inline auto to_json(const ColoredHypergraph & h) -> nlohmann::json
{
    nlohmann::json edges = nlohmann::json::array();
    for (const auto & e : h.edges)
        edges.push_back({{"vertices", e.vertices}, {"color", e.color}});
    return {{"n", h.n}, {"k", h.k}, {"edges", std::move(edges)}};
}

inline auto to_json(const HypergraphFamily & f) -> nlohmann::json
{
    nlohmann::json members = nlohmann::json::array();
    for (const auto & m : f.members)
        members.push_back(to_json(m));
    return {{"n", f.n}, {"k", f.k}, {"members", std::move(members)}};
}

inline auto hypergraph_from_json(const nlohmann::json & j) -> ColoredHypergraph
{
    try {
        ColoredHypergraph h;
        h.n = j.at("n").get<int>();
        h.k = j.at("k").get<int>();
        for (const auto & e : j.at("edges")) {
            auto vertices = e.at("vertices").get<std::vector<Vertex>>();
            h.edges.push_back(make_edge(std::move(vertices), e.at("color").get<Color>()));
        }
        return h;
    }
    catch (const nlohmann::json::exception & ex) {
        throw InputError(std::string("hypergraph json: ") + ex.what());
    }
}

inline auto family_from_json(const nlohmann::json & j) -> HypergraphFamily
{
    try {
        HypergraphFamily f;
        f.n = j.at("n").get<int>();
        f.k = j.at("k").get<int>();
        for (const auto & m : j.at("members"))
            f.members.push_back(hypergraph_from_json(m));
        return f;
    }
    catch (const nlohmann::json::exception & ex) {
        throw InputError(std::string("family json: ") + ex.what());
    }
}

} // namespace rainbow
