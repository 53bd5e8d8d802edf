#include "treedens/codec.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace treedens {

namespace {

constexpr std::int64_t kGraph6MaxOrder = 68719476735LL; // 2^36 - 1

std::string_view trimmed(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
        text.remove_suffix(1);
    return text;
}

int g6_byte(std::string_view text, std::size_t offset) {
    if (offset >= text.size()) throw ParseError("graph6 string truncated", offset);
    unsigned char c = static_cast<unsigned char>(text[offset]);
    if (c < 63 || c > 126) throw ParseError("graph6 byte out of printable range", offset);
    return c - 63;
}

Graph parse_graph6(std::string_view text) {
    text = trimmed(text);
    if (text.empty()) throw ParseError("empty graph6 string", 0);
    std::size_t pos = 0;
    std::int64_t n;
    if (g6_byte(text, 0) != 63) {
        n = g6_byte(text, 0);
        pos = 1;
    } else if (text.size() >= 2 && g6_byte(text, 1) != 63) {
        n = 0;
        for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | g6_byte(text, i);
        pos = 4;
    } else {
        n = 0;
        for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | g6_byte(text, i);
        pos = 8;
    }
    if (n > 1000000) throw CapacityError("graph6 order too large to materialize");
    const std::size_t bits = static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) - 1) / 2;
    const std::size_t need = (bits + 5) / 6;
    if (text.size() != pos + need)
        throw ParseError("graph6 payload has wrong length", std::min(text.size(), pos + need));
    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int group = g6_byte(text, pos + bit / 6);
            if ((group >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    // padding bits of the final group must be zero
    for (; bit < need * 6; ++bit) {
        int group = g6_byte(text, pos + bit / 6);
        if ((group >> (5 - bit % 6)) & 1)
            throw ParseError("graph6 padding bits not zero", pos + bit / 6);
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string serialize_graph6(const Graph& g) {
    const std::int64_t n = g.vertex_count();
    if (n > kGraph6MaxOrder) throw CapacityError("graph exceeds the graph6 order limit");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    int group = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.adjacent(i, static_cast<int>(j)) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
    return out;
}

Graph parse_edge_list_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw ValidationError("edge-list JSON must be {\"n\": int, \"edges\": [[u,v],...]}");
    if (!j["n"].is_number_integer()) throw ValidationError("\"n\" must be an integer");
    const std::int64_t n = j["n"].get<std::int64_t>();
    if (n < 0) throw ValidationError("\"n\" must be non-negative");
    if (n > 50000000) throw CapacityError("vertex count too large");
    if (!j["edges"].is_array()) throw ValidationError("\"edges\" must be an array");
    std::vector<Edge> edges;
    edges.reserve(j["edges"].size());
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw ValidationError("each edge must be a pair of integers");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string serialize_edge_list_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.vertex_count();
    auto edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j.dump();
}

} // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
    switch (format) {
        case GraphFormat::Graph6: return parse_graph6(text);
        case GraphFormat::EdgeListJson: return parse_edge_list_json(text);
    }
    throw DomainError("unknown graph format");
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
    switch (format) {
        case GraphFormat::Graph6: return serialize_graph6(g);
        case GraphFormat::EdgeListJson: return serialize_edge_list_json(g);
    }
    throw DomainError("unknown graph format");
}

} // namespace treedens
