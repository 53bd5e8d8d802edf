#include "treedens/io.hpp"

#include <map>

#include <nlohmann/json.hpp>

namespace treedens {

namespace {

nlohmann::json parse_json(std::string_view text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
}

std::vector<int> int_list(const nlohmann::json& j, const char* what) {
    if (!j.is_array()) throw ValidationError(std::string(what) + " must be an array");
    std::vector<int> out;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw ValidationError(std::string(what) + " must hold integers");
        out.push_back(x.get<int>());
    }
    return out;
}

} // namespace

std::string tree_decomposition_to_json(const TreeDecomposition& d) {
    nlohmann::json j;
    auto tree_edges = nlohmann::json::array();
    for (auto [a, b] : d.index_tree.edges()) tree_edges.push_back({a, b});
    j["tree_edges"] = std::move(tree_edges);
    auto bags = nlohmann::json::array();
    for (const auto& bag : d.bags) bags.push_back(bag);
    j["bags"] = std::move(bags);
    return j.dump();
}

TreeDecomposition tree_decomposition_from_json(std::string_view text) {
    nlohmann::json j = parse_json(text);
    if (!j.is_object() || !j.contains("tree_edges") || !j.contains("bags"))
        throw ValidationError("decomposition JSON needs \"tree_edges\" and \"bags\"");
    TreeDecomposition d;
    for (const auto& bag : j["bags"]) {
        VertexSet b = int_list(bag, "bag");
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
        d.bags.push_back(std::move(b));
    }
    std::vector<Edge> edges;
    for (const auto& e : j["tree_edges"]) {
        auto pair = int_list(e, "tree edge");
        if (pair.size() != 2) throw ValidationError("tree edge must be a pair");
        edges.emplace_back(pair[0], pair[1]);
    }
    d.index_tree = Graph::from_edges(static_cast<int>(d.bags.size()), edges);
    return d;
}

std::string shortcut_paths_to_json(const ShortcutSystem& sys) {
    nlohmann::json j;
    auto paths = nlohmann::json::array();
    for (const auto& p : sys.paths) paths.push_back(p);
    j["paths"] = std::move(paths);
    return j.dump();
}

ShortcutSystem shortcut_system_from_json(Graph base, std::string_view text) {
    nlohmann::json j = parse_json(text);
    if (!j.is_object() || !j.contains("paths"))
        throw ValidationError("shortcut JSON needs \"paths\"");
    ShortcutSystem sys;
    sys.base = std::move(base);
    for (const auto& p : j["paths"]) sys.paths.push_back(int_list(p, "path"));
    return sys;
}

std::string model_to_json(const BipartiteModel& model) {
    nlohmann::json j;
    auto left = nlohmann::json::array();
    for (const auto& x : model.left) left.push_back(x);
    auto right = nlohmann::json::array();
    for (const auto& y : model.right) right.push_back(y);
    j["left"] = std::move(left);
    j["right"] = std::move(right);
    return j.dump();
}

BipartiteModel model_from_json(std::string_view text, int p, int q) {
    nlohmann::json j = parse_json(text);
    if (!j.is_object() || !j.contains("left") || !j.contains("right"))
        throw ValidationError("model JSON needs \"left\" and \"right\"");
    BipartiteModel model;
    model.p = p;
    model.q = q;
    for (const auto& x : j["left"]) {
        VertexSet set = int_list(x, "left branch set");
        std::sort(set.begin(), set.end());
        model.left.push_back(std::move(set));
    }
    for (const auto& y : j["right"]) {
        VertexSet set = int_list(y, "right branch set");
        std::sort(set.begin(), set.end());
        model.right.push_back(std::move(set));
    }
    return model;
}

std::string witness_to_json(const WitnessResult& witness) {
    nlohmann::json j;
    j["subtree_vertices"] = witness.subtree_vertices;
    auto edges = nlohmann::json::array();
    for (auto [a, b] : witness.subtree.graph().edges())
        edges.push_back({witness.subtree_vertices[static_cast<std::size_t>(a)],
                         witness.subtree_vertices[static_cast<std::size_t>(b)]});
    j["subtree_edges"] = std::move(edges);
    j["kernel_preimage"] = witness.kernel_preimage;
    std::map<std::string, int> embedding;
    for (const auto& p : witness.embedding) {
        std::string key = "(" + std::to_string(p.subtree_vertex) + "," +
                          std::to_string(p.index + 1) + ")";
        if (p.star) key += "*";
        embedding[key] = p.host_vertex;
    }
    j["embedding"] = embedding;
    j["selected_images"] = witness.selected_images;
    return j.dump();
}

} // namespace treedens
