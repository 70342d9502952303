#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "netlap/bigint.hpp"
#include "netlap/errors.hpp"
#include "netlap/signed_graph.hpp"

namespace netlap {

using json = nlohmann::json;

// Canonical interchange format: {"n": <int>, "edges": [[u, v, s], ...]}.
// nlohmann keeps object keys sorted and the graph keeps its edge list in
// canonical order, so dump() is byte-stable.
inline json graph_to_json(const SignedGraph& g) {
    json edges = json::array();
    for (const auto& e : g.edges()) edges.push_back(json::array({e.u, e.v, e.sign}));
    return json{{"n", g.order()}, {"edges", edges}};
}

inline std::string canonical_graph_json(const SignedGraph& g) {
    return graph_to_json(g).dump();
}

inline SignedGraph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw input_error("graph JSON: need object with \"n\" and \"edges\"");
    if (!j["n"].is_number_integer())
        throw input_error("graph JSON: \"n\" must be an integer");
    int n = j["n"].get<int>();
    if (!j["edges"].is_array()) throw input_error("graph JSON: \"edges\" must be an array");
    std::vector<Edge> es;
    for (const auto& item : j["edges"]) {
        if (!item.is_array() || item.size() != 3 || !item[0].is_number_integer() ||
            !item[1].is_number_integer() || !item[2].is_number_integer())
            throw input_error("graph JSON: each edge must be [u, v, s] with integers");
        es.push_back({item[0].get<int>(), item[1].get<int>(), item[2].get<int>()});
    }
    return SignedGraph(n, std::move(es));
}

inline SignedGraph parse_graph(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("graph JSON: parse error: ") + e.what());
    }
    return graph_from_json(j);
}

inline SignedGraph parse_graph(std::istream& in) {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_graph(text);
}

// Optional "expect" block in a graph file; `verify` checks any stated value
// against the computed one, so a fixture with a wrong expectation fails loudly.
struct Expectations {
    std::optional<int> nullity;
    std::optional<std::vector<Bigint>> charpoly;
};

inline Expectations expectations_from_json_text(const std::string& text) {
    Expectations out;
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("graph JSON: parse error: ") + e.what());
    }
    if (!j.is_object() || !j.contains("expect")) return out;
    const json& e = j["expect"];
    if (!e.is_object()) throw input_error("graph JSON: \"expect\" must be an object");
    if (e.contains("nullity")) {
        if (!e["nullity"].is_number_integer())
            throw input_error("graph JSON: expect.nullity must be an integer");
        out.nullity = e["nullity"].get<int>();
    }
    if (e.contains("charpoly")) {
        std::vector<Bigint> cs;
        for (const auto& c : e["charpoly"]) {
            if (c.is_number_integer())
                cs.push_back(Bigint(c.get<long long>()));
            else if (c.is_string())
                cs.push_back(Bigint::from_string(c.get<std::string>()));
            else
                throw input_error("graph JSON: expect.charpoly entries must be ints or strings");
        }
        out.charpoly = std::move(cs);
    }
    return out;
}

// Undirected DOT text: one line per vertex, positive edges solid, negative
// edges dashed.
inline std::string to_dot(const SignedGraph& g) {
    std::string out = "graph signed {\n";
    for (int v = 0; v < g.order(); ++v) out += "  " + std::to_string(v) + ";\n";
    for (const auto& e : g.edges()) {
        out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v);
        if (e.sign < 0) out += " [style=dashed]";
        out += ";\n";
    }
    out += "}\n";
    return out;
}

}  // namespace netlap
