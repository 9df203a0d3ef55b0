#include "curvex/json_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "curvex/errors.hpp"
#include "json.hpp"

namespace curvex {

Graph graph_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("invalid graph JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer())
        throw InputError("invalid graph JSON: expected object with integer field \"n\"");

    const int n = doc["n"].get<int>();
    std::vector<Edge> edges;
    if (doc.contains("edges")) {
        if (!doc["edges"].is_array()) throw InputError("invalid graph JSON: \"edges\" must be an array");
        for (const auto& e : doc["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                !e[1].is_number_integer())
                throw InputError("invalid graph JSON: each edge must be a pair of integers");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
    }
    return Graph::build(n, edges);
}

Graph read_graph_json(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return graph_from_json(buf.str());
}

Graph load_graph(const std::string& path) {
    if (path == "-") return read_graph_json(std::cin);
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    return read_graph_json(in);
}

std::string graph_to_json(const Graph& g) {
    nlohmann::ordered_json doc;
    doc["n"] = g.vertex_count();
    auto& edges = doc["edges"] = nlohmann::ordered_json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return doc.dump();
}

void write_graph_json(const Graph& g, std::ostream& out) {
    out << graph_to_json(g) << "\n";
}

}  // namespace curvex
