#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "finba/hypergraph/hypergraph.hpp"
#include "finba/hypergraph/poset.hpp"

namespace finba::io {

using json = nlohmann::ordered_json;

// Input document: vertices plus either edges (hypergraph/graph), strict
// order pairs (poset), or nothing (powerset). Posets are turned into their
// comparability graph for the commands that want a hypergraph; the pairs
// are transitively closed on load, with a flag when that added pairs.
struct ParsedDoc {
    enum class Kind { hypergraph, graph, poset, powerset };

    Kind kind = Kind::hypergraph;
    std::optional<Hypergraph> hypergraph; // absent for powerset docs
    std::optional<Poset> poset;           // present for poset docs
    std::vector<std::string> labels;      // the vertex / point / ground labels
    bool closure_added = false;
};

namespace detail {

inline std::vector<std::string> parse_labels(const json& doc, const char* field) {
    if (!doc.contains(field) || !doc[field].is_array())
        raise(errc::invalid_document, std::string("expected an array field \"") + field + "\"");
    std::vector<std::string> labels;
    for (const json& v : doc[field]) {
        if (!v.is_string()) raise(errc::invalid_document, "labels must be strings");
        labels.push_back(v.get<std::string>());
    }
    return labels;
}

inline int label_index(const std::vector<std::string>& labels, const std::string& s) {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == s) return static_cast<int>(i);
    raise(errc::invalid_document, "unknown label \"" + s + "\"");
}

} // namespace detail

inline ParsedDoc parse_doc(const json& doc, int max_vertices = kDefaultMaxVertices) {
    if (!doc.is_object()) raise(errc::invalid_document, "document must be a JSON object");
    ParsedDoc out;

    std::string kind = doc.value("kind", std::string("hypergraph"));
    if (kind == "hypergraph") out.kind = ParsedDoc::Kind::hypergraph;
    else if (kind == "graph") out.kind = ParsedDoc::Kind::graph;
    else if (kind == "poset") out.kind = ParsedDoc::Kind::poset;
    else if (kind == "powerset") out.kind = ParsedDoc::Kind::powerset;
    else raise(errc::invalid_document, "unknown kind \"" + kind + "\"");

    out.labels = detail::parse_labels(doc, "vertices");

    if (out.kind == ParsedDoc::Kind::powerset) return out;

    if (out.kind == ParsedDoc::Kind::poset) {
        std::vector<std::pair<int, int>> pairs;
        if (doc.contains("lt")) {
            if (!doc["lt"].is_array()) raise(errc::invalid_document, "\"lt\" must be an array");
            for (const json& pair : doc["lt"]) {
                if (!pair.is_array() || pair.size() != 2)
                    raise(errc::invalid_document, "order pairs must be two-element arrays");
                pairs.emplace_back(detail::label_index(out.labels, pair[0].get<std::string>()),
                                   detail::label_index(out.labels, pair[1].get<std::string>()));
            }
        }
        out.poset = Poset(out.labels, std::move(pairs), /*transitively_close=*/true);
        out.closure_added = out.poset->closure_added_pairs();
        out.hypergraph = comparability_graph(*out.poset, max_vertices);
        return out;
    }

    std::vector<VertexSet> edges;
    if (doc.contains("edges")) {
        if (!doc["edges"].is_array()) raise(errc::invalid_document, "\"edges\" must be an array");
        for (const json& edge : doc["edges"]) {
            if (!edge.is_array()) raise(errc::invalid_document, "edges must be arrays of labels");
            VertexSet e = 0;
            for (const json& v : edge)
                e |= vbit(detail::label_index(out.labels, v.get<std::string>()));
            edges.push_back(e);
        }
    }
    out.hypergraph = Hypergraph(out.labels, std::move(edges), max_vertices);
    if (out.kind == ParsedDoc::Kind::graph && !out.hypergraph->is_graph())
        raise(errc::not_a_graph, "document is marked \"graph\" but has a non-binary edge");
    return out;
}

inline json hypergraph_to_json(const Hypergraph& g) {
    json doc;
    doc["kind"] = g.is_graph() ? "graph" : "hypergraph";
    doc["vertices"] = g.vertex_labels();
    json edges = json::array();
    for (VertexSet e : g.edges()) {
        json edge = json::array();
        for (int v = 0; v < g.vertex_count(); ++v)
            if (e & vbit(v)) edge.push_back(g.label(v));
        edges.push_back(std::move(edge));
    }
    doc["edges"] = std::move(edges);
    return doc;
}

// Map document: {"map": {"<generator label>": ["<ground label>", ...], ...}}
inline std::vector<std::pair<std::string, std::vector<std::string>>> parse_map_doc(
    const json& doc) {
    if (!doc.is_object() || !doc.contains("map") || !doc["map"].is_object())
        raise(errc::invalid_document, "expected an object field \"map\"");
    std::vector<std::pair<std::string, std::vector<std::string>>> out;
    for (const auto& [key, value] : doc["map"].items()) {
        if (!value.is_array()) raise(errc::invalid_document, "map images must be label arrays");
        std::vector<std::string> labels;
        for (const json& v : value) {
            if (!v.is_string()) raise(errc::invalid_document, "ground labels must be strings");
            labels.push_back(v.get<std::string>());
        }
        out.emplace_back(key, std::move(labels));
    }
    return out;
}

} // namespace finba::io
