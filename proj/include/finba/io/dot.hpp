#pragma once

#include <string>

#include "finba/hypergraph/hypergraph.hpp"

namespace finba::io {

namespace detail {

inline std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

} // namespace detail

// Graphviz rendering: vertices are nodes, binary edges plain edges, larger
// hyperedges become box-shaped auxiliary nodes joined to their members.
inline std::string to_dot(const Hypergraph& g) {
    std::string out = "graph hypergraph {\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        out += "  v" + std::to_string(v) + " [label=" + detail::dot_quote(g.label(v)) + "];\n";
    int aux = 0;
    for (VertexSet e : g.edges()) {
        if (std::popcount(e) == 2) {
            int a = std::countr_zero(e);
            int b = std::countr_zero(static_cast<VertexSet>(e & (e - 1)));
            out += "  v" + std::to_string(a) + " -- v" + std::to_string(b) + ";\n";
            continue;
        }
        std::string id = "e" + std::to_string(aux++);
        out += "  " + id + " [shape=box, label=" + detail::dot_quote(id) + "];\n";
        for (int v = 0; v < g.vertex_count(); ++v)
            if (e & vbit(v)) out += "  " + id + " -- v" + std::to_string(v) + ";\n";
    }
    out += "}\n";
    return out;
}

} // namespace finba::io
