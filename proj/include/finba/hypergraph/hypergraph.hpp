#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "finba/core/errors.hpp"
#include "finba/core/field_algebra.hpp"

namespace finba {

// Vertex subsets are packed like ground masks; vertex counts stay small
// enough for 32 bits because anticlique enumeration walks all 2^|V| subsets.
using VertexSet = std::uint32_t;

inline constexpr int kMaxVerticesHard = 20;

constexpr VertexSet vbit(int v) { return VertexSet{1} << v; }

// A loopless hypergraph: labelled vertices plus a duplicate-free set of
// edges, each an unordered vertex set of size at least two. Edges are kept
// in ascending bitset order, which is the canonical order everywhere.
class Hypergraph {
public:
    Hypergraph(std::vector<std::string> vertex_labels, std::vector<VertexSet> edge_sets,
               int max_vertices = kDefaultMaxVertices)
        : labels_(std::move(vertex_labels)) {
        if (max_vertices > kMaxVerticesHard) max_vertices = kMaxVerticesHard;
        if (static_cast<int>(labels_.size()) > max_vertices)
            raise(errc::too_many_vertices,
                  std::to_string(labels_.size()) + " vertices exceed cap " +
                      std::to_string(max_vertices));
        for (std::size_t i = 0; i < labels_.size(); ++i)
            for (std::size_t j = i + 1; j < labels_.size(); ++j)
                if (labels_[i] == labels_[j])
                    raise(errc::duplicate_label, "duplicate vertex label \"" + labels_[i] + "\"");
        VertexSet all = static_cast<VertexSet>(full_mask(vertex_count()));
        std::sort(edge_sets.begin(), edge_sets.end());
        for (std::size_t i = 0; i < edge_sets.size(); ++i) {
            VertexSet e = edge_sets[i];
            if (e & ~all) raise(errc::invalid_edge, "edge mentions a missing vertex");
            if (std::popcount(e) < 2)
                raise(errc::invalid_edge, "edges need at least two vertices (loopless)");
            if (i > 0 && edge_sets[i - 1] == e)
                raise(errc::duplicate_edge, "duplicate edge");
        }
        edges_ = std::move(edge_sets);
    }

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& vertex_labels() const { return labels_; }
    const std::string& label(int v) const { return labels_.at(static_cast<std::size_t>(v)); }

    std::optional<int> vertex_index(const std::string& label) const {
        for (std::size_t i = 0; i < labels_.size(); ++i)
            if (labels_[i] == label) return static_cast<int>(i);
        return std::nullopt;
    }

    const std::vector<VertexSet>& edges() const { return edges_; }

    bool has_edge(VertexSet e) const {
        return std::binary_search(edges_.begin(), edges_.end(), e);
    }

    bool is_graph() const {
        return std::all_of(edges_.begin(), edges_.end(),
                           [](VertexSet e) { return std::popcount(e) == 2; });
    }

    int max_edge_size() const {
        int m = 0;
        for (VertexSet e : edges_) m = std::max(m, std::popcount(e));
        return m;
    }

    friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
        return a.labels_ == b.labels_ && a.edges_ == b.edges_;
    }

private:
    std::vector<std::string> labels_;
    std::vector<VertexSet> edges_;
};

// All subsets containing no edge, in ascending bitset order. Always includes
// the empty set and every singleton, since edges have size at least two.
inline std::vector<VertexSet> anticliques(const Hypergraph& g) {
    std::vector<VertexSet> out;
    VertexSet all = static_cast<VertexSet>(full_mask(g.vertex_count()));
    for (VertexSet s = 0;; ++s) {
        bool contains_edge = false;
        for (VertexSet e : g.edges())
            if ((e & ~s) == 0) {
                contains_edge = true;
                break;
            }
        if (!contains_edge) out.push_back(s);
        if (s == all) break;
    }
    return out;
}

// All subsets whose pairs are all edges; defined for ordinary graphs only.
// The empty set and singletons are cliques by convention.
inline std::vector<VertexSet> cliques(const Hypergraph& g) {
    if (!g.is_graph())
        raise(errc::not_a_graph, "cliques are defined for 2-uniform graphs only");
    std::vector<VertexSet> out;
    VertexSet all = static_cast<VertexSet>(full_mask(g.vertex_count()));
    for (VertexSet s = 0;; ++s) {
        bool ok = true;
        for (int a = 0; a < g.vertex_count() && ok; ++a) {
            if (!(s & vbit(a))) continue;
            for (int b = a + 1; b < g.vertex_count() && ok; ++b)
                if ((s & vbit(b)) && !g.has_edge(vbit(a) | vbit(b))) ok = false;
        }
        if (ok) out.push_back(s);
        if (s == all) break;
    }
    return out;
}

namespace detail {

// Factor labels survive unchanged when globally unique; otherwise every
// label is prefixed with its factor index.
inline std::vector<std::string> disjoint_labels(std::span<const Hypergraph> parts) {
    std::vector<std::string> flat;
    for (const Hypergraph& g : parts)
        for (const std::string& s : g.vertex_labels()) flat.push_back(s);
    std::set<std::string> distinct(flat.begin(), flat.end());
    if (distinct.size() == flat.size()) return flat;
    std::vector<std::string> prefixed;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (const std::string& s : parts[i].vertex_labels())
            prefixed.push_back(std::to_string(i) + ":" + s);
    return prefixed;
}

} // namespace detail

inline Hypergraph disjoint_union(std::span<const Hypergraph> parts,
                                 int max_vertices = kDefaultMaxVertices) {
    std::vector<VertexSet> edges;
    int shift = 0;
    for (const Hypergraph& g : parts) {
        for (VertexSet e : g.edges()) edges.push_back(e << shift);
        shift += g.vertex_count();
    }
    return Hypergraph(detail::disjoint_labels(parts), std::move(edges), max_vertices);
}

inline Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b,
                                 int max_vertices = kDefaultMaxVertices) {
    const Hypergraph parts[] = {a, b};
    return disjoint_union(std::span<const Hypergraph>(parts, 2), max_vertices);
}

// Disjoint union plus every cross pair; graphs only.
inline Hypergraph join(std::span<const Hypergraph> parts, int max_vertices = kDefaultMaxVertices) {
    for (const Hypergraph& g : parts)
        if (!g.is_graph())
            raise(errc::join_on_non_graph, "join is defined for 2-uniform graphs only");
    std::vector<VertexSet> edges;
    std::vector<int> offsets;
    int shift = 0;
    for (const Hypergraph& g : parts) {
        offsets.push_back(shift);
        for (VertexSet e : g.edges()) edges.push_back(e << shift);
        shift += g.vertex_count();
    }
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            for (int a = 0; a < parts[i].vertex_count(); ++a)
                for (int b = 0; b < parts[j].vertex_count(); ++b)
                    edges.push_back(vbit(offsets[i] + a) | vbit(offsets[j] + b));
    return Hypergraph(detail::disjoint_labels(parts), std::move(edges), max_vertices);
}

inline Hypergraph join(const Hypergraph& a, const Hypergraph& b,
                       int max_vertices = kDefaultMaxVertices) {
    const Hypergraph parts[] = {a, b};
    return join(std::span<const Hypergraph>(parts, 2), max_vertices);
}

struct EdgeMapReport {
    bool holds;
    std::optional<VertexSet> witness; // edge whose image set is not an edge
};

// A vertex map is a hypergraph homomorphism when the image set of every
// edge is an edge of the target. Collapsing an edge below size two fails.
inline EdgeMapReport is_hypergraph_homomorphism(const std::vector<int>& f, const Hypergraph& g,
                                                const Hypergraph& h) {
    if (static_cast<int>(f.size()) != g.vertex_count())
        raise(errc::incomplete_map, "one image per vertex required");
    for (int v : f)
        if (v < 0 || v >= h.vertex_count())
            raise(errc::incomplete_map, "image vertex out of range");
    for (VertexSet e : g.edges()) {
        VertexSet image = 0;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (e & vbit(v)) image |= vbit(f[static_cast<std::size_t>(v)]);
        if (!h.has_edge(image)) return EdgeMapReport{false, e};
    }
    return EdgeMapReport{true, std::nullopt};
}

} // namespace finba
