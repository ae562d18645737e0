#pragma once

#include <string>
#include <vector>

#include "finba/core/generated_algebra.hpp"
#include "finba/core/sikorski.hpp"
#include "finba/hypergraph/hypergraph.hpp"
#include "finba/independence/independence.hpp"

namespace finba {

// Canonical name of a vertex set: "{}" or "{a,c}" with labels in vertex order.
inline std::string vertex_set_label(const Hypergraph& g, VertexSet s) {
    std::string out = "{";
    bool first = true;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!(s & vbit(v))) continue;
        if (!first) out += ",";
        out += g.label(v);
        first = false;
    }
    return out + "}";
}

namespace detail {

inline GeneratedAlgebra vertex_set_algebra(const Hypergraph& g, const std::vector<VertexSet>& sets,
                                           int max_ground, int max_generators) {
    std::vector<std::string> labels;
    labels.reserve(sets.size());
    for (VertexSet s : sets) labels.push_back(vertex_set_label(g, s));
    FieldAlgebra ambient(std::move(labels), max_ground);
    std::vector<Element> generators;
    generators.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
        Mask m = 0;
        for (std::size_t i = 0; i < sets.size(); ++i)
            if (sets[i] & vbit(v)) m |= bit(static_cast<int>(i));
        generators.push_back(ambient.element(m));
    }
    return GeneratedAlgebra(std::move(ambient), std::move(generators), max_generators);
}

} // namespace detail

// The algebra generated over the powerset of the anticlique set by the
// families v+ = "anticliques containing v", one generator per vertex in
// vertex order. The ground points are the anticliques in canonical order.
inline GeneratedAlgebra anticlique_algebra(const Hypergraph& g,
                                           int max_ground = kDefaultMaxGround,
                                           int max_generators = kDefaultMaxGenerators) {
    return detail::vertex_set_algebra(g, anticliques(g), max_ground, max_generators);
}

// Same construction over the clique set; ordinary graphs only.
inline GeneratedAlgebra clique_algebra(const Hypergraph& g, int max_ground = kDefaultMaxGround,
                                       int max_generators = kDefaultMaxGenerators) {
    return detail::vertex_set_algebra(g, cliques(g), max_ground, max_generators);
}

// The hypergraph of minimal vanishing subfamilies of an indexed family:
// vertex i stands for X[i], and a vertex set is an edge when the meet over
// it vanishes while every proper subset's meet does not. Defined for
// omega-independent families; `check_independence = false` skips that gate
// (the edge set is still well defined, but nothing is claimed about it).
inline Hypergraph perp_hypergraph(const std::vector<Element>& X,
                                  std::vector<std::string> vertex_labels = {},
                                  bool check_independence = true,
                                  int max_vertices = kDefaultMaxVertices) {
    if (static_cast<int>(X.size()) > max_vertices)
        raise(errc::too_many_vertices, "family too large for a vertex per member");
    for (const Element& x : X) {
        if (x.is_zero()) raise(errc::zero_generator, "zero cannot be a vertex element");
        if (!(x.algebra() == X.front().algebra()))
            raise(errc::algebra_mismatch, "family members live in different algebras");
    }
    for (std::size_t i = 0; i < X.size(); ++i)
        for (std::size_t j = i + 1; j < X.size(); ++j)
            if (X[i] == X[j]) raise(errc::duplicate_label, "vertex elements must be distinct");
    if (check_independence && !is_n_independent(X, NDegree::omega()).holds)
        raise(errc::not_omega_independent, "family is not omega-independent");

    if (vertex_labels.empty())
        for (std::size_t i = 0; i < X.size(); ++i) vertex_labels.push_back(std::to_string(i));
    if (vertex_labels.size() != X.size())
        raise(errc::incomplete_map, "one label per vertex element required");

    int k = static_cast<int>(X.size());
    Mask universe = X.empty() ? 0 : X.front().algebra().universe();
    auto meet = [&](VertexSet s) {
        Mask acc = universe;
        for (int i = 0; i < k; ++i)
            if (s & vbit(i)) acc &= X[static_cast<std::size_t>(i)].mask();
        return acc;
    };

    std::vector<VertexSet> edges;
    VertexSet all = static_cast<VertexSet>(full_mask(k));
    for (VertexSet s = 1; s != 0 && s <= all; ++s) {
        if (std::popcount(s) < 2 || meet(s) != 0) continue;
        bool minimal = true;
        for (int i = 0; i < k && minimal; ++i)
            if ((s & vbit(i)) && meet(s & ~vbit(i)) == 0) minimal = false;
        if (minimal) edges.push_back(s);
    }
    return Hypergraph(std::move(vertex_labels), std::move(edges), max_vertices);
}

struct Reconstruction {
    Hypergraph graph;       // minimal-vanishing-set hypergraph of the generators
    GeneratedAlgebra image; // its anticlique algebra
    Homomorphism forward;   // source onto image, generator i to (vertex i)+
    Homomorphism backward;  // image onto source, (vertex i)+ to generator i
};

// Rebuilds a generated algebra from its vanishing-set hypergraph and proves
// the two isomorphic: both generator assignments must pass the extension
// criterion and the composites must fix every atom. A failure here is not
// an input condition but a broken invariant, hence internal_disagreement.
inline Reconstruction verify_reconstruction(const GeneratedAlgebra& A,
                                            std::vector<std::string> vertex_labels = {},
                                            int max_ground = kDefaultMaxGround) {
    Hypergraph g = perp_hypergraph(A.generators(), std::move(vertex_labels));
    GeneratedAlgebra B = anticlique_algebra(g, max_ground);

    Homomorphism forward = sikorski_extend(A, B.generators(), B.ambient());
    Homomorphism backward = sikorski_extend(B, A.generators(), A.ambient());

    bool ok = A.atom_count() == B.atom_count();
    for (int i = 0; ok && i < A.generator_count(); ++i)
        if (backward(forward(A.generator(i))) != A.generator(i)) ok = false;
    for (const Element& a : A.atoms())
        if (!ok || backward(forward(a)) != a) ok = false;
    for (const Element& b : B.atoms())
        if (!ok || forward(backward(b)) != b) ok = false;
    if (!ok)
        raise(errc::internal_disagreement,
              "reconstruction from the vanishing-set hypergraph is not an isomorphism");

    return Reconstruction{std::move(g), std::move(B), std::move(forward), std::move(backward)};
}

} // namespace finba
