#pragma once

#include <string>
#include <utility>
#include <vector>

#include "finba/hypergraph/anticlique_algebra.hpp"
#include "finba/hypergraph/hypergraph.hpp"
#include "finba/independence/independence.hpp"

namespace finba {

// A finite strict partial order: irreflexive and transitive over labelled
// points. Antisymmetry follows. Construction can optionally take the
// transitive closure of the given pairs; a cycle then surfaces as a
// reflexive pair and is rejected.
class Poset {
public:
    Poset(std::vector<std::string> labels, std::vector<std::pair<int, int>> strict_pairs,
          bool transitively_close = false)
        : labels_(std::move(labels)), less_(labels_.size() * labels_.size(), false) {
        for (std::size_t i = 0; i < labels_.size(); ++i)
            for (std::size_t j = i + 1; j < labels_.size(); ++j)
                if (labels_[i] == labels_[j])
                    raise(errc::duplicate_label, "duplicate point label \"" + labels_[i] + "\"");
        for (auto [a, b] : strict_pairs) {
            if (a < 0 || b < 0 || a >= size() || b >= size())
                raise(errc::invalid_poset, "order pair mentions a missing point");
            less_[cell(a, b)] = true;
        }
        closure_added_ = false;
        if (transitively_close) {
            for (int k = 0; k < size(); ++k)
                for (int a = 0; a < size(); ++a)
                    for (int b = 0; b < size(); ++b)
                        if (less_[cell(a, k)] && less_[cell(k, b)] && !less_[cell(a, b)]) {
                            less_[cell(a, b)] = true;
                            closure_added_ = true;
                        }
        }
        for (int a = 0; a < size(); ++a)
            if (less_[cell(a, a)])
                raise(errc::invalid_poset, "strict order cannot relate a point to itself");
        for (int a = 0; a < size(); ++a)
            for (int b = 0; b < size(); ++b)
                for (int c = 0; c < size(); ++c)
                    if (less_[cell(a, b)] && less_[cell(b, c)] && !less_[cell(a, c)])
                        raise(errc::invalid_poset, "strict order is not transitive");
    }

    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int p) const { return labels_.at(static_cast<std::size_t>(p)); }
    bool less(int a, int b) const { return less_[cell(a, b)]; }
    bool comparable(int a, int b) const { return a != b && (less(a, b) || less(b, a)); }

    // Whether construction had to add pairs to reach transitivity.
    bool closure_added_pairs() const { return closure_added_; }

    std::vector<std::pair<int, int>> pairs() const {
        std::vector<std::pair<int, int>> out;
        for (int a = 0; a < size(); ++a)
            for (int b = 0; b < size(); ++b)
                if (less(a, b)) out.emplace_back(a, b);
        return out;
    }

private:
    std::size_t cell(int a, int b) const {
        return static_cast<std::size_t>(a) * labels_.size() + static_cast<std::size_t>(b);
    }

    std::vector<std::string> labels_;
    std::vector<bool> less_;
    bool closure_added_;
};

// Edges between comparable pairs; cliques of this graph are the chains and
// anticliques the antichains.
inline Hypergraph comparability_graph(const Poset& p, int max_vertices = kDefaultMaxVertices) {
    std::vector<VertexSet> edges;
    for (int a = 0; a < p.size(); ++a)
        for (int b = a + 1; b < p.size(); ++b)
            if (p.comparable(a, b)) edges.push_back(vbit(a) | vbit(b));
    return Hypergraph(p.labels(), std::move(edges), max_vertices);
}

// Chain algebra: generated over the powerset of the chains.
inline GeneratedAlgebra chain_algebra(const Poset& p, int max_ground = kDefaultMaxGround,
                                      int max_generators = kDefaultMaxGenerators) {
    return clique_algebra(comparability_graph(p), max_ground, max_generators);
}

// Antichain algebra: generated over the powerset of the antichains.
inline GeneratedAlgebra antichain_algebra(const Poset& p, int max_ground = kDefaultMaxGround,
                                          int max_generators = kDefaultMaxGenerators) {
    return anticlique_algebra(comparability_graph(p), max_ground, max_generators);
}

struct OrderInducedMap {
    GeneratorMap generator_map; // p+ to f(p)+ between the antichain algebras
    Homomorphism extension;
};

// A strictly order-preserving point map induces the generator assignment
// p+ -> f(p)+ between antichain algebras; that assignment is 2-preserving
// and extends. Both facts are certified here, not assumed.
inline OrderInducedMap induced_antichain_hom(const Poset& p, const Poset& q,
                                             const std::vector<int>& f,
                                             int max_ground = kDefaultMaxGround) {
    if (static_cast<int>(f.size()) != p.size())
        raise(errc::incomplete_map, "one image per point required");
    for (int v : f)
        if (v < 0 || v >= q.size()) raise(errc::incomplete_map, "image point out of range");
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b)
            if (p.less(a, b) &&
                !q.less(f[static_cast<std::size_t>(a)], f[static_cast<std::size_t>(b)]))
                raise(errc::not_order_preserving,
                      "pair (" + p.label(a) + "," + p.label(b) + ") loses strict order");

    GeneratedAlgebra source = antichain_algebra(p, max_ground);
    GeneratedAlgebra target = antichain_algebra(q, max_ground);
    std::vector<Element> images;
    images.reserve(static_cast<std::size_t>(p.size()));
    for (int a = 0; a < p.size(); ++a)
        images.push_back(target.generator(f[static_cast<std::size_t>(a)]));

    GeneratorMap map{source.generators(), images};
    if (!is_n_preserving(map, NDegree::finite(2)).holds)
        raise(errc::internal_disagreement,
              "induced antichain assignment is not 2-preserving");
    Homomorphism extension = sikorski_extend(source, images, target.ambient());
    return OrderInducedMap{std::move(map), std::move(extension)};
}

} // namespace finba
