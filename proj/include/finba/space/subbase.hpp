#pragma once

#include <optional>
#include <string>
#include <vector>

#include "finba/hypergraph/hypergraph.hpp"

namespace finba {

inline constexpr int kDefaultMaxAryFamily = 22;

// One subbase set of the anticlique space: for a vertex v, either
// v+ = "anticliques containing v" or v- = "anticliques avoiding v",
// stored as a mask over the canonical anticlique list.
struct TaggedSet {
    int vertex;
    bool positive;
    Mask points;
};

struct SubbaseFamily {
    int ground_size = 0; // number of anticliques
    std::vector<TaggedSet> sets;

    std::vector<Mask> point_sets() const {
        std::vector<Mask> out;
        out.reserve(sets.size());
        for (const TaggedSet& s : sets) out.push_back(s.points);
        return out;
    }

    std::string name(int i) const {
        const TaggedSet& s = sets.at(static_cast<std::size_t>(i));
        return std::to_string(s.vertex) + (s.positive ? "+" : "-");
    }
};

// The clopen subbase {v+, v-} of the anticlique space, ordered v0+, v0-,
// v1+, v1-, ... For each vertex the two sets partition the anticliques.
inline SubbaseFamily subbase(const Hypergraph& g) {
    std::vector<VertexSet> ac = anticliques(g);
    SubbaseFamily family;
    family.ground_size = static_cast<int>(ac.size());
    for (int v = 0; v < g.vertex_count(); ++v) {
        Mask plus = 0;
        for (std::size_t i = 0; i < ac.size(); ++i)
            if (ac[i] & vbit(v)) plus |= bit(static_cast<int>(i));
        Mask minus = full_mask(family.ground_size) & ~plus;
        family.sets.push_back(TaggedSet{v, true, plus});
        family.sets.push_back(TaggedSet{v, false, minus});
    }
    return family;
}

struct LinkedReport {
    bool holds;
    std::optional<std::vector<int>> witness; // indices of a small subfamily with empty meet
};

// n-linked: every choice of at most n members (an n-tuple allows repeats,
// so size <= n) has a common point.
inline LinkedReport is_n_linked(const std::vector<Mask>& family, int n) {
    if (family.size() > 24)
        raise(errc::too_large_for_exhaustive, "family too large for subset enumeration");
    std::uint32_t end = std::uint32_t{1} << family.size();
    for (std::uint32_t s = 1; s < end; ++s) {
        if (std::popcount(s) > n) continue;
        Mask acc = ~Mask{0};
        std::vector<int> picked;
        for (std::size_t i = 0; i < family.size(); ++i)
            if (s & (std::uint32_t{1} << i)) {
                acc &= family[i];
                picked.push_back(static_cast<int>(i));
            }
        if (acc == 0) return LinkedReport{false, std::move(picked)};
    }
    return LinkedReport{true, std::nullopt};
}

struct AryReport {
    bool holds;
    std::optional<std::vector<int>> witness; // n-linked subfamily with empty meet
};

// n-ary: every n-linked subfamily has a common point. Exhaustive over
// subfamilies, so capped.
inline AryReport is_n_ary(const std::vector<Mask>& family, int n,
                          int max_family = kDefaultMaxAryFamily) {
    if (static_cast<int>(family.size()) > max_family)
        raise(errc::too_large_for_exhaustive,
              "arity check capped at " + std::to_string(max_family) + " subbase sets");

    // Minimal small subfamilies with empty meet; a subfamily is n-linked
    // exactly when it contains none of them.
    std::vector<std::uint32_t> blockers;
    std::uint32_t end = std::uint32_t{1} << family.size();
    for (std::uint32_t s = 1; s < end; ++s) {
        if (std::popcount(s) > n) continue;
        Mask acc = ~Mask{0};
        for (std::size_t i = 0; i < family.size(); ++i)
            if (s & (std::uint32_t{1} << i)) acc &= family[i];
        if (acc != 0) continue;
        bool minimal = true;
        for (std::uint32_t b : blockers)
            if ((b & ~s) == 0) {
                minimal = false;
                break;
            }
        if (minimal) blockers.push_back(s);
    }

    for (std::uint32_t s = 1; s < end; ++s) {
        Mask acc = ~Mask{0};
        for (std::size_t i = 0; i < family.size(); ++i)
            if (s & (std::uint32_t{1} << i)) acc &= family[i];
        if (acc != 0) continue;
        bool linked = true;
        for (std::uint32_t b : blockers)
            if ((b & ~s) == 0) {
                linked = false;
                break;
            }
        if (linked) {
            std::vector<int> picked;
            for (std::size_t i = 0; i < family.size(); ++i)
                if (s & (std::uint32_t{1} << i)) picked.push_back(static_cast<int>(i));
            return AryReport{false, std::move(picked)};
        }
    }
    return AryReport{true, std::nullopt};
}

inline AryReport is_n_ary(const SubbaseFamily& family, int n,
                          int max_family = kDefaultMaxAryFamily) {
    return is_n_ary(family.point_sets(), n, max_family);
}

struct ArityBound {
    int least_n;        // least n >= 2 with an n-ary subbase
    int max_edge_size;  // 0 when edgeless; least_n <= max(2, max_edge_size)
    bool one_ary;       // the subbase is already 1-ary (every meeting-free
                        // subfamily contains an empty-meet pair)
};

// Upper-bound certificate for the compactness number of the anticlique
// space: scan n = 2, 3, ... until the subbase is n-ary. Guaranteed to stop
// by max(2, max edge size); running past it means a broken invariant.
inline ArityBound arity_upper_bound(const Hypergraph& g,
                                    int max_family = kDefaultMaxAryFamily) {
    SubbaseFamily family = subbase(g);
    std::vector<Mask> sets = family.point_sets();
    int stop = std::max(2, g.max_edge_size());
    for (int n = 2; n <= stop; ++n)
        if (is_n_ary(sets, n, max_family).holds)
            return ArityBound{n, g.max_edge_size(), is_n_ary(sets, 1, max_family).holds};
    raise(errc::internal_disagreement,
          "subbase is not even (max edge size)-ary, contradicting the arity bound");
}

} // namespace finba
