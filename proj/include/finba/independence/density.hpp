#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "finba/core/sikorski.hpp"
#include "finba/independence/independence.hpp"
#include "finba/independence/maximal.hpp"

namespace finba {

// Every nonzero value of an elementary product over X, each produced once,
// in ascending mask order. The empty product contributes 1.
inline std::vector<Element> nonzero_elementary_products(const std::vector<Element>& X,
                                                        const FieldAlgebra& algebra) {
    detail::Family f = detail::canonical_family(X);
    for (const Element& x : f.elems)
        if (!(x.algebra() == algebra))
            raise(errc::algebra_mismatch, "family lives in a different algebra");
    f.universe = algebra.universe();
    std::vector<Mask> values;
    std::uint32_t end = std::uint32_t{1} << f.size();
    for (std::uint32_t support = 0; support < end; ++support) {
        std::vector<int> members;
        for (int i = 0; i < f.size(); ++i)
            if (support & (std::uint32_t{1} << i)) members.push_back(i);
        std::uint32_t choices = std::uint32_t{1} << members.size();
        for (std::uint32_t t = 0; t < choices; ++t) {
            std::uint32_t positives = 0;
            for (std::size_t j = 0; j < members.size(); ++j)
                if (t & (std::uint32_t{1} << j)) positives |= std::uint32_t{1} << members[j];
            Mask v = f.signed_meet(support, positives);
            if (v != 0) values.push_back(v);
        }
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    std::vector<Element> out;
    out.reserve(values.size());
    for (Mask v : values) out.push_back(algebra.element(v));
    return out;
}

struct DensityReport {
    bool holds;
    std::optional<Element> witness; // nonzero element with no member of Y below it or its complement
};

// Y is weakly dense when every nonzero a has some y in Y with y <= a or
// y <= -a. Members of Y must be nonzero.
inline DensityReport is_weakly_dense(const std::vector<Element>& Y, const FieldAlgebra& algebra) {
    for (const Element& y : Y) {
        if (!(y.algebra() == algebra))
            raise(errc::algebra_mismatch, "family lives in a different algebra");
        if (y.is_zero()) raise(errc::zero_in_family, "weak density is about nonzero families");
    }
    DensityReport report{true, std::nullopt};
    detail::for_each_nonzero(algebra, [&](const Element& a) {
        for (const Element& y : Y)
            if (y.leq(a) || y.leq(-a)) return true;
        report = DensityReport{false, a};
        return false;
    });
    return report;
}

struct DisjunctiveReport {
    bool holds;
    // h covered by the sum of a subfamily yet below no single member of it.
    std::optional<std::pair<Element, std::vector<Element>>> witness;
};

// Direct reading of disjunctivity over a family of nonzero elements.
inline DisjunctiveReport is_disjunctive(const std::vector<Element>& H) {
    detail::Family f = detail::canonical_family(H);
    for (const Element& h : f.elems)
        if (h.is_zero()) raise(errc::zero_in_family, "disjunctivity is about nonzero families");
    std::uint32_t end = std::uint32_t{1} << f.size();
    for (const Element& h : f.elems) {
        for (std::uint32_t s = 1; s < end; ++s) {
            if ((h.mask() & ~f.join(s)) != 0) continue; // h not below the sum
            bool below_one = false;
            for (int i = 0; i < f.size() && !below_one; ++i)
                if ((s & (std::uint32_t{1} << i)) &&
                    (h.mask() & ~f.masks[static_cast<std::size_t>(i)]) == 0)
                    below_one = true;
            if (!below_one) return DisjunctiveReport{false, {{h, f.pick(s)}}};
        }
    }
    return DisjunctiveReport{true, std::nullopt};
}

// Down-set characterisation of disjunctivity: H is disjunctive exactly when,
// for every M subseteq H, sending each h to the members of M below it
// extends to a homomorphism from <H> into P(M). Kept as an independent
// cross-check for small families; it re-derives the same answer from the
// extension criterion instead of the definition.
inline bool disjunctive_by_downset_maps(const std::vector<Element>& H,
                                        int max_family = kDefaultMaxDisjunctiveOracle) {
    detail::Family f = detail::canonical_family(H);
    for (const Element& h : f.elems)
        if (h.is_zero()) raise(errc::zero_in_family, "disjunctivity is about nonzero families");
    if (f.size() > max_family)
        raise(errc::too_large_for_exhaustive,
              "down-set cross-check capped at " + std::to_string(max_family) + " members");
    if (f.elems.empty()) return true;

    GeneratedAlgebra generated(f.elems.front().algebra(), f.elems);
    std::uint32_t end = std::uint32_t{1} << f.size();
    for (std::uint32_t m = 0; m < end; ++m) {
        std::vector<int> chosen;
        for (int i = 0; i < f.size(); ++i)
            if (m & (std::uint32_t{1} << i)) chosen.push_back(i);
        FieldAlgebra target = powerset_algebra(static_cast<int>(chosen.size()));
        std::vector<Element> images;
        images.reserve(f.elems.size());
        for (const Element& h : f.elems) {
            Mask down = 0;
            for (std::size_t j = 0; j < chosen.size(); ++j)
                if (f.elems[static_cast<std::size_t>(chosen[j])].leq(h)) down |= bit(static_cast<int>(j));
            images.push_back(target.element(down));
        }
        if (sikorski_criterion_witness(generated, images, target).has_value()) return false;
    }
    return true;
}

} // namespace finba
