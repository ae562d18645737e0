#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "finba/core/generated_algebra.hpp"
#include "finba/independence/independence.hpp"

namespace finba {

namespace detail {

// Visit every nonzero element of the algebra in ascending mask order without
// materialising the powerset. Stops early when the visitor returns false.
template <typename Visit>
void for_each_nonzero(const FieldAlgebra& algebra, Visit visit) {
    Mask top = algebra.universe();
    for (Mask m = 1;; ++m) {
        if (m > top || m == 0) break;
        if (!visit(algebra.element(m))) return;
    }
}

inline std::vector<Element> with_candidate(const std::vector<Element>& X, const Element& c) {
    std::vector<Element> out = X;
    out.push_back(c);
    return out;
}

} // namespace detail

// Whether X is n-independent and no further nonzero element of the algebra
// can be added while staying n-independent.
inline bool is_maximal_n_independent(const std::vector<Element>& X, NDegree n,
                                     const FieldAlgebra& algebra) {
    if (!is_n_independent(X, n).holds) return false;
    bool maximal = true;
    detail::for_each_nonzero(algebra, [&](const Element& c) {
        if (std::find(X.begin(), X.end(), c) != X.end()) return true;
        if (is_n_independent(detail::with_candidate(X, c), n).holds) {
            maximal = false;
            return false;
        }
        return true;
    });
    return maximal;
}

// Greedy completion: sweep the nonzero elements in ascending mask order and
// add whichever keeps the family n-independent. Deterministic by the sweep
// order; the input must already be n-independent.
inline std::vector<Element> extend_to_maximal(const std::vector<Element>& X, NDegree n,
                                              const FieldAlgebra& algebra) {
    if (!is_n_independent(X, n).holds)
        raise(errc::not_independent_input, "can only extend an n-independent family");
    std::vector<Element> grown = X;
    detail::for_each_nonzero(algebra, [&](const Element& c) {
        if (std::find(grown.begin(), grown.end(), c) == grown.end() &&
            is_n_independent(detail::with_candidate(grown, c), n).holds)
            grown.push_back(c);
        return true;
    });
    return grown;
}

// Same sweep restricted to the members of a generated subalgebra.
inline std::vector<Element> extend_to_maximal(const std::vector<Element>& X, NDegree n,
                                              const GeneratedAlgebra& algebra,
                                              int max_atoms = kDefaultMaxEnumerationAtoms) {
    if (!is_n_independent(X, n).holds)
        raise(errc::not_independent_input, "can only extend an n-independent family");
    std::vector<Element> grown = X;
    for (const Element& c : algebra.elements(max_atoms)) {
        if (c.is_zero()) continue;
        if (std::find(grown.begin(), grown.end(), c) == grown.end() &&
            is_n_independent(detail::with_candidate(grown, c), n).holds)
            grown.push_back(c);
    }
    return grown;
}

struct SpectrumResult {
    std::vector<std::size_t> sizes;                   // distinct, ascending
    std::vector<std::vector<Element>> maximal_families;

    std::size_t min_size() const { return sizes.empty() ? 0 : sizes.front(); }
};

// All maximal n-independent families, by exhaustive search. n-independence
// is closed under subfamilies, so a depth-first sweep that only ever grows
// n-independent families visits each of them exactly once.
inline SpectrumResult i_n_spectrum(const FieldAlgebra& algebra, NDegree n,
                                   int max_ground = kDefaultMaxSpectrumGround) {
    if (algebra.ground_size() > max_ground)
        raise(errc::too_large_for_exhaustive,
              "spectrum enumeration needs ground size at most " + std::to_string(max_ground));

    std::vector<Element> pool;
    detail::for_each_nonzero(algebra, [&](const Element& c) {
        pool.push_back(c);
        return true;
    });

    SpectrumResult result;
    std::set<std::size_t> sizes;
    std::vector<Element> current;

    auto is_maximal_here = [&]() {
        for (const Element& c : pool) {
            if (std::find(current.begin(), current.end(), c) != current.end()) continue;
            if (is_n_independent(detail::with_candidate(current, c), n).holds) return false;
        }
        return true;
    };

    auto search = [&](auto&& self, std::size_t start) -> void {
        if (is_maximal_here()) {
            sizes.insert(current.size());
            result.maximal_families.push_back(current);
        }
        for (std::size_t i = start; i < pool.size(); ++i) {
            if (!is_n_independent(detail::with_candidate(current, pool[i]), n).holds) continue;
            current.push_back(pool[i]);
            self(self, i + 1);
            current.pop_back();
        }
    };
    search(search, 0);

    result.sizes.assign(sizes.begin(), sizes.end());
    return result;
}

// Least size of a maximal n-independent family. 0 only for the degenerate
// algebras with at most two members, where the empty family is maximal.
inline std::size_t i_n(const FieldAlgebra& algebra, NDegree n,
                       int max_ground = kDefaultMaxSpectrumGround) {
    return i_n_spectrum(algebra, n, max_ground).min_size();
}

// For a maximal family X, whether -(sum X) is an atom. Rejects non-maximal
// input rather than reporting a meaningless boolean.
inline bool maximality_atom_check(const std::vector<Element>& X, NDegree n,
                                  const FieldAlgebra& algebra) {
    if (!is_maximal_n_independent(X, n, algebra))
        raise(errc::not_maximal_input, "family is not maximal n-independent");
    return (-sum(algebra, X)).is_atom();
}

} // namespace finba
