#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "finba/core/field_algebra.hpp"
#include "finba/core/homomorphism.hpp"

namespace finba {

// Independence degree: a finite bound n >= 1, or omega (no bound).
class NDegree {
public:
    static NDegree omega() { return NDegree(0); }

    static NDegree finite(int n) {
        if (n < 1) raise(errc::invalid_degree, "independence degree must be at least 1");
        return NDegree(n);
    }

    bool is_omega() const { return v_ == 0; }

    int value() const {
        if (is_omega()) raise(errc::invalid_degree, "omega has no finite value");
        return v_;
    }

    // Whether a family of the given size is within the degree bound.
    bool admits(std::size_t k) const { return is_omega() || k <= static_cast<std::size_t>(v_); }

    std::string str() const { return is_omega() ? "omega" : std::to_string(v_); }

    static std::optional<NDegree> parse(const std::string& s) {
        if (s == "omega") return omega();
        if (s.empty() || s.size() > 2) return std::nullopt;
        for (char c : s)
            if (c < '0' || c > '9') return std::nullopt;
        int v = std::stoi(s);
        if (v < 1) return std::nullopt;
        return finite(v);
    }

    friend bool operator==(NDegree a, NDegree b) { return a.v_ == b.v_; }
    friend bool operator!=(NDegree a, NDegree b) { return a.v_ != b.v_; }

private:
    explicit NDegree(int v) : v_(v) {}
    int v_; // 0 encodes omega
};

// Witnesses carry the offending elements themselves, so each one can be
// re-verified against the definitions without the context that found it.
struct ContainsZero {
    Element zero;
};
struct Perp1Failure {
    std::vector<Element> family; // nonempty, sums to 1
};
struct Perp2Failure {
    std::vector<Element> family; // vanishing product, no vanishing subfamily of size <= n
};
struct Perp3Failure {
    std::vector<Element> lower;  // nonzero product
    std::vector<Element> upper;  // dominating sum, disjoint from lower
};
struct PropAFailure {
    std::vector<Element> positives; // signed product vanishes, yet no small
    std::vector<Element> negatives; // vanishing subproduct of the positives exists
};

using IndependenceWitness =
    std::variant<ContainsZero, Perp1Failure, Perp2Failure, Perp3Failure, PropAFailure>;

struct IndependenceReport {
    NDegree n;
    bool holds;
    std::optional<IndependenceWitness> witness;
};

namespace detail {

// Canonical form of a family: distinct elements of one algebra in ascending
// mask order. Families are sets; duplicates are collapsed.
struct Family {
    std::vector<Element> elems;
    std::vector<Mask> masks;
    Mask universe = 0;

    int size() const { return static_cast<int>(elems.size()); }

    std::vector<Element> pick(std::uint32_t subset) const {
        std::vector<Element> out;
        for (int i = 0; i < size(); ++i)
            if (subset & (std::uint32_t{1} << i)) out.push_back(elems[static_cast<std::size_t>(i)]);
        return out;
    }

    Mask meet(std::uint32_t subset) const {
        Mask acc = universe;
        for (int i = 0; i < size(); ++i)
            if (subset & (std::uint32_t{1} << i)) acc &= masks[static_cast<std::size_t>(i)];
        return acc;
    }

    Mask join(std::uint32_t subset) const {
        Mask acc = 0;
        for (int i = 0; i < size(); ++i)
            if (subset & (std::uint32_t{1} << i)) acc |= masks[static_cast<std::size_t>(i)];
        return acc;
    }

    // Meet of x_i^(eps_i) over the support: positives as-is, the rest complemented.
    Mask signed_meet(std::uint32_t support, std::uint32_t positives) const {
        Mask acc = universe;
        for (int i = 0; i < size(); ++i) {
            if (!(support & (std::uint32_t{1} << i))) continue;
            Mask m = masks[static_cast<std::size_t>(i)];
            acc &= (positives & (std::uint32_t{1} << i)) ? m : (~m & universe);
        }
        return acc;
    }
};

inline Family canonical_family(const std::vector<Element>& raw) {
    Family f;
    if (raw.empty()) return f;
    const FieldAlgebra& algebra = raw.front().algebra();
    for (const Element& x : raw)
        if (!(x.algebra() == algebra))
            raise(errc::algebra_mismatch, "family members live in different algebras");
    f.elems = raw;
    std::sort(f.elems.begin(), f.elems.end(), MaskLess{});
    f.elems.erase(std::unique(f.elems.begin(), f.elems.end()), f.elems.end());
    f.masks.reserve(f.elems.size());
    for (const Element& x : f.elems) f.masks.push_back(x.mask());
    f.universe = algebra.universe();
    if (f.size() > 24)
        raise(errc::too_large_for_exhaustive, "family too large for subset enumeration");
    return f;
}

// Nonempty subsets of size <= n with vanishing meet, ascending.
inline std::vector<std::uint32_t> small_zero_subsets(const Family& f, NDegree n) {
    std::vector<std::uint32_t> out;
    std::uint32_t end = std::uint32_t{1} << f.size();
    for (std::uint32_t s = 1; s < end; ++s) {
        if (!n.admits(static_cast<std::size_t>(std::popcount(s)))) continue;
        if (f.meet(s) == 0) out.push_back(s);
    }
    return out;
}

inline bool has_subset(const std::vector<std::uint32_t>& sets, std::uint32_t super) {
    for (std::uint32_t s : sets)
        if ((s & ~super) == 0) return true;
    return false;
}

inline std::optional<Perp1Failure> check_perp1(const Family& f) {
    std::uint32_t end = std::uint32_t{1} << f.size();
    for (std::uint32_t s = 1; s < end; ++s)
        if (f.join(s) == f.universe) return Perp1Failure{f.pick(s)};
    return std::nullopt;
}

inline std::optional<Perp2Failure> check_perp2_n(const Family& f, int n) {
    std::vector<std::uint32_t> small = small_zero_subsets(f, NDegree::finite(n));
    std::uint32_t end = std::uint32_t{1} << f.size();
    for (std::uint32_t s = 1; s < end; ++s)
        if (f.meet(s) == 0 && !has_subset(small, s)) return Perp2Failure{f.pick(s)};
    return std::nullopt;
}

inline std::optional<Perp3Failure> check_perp3(const Family& f) {
    std::uint32_t end = std::uint32_t{1} << f.size();
    for (std::uint32_t lo = 1; lo < end; ++lo) {
        Mask p = f.meet(lo);
        if (p == 0) continue;
        for (std::uint32_t hi = 1; hi < end; ++hi) {
            if (lo & hi) continue;
            if ((p & ~f.join(hi)) == 0) return Perp3Failure{f.pick(lo), f.pick(hi)};
        }
    }
    return std::nullopt;
}

// Route through elementary products: every vanishing product over X must
// owe its vanishing to at most n of its positively signed members.
inline std::optional<PropAFailure> check_elementary_route(const Family& f, NDegree n) {
    std::vector<std::uint32_t> small = small_zero_subsets(f, n);
    std::uint32_t end = std::uint32_t{1} << f.size();
    for (std::uint32_t support = 1; support < end; ++support) {
        std::vector<int> members;
        for (int i = 0; i < f.size(); ++i)
            if (support & (std::uint32_t{1} << i)) members.push_back(i);
        std::uint32_t choices = std::uint32_t{1} << members.size();
        for (std::uint32_t t = 0; t < choices; ++t) {
            std::uint32_t positives = 0;
            for (std::size_t j = 0; j < members.size(); ++j)
                if (t & (std::uint32_t{1} << j))
                    positives |= std::uint32_t{1} << members[j];
            if (f.signed_meet(support, positives) != 0) continue;
            if (!has_subset(small, positives))
                return PropAFailure{f.pick(positives), f.pick(support & ~positives)};
        }
    }
    return std::nullopt;
}

} // namespace detail

inline std::optional<Perp1Failure> check_perp1(const std::vector<Element>& X) {
    return detail::check_perp1(detail::canonical_family(X));
}

inline std::optional<Perp2Failure> check_perp2_n(const std::vector<Element>& X, int n) {
    return detail::check_perp2_n(detail::canonical_family(X), n);
}

inline std::optional<Perp3Failure> check_perp3(const std::vector<Element>& X) {
    return detail::check_perp3(detail::canonical_family(X));
}

inline std::optional<PropAFailure> check_elementary_route(const std::vector<Element>& X,
                                                          NDegree n) {
    return detail::check_elementary_route(detail::canonical_family(X), n);
}

// The four equivalent renderings of the third condition; they must agree on
// every family (property-tested, and the acceptance suite sweeps them).
struct Perp3Variants {
    bool direct;           // 0 != prod F <= sum G forces F, G to meet
    bool not_below_sum;    // disjoint F, G with prod F != 0: prod F not below sum G
    bool meets_complement; // disjoint F, G with prod F != 0: prod F * prod -G != 0
    bool elementary;       // no product with a nonempty, nonvanishing positive part is 0

    bool all_agree() const {
        return direct == not_below_sum && direct == meets_complement && direct == elementary;
    }
};

inline Perp3Variants perp3_variants(const std::vector<Element>& X) {
    detail::Family f = detail::canonical_family(X);
    Perp3Variants v{true, true, true, true};
    v.direct = !detail::check_perp3(f).has_value();

    std::uint32_t end = std::uint32_t{1} << f.size();
    for (std::uint32_t lo = 1; lo < end && (v.not_below_sum || v.meets_complement); ++lo) {
        Mask p = f.meet(lo);
        if (p == 0) continue;
        for (std::uint32_t hi = 1; hi < end; ++hi) {
            if (lo & hi) continue;
            if ((p & ~f.join(hi)) == 0) v.not_below_sum = false;
            if ((p & f.signed_meet(hi, 0)) == 0) v.meets_complement = false;
            if (!v.not_below_sum && !v.meets_complement) break;
        }
    }

    for (std::uint32_t support = 1; support < end && v.elementary; ++support) {
        std::vector<int> members;
        for (int i = 0; i < f.size(); ++i)
            if (support & (std::uint32_t{1} << i)) members.push_back(i);
        std::uint32_t choices = std::uint32_t{1} << members.size();
        for (std::uint32_t t = 1; t < choices; ++t) { // t = 0: all-negative, not this form
            std::uint32_t positives = 0;
            for (std::size_t j = 0; j < members.size(); ++j)
                if (t & (std::uint32_t{1} << j))
                    positives |= std::uint32_t{1} << members[j];
            if (f.meet(positives) != 0 && f.signed_meet(support, positives) == 0) {
                v.elementary = false;
                break;
            }
        }
    }
    return v;
}

// Decides n-independence twice: through the three defining conditions and
// through the elementary-product route. The two decisions must coincide;
// a mismatch is a library defect and raises internal_disagreement rather
// than silently preferring either answer.
inline IndependenceReport is_n_independent(const std::vector<Element>& X, NDegree n) {
    detail::Family f = detail::canonical_family(X);
    for (const Element& x : f.elems)
        if (x.is_zero()) return IndependenceReport{n, false, ContainsZero{x}};

    std::optional<IndependenceWitness> witness;
    if (auto w = detail::check_perp1(f)) witness = *w;
    if (!witness && !n.is_omega()) {
        if (auto w = detail::check_perp2_n(f, n.value())) witness = *w;
    }
    if (!witness) {
        if (auto w = detail::check_perp3(f)) witness = *w;
    }
    bool definitional = !witness.has_value();

    bool elementary = !detail::check_elementary_route(f, n).has_value();
    if (definitional != elementary)
        raise(errc::internal_disagreement,
              "the defining conditions and the elementary-product route disagree");

    return IndependenceReport{n, definitional, witness};
}

inline bool is_independent(const std::vector<Element>& X) {
    return is_n_independent(X, NDegree::finite(1)).holds;
}

struct PreservationReport {
    bool holds;
    std::vector<Element> witness; // domain subfamily: vanishing meet, nonvanishing image meet
};

// f is n-preserving when every subfamily of its domain within the degree
// bound that has a vanishing meet also has a vanishing image meet.
inline PreservationReport is_n_preserving(const GeneratorMap& f, NDegree n) {
    if (f.domain.size() != f.image.size())
        raise(errc::incomplete_map, "domain and image lists differ in length");
    if (f.domain.size() > 24)
        raise(errc::too_large_for_exhaustive, "map too large for subset enumeration");
    if (!f.domain.empty()) {
        const FieldAlgebra& src = f.domain.front().algebra();
        const FieldAlgebra& dst = f.image.front().algebra();
        for (const Element& x : f.domain)
            if (!(x.algebra() == src))
                raise(errc::algebra_mismatch, "domain members live in different algebras");
        for (const Element& y : f.image)
            if (!(y.algebra() == dst))
                raise(errc::algebra_mismatch, "image members live in different algebras");
    }
    int k = static_cast<int>(f.domain.size());
    std::uint32_t end = std::uint32_t{1} << k;
    for (std::uint32_t s = 0; s < end; ++s) {
        if (!n.admits(static_cast<std::size_t>(std::popcount(s)))) continue;
        bool domain_zero = true;
        bool image_zero = true;
        if (k > 0) {
            Mask dm = f.domain.front().algebra().universe();
            Mask im = f.image.front().algebra().universe();
            for (int i = 0; i < k; ++i)
                if (s & (std::uint32_t{1} << i)) {
                    dm &= f.domain[static_cast<std::size_t>(i)].mask();
                    im &= f.image[static_cast<std::size_t>(i)].mask();
                }
            domain_zero = dm == 0;
            image_zero = im == 0;
        } else {
            continue; // empty map: nothing to check
        }
        if (domain_zero && !image_zero) {
            std::vector<Element> w;
            for (int i = 0; i < k; ++i)
                if (s & (std::uint32_t{1} << i)) w.push_back(f.domain[static_cast<std::size_t>(i)]);
            return PreservationReport{false, std::move(w)};
        }
    }
    return PreservationReport{true, {}};
}

// Standalone re-validation of a witness against the definitions, used by the
// replay machinery: a reported witness must always survive this check.
inline bool verify_independence_witness(const std::vector<Element>& X, NDegree n,
                                        const IndependenceWitness& w) {
    detail::Family f = detail::canonical_family(X);
    auto in_family = [&](const Element& x) {
        return std::find(f.elems.begin(), f.elems.end(), x) != f.elems.end();
    };
    auto all_in_family = [&](const std::vector<Element>& xs) {
        return std::all_of(xs.begin(), xs.end(), in_family);
    };
    auto meet = [&](const std::vector<Element>& xs) {
        Mask acc = f.universe;
        for (const Element& x : xs) acc &= x.mask();
        return acc;
    };
    auto join = [&](const std::vector<Element>& xs) {
        Mask acc = 0;
        for (const Element& x : xs) acc |= x.mask();
        return acc;
    };
    auto no_small_zero_subset = [&](const std::vector<Element>& xs) {
        std::uint32_t end = std::uint32_t{1} << xs.size();
        for (std::uint32_t s = 1; s < end; ++s) {
            if (!n.admits(static_cast<std::size_t>(std::popcount(s)))) continue;
            Mask acc = f.universe;
            for (std::size_t i = 0; i < xs.size(); ++i)
                if (s & (std::uint32_t{1} << i)) acc &= xs[i].mask();
            if (acc == 0) return false;
        }
        return true;
    };
    auto disjoint_families = [](const std::vector<Element>& a, const std::vector<Element>& b) {
        for (const Element& x : a)
            for (const Element& y : b)
                if (x == y) return false;
        return true;
    };

    if (const auto* cz = std::get_if<ContainsZero>(&w))
        return in_family(cz->zero) && cz->zero.is_zero();
    if (const auto* p1 = std::get_if<Perp1Failure>(&w))
        return !p1->family.empty() && all_in_family(p1->family) &&
               join(p1->family) == f.universe;
    if (const auto* p2 = std::get_if<Perp2Failure>(&w))
        return !n.is_omega() && !p2->family.empty() && all_in_family(p2->family) &&
               meet(p2->family) == 0 && no_small_zero_subset(p2->family);
    if (const auto* p3 = std::get_if<Perp3Failure>(&w))
        return !p3->lower.empty() && !p3->upper.empty() && all_in_family(p3->lower) &&
               all_in_family(p3->upper) && meet(p3->lower) != 0 &&
               (meet(p3->lower) & ~join(p3->upper)) == 0 &&
               disjoint_families(p3->lower, p3->upper);
    if (const auto* pa = std::get_if<PropAFailure>(&w)) {
        if (!all_in_family(pa->positives) || !all_in_family(pa->negatives)) return false;
        if (!disjoint_families(pa->positives, pa->negatives)) return false;
        Mask acc = meet(pa->positives);
        for (const Element& x : pa->negatives) acc &= ~x.mask() & f.universe;
        return acc == 0 && no_small_zero_subset(pa->positives);
    }
    return false;
}

} // namespace finba
