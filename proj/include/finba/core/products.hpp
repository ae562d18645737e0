#pragma once

#include <string>
#include <utility>
#include <vector>

#include "finba/core/field_algebra.hpp"

namespace finba {

// P(S) x P(T) realised as P(S + T): left-factor points keep their position,
// right-factor points are shifted past them. Factor labels are prefixed with
// "0:" / "1:" so the combined ground set never collides.
class DirectProduct {
public:
    DirectProduct(FieldAlgebra left, FieldAlgebra right, int max_ground = kDefaultMaxGround)
        : left_(std::move(left)), right_(std::move(right)),
          algebra_(combined_labels(left_, right_), max_ground) {}

    const FieldAlgebra& algebra() const { return algebra_; }
    const FieldAlgebra& left() const { return left_; }
    const FieldAlgebra& right() const { return right_; }

    Element pair(const Element& a, const Element& b) const {
        require_factor(a, left_);
        require_factor(b, right_);
        return algebra_.element(a.mask() | (b.mask() << left_.ground_size()));
    }

    std::pair<Element, Element> split(const Element& x) const {
        require_factor(x, algebra_);
        return {left_.element(x.mask() & left_.universe()),
                right_.element(x.mask() >> left_.ground_size())};
    }

    Element embed_left(const Element& a) const { return pair(a, right_.zero()); }
    Element embed_right(const Element& b) const { return pair(left_.zero(), b); }
    Element left_unit() const { return embed_left(left_.one()); }   // (1,0)
    Element right_unit() const { return embed_right(right_.one()); } // (0,1)

private:
    static std::vector<std::string> combined_labels(const FieldAlgebra& l, const FieldAlgebra& r) {
        std::vector<std::string> labels;
        labels.reserve(static_cast<std::size_t>(l.ground_size() + r.ground_size()));
        for (const std::string& s : l.ground_labels()) labels.push_back("0:" + s);
        for (const std::string& s : r.ground_labels()) labels.push_back("1:" + s);
        return labels;
    }

    static void require_factor(const Element& x, const FieldAlgebra& algebra) {
        if (!(x.algebra() == algebra))
            raise(errc::algebra_mismatch, "element does not live in the expected factor");
    }

    FieldAlgebra left_;
    FieldAlgebra right_;
    FieldAlgebra algebra_;
};

inline DirectProduct direct_product(FieldAlgebra left, FieldAlgebra right,
                                    int max_ground = kDefaultMaxGround) {
    return DirectProduct(std::move(left), std::move(right), max_ground);
}

// Free product of P(S) and P(T): P(S x T) with a |-> a x T and b |-> S x b.
// The embeddings are independent (nonzero elements have nonzero meets), so
// the subalgebra generated by both images realises the coproduct.
class FreeProduct {
public:
    FreeProduct(FieldAlgebra left, FieldAlgebra right, int max_ground = kDefaultMaxGround)
        : left_(std::move(left)), right_(std::move(right)),
          algebra_(pair_labels(left_, right_), max_ground) {}

    const FieldAlgebra& algebra() const { return algebra_; }
    const FieldAlgebra& left() const { return left_; }
    const FieldAlgebra& right() const { return right_; }

    Element embed_left(const Element& a) const {
        if (!(a.algebra() == left_))
            raise(errc::algebra_mismatch, "element does not live in the left factor");
        Mask m = 0;
        for (int s = 0; s < left_.ground_size(); ++s)
            if (a.mask() & bit(s))
                for (int t = 0; t < right_.ground_size(); ++t) m |= bit(point(s, t));
        return algebra_.element(m);
    }

    Element embed_right(const Element& b) const {
        if (!(b.algebra() == right_))
            raise(errc::algebra_mismatch, "element does not live in the right factor");
        Mask m = 0;
        for (int t = 0; t < right_.ground_size(); ++t)
            if (b.mask() & bit(t))
                for (int s = 0; s < left_.ground_size(); ++s) m |= bit(point(s, t));
        return algebra_.element(m);
    }

private:
    int point(int s, int t) const { return s * right_.ground_size() + t; }

    static std::vector<std::string> pair_labels(const FieldAlgebra& l, const FieldAlgebra& r) {
        std::vector<std::string> labels;
        labels.reserve(static_cast<std::size_t>(l.ground_size()) *
                       static_cast<std::size_t>(r.ground_size()));
        for (const std::string& s : l.ground_labels())
            for (const std::string& t : r.ground_labels())
                labels.push_back("(" + s + "," + t + ")");
        return labels;
    }

    FieldAlgebra left_;
    FieldAlgebra right_;
    FieldAlgebra algebra_;
};

inline FreeProduct free_product(FieldAlgebra left, FieldAlgebra right,
                                int max_ground = kDefaultMaxGround) {
    return FreeProduct(std::move(left), std::move(right), max_ground);
}

// The free boolean algebra on m generators, realised over the 2^m sign
// patterns: generator a is the set of patterns whose bit a is 1.
struct FreeAlgebra {
    FieldAlgebra algebra;
    std::vector<Element> generators;
};

inline FreeAlgebra free_algebra(int m, int max_ground = kDefaultMaxGround) {
    int points = 1 << m;
    FieldAlgebra algebra = powerset_algebra(points, max_ground);
    std::vector<Element> gens;
    gens.reserve(static_cast<std::size_t>(m));
    for (int a = 0; a < m; ++a) {
        Mask mask = 0;
        for (int d = 0; d < points; ++d)
            if ((d >> a) & 1) mask |= bit(d);
        gens.push_back(algebra.element(mask));
    }
    return FreeAlgebra{std::move(algebra), std::move(gens)};
}

} // namespace finba
