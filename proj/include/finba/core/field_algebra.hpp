#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "finba/core/errors.hpp"

namespace finba {

// Elements of a field of sets are subsets of a ground set of at most 64
// points, packed into one machine word. Bit i set means ground point i is a
// member.
using Mask = std::uint64_t;

inline constexpr int kMaxGroundHard = 64;
inline constexpr int kDefaultMaxGround = 24;
inline constexpr int kDefaultMaxGenerators = 16;
inline constexpr int kDefaultMaxVertices = 16;
inline constexpr int kDefaultMaxSpectrumGround = 5;
inline constexpr int kDefaultMaxDisjunctiveOracle = 6;
inline constexpr int kDefaultMaxEnumerationAtoms = 20;

constexpr Mask bit(int i) { return Mask{1} << i; }

constexpr Mask full_mask(int n) {
    return n >= kMaxGroundHard ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline int popcount(Mask m) { return std::popcount(m); }

class Element;

// The powerset of a finite labelled ground set, viewed as a boolean algebra.
// Immutable; copies share state, and two algebras are "the same" exactly when
// they share state. All finite boolean algebras arise this way up to
// isomorphism, so this is the only ambient algebra type.
class FieldAlgebra {
public:
    FieldAlgebra(std::vector<std::string> labels, int max_ground = kDefaultMaxGround)
        : state_(make_state(std::move(labels), max_ground)) {}

    int ground_size() const { return static_cast<int>(state_->labels.size()); }
    const std::vector<std::string>& ground_labels() const { return state_->labels; }
    const std::string& label(int i) const { return state_->labels.at(static_cast<std::size_t>(i)); }

    std::optional<int> index_of(const std::string& label) const {
        for (std::size_t i = 0; i < state_->labels.size(); ++i)
            if (state_->labels[i] == label) return static_cast<int>(i);
        return std::nullopt;
    }

    Mask universe() const { return full_mask(ground_size()); }

    inline Element element(Mask members) const;
    inline Element zero() const;
    inline Element one() const;
    inline Element singleton(int point) const;

    bool same_algebra(const FieldAlgebra& other) const { return state_ == other.state_; }

    friend bool operator==(const FieldAlgebra& a, const FieldAlgebra& b) {
        return a.state_ == b.state_;
    }

private:
    struct State {
        std::vector<std::string> labels;
    };

    static std::shared_ptr<const State> make_state(std::vector<std::string> labels, int max_ground) {
        if (max_ground > kMaxGroundHard) max_ground = kMaxGroundHard;
        if (static_cast<int>(labels.size()) > max_ground)
            raise(errc::ground_too_large,
                  "ground set of size " + std::to_string(labels.size()) +
                      " exceeds cap " + std::to_string(max_ground));
        for (std::size_t i = 0; i < labels.size(); ++i)
            for (std::size_t j = i + 1; j < labels.size(); ++j)
                if (labels[i] == labels[j])
                    raise(errc::duplicate_label, "duplicate ground label \"" + labels[i] + "\"");
        return std::make_shared<State>(State{std::move(labels)});
    }

    std::shared_ptr<const State> state_;
};

inline FieldAlgebra powerset_algebra(std::vector<std::string> labels,
                                     int max_ground = kDefaultMaxGround) {
    return FieldAlgebra(std::move(labels), max_ground);
}

// P(k) with ground labels "0".."k-1".
inline FieldAlgebra powerset_algebra(int k, int max_ground = kDefaultMaxGround) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) labels.push_back(std::to_string(i));
    return FieldAlgebra(std::move(labels), max_ground);
}

class Element {
public:
    Element(FieldAlgebra algebra, Mask members)
        : algebra_(std::move(algebra)), members_(members & algebra_.universe()) {
        if (members != members_)
            raise(errc::not_in_algebra, "element mask has bits outside the ground set");
    }

    const FieldAlgebra& algebra() const { return algebra_; }
    Mask mask() const { return members_; }

    bool is_zero() const { return members_ == 0; }
    bool is_one() const { return members_ == algebra_.universe(); }
    bool is_atom() const { return popcount(members_) == 1; }

    Element operator+(const Element& other) const {
        return Element(algebra_, members_ | check(other)); // join
    }
    Element operator*(const Element& other) const {
        return Element(algebra_, members_ & check(other)); // meet
    }
    Element operator-() const { return Element(algebra_, ~members_ & algebra_.universe()); }

    // x^1 = x, x^0 = -x.
    Element signed_power(bool positive) const { return positive ? *this : -*this; }

    bool leq(const Element& other) const { return (members_ & ~check(other)) == 0; }
    bool disjoint_from(const Element& other) const { return (members_ & check(other)) == 0; }

    friend bool operator==(const Element& a, const Element& b) {
        return a.algebra_ == b.algebra_ && a.members_ == b.members_;
    }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

    std::vector<std::string> member_labels() const {
        std::vector<std::string> out;
        for (int i = 0; i < algebra_.ground_size(); ++i)
            if (members_ & bit(i)) out.push_back(algebra_.label(i));
        return out;
    }

private:
    Mask check(const Element& other) const {
        if (!(algebra_ == other.algebra_))
            raise(errc::algebra_mismatch, "elements of different algebras combined");
        return other.members_;
    }

    FieldAlgebra algebra_;
    Mask members_;
};

inline Element FieldAlgebra::element(Mask members) const { return Element(*this, members); }
inline Element FieldAlgebra::zero() const { return Element(*this, 0); }
inline Element FieldAlgebra::one() const { return Element(*this, universe()); }
inline Element FieldAlgebra::singleton(int point) const {
    if (point < 0 || point >= ground_size())
        raise(errc::not_in_algebra, "singleton index out of range");
    return Element(*this, bit(point));
}

// Canonical element order: ascending bitset (mask) order.
struct MaskLess {
    bool operator()(const Element& a, const Element& b) const { return a.mask() < b.mask(); }
};

// Empty sums are 0 and empty products are 1; the algebra argument pins the
// value of those degenerate cases.
inline Element sum(const FieldAlgebra& algebra, std::span<const Element> xs) {
    Element acc = algebra.zero();
    for (const Element& x : xs) acc = acc + x;
    return acc;
}

inline Element product(const FieldAlgebra& algebra, std::span<const Element> xs) {
    Element acc = algebra.one();
    for (const Element& x : xs) acc = acc * x;
    return acc;
}

inline Element sum(const FieldAlgebra& algebra, const std::vector<Element>& xs) {
    return sum(algebra, std::span<const Element>(xs));
}

inline Element product(const FieldAlgebra& algebra, const std::vector<Element>& xs) {
    return product(algebra, std::span<const Element>(xs));
}

} // namespace finba
