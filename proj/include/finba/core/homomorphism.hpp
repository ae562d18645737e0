#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "finba/core/generated_algebra.hpp"

namespace finba {

// A partial map between algebras, given as aligned (domain, image) lists.
// Domain entries need not be generators; independence-preservation checks
// accept arbitrary families.
struct GeneratorMap {
    std::vector<Element> domain;
    std::vector<Element> image;

    std::size_t size() const { return domain.size(); }

    std::optional<Element> image_of(const Element& x) const {
        for (std::size_t i = 0; i < domain.size(); ++i)
            if (domain[i] == x) return image[i];
        return std::nullopt;
    }
};

// A boolean homomorphism from a generated subalgebra into a field of sets,
// stored by its values on the source atoms. Determined everywhere by
// additivity: h(x) is the sum of the images of the atoms below x.
class Homomorphism {
public:
    Homomorphism(GeneratedAlgebra source, FieldAlgebra target, std::vector<Element> atom_images)
        : source_(std::move(source)), target_(std::move(target)),
          atom_images_(std::move(atom_images)) {
        if (static_cast<int>(atom_images_.size()) != source_.atom_count())
            raise(errc::incomplete_map, "one image per source atom required");
        for (const Element& y : atom_images_)
            if (!(y.algebra() == target_))
                raise(errc::algebra_mismatch, "atom image lives outside the target algebra");
    }

    const GeneratedAlgebra& source() const { return source_; }
    const FieldAlgebra& target() const { return target_; }
    const std::vector<Element>& atom_images() const { return atom_images_; }

    Element operator()(const Element& x) const {
        Element acc = target_.zero();
        for (int i : source_.atom_decomposition(x))
            acc = acc + atom_images_[static_cast<std::size_t>(i)];
        return acc;
    }

private:
    GeneratedAlgebra source_;
    FieldAlgebra target_;
    std::vector<Element> atom_images_;
};

// Exhaustive structural check of an arbitrary element map: preservation of
// join and complement on every pair of members, plus the two constants.
// Meet preservation follows (de Morgan), so it is not checked separately.
inline bool is_homomorphism(const GeneratedAlgebra& source,
                            const std::function<Element(const Element&)>& h,
                            const FieldAlgebra& target,
                            int max_atoms = kDefaultMaxEnumerationAtoms) {
    std::vector<Element> members = source.elements(max_atoms);
    if (h(source.ambient().zero()) != target.zero()) return false;
    if (h(source.ambient().one()) != target.one()) return false;
    for (const Element& x : members) {
        Element hx = h(x);
        if (h(-x) != -hx) return false;
        for (const Element& y : members)
            if (h(x + y) != hx + h(y)) return false;
    }
    return true;
}

inline bool is_homomorphism(const Homomorphism& h, int max_atoms = kDefaultMaxEnumerationAtoms) {
    return is_homomorphism(h.source(), [&](const Element& x) { return h(x); }, h.target(),
                           max_atoms);
}

} // namespace finba
