#pragma once

#include <optional>
#include <set>
#include <vector>

#include "finba/core/homomorphism.hpp"

namespace finba {

class CriterionViolated : public Error {
public:
    explicit CriterionViolated(ElementaryProduct witness)
        : Error(errc::criterion_violated,
                "a vanishing elementary product of the generators has a nonvanishing image"),
          witness_(witness) {}

    const ElementaryProduct& witness() const { return witness_; }

private:
    ElementaryProduct witness_;
};

namespace detail {

inline Mask image_product_mask(GenSet signs, const std::vector<Element>& images,
                               const FieldAlgebra& target) {
    Mask acc = target.universe();
    for (std::size_t i = 0; i < images.size(); ++i) {
        Mask m = images[i].mask();
        acc &= ((signs >> i) & 1) ? m : (~m & target.universe());
    }
    return acc;
}

} // namespace detail

// Extension criterion for a generator assignment g_i -> images[i]: every
// full-support elementary product of the generators that vanishes must have
// a vanishing image product. Returns the first violating sign pattern in
// ascending order, or nothing when the assignment extends.
inline std::optional<ElementaryProduct> sikorski_criterion_witness(
    const GeneratedAlgebra& source, const std::vector<Element>& images,
    const FieldAlgebra& target) {
    int k = source.generator_count();
    if (static_cast<int>(images.size()) != k)
        raise(errc::incomplete_map, "one image per generator required");
    for (const Element& y : images)
        if (!(y.algebra() == target))
            raise(errc::algebra_mismatch, "image lives outside the target algebra");

    std::set<GenSet> nonzero_patterns;
    for (int i = 0; i < source.atom_count(); ++i) nonzero_patterns.insert(source.atom_pattern(i));

    for (GenSet signs = 0; signs < (GenSet{1} << k); ++signs) {
        if (nonzero_patterns.count(signs)) continue; // source product is an atom, not zero
        if (detail::image_product_mask(signs, images, target) != 0)
            return full_pattern(k, signs);
    }
    return std::nullopt;
}

// Builds the unique extension when the criterion holds: the atom with sign
// pattern s maps to the image product with the same signs. Image products of
// distinct patterns are disjoint and sweep out the whole target unit, so the
// atom images assemble into a homomorphism with h(g_i) = images[i].
inline Homomorphism sikorski_extend(const GeneratedAlgebra& source,
                                    const std::vector<Element>& images,
                                    const FieldAlgebra& target) {
    if (auto witness = sikorski_criterion_witness(source, images, target))
        throw CriterionViolated(*witness);
    std::vector<Element> atom_images;
    atom_images.reserve(static_cast<std::size_t>(source.atom_count()));
    for (int i = 0; i < source.atom_count(); ++i)
        atom_images.push_back(
            target.element(detail::image_product_mask(source.atom_pattern(i), images, target)));
    return Homomorphism(source, target, std::move(atom_images));
}

inline Homomorphism sikorski_extend(const GeneratedAlgebra& source, const GeneratorMap& f,
                                    const FieldAlgebra& target) {
    std::vector<Element> images;
    images.reserve(static_cast<std::size_t>(source.generator_count()));
    for (const Element& g : source.generators()) {
        auto y = f.image_of(g);
        if (!y) raise(errc::incomplete_map, "map is undefined on a generator");
        images.push_back(*y);
    }
    return sikorski_extend(source, images, target);
}

} // namespace finba
