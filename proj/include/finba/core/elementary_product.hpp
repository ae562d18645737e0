#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "finba/core/field_algebra.hpp"

namespace finba {

// Generator index sets are packed the same way as ground masks; generators
// are capped well below 32 so a 32-bit word suffices.
using GenSet = std::uint32_t;

inline constexpr int kMaxGeneratorsHard = 24;

// A term  prod_{i in support} x_i^(eps_i)  over an indexed generator list,
// where x^1 = x and x^0 = -x. Empty support denotes the empty product, 1.
struct ElementaryProduct {
    GenSet support = 0;
    GenSet positive = 0; // subset of support; bit set means sign 1

    bool full_over(int generator_count) const {
        return support == static_cast<GenSet>(full_mask(generator_count));
    }

    friend bool operator==(const ElementaryProduct&, const ElementaryProduct&) = default;
};

// Full-support pattern: every generator occurs, signs given by `signs`.
inline ElementaryProduct full_pattern(int generator_count, GenSet signs) {
    GenSet support = static_cast<GenSet>(full_mask(generator_count));
    return ElementaryProduct{support, static_cast<GenSet>(signs & support)};
}

inline Element eval_elementary_product(const ElementaryProduct& p,
                                       std::span<const Element> generators,
                                       const FieldAlgebra& algebra) {
    if ((p.positive & ~p.support) != 0)
        raise(errc::unknown_generator_index, "sign assigned outside the support");
    if (p.support >> generators.size())
        raise(errc::unknown_generator_index, "support references a missing generator");
    Element acc = algebra.one();
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (!(p.support & (GenSet{1} << i))) continue;
        acc = acc * generators[i].signed_power((p.positive >> i) & 1);
    }
    return acc;
}

inline Element eval_elementary_product(const ElementaryProduct& p,
                                       const std::vector<Element>& generators,
                                       const FieldAlgebra& algebra) {
    return eval_elementary_product(p, std::span<const Element>(generators), algebra);
}

} // namespace finba
