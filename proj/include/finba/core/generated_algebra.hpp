#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "finba/core/elementary_product.hpp"
#include "finba/core/field_algebra.hpp"

namespace finba {

// The subalgebra of a field of sets generated by an indexed element list.
//
// Its atoms are exactly the nonzero full-support elementary products of the
// generators. Those products partition the ground set (each ground point
// lies in the unique product whose signs record which generators contain
// it), so there are never more atoms than ground points and every member of
// the subalgebra is a union of atoms.
class GeneratedAlgebra {
public:
    GeneratedAlgebra(FieldAlgebra ambient, std::vector<Element> generators,
                     int max_generators = kDefaultMaxGenerators)
        : ambient_(std::move(ambient)), generators_(std::move(generators)) {
        if (max_generators > kMaxGeneratorsHard) max_generators = kMaxGeneratorsHard;
        if (static_cast<int>(generators_.size()) > max_generators)
            raise(errc::too_many_generators,
                  std::to_string(generators_.size()) + " generators exceed cap " +
                      std::to_string(max_generators));
        for (const Element& g : generators_)
            if (!(g.algebra() == ambient_))
                raise(errc::algebra_mismatch, "generator lives in a different algebra");
        build_atoms();
    }

    const FieldAlgebra& ambient() const { return ambient_; }
    const std::vector<Element>& generators() const { return generators_; }
    int generator_count() const { return static_cast<int>(generators_.size()); }

    const Element& generator(int i) const {
        if (i < 0 || i >= generator_count())
            raise(errc::unknown_generator_index, "generator index out of range");
        return generators_[static_cast<std::size_t>(i)];
    }

    // Atoms in ascending mask order; atom_pattern(i) is the sign pattern of
    // the full elementary product equal to atom i.
    const std::vector<Element>& atoms() const { return atoms_; }
    int atom_count() const { return static_cast<int>(atoms_.size()); }
    GenSet atom_pattern(int i) const { return atom_patterns_[static_cast<std::size_t>(i)]; }

    std::uint64_t size() const {
        if (atom_count() >= 64)
            raise(errc::overflow, "algebra size exceeds 2^63");
        return std::uint64_t{1} << atom_count();
    }

    bool contains(const Element& x) const {
        if (!(x.algebra() == ambient_)) return false;
        for (const Element& a : atoms_) {
            Mask cut = a.mask() & x.mask();
            if (cut != 0 && cut != a.mask()) return false;
        }
        return true;
    }

    std::vector<int> atom_decomposition(const Element& x) const {
        if (!contains(x))
            raise(errc::not_in_algebra, "element is not a union of atoms of this subalgebra");
        std::vector<int> idx;
        for (int i = 0; i < atom_count(); ++i)
            if (atoms_[static_cast<std::size_t>(i)].mask() & x.mask()) idx.push_back(i);
        return idx;
    }

    // Every member, in ascending mask order. Guarded: 2^atom_count values.
    std::vector<Element> elements(int max_atoms = kDefaultMaxEnumerationAtoms) const {
        if (atom_count() > max_atoms)
            raise(errc::too_large_for_exhaustive,
                  "enumerating 2^" + std::to_string(atom_count()) + " members exceeds cap 2^" +
                      std::to_string(max_atoms));
        std::vector<Mask> masks;
        masks.reserve(std::size_t{1} << atom_count());
        masks.push_back(0);
        for (const Element& a : atoms_) {
            std::size_t n = masks.size();
            for (std::size_t i = 0; i < n; ++i) masks.push_back(masks[i] | a.mask());
        }
        std::sort(masks.begin(), masks.end());
        std::vector<Element> out;
        out.reserve(masks.size());
        for (Mask m : masks) out.push_back(ambient_.element(m));
        return out;
    }

private:
    void build_atoms() {
        // Group ground points by the sign pattern of generators containing
        // them; each nonempty group is one atom.
        std::map<GenSet, Mask> by_pattern;
        for (int p = 0; p < ambient_.ground_size(); ++p) {
            GenSet pattern = 0;
            for (int i = 0; i < generator_count(); ++i)
                if (generators_[static_cast<std::size_t>(i)].mask() & bit(p))
                    pattern |= GenSet{1} << i;
            by_pattern[pattern] |= bit(p);
        }
        std::vector<std::pair<Mask, GenSet>> flat;
        flat.reserve(by_pattern.size());
        for (const auto& [pattern, mask] : by_pattern) flat.emplace_back(mask, pattern);
        std::sort(flat.begin(), flat.end());
        for (const auto& [mask, pattern] : flat) {
            atoms_.push_back(ambient_.element(mask));
            atom_patterns_.push_back(pattern);
        }
    }

    FieldAlgebra ambient_;
    std::vector<Element> generators_;
    std::vector<Element> atoms_;
    std::vector<GenSet> atom_patterns_;
};

inline GeneratedAlgebra generate(FieldAlgebra ambient, std::vector<Element> generators,
                                 int max_generators = kDefaultMaxGenerators) {
    return GeneratedAlgebra(std::move(ambient), std::move(generators), max_generators);
}

} // namespace finba
