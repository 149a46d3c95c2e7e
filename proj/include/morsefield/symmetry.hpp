#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "morsefield/cw_complex.hpp"
#include "morsefield/morse_core.hpp"

namespace morsefield {

/// Bijection on cell ids; image[c] is where c goes.
struct CellPermutation {
    std::vector<CellId> image;

    static CellPermutation identity(std::size_t n);
    CellId operator()(CellId c) const { return image[c]; }
    bool is_identity() const;
    CellPermutation inverse() const;
    /// Sorted cycle lengths, fixed points included.
    std::vector<std::size_t> cycle_type() const;

    auto operator<=>(const CellPermutation&) const = default;
};

/// (g * h)(c) = g(h(c)).
CellPermutation compose(const CellPermutation& g, const CellPermutation& h);

/// Dimension- and incidence-preserving in both directions.
bool is_automorphism(const RegularComplex& k, const CellPermutation& g);

class AutomorphismGroup {
public:
    explicit AutomorphismGroup(std::vector<CellPermutation> elements);

    const std::vector<CellPermutation>& elements() const noexcept { return elements_; }
    std::size_t order() const noexcept { return elements_.size(); }
    /// Elements fixing cell c.
    std::vector<CellPermutation> stabilizer(CellId c) const;
    /// Images of c under the group, sorted.
    std::vector<CellId> orbit(CellId c) const;
    /// Group order broken down by cycle type.
    std::map<std::vector<std::size_t>, std::size_t> cycle_type_counts() const;

private:
    std::vector<CellPermutation> elements_;  // sorted, identity first
};

/// The full automorphism group, by backtracking from the 2-cells down with
/// incidence propagation.
AutomorphismGroup automorphisms(const RegularComplex& k);

VectorField apply(const RegularComplex& k, const CellPermutation& g, const VectorField& v);
PairList apply(const CellPermutation& g, const PairList& pairs);

bool are_isomorphic_fields(const AutomorphismGroup& group, const VectorField& a,
                           const VectorField& b);
bool are_isomorphic_fields(const RegularComplex& k, const VectorField& a, const VectorField& b);

/// Lexicographically least sorted pair list over the orbit of `pairs`.
PairList canonical_form(const AutomorphismGroup& group, const PairList& pairs);
PairList canonical_form(const AutomorphismGroup& group, const VectorField& v);

class NotGroupClosed : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Orbit count by averaging fixed points over the group. The input must be
/// closed under the group; a non-integral average throws NotGroupClosed.
std::size_t burnside_class_count(const AutomorphismGroup& group,
                                 const std::vector<VectorField>& fields);

}  // namespace morsefield
