#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace morsefield {

/// Dense index of a cell inside its complex (0..n-1).
using CellId = std::uint32_t;

struct Cell {
    CellId id = 0;
    int dim = 0;
    std::string label;
};

/// One failed regularity rule, with the cells that break it.
struct Violation {
    std::string rule;
    std::vector<CellId> cells;
    std::string message;
};

class NonRegular : public std::runtime_error {
public:
    explicit NonRegular(std::vector<Violation> violations);
    const std::vector<Violation>& violations() const noexcept { return violations_; }

private:
    std::vector<Violation> violations_;
};

class UnknownBuiltin : public std::invalid_argument {
public:
    explicit UnknownBuiltin(const std::string& name)
        : std::invalid_argument("unknown builtin complex: " + name) {}
};

/// Face poset of a strictly regular CW complex of dimension at most 2.
///
/// Every cell stores its codimension-one faces (facets); the closure order
/// is the transitive closure of that relation. Instances are immutable once
/// built, and every instance has passed validate().
class RegularComplex {
public:
    /// Validates and builds. `facets[i]` lists the facets of cell i.
    /// Throws NonRegular carrying every violation found.
    static RegularComplex build(std::string name, std::vector<Cell> cells,
                                std::vector<std::vector<CellId>> facets);

    /// Runs every regularity check and returns all violations (empty if valid).
    static std::vector<Violation> validate(const std::vector<Cell>& cells,
                                           const std::vector<std::vector<CellId>>& facets);

    const std::string& name() const noexcept { return name_; }
    std::size_t size() const noexcept { return cells_.size(); }
    const std::vector<Cell>& cells() const noexcept { return cells_; }
    const Cell& cell(CellId c) const { return cells_.at(c); }
    int dim(CellId c) const { return cells_.at(c).dim; }
    const std::string& label(CellId c) const { return cells_.at(c).label; }

    /// Facets sorted by id.
    std::span<const CellId> facets(CellId c) const { return facets_.at(c); }
    /// Cofacets sorted by id.
    std::span<const CellId> cofacets(CellId c) const { return cofacets_.at(c); }
    bool is_facet(CellId lower, CellId upper) const;

    /// Cells of dimension k in id order.
    std::vector<CellId> cells_of_dim(int k) const;
    std::size_t count_of_dim(int k) const;
    int euler_characteristic() const;
    /// Betti numbers b0, b1, b2 over Z/2.
    std::array<std::size_t, 3> betti_numbers_mod2() const;

    std::optional<CellId> find(std::string_view label) const;

    /// Closure of a cell (the cell and all its faces), sorted by id.
    std::vector<CellId> closure(CellId c) const;

    /// Boundary edges (those with exactly one cofacet) grouped into circles.
    std::vector<std::vector<CellId>> boundary_circles() const;

private:
    RegularComplex() = default;

    std::string name_;
    std::vector<Cell> cells_;
    std::vector<std::vector<CellId>> facets_;
    std::vector<std::vector<CellId>> cofacets_;
};

/// Names accepted by builtin(), in listing order.
const std::vector<std::string>& builtin_names();

/// The minimal surface decompositions: disk, sphere, cylinder, mobius, torus.
RegularComplex builtin(std::string_view name);

}  // namespace morsefield
