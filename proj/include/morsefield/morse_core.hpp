#pragma once

#include <boost/rational.hpp>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "morsefield/cw_complex.hpp"

namespace morsefield {

/// A matched (lower, upper) pair: lower is a facet of upper.
struct Pair {
    CellId lower = 0;
    CellId upper = 0;
    auto operator<=>(const Pair&) const = default;
};

using PairList = std::vector<Pair>;

struct FieldViolation {
    enum class Kind { InvalidPair, CellReused };
    Kind kind;
    Pair pair;
    std::string message;
};

class InvalidField : public std::invalid_argument {
public:
    explicit InvalidField(std::vector<FieldViolation> violations);
    const std::vector<FieldViolation>& violations() const noexcept { return violations_; }

private:
    std::vector<FieldViolation> violations_;
};

class NotGradient : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};
class NotMorse : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};
class NotCritical : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};
class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};
class FunctionNotTotal : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A discrete vector field: a partial matching on the Hasse diagram.
///
/// Only constructible through make(), so every instance satisfies the
/// matching invariants for the complex it was made on. Pairs are kept sorted
/// by (lower, upper).
class VectorField {
public:
    /// Throws InvalidField listing every bad incidence and every reused cell.
    static VectorField make(const RegularComplex& k, PairList pairs);
    /// Empty field on a complex with `cell_count` cells.
    static VectorField empty(std::size_t cell_count);

    const PairList& pairs() const noexcept { return pairs_; }
    std::size_t size() const noexcept { return pairs_.size(); }
    std::size_t cell_count() const noexcept { return partner_.size(); }
    bool is_matched(CellId c) const { return partner_.at(c) != kUnmatched; }
    std::optional<CellId> partner(CellId c) const;
    /// Upper cell paired with c when c is the lower end of a pair.
    std::optional<CellId> upper_of(CellId c) const;

    friend bool operator==(const VectorField& a, const VectorField& b) {
        return a.pairs_ == b.pairs_;
    }

private:
    static constexpr CellId kUnmatched = UINT32_MAX;
    PairList pairs_;
    std::vector<CellId> partner_;
    std::vector<bool> is_lower_;
};

/// Cells in no pair, in id order. The index of a critical cell is its dimension.
std::vector<CellId> critical_cells(const RegularComplex& k, const VectorField& v);

struct GradientCheck {
    bool gradient = true;
    /// On failure, a closed V-path s0, t0, s1, t1, ..., s0.
    std::vector<CellId> cycle;
};

/// Acyclicity test: for each k, the digraph on k-cells with arcs s -> s'
/// whenever (s, t) is matched and s' != s is a facet of t has no cycle.
GradientCheck check_gradient(const RegularComplex& k, const VectorField& v);
bool is_gradient(const RegularComplex& k, const VectorField& v);

/// Alternating path s0, t0, s1, ..., sm with (si, ti) matched and
/// s(i+1) a facet of ti different from si.
struct VPath {
    std::vector<CellId> cells;
    auto operator<=>(const VPath&) const = default;
};

/// All V-paths from `start` to `end` (both the same dimension), sorted.
/// `max_steps` bounds the number of matched pairs traversed and only matters
/// when the field has closed V-paths. A single-cell path counts when start == end.
std::vector<VPath> v_paths(const RegularComplex& k, const VectorField& v, CellId start, CellId end,
                           std::size_t max_steps = 64);

/// Number of V-paths that start at a facet of `upper_critical` and end at
/// `lower_critical`.
std::uint64_t count_connecting_paths(const RegularComplex& k, const VectorField& v,
                                     CellId upper_critical, CellId lower_critical);

using Rational = boost::rational<std::int64_t>;

struct MorseFunction {
    std::vector<Rational> values;  // indexed by CellId
};

/// Number of facets with f >= f(c) plus cofacets with f <= f(c).
int wrong_direction_count(const RegularComplex& k, const MorseFunction& f, CellId c);
/// Every cell has at most one wrong-direction incidence.
bool is_discrete_morse(const RegularComplex& k, const MorseFunction& f);
/// Cells with zero wrong-direction incidences.
std::vector<CellId> morse_critical_cells(const RegularComplex& k, const MorseFunction& f);
/// Distinct values on distinct critical cells.
bool is_simple(const RegularComplex& k, const MorseFunction& f);

/// Pairs (s, t) with s a facet of t and f(s) >= f(t). Throws NotMorse.
VectorField gradient_field_of(const RegularComplex& k, const MorseFunction& f);

/// A simple discrete Morse function whose gradient is exactly `v`.
/// Throws NotGradient when `v` has a closed V-path.
MorseFunction morse_function_from_field(const RegularComplex& k, const VectorField& v);

}  // namespace morsefield
