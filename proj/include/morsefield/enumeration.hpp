#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "morsefield/cw_complex.hpp"
#include "morsefield/morse_core.hpp"
#include "morsefield/symmetry.hpp"

namespace morsefield {

/// Fewest critical cells over all gradient fields on k. The search starts at
/// the Z/2 Betti sum and stops at the first budget that admits a field.
std::size_t min_critical_count(const RegularComplex& k);

/// Every gradient field on k with exactly `critical_count` critical cells,
/// sorted by pair list. With threads > 1 the first branching level is split
/// across workers; the result does not depend on the thread count.
std::vector<VectorField> enumerate_gradient_fields(const RegularComplex& k,
                                                   std::size_t critical_count,
                                                   unsigned threads = 1);

struct EnumerationReport {
    std::string complex;
    std::size_t critical_count = 0;
    /// critical_count equals min_critical_count of the complex.
    bool optimal = false;
    std::size_t group_order = 0;
    std::size_t raw_count = 0;
    std::size_t class_count = 0;
    /// Orbit count of the raw list by fixed-point averaging.
    std::size_t burnside_count = 0;
    /// Canonical pair lists, one per isomorphism class, sorted.
    std::vector<PairList> representatives;
    /// Classes grouped by the orbit of their edge/2-cell pairs, keyed by the
    /// canonical labels of those pairs (for example "aA bB iC").
    std::map<std::string, std::size_t> family_partition;
    /// Classes grouped by how many facets of critical 2-cells are paired
    /// with 2-cells.
    std::map<std::size_t, std::size_t> critical_face_partition;
};

/// Enumerates fields with `critical_count` critical cells and collapses them
/// to classes under the automorphism group of k.
EnumerationReport enumerate_classes(const RegularComplex& k, std::size_t critical_count,
                                    unsigned threads = 1);

/// enumerate_classes at min_critical_count(k).
EnumerationReport enumerate_optimal_classes(const RegularComplex& k, unsigned threads = 1);

/// "aA bB iC" style rendering of a pair list; "-" when empty.
std::string family_signature(const RegularComplex& k, const AutomorphismGroup& group,
                             const PairList& pairs);

/// A published class count for one of the builtin surfaces.
struct ClaimedCount {
    std::string complex;
    std::size_t value;
    std::string note;
};

/// Claimed optimal-class counts: disk 2, sphere 13, cylinder 104, mobius 102.
const std::vector<ClaimedCount>& claimed_counts();

struct AuditRow {
    std::string complex;
    std::size_t claimed = 0;
    std::size_t computed = 0;
    bool match = false;
    std::string note;
};

/// One row per optimal report whose complex has a claimed count. Other
/// reports are skipped.
std::vector<AuditRow> audit_against_claims(const std::vector<EnumerationReport>& reports);

}  // namespace morsefield
