#pragma once

#include "json.hpp"
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "morsefield/cw_complex.hpp"
#include "morsefield/enumeration.hpp"
#include "morsefield/morse_core.hpp"
#include "morsefield/symmetry.hpp"

namespace morsefield::io {

using nlohmann::json;

/// Malformed or schema-violating input (as opposed to a valid input that
/// fails a domain check).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Complex format:
//   {"name": str, "cells": [{"id": int, "dim": int, "label": str, "facets": [int, ...]}]}
json complex_to_json(const RegularComplex& k);
/// Throws InputError on schema problems and NonRegular on invalid complexes.
RegularComplex complex_from_json(const json& j);
/// "builtin:NAME" or a path to a complex JSON file.
RegularComplex load_complex(const std::string& source);

// Field format: {"complex": str, "pairs": [[lower, upper], ...]}, sorted by lower.
json field_to_json(const RegularComplex& k, const PairList& pairs);
json field_to_json(const RegularComplex& k, const VectorField& v);
VectorField field_from_json(const RegularComplex& k, const json& j);
VectorField load_field(const RegularComplex& k, const std::string& path);

/// Label -> "p/q".
json morse_to_json(const RegularComplex& k, const MorseFunction& f);
std::string rational_text(const Rational& r);

json report_to_json(const RegularComplex& k, const EnumerationReport& r, bool include_fields,
                    const std::vector<PairList>& raw_fields = {});
json audit_to_json(const std::vector<AuditRow>& rows);
std::string audit_table(const std::vector<AuditRow>& rows);

/// Hasse diagram as a DOT digraph, nodes ranked by dimension. Incidence arcs
/// point from a cell to its facets; matched pairs are drawn reversed and
/// highlighted.
std::string to_dot(const RegularComplex& k, const VectorField* field = nullptr);

/// Cell ids ordered by (dim, label, id).
std::vector<CellId> display_order(const RegularComplex& k);
/// "(1,a) (2,b) (c,A)"
std::string pairs_text(const RegularComplex& k, const PairList& pairs);
std::string dim_name(int dim);

json read_json_file(const std::string& path);

}  // namespace morsefield::io
