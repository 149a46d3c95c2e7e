#include "morsefield/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace morsefield::io {

namespace {

template <typename T>
T required(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key))
        throw InputError(where + ": missing key '" + key + "'");
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception&) {
        throw InputError(where + ": key '" + key + "' has the wrong type");
    }
}

json pair_array(const PairList& pairs) {
    json arr = json::array();
    for (const auto& p : pairs) arr.push_back({p.lower, p.upper});
    return arr;
}

}  // namespace

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

json complex_to_json(const RegularComplex& k) {
    json cells = json::array();
    for (const auto& c : k.cells()) {
        const auto fs = k.facets(c.id);
        cells.push_back({{"id", c.id},
                         {"dim", c.dim},
                         {"label", c.label},
                         {"facets", std::vector<CellId>(fs.begin(), fs.end())}});
    }
    return {{"name", k.name()}, {"cells", std::move(cells)}};
}

RegularComplex complex_from_json(const json& j) {
    if (!j.is_object()) throw InputError("complex: expected a JSON object");
    auto name = required<std::string>(j, "name", "complex");
    const auto& arr = j.contains("cells") ? j.at("cells") : json();
    if (!arr.is_array()) throw InputError("complex: 'cells' must be an array");

    struct Row {
        std::int64_t id;
        Cell cell;
        std::vector<CellId> facets;
    };
    std::vector<Row> rows;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const auto where = "complex cell " + std::to_string(i);
        const auto& c = arr[i];
        Row row;
        row.id = required<std::int64_t>(c, "id", where);
        if (row.id < 0) throw InputError(where + ": negative id");
        row.cell.id = static_cast<CellId>(row.id);
        row.cell.dim = required<int>(c, "dim", where);
        row.cell.label = required<std::string>(c, "label", where);
        for (auto f : required<std::vector<std::int64_t>>(c, "facets", where)) {
            if (f < 0) throw InputError(where + ": negative facet id");
            row.facets.push_back(static_cast<CellId>(f));
        }
        rows.push_back(std::move(row));
    }
    std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.id < b.id; });
    std::vector<Cell> cells;
    std::vector<std::vector<CellId>> facets;
    for (auto& r : rows) {
        cells.push_back(std::move(r.cell));
        facets.push_back(std::move(r.facets));
    }
    return RegularComplex::build(std::move(name), std::move(cells), std::move(facets));
}

RegularComplex load_complex(const std::string& source) {
    constexpr std::string_view prefix = "builtin:";
    if (source.rfind(prefix, 0) == 0) return builtin(source.substr(prefix.size()));
    return complex_from_json(read_json_file(source));
}

json field_to_json(const RegularComplex& k, const PairList& pairs) {
    auto sorted = pairs;
    std::sort(sorted.begin(), sorted.end());
    return {{"complex", k.name()}, {"pairs", pair_array(sorted)}};
}

json field_to_json(const RegularComplex& k, const VectorField& v) {
    return field_to_json(k, v.pairs());
}

VectorField field_from_json(const RegularComplex& k, const json& j) {
    if (!j.is_object()) throw InputError("field: expected a JSON object");
    const auto name = required<std::string>(j, "complex", "field");
    if (name != k.name())
        throw InputError("field was written for complex '" + name + "', not '" + k.name() + "'");
    PairList pairs;
    for (const auto& p : required<std::vector<std::vector<std::int64_t>>>(j, "pairs", "field")) {
        if (p.size() != 2 || p[0] < 0 || p[1] < 0)
            throw InputError("field: each pair must be [lowerId, upperId] with non-negative ids");
        pairs.push_back({static_cast<CellId>(p[0]), static_cast<CellId>(p[1])});
    }
    return VectorField::make(k, std::move(pairs));
}

VectorField load_field(const RegularComplex& k, const std::string& path) {
    return field_from_json(k, read_json_file(path));
}

std::string rational_text(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

json morse_to_json(const RegularComplex& k, const MorseFunction& f) {
    json out = json::object();
    for (CellId c = 0; c < k.size(); ++c) out[k.label(c)] = rational_text(f.values.at(c));
    return out;
}

json report_to_json(const RegularComplex& k, const EnumerationReport& r, bool include_fields,
                    const std::vector<PairList>& raw_fields) {
    json reps = json::array();
    json rep_labels = json::array();
    for (const auto& rep : r.representatives) {
        reps.push_back(pair_array(rep));
        rep_labels.push_back(pairs_text(k, rep));
    }
    json faces = json::object();
    for (const auto& [covered, n] : r.critical_face_partition) faces[std::to_string(covered)] = n;
    json out = {
        {"complex", r.complex},
        {"critical_count", r.critical_count},
        {"optimal", r.optimal},
        {"group_order", r.group_order},
        {"raw_count", r.raw_count},
        {"class_count", r.class_count},
        {"burnside_count", r.burnside_count},
        {"representatives", std::move(reps)},
        {"representative_labels", std::move(rep_labels)},
        {"family_partition", r.family_partition},
        {"critical_face_partition", std::move(faces)},
    };
    if (include_fields) {
        json fields = json::array();
        for (const auto& f : raw_fields) fields.push_back(pair_array(f));
        out["fields"] = std::move(fields);
    }
    return out;
}

json audit_to_json(const std::vector<AuditRow>& rows) {
    json out = json::array();
    for (const auto& r : rows) {
        out.push_back({{"complex", r.complex},
                       {"claimed", r.claimed},
                       {"computed", r.computed},
                       {"match", r.match},
                       {"note", r.note}});
    }
    return out;
}

std::string audit_table(const std::vector<AuditRow>& rows) {
    std::ostringstream os;
    os << "complex    claimed  computed  match\n";
    for (const auto& r : rows) {
        std::string name = r.complex;
        name.resize(std::max<std::size_t>(name.size(), 10), ' ');
        std::string claimed = std::to_string(r.claimed);
        claimed.resize(std::max<std::size_t>(claimed.size(), 8), ' ');
        std::string computed = std::to_string(r.computed);
        computed.resize(std::max<std::size_t>(computed.size(), 9), ' ');
        os << name << ' ' << claimed << ' ' << computed << ' ' << (r.match ? "yes" : "NO");
        if (!r.note.empty()) os << "  (" << r.note << ")";
        os << '\n';
    }
    return os.str();
}

std::vector<CellId> display_order(const RegularComplex& k) {
    std::vector<CellId> ids(k.size());
    for (CellId c = 0; c < k.size(); ++c) ids[c] = c;
    std::sort(ids.begin(), ids.end(), [&](CellId a, CellId b) {
        return std::tie(k.cell(a).dim, k.cell(a).label, a) < std::tie(k.cell(b).dim, k.cell(b).label, b);
    });
    return ids;
}

std::string pairs_text(const RegularComplex& k, const PairList& pairs) {
    if (pairs.empty()) return "(none)";
    std::string out;
    for (const auto& p : pairs) {
        if (!out.empty()) out += ' ';
        out += "(" + k.label(p.lower) + "," + k.label(p.upper) + ")";
    }
    return out;
}

std::string dim_name(int dim) {
    switch (dim) {
        case 0: return "vertex";
        case 1: return "edge";
        default: return "face";
    }
}

namespace {
std::string dot_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out;
}
}  // namespace

std::string to_dot(const RegularComplex& k, const VectorField* field) {
    std::ostringstream os;
    os << "digraph \"" << dot_escape(k.name()) << "\" {\n";
    os << "  rankdir=BT;\n";
    os << "  node [shape=circle, fontsize=12];\n";
    const auto order = display_order(k);
    for (int d = 0; d <= 2; ++d) {
        if (k.count_of_dim(d) == 0) continue;
        os << "  { rank=same;";
        for (CellId c : order)
            if (k.dim(c) == d) os << " n" << c << " [label=\"" << dot_escape(k.label(c)) << "\"];";
        os << " }\n";
    }
    if (field) {
        for (CellId c : order)
            if (!field->is_matched(c)) os << "  n" << c << " [style=bold, color=\"#1f4e9c\"];\n";
    }
    for (CellId upper : order) {
        for (CellId lower : k.facets(upper)) {
            if (field && field->upper_of(lower) == upper) {
                os << "  n" << lower << " -> n" << upper << " [color=\"#c0392b\", penwidth=2.5];\n";
            } else {
                os << "  n" << upper << " -> n" << lower << " [color=gray40];\n";
            }
        }
    }
    os << "}\n";
    return os.str();
}

}  // namespace morsefield::io
