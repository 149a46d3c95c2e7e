#include "morsefield/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "morsefield/cw_complex.hpp"
#include "morsefield/enumeration.hpp"
#include "morsefield/io.hpp"
#include "morsefield/morse_core.hpp"
#include "morsefield/symmetry.hpp"

namespace morsefield::cli {

namespace {

using io::json;

struct Options {
    std::string complex;
    std::string field;
    std::string format = "text";
    std::string output;
    std::string critical = "min";
    bool modulo_aut = false;
    bool audit = false;
    unsigned threads = 1;
    std::string from;
    std::string to;
    std::size_t max_steps = 64;
};

CellId lookup(const RegularComplex& k, const std::string& label) {
    if (auto c = k.find(label)) return *c;
    throw io::InputError("complex '" + k.name() + "' has no cell labelled '" + label + "'");
}

std::string cell_text(const RegularComplex& k, CellId c) {
    return io::dim_name(k.dim(c)) + " " + k.label(c) + " (index " + std::to_string(k.dim(c)) + ")";
}

std::string labels_text(const RegularComplex& k, const std::vector<CellId>& cells) {
    std::string out;
    for (CellId c : cells) {
        if (!out.empty()) out += ' ';
        out += k.label(c);
    }
    return out;
}

std::string cycle_type_text(std::vector<std::size_t> lengths) {
    std::sort(lengths.begin(), lengths.end());
    std::string out;
    for (std::size_t i = 0; i < lengths.size();) {
        std::size_t j = i;
        while (j < lengths.size() && lengths[j] == lengths[i]) ++j;
        if (!out.empty()) out += ' ';
        out += std::to_string(lengths[i]) + "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

int cmd_list_builtins(const Options& o, std::ostream& out) {
    json rows = json::array();
    std::ostringstream text;
    for (const auto& name : builtin_names()) {
        const auto k = builtin(name);
        rows.push_back({{"name", name},
                        {"cells", {k.count_of_dim(0), k.count_of_dim(1), k.count_of_dim(2)}},
                        {"euler_characteristic", k.euler_characteristic()}});
        text << name << ' ' << k.count_of_dim(0) << '/' << k.count_of_dim(1) << '/'
             << k.count_of_dim(2) << " chi=" << k.euler_characteristic() << '\n';
    }
    if (o.format == "json") {
        out << rows.dump(2) << '\n';
    } else {
        out << text.str();
    }
    return kOk;
}

int cmd_validate(const Options& o, std::ostream& out) {
    std::optional<RegularComplex> k;
    std::vector<Violation> violations;
    try {
        k = io::load_complex(o.complex);
    } catch (const NonRegular& e) {
        violations = e.violations();
    }
    if (o.format == "json") {
        if (k) {
            out << io::complex_to_json(*k).dump(2) << '\n';
        } else {
            json arr = json::array();
            for (const auto& v : violations)
                arr.push_back({{"rule", v.rule}, {"cells", v.cells}, {"message", v.message}});
            out << json{{"valid", false}, {"violations", arr}}.dump(2) << '\n';
        }
    } else if (k) {
        out << "valid: " << k->name() << " (" << k->count_of_dim(0) << '/' << k->count_of_dim(1)
            << '/' << k->count_of_dim(2) << ", chi=" << k->euler_characteristic() << ")\n";
    } else {
        out << "invalid: " << violations.size() << " violation" << (violations.size() == 1 ? "" : "s")
            << '\n';
        for (const auto& v : violations) out << "  [" << v.rule << "] " << v.message << '\n';
    }
    return k ? kOk : kDomainFailure;
}

// Beyond this size the optimal fields are too many to list exhaustively.
constexpr std::size_t kMinEnumerationCellLimit = 24;

int cmd_enumerate(const Options& o, std::ostream& out) {
    const auto k = io::load_complex(o.complex);
    std::size_t critical = 0;
    if (o.critical == "min") {
        if (k.size() > kMinEnumerationCellLimit)
            throw io::InputError("--critical min is limited to complexes of at most " +
                                 std::to_string(kMinEnumerationCellLimit) + " cells (" + k.name() +
                                 " has " + std::to_string(k.size()) + "); pass --critical N");
        critical = min_critical_count(k);
    } else {
        try {
            std::size_t used = 0;
            const long long n = std::stoll(o.critical, &used);
            if (used != o.critical.size() || n < 0) throw std::invalid_argument(o.critical);
            critical = static_cast<std::size_t>(n);
        } catch (const std::exception&) {
            throw io::InputError("--critical expects 'min' or a non-negative integer, got '" +
                                 o.critical + "'");
        }
    }
    const auto threads = std::max(1u, o.threads);
    const auto report = enumerate_classes(k, critical, threads);
    std::vector<PairList> raw;
    if (!o.modulo_aut)
        for (const auto& v : enumerate_gradient_fields(k, critical, threads)) raw.push_back(v.pairs());
    const auto ledger = o.audit ? audit_against_claims({report}) : std::vector<AuditRow>{};
    const bool mismatch =
        std::any_of(ledger.begin(), ledger.end(), [](const AuditRow& r) { return !r.match; });

    if (o.format == "json") {
        auto j = io::report_to_json(k, report, !o.modulo_aut, raw);
        if (o.audit) j["audit"] = io::audit_to_json(ledger);
        out << j.dump(2) << '\n';
    } else {
        out << "complex: " << report.complex << '\n';
        out << "critical cells: " << report.critical_count
            << (report.optimal ? " (minimum)" : "") << '\n';
        out << "automorphism group order: " << report.group_order << '\n';
        out << "fields: " << report.raw_count << '\n';
        if (o.modulo_aut) {
            out << "classes: " << report.class_count << '\n';
            out << "burnside classes: " << report.burnside_count << '\n';
            out << "representatives:\n";
            for (std::size_t i = 0; i < report.representatives.size(); ++i)
                out << "  " << i + 1 << ": " << io::pairs_text(k, report.representatives[i]) << '\n';
            out << "families (edge/2-cell pairs up to symmetry):\n";
            for (const auto& [sig, n] : report.family_partition) out << "  " << sig << ": " << n << '\n';
            out << "critical 2-cell facets paired with 2-cells:\n";
            for (const auto& [covered, n] : report.critical_face_partition)
                out << "  " << covered << ": " << n << '\n';
        } else {
            for (const auto& f : raw) out << "  " << io::pairs_text(k, f) << '\n';
        }
        if (o.audit) {
            out << "audit:\n";
            if (ledger.empty()) {
                out << "  no claimed count for this complex at this critical count\n";
            } else {
                out << io::audit_table(ledger);
            }
        }
    }
    return mismatch ? kDomainFailure : kOk;
}

int cmd_check_field(const Options& o, std::ostream& out) {
    const auto k = io::load_complex(o.complex);
    json j = {{"complex", k.name()}};
    std::ostringstream text;
    text << "complex: " << k.name() << '\n';
    std::optional<VectorField> v;
    try {
        v = io::load_field(k, o.field);
    } catch (const InvalidField& e) {
        json arr = json::array();
        text << "matching: invalid\n";
        for (const auto& bad : e.violations()) {
            const char* kind = bad.kind == FieldViolation::Kind::InvalidPair ? "InvalidPair" : "CellReused";
            text << "  [" << kind << "] " << bad.message << '\n';
            arr.push_back({{"kind", kind}, {"message", bad.message}});
        }
        j["matching_valid"] = false;
        j["violations"] = arr;
    }
    int status = kOk;
    if (v) {
        j["matching_valid"] = true;
        text << "pairs: " << v->size() << '\n';
        text << "matching: valid\n";
        const auto check = check_gradient(k, *v);
        j["gradient"] = check.gradient;
        if (!check.gradient) {
            text << "gradient: no\n";
            text << "cycle: " << labels_text(k, check.cycle) << '\n';
            std::vector<std::string> labels;
            for (CellId c : check.cycle) labels.push_back(k.label(c));
            j["cycle"] = labels;
            status = kDomainFailure;
        } else {
            text << "gradient: yes\n";
        }
        auto crit = critical_cells(k, *v);
        std::sort(crit.begin(), crit.end(), [&](CellId a, CellId b) {
            return std::tie(k.cell(a).dim, k.cell(a).label, a) < std::tie(k.cell(b).dim, k.cell(b).label, b);
        });
        json cj = json::array();
        for (CellId c : crit) cj.push_back({{"label", k.label(c)}, {"index", k.dim(c)}});
        j["critical"] = cj;
        if (crit.size() == k.size() && !crit.empty()) {
            text << "critical: all " << k.size() << " cells\n";
        } else if (crit.empty()) {
            text << "critical: none\n";
        } else {
            text << "critical: ";
            for (std::size_t i = 0; i < crit.size(); ++i) text << (i ? ", " : "") << cell_text(k, crit[i]);
            text << '\n';
        }
        if (check.gradient) {
            int alternating = 0;
            for (CellId c : crit) alternating += (k.dim(c) % 2 == 0) ? 1 : -1;
            const bool ok = alternating == k.euler_characteristic();
            text << "euler: critical alternating sum " << alternating << ", complex "
                 << k.euler_characteristic() << (ok ? " (ok)" : " (MISMATCH)") << '\n';
            j["euler"] = {{"critical_alternating_sum", alternating},
                          {"euler_characteristic", k.euler_characteristic()},
                          {"ok", ok}};
            if (!ok) status = kDomainFailure;
        }
    } else {
        status = kDomainFailure;
    }
    if (o.format == "json") {
        out << j.dump(2) << '\n';
    } else {
        out << text.str();
    }
    return status;
}

int cmd_export_dot(const Options& o, std::ostream& out) {
    const auto k = io::load_complex(o.complex);
    if (o.field.empty()) {
        out << io::to_dot(k);
    } else {
        const auto v = io::load_field(k, o.field);
        out << io::to_dot(k, &v);
    }
    return kOk;
}

int cmd_morse(const Options& o, std::ostream& out) {
    const auto k = io::load_complex(o.complex);
    const auto v = io::load_field(k, o.field);
    const auto f = morse_function_from_field(k, v);
    if (!is_discrete_morse(k, f) || !is_simple(k, f) || !(gradient_field_of(k, f) == v))
        throw std::logic_error("constructed function does not reproduce the field");
    if (o.format == "json") {
        out << io::morse_to_json(k, f).dump(2) << '\n';
    } else {
        for (CellId c : io::display_order(k))
            out << k.label(c) << ' ' << io::rational_text(f.values[c]) << '\n';
    }
    return kOk;
}

int cmd_aut(const Options& o, std::ostream& out) {
    const auto k = io::load_complex(o.complex);
    const auto group = automorphisms(k);
    const auto vertices = k.cells_of_dim(0);
    std::size_t vertex_orbits = 0;
    {
        std::vector<bool> seen(k.size(), false);
        for (CellId v : vertices) {
            if (seen[v]) continue;
            ++vertex_orbits;
            for (CellId w : group.orbit(v)) seen[w] = true;
        }
    }
    std::vector<CellId> vertex_order;
    for (CellId c : io::display_order(k))
        if (k.dim(c) == 0) vertex_order.push_back(c);

    if (o.format == "json") {
        json types = json::object();
        for (const auto& [type, n] : group.cycle_type_counts()) types[cycle_type_text(type)] = n;
        json stabs = json::object();
        for (CellId v : vertex_order) stabs[k.label(v)] = group.stabilizer(v).size();
        out << json{{"complex", k.name()},
                    {"order", group.order()},
                    {"cycle_types", types},
                    {"vertex_orbits", vertex_orbits},
                    {"vertex_stabilizers", stabs}}
                   .dump(2)
            << '\n';
    } else {
        out << "complex: " << k.name() << '\n';
        out << "order: " << group.order() << '\n';
        out << "cycle types:\n";
        for (const auto& [type, n] : group.cycle_type_counts())
            out << "  " << cycle_type_text(type) << ": " << n << '\n';
        out << "vertex orbits: " << vertex_orbits << (vertex_orbits == 1 ? " (vertex-transitive)" : "")
            << '\n';
        out << "vertex stabilizers:\n";
        for (CellId v : vertex_order) out << "  " << k.label(v) << ": " << group.stabilizer(v).size() << '\n';
    }
    return kOk;
}

int cmd_paths(const Options& o, std::ostream& out) {
    const auto k = io::load_complex(o.complex);
    const auto v = io::load_field(k, o.field);
    const CellId from = lookup(k, o.from);
    const CellId to = lookup(k, o.to);

    std::vector<VPath> paths;
    json j = {{"complex", k.name()}, {"from", o.from}, {"to", o.to}};
    if (k.dim(from) == k.dim(to) + 1) {
        const auto count = count_connecting_paths(k, v, from, to);
        for (CellId s : k.facets(from)) {
            auto part = v_paths(k, v, s, to, o.max_steps);
            paths.insert(paths.end(), part.begin(), part.end());
        }
        j["connecting_count"] = count;
    } else {
        paths = v_paths(k, v, from, to, o.max_steps);
    }
    json arr = json::array();
    for (const auto& p : paths) {
        std::vector<std::string> labels;
        for (CellId c : p.cells) labels.push_back(k.label(c));
        arr.push_back(labels);
    }
    j["paths"] = arr;
    if (o.format == "json") {
        out << j.dump(2) << '\n';
    } else {
        out << (k.dim(from) == k.dim(to) + 1 ? "connecting paths from " : "V-paths from ") << o.from
            << " to " << o.to << ": " << paths.size() << '\n';
        for (const auto& p : paths) out << "  " << labels_text(k, p.cells) << '\n';
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Discrete gradient vector fields on small regular CW complexes", "morsefield"};
    app.require_subcommand(1);
    Options o;

    auto add_complex = [&](CLI::App* sub) {
        sub->add_option("--complex", o.complex, "builtin:NAME or path to a complex JSON file")->required();
    };
    auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(allowed));
    };
    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--output", o.output, "Write to this file instead of standard output");
    };

    auto* list = app.add_subcommand("list-builtins", "List the builtin complexes");
    add_format(list, {"text", "json"});
    add_output(list);

    auto* validate = app.add_subcommand("validate", "Check a complex for strict regularity");
    add_complex(validate);
    add_format(validate, {"text", "json"});
    add_output(validate);

    auto* enumerate = app.add_subcommand("enumerate", "Enumerate gradient fields");
    add_complex(enumerate);
    enumerate->add_flag("--modulo-aut", o.modulo_aut, "Report isomorphism classes");
    enumerate->add_option("--critical", o.critical, "'min' or a number of critical cells");
    enumerate->add_flag("--audit", o.audit, "Compare class counts with the claimed values");
    enumerate->add_option("--threads", o.threads, "Worker threads for the search")
        ->check(CLI::Range(1u, 256u));
    add_format(enumerate, {"text", "json"});
    add_output(enumerate);

    auto* check = app.add_subcommand("check-field", "Validate a vector field");
    add_complex(check);
    check->add_option("--field", o.field, "Field JSON file")->required();
    add_format(check, {"text", "json"});
    add_output(check);

    auto* dot = app.add_subcommand("export-dot", "Hasse diagram in DOT, optionally with a field");
    add_complex(dot);
    dot->add_option("--field", o.field, "Field JSON file");
    add_format(dot, {"dot"});
    add_output(dot);

    auto* morse = app.add_subcommand("morse", "Discrete Morse function realizing a gradient field");
    add_complex(morse);
    morse->add_option("--field", o.field, "Field JSON file")->required();
    add_format(morse, {"text", "json"});
    add_output(morse);

    auto* aut = app.add_subcommand("aut", "Automorphism group summary");
    add_complex(aut);
    add_format(aut, {"text", "json"});
    add_output(aut);

    auto* paths = app.add_subcommand("paths", "V-paths between two cells");
    add_complex(paths);
    paths->add_option("--field", o.field, "Field JSON file")->required();
    paths->add_option("--from", o.from, "Start cell label (or critical upper cell)")->required();
    paths->add_option("--to", o.to, "End cell label")->required();
    paths->add_option("--max-steps", o.max_steps, "Step bound when the field has closed V-paths");
    add_format(paths, {"text", "json"});
    add_output(paths);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream msg;
        const int code = app.exit(e, msg, msg);
        if (code == 0) {
            out << msg.str();
            return kOk;
        }
        err << msg.str();
        return kInputError;
    }

    std::ostringstream buffer;
    int status = kOk;
    try {
        if (list->parsed()) status = cmd_list_builtins(o, buffer);
        else if (validate->parsed()) status = cmd_validate(o, buffer);
        else if (enumerate->parsed()) status = cmd_enumerate(o, buffer);
        else if (check->parsed()) status = cmd_check_field(o, buffer);
        else if (dot->parsed()) status = cmd_export_dot(o, buffer);
        else if (morse->parsed()) status = cmd_morse(o, buffer);
        else if (aut->parsed()) status = cmd_aut(o, buffer);
        else if (paths->parsed()) status = cmd_paths(o, buffer);
    } catch (const io::InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const UnknownBuiltin& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const NonRegular& e) {
        err << "error: " << e.what() << '\n';
        return kDomainFailure;
    } catch (const InvalidField& e) {
        err << "error: " << e.what() << '\n';
        return kDomainFailure;
    } catch (const NotGradient& e) {
        err << "error: NotGradient: " << e.what() << '\n';
        return kDomainFailure;
    } catch (const NotCritical& e) {
        err << "error: NotCritical: " << e.what() << '\n';
        return kDomainFailure;
    } catch (const DimensionMismatch& e) {
        err << "error: DimensionMismatch: " << e.what() << '\n';
        return kDomainFailure;
    }

    if (o.output.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(o.output, std::ios::binary);
        if (!file) {
            err << "error: cannot write " << o.output << '\n';
            return kInputError;
        }
        file << buffer.str();
    }
    return status;
}

}  // namespace morsefield::cli
