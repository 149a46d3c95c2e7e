#include "morsefield/cw_complex.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace morsefield {

namespace {

std::string describe(const std::vector<Violation>& violations) {
    std::ostringstream os;
    os << "complex is not regular (" << violations.size() << " violation"
       << (violations.size() == 1 ? "" : "s") << ")";
    for (const auto& v : violations) os << "\n  [" << v.rule << "] " << v.message;
    return os.str();
}

std::string cell_name(const std::vector<Cell>& cells, CellId c) {
    if (c < cells.size() && !cells[c].label.empty()) return "'" + cells[c].label + "'";
    return "#" + std::to_string(c);
}

std::vector<CellId> closure_of(const std::vector<std::vector<CellId>>& facets, CellId c) {
    std::vector<CellId> out{c};
    for (std::size_t i = 0; i < out.size(); ++i)
        for (CellId f : facets[out[i]]) out.push_back(f);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Structural checks that must hold before closures can be computed safely.
void check_shape(const std::vector<Cell>& cells, const std::vector<std::vector<CellId>>& facets,
                 std::vector<Violation>& out) {
    const auto n = cells.size();
    if (facets.size() != n) {
        std::ostringstream os;
        os << "facet table has " << facets.size() << " rows for " << n << " cells";
        out.push_back({"facet-table-size", {}, os.str()});
        return;
    }
    std::map<std::string, CellId> seen_labels;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& c = cells[i];
        const auto id = static_cast<CellId>(i);
        if (c.id != id) {
            out.push_back({"dense-ids", {id},
                           "cell at position " + std::to_string(i) + " has id " + std::to_string(c.id)});
        }
        if (c.dim < 0 || c.dim > 2) {
            out.push_back({"dimension", {id},
                           "cell " + cell_name(cells, id) + " has dimension " + std::to_string(c.dim) +
                               " outside 0..2"});
        }
        if (c.label.empty()) {
            out.push_back({"label", {id}, "cell #" + std::to_string(i) + " has an empty label"});
        } else if (auto [it, fresh] = seen_labels.emplace(c.label, id); !fresh) {
            out.push_back({"label", {it->second, id}, "label '" + c.label + "' is used twice"});
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        const auto id = static_cast<CellId>(i);
        std::set<CellId> uniq;
        for (CellId f : facets[i]) {
            if (f >= n) {
                out.push_back({"facet-range", {id},
                               "cell " + cell_name(cells, id) + " lists facet id " + std::to_string(f) +
                                   " outside 0.." + std::to_string(n ? n - 1 : 0)});
                continue;
            }
            if (!uniq.insert(f).second) {
                out.push_back({"duplicate-facet", {id, f},
                               "cell " + cell_name(cells, id) + " lists facet " + cell_name(cells, f) +
                                   " twice"});
            }
            if (cells[f].dim != cells[i].dim - 1) {
                out.push_back({"facet-dimension", {id, f},
                               "facet " + cell_name(cells, f) + " of " + std::to_string(cells[i].dim) +
                                   "-cell " + cell_name(cells, id) + " has dimension " +
                                   std::to_string(cells[f].dim)});
            }
        }
    }
}

void check_edges(const std::vector<Cell>& cells, const std::vector<std::vector<CellId>>& facets,
                 std::vector<Violation>& out) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i].dim != 1 || facets[i].size() == 2) continue;
        const auto id = static_cast<CellId>(i);
        out.push_back({"edge-endpoints", {id},
                       "edge " + cell_name(cells, id) + " has " + std::to_string(facets[i].size()) +
                           " endpoints, expected 2 distinct vertices"});
    }
}

// The facet edges of a 2-cell must close up into one simple cycle.
void check_faces(const std::vector<Cell>& cells, const std::vector<std::vector<CellId>>& facets,
                 std::vector<Violation>& out) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i].dim != 2) continue;
        const auto id = static_cast<CellId>(i);
        const auto& edges = facets[i];
        auto fail = [&](const std::string& why) {
            std::vector<CellId> involved{id};
            involved.insert(involved.end(), edges.begin(), edges.end());
            out.push_back({"face-boundary-cycle", involved,
                           "boundary of 2-cell " + cell_name(cells, id) + " " + why});
        };
        if (edges.size() < 3) {
            fail("has " + std::to_string(edges.size()) + " edges, at least 3 are required");
            continue;
        }
        std::map<CellId, std::vector<CellId>> incident;  // vertex -> boundary edges
        bool bad_edge = false;
        for (CellId e : edges) {
            if (facets[e].size() != 2) bad_edge = true;
            for (CellId v : facets[e]) incident[v].push_back(e);
        }
        if (bad_edge) continue;  // reported by check_edges
        bool degree_ok = true;
        for (const auto& [v, es] : incident) {
            if (es.size() != 2) {
                degree_ok = false;
                fail("meets vertex " + cell_name(cells, v) + " in " + std::to_string(es.size()) +
                     " edges instead of 2");
            }
        }
        if (!degree_ok) continue;
        // Walk the cycle from the first edge and make sure it visits every edge.
        std::set<CellId> visited;
        CellId edge = edges.front();
        CellId vertex = facets[edge][0];
        while (visited.insert(edge).second) {
            vertex = facets[edge][0] == vertex ? facets[edge][1] : facets[edge][0];
            const auto& pair = incident[vertex];
            edge = pair[0] == edge ? pair[1] : pair[0];
        }
        if (visited.size() != edges.size()) fail("splits into more than one closed cycle");
    }
}

// Any two closed cells meet in nothing or in the closure of a single cell.
void check_strict_regularity(const std::vector<Cell>& cells,
                             const std::vector<std::vector<CellId>>& facets,
                             std::vector<Violation>& out) {
    const auto n = cells.size();
    std::vector<std::vector<CellId>> closures(n);
    for (CellId c = 0; c < n; ++c) closures[c] = closure_of(facets, c);
    std::vector<CellId> common;
    for (CellId a = 0; a < n; ++a) {
        if (cells[a].dim == 0) continue;
        for (CellId b = a + 1; b < n; ++b) {
            if (cells[b].dim == 0) continue;
            common.clear();
            std::set_intersection(closures[a].begin(), closures[a].end(), closures[b].begin(),
                                  closures[b].end(), std::back_inserter(common));
            if (common.empty()) continue;
            const auto top = *std::max_element(common.begin(), common.end(), [&](CellId x, CellId y) {
                return cells[x].dim < cells[y].dim;
            });
            if (closures[top] == common) continue;
            std::ostringstream os;
            os << "closures of " << cell_name(cells, a) << " and " << cell_name(cells, b)
               << " meet in {";
            for (std::size_t k = 0; k < common.size(); ++k)
                os << (k ? ", " : "") << cell_name(cells, common[k]);
            os << "}, which is not the closure of a single cell";
            out.push_back({"strict-regularity", {a, b}, os.str()});
        }
    }
}

}  // namespace

NonRegular::NonRegular(std::vector<Violation> violations)
    : std::runtime_error(describe(violations)), violations_(std::move(violations)) {}

std::vector<Violation> RegularComplex::validate(const std::vector<Cell>& cells,
                                                const std::vector<std::vector<CellId>>& facets) {
    std::vector<Violation> out;
    check_shape(cells, facets, out);
    if (!out.empty()) return out;
    check_edges(cells, facets, out);
    check_faces(cells, facets, out);
    check_strict_regularity(cells, facets, out);
    return out;
}

RegularComplex RegularComplex::build(std::string name, std::vector<Cell> cells,
                                     std::vector<std::vector<CellId>> facets) {
    if (auto violations = validate(cells, facets); !violations.empty())
        throw NonRegular(std::move(violations));

    RegularComplex k;
    k.name_ = std::move(name);
    k.cells_ = std::move(cells);
    k.facets_ = std::move(facets);
    k.cofacets_.resize(k.cells_.size());
    for (CellId c = 0; c < k.facets_.size(); ++c) {
        std::sort(k.facets_[c].begin(), k.facets_[c].end());
        for (CellId f : k.facets_[c]) k.cofacets_[f].push_back(c);
    }
    return k;
}

bool RegularComplex::is_facet(CellId lower, CellId upper) const {
    const auto& fs = facets_.at(upper);
    return std::binary_search(fs.begin(), fs.end(), lower);
}

std::vector<CellId> RegularComplex::cells_of_dim(int k) const {
    std::vector<CellId> out;
    for (const auto& c : cells_)
        if (c.dim == k) out.push_back(c.id);
    return out;
}

std::size_t RegularComplex::count_of_dim(int k) const {
    return static_cast<std::size_t>(
        std::count_if(cells_.begin(), cells_.end(), [k](const Cell& c) { return c.dim == k; }));
}

int RegularComplex::euler_characteristic() const {
    int chi = 0;
    for (const auto& c : cells_) chi += (c.dim % 2 == 0) ? 1 : -1;
    return chi;
}

std::array<std::size_t, 3> RegularComplex::betti_numbers_mod2() const {
    // Rank of the boundary map from dimension d to d-1, by elimination over Z/2.
    auto rank = [&](int d) {
        const auto rows = cells_of_dim(d);
        const auto cols = cells_of_dim(d - 1);
        std::vector<std::size_t> col_index(cells_.size());
        for (std::size_t i = 0; i < cols.size(); ++i) col_index[cols[i]] = i;
        std::vector<boost::dynamic_bitset<>> m;
        for (CellId r : rows) {
            boost::dynamic_bitset<> row(cols.size());
            for (CellId f : facets(r)) row.set(col_index[f]);
            m.push_back(row);
        }
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols.size() && r < m.size(); ++c) {
            auto pivot = std::find_if(m.begin() + r, m.end(), [c](const auto& row) { return row.test(c); });
            if (pivot == m.end()) continue;
            std::swap(*pivot, m[r]);
            for (std::size_t i = 0; i < m.size(); ++i)
                if (i != r && m[i].test(c)) m[i] ^= m[r];
            ++r;
        }
        return r;
    };
    const std::size_t r1 = rank(1), r2 = rank(2);
    return {count_of_dim(0) - r1, count_of_dim(1) - r1 - r2, count_of_dim(2) - r2};
}

std::optional<CellId> RegularComplex::find(std::string_view label) const {
    for (const auto& c : cells_)
        if (c.label == label) return c.id;
    return std::nullopt;
}

std::vector<CellId> RegularComplex::closure(CellId c) const {
    return closure_of(facets_, c);
}

std::vector<std::vector<CellId>> RegularComplex::boundary_circles() const {
    std::vector<CellId> boundary;
    for (CellId e : cells_of_dim(1))
        if (cofacets_[e].size() == 1) boundary.push_back(e);

    // Union-find over boundary edges joined through shared vertices.
    std::vector<std::size_t> parent(boundary.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto root = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::map<CellId, std::size_t> first_edge_at;
    for (std::size_t i = 0; i < boundary.size(); ++i) {
        for (CellId v : facets_[boundary[i]]) {
            auto [it, fresh] = first_edge_at.emplace(v, i);
            if (!fresh) parent[root(i)] = root(it->second);
        }
    }
    std::map<std::size_t, std::vector<CellId>> groups;
    for (std::size_t i = 0; i < boundary.size(); ++i) groups[root(i)].push_back(boundary[i]);
    std::vector<std::vector<CellId>> out;
    for (auto& [r, es] : groups) out.push_back(std::move(es));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace morsefield
