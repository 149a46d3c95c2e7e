#include <array>
#include <map>
#include <string>
#include <vector>

#include "morsefield/cw_complex.hpp"

namespace morsefield {

namespace {

// Collects cells by label; ids are assigned in insertion order.
class Builder {
public:
    void vertex(const std::string& label) { add(label, 0, {}); }
    void edge(const std::string& label, const std::string& u, const std::string& v) {
        add(label, 1, {u, v});
    }
    void face(const std::string& label, std::vector<std::string> edges) {
        add(label, 2, std::move(edges));
    }

    RegularComplex finish(std::string name) {
        return RegularComplex::build(std::move(name), std::move(cells_), std::move(facets_));
    }

private:
    void add(const std::string& label, int dim, const std::vector<std::string>& faces) {
        const auto id = static_cast<CellId>(cells_.size());
        cells_.push_back({id, dim, label});
        std::vector<CellId> ids;
        for (const auto& f : faces) ids.push_back(index_.at(f));
        facets_.push_back(std::move(ids));
        index_[label] = id;
    }

    std::vector<Cell> cells_;
    std::vector<std::vector<CellId>> facets_;
    std::map<std::string, CellId> index_;
};

// Triangle: vertices 0,1,2; a={0,1}, b={1,2}, c={0,2}; face A.
RegularComplex make_disk() {
    Builder b;
    for (auto v : {"0", "1", "2"}) b.vertex(v);
    b.edge("a", "0", "1");
    b.edge("b", "1", "2");
    b.edge("c", "0", "2");
    b.face("A", {"a", "b", "c"});
    return b.finish("disk");
}

// Boundary of the tetrahedron on 0..3. Edges a..f are the vertex pairs in
// lexicographic order. A, B, C, D are opposite vertices 2, 0, 1, 3, so that
// B is bounded by d, e, f.
RegularComplex make_sphere() {
    Builder b;
    for (auto v : {"0", "1", "2", "3"}) b.vertex(v);
    b.edge("a", "0", "1");
    b.edge("b", "0", "2");
    b.edge("c", "0", "3");
    b.edge("d", "1", "2");
    b.edge("e", "1", "3");
    b.edge("f", "2", "3");
    b.face("A", {"a", "c", "e"});  // {0,1,3}
    b.face("B", {"d", "e", "f"});  // {1,2,3}
    b.face("C", {"b", "c", "f"});  // {0,2,3}
    b.face("D", {"a", "b", "d"});  // {0,1,2}
    return b.finish("sphere");
}

// Three quadrilaterals in a ring. Rows {0,1,2} and {3,4,5}; verticals
// a={0,3}, b={1,4}, c={2,5}; row edges d,e,f on top and g,h,i on the bottom.
// The Möbius variant closes the strip with the rows exchanged.
RegularComplex make_strip(bool twisted) {
    Builder b;
    for (auto v : {"0", "1", "2", "3", "4", "5"}) b.vertex(v);
    b.edge("a", "0", "3");
    b.edge("b", "1", "4");
    b.edge("c", "2", "5");
    b.edge("d", "0", "1");
    b.edge("e", "1", "2");
    if (twisted) {
        b.edge("f", "2", "3");
    } else {
        b.edge("f", "2", "0");
    }
    b.edge("g", "3", "4");
    b.edge("h", "4", "5");
    if (twisted) {
        b.edge("i", "5", "0");
    } else {
        b.edge("i", "5", "3");
    }
    b.face("A", {"d", "b", "g", "a"});
    b.face("B", {"e", "c", "h", "b"});
    b.face("C", {"f", "a", "i", "c"});
    return b.finish(twisted ? "mobius" : "cylinder");
}

// 3x3 square grid with opposite sides identified. Vertex r*3+c sits at row r,
// column c; h<k> runs right from vertex k, v<k> runs down from vertex k, and
// F<k> is the square whose top-left corner is vertex k.
RegularComplex make_torus() {
    constexpr int n = 3;
    auto at = [](int r, int c) { return ((r + n) % n) * n + (c + n) % n; };
    auto s = [](int k) { return std::to_string(k); };
    Builder b;
    for (int k = 0; k < n * n; ++k) b.vertex(s(k));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) b.edge("h" + s(at(r, c)), s(at(r, c)), s(at(r, c + 1)));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) b.edge("v" + s(at(r, c)), s(at(r, c)), s(at(r + 1, c)));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            const int k = at(r, c);
            b.face("F" + s(k), {"h" + s(k), "v" + s(at(r, c + 1)), "h" + s(at(r + 1, c)), "v" + s(k)});
        }
    }
    return b.finish("torus");
}

}  // namespace

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names{"disk", "sphere", "cylinder", "mobius", "torus"};
    return names;
}

RegularComplex builtin(std::string_view name) {
    if (name == "disk") return make_disk();
    if (name == "sphere") return make_sphere();
    if (name == "cylinder") return make_strip(false);
    if (name == "mobius") return make_strip(true);
    if (name == "torus") return make_torus();
    throw UnknownBuiltin(std::string(name));
}

}  // namespace morsefield
