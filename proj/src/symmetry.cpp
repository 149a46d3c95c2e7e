#include "morsefield/symmetry.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace morsefield {

CellPermutation CellPermutation::identity(std::size_t n) {
    CellPermutation g;
    g.image.resize(n);
    for (CellId c = 0; c < n; ++c) g.image[c] = c;
    return g;
}

bool CellPermutation::is_identity() const {
    for (CellId c = 0; c < image.size(); ++c)
        if (image[c] != c) return false;
    return true;
}

CellPermutation CellPermutation::inverse() const {
    CellPermutation g;
    g.image.resize(image.size());
    for (CellId c = 0; c < image.size(); ++c) g.image[image[c]] = c;
    return g;
}

std::vector<std::size_t> CellPermutation::cycle_type() const {
    std::vector<bool> seen(image.size(), false);
    std::vector<std::size_t> lengths;
    for (CellId c = 0; c < image.size(); ++c) {
        if (seen[c]) continue;
        std::size_t len = 0;
        for (CellId x = c; !seen[x]; x = image[x]) {
            seen[x] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    return lengths;
}

CellPermutation compose(const CellPermutation& g, const CellPermutation& h) {
    CellPermutation gh;
    gh.image.resize(h.image.size());
    for (CellId c = 0; c < h.image.size(); ++c) gh.image[c] = g.image[h.image[c]];
    return gh;
}

bool is_automorphism(const RegularComplex& k, const CellPermutation& g) {
    const auto n = k.size();
    if (g.image.size() != n) return false;
    std::vector<bool> hit(n, false);
    for (CellId c = 0; c < n; ++c) {
        if (g(c) >= n || hit[g(c)] || k.dim(g(c)) != k.dim(c)) return false;
        hit[g(c)] = true;
    }
    for (CellId c = 0; c < n; ++c) {
        if (k.facets(c).size() != k.facets(g(c)).size()) return false;
        for (CellId f : k.facets(c))
            if (!k.is_facet(g(f), g(c))) return false;
    }
    return true;
}

AutomorphismGroup::AutomorphismGroup(std::vector<CellPermutation> elements)
    : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
}

std::vector<CellPermutation> AutomorphismGroup::stabilizer(CellId c) const {
    std::vector<CellPermutation> out;
    for (const auto& g : elements_)
        if (g(c) == c) out.push_back(g);
    return out;
}

std::vector<CellId> AutomorphismGroup::orbit(CellId c) const {
    std::set<CellId> images;
    for (const auto& g : elements_) images.insert(g(c));
    return {images.begin(), images.end()};
}

std::map<std::vector<std::size_t>, std::size_t> AutomorphismGroup::cycle_type_counts() const {
    std::map<std::vector<std::size_t>, std::size_t> out;
    for (const auto& g : elements_) ++out[g.cycle_type()];
    return out;
}

AutomorphismGroup automorphisms(const RegularComplex& k) {
    const auto n = k.size();
    // 2-cells first, then their faces breadth-first, then any leftovers.
    std::vector<CellId> order;
    std::vector<bool> queued(n, false);
    for (int d = 2; d >= 0; --d) {
        for (CellId c : k.cells_of_dim(d)) {
            if (queued[c]) continue;
            queued[c] = true;
            order.push_back(c);
            for (std::size_t i = order.size() - 1; i < order.size(); ++i) {
                for (CellId f : k.facets(order[i])) {
                    if (!queued[f]) {
                        queued[f] = true;
                        order.push_back(f);
                    }
                }
            }
        }
    }

    std::vector<std::vector<bool>> incident(n, std::vector<bool>(n, false));
    for (CellId c = 0; c < n; ++c)
        for (CellId f : k.facets(c)) incident[c][f] = true;

    std::vector<CellId> image(n, 0);
    std::vector<bool> used(n, false);
    std::vector<CellPermutation> found;
    std::function<void(std::size_t)> extend = [&](std::size_t depth) {
        if (depth == n) {
            found.push_back({image});
            return;
        }
        const CellId c = order[depth];
        for (CellId cand = 0; cand < n; ++cand) {
            if (used[cand] || k.dim(cand) != k.dim(c) ||
                k.facets(cand).size() != k.facets(c).size() ||
                k.cofacets(cand).size() != k.cofacets(c).size())
                continue;
            bool consistent = true;
            for (std::size_t i = 0; i < depth && consistent; ++i) {
                const CellId d = order[i];
                consistent = incident[c][d] == incident[cand][image[d]] &&
                             incident[d][c] == incident[image[d]][cand];
            }
            if (!consistent) continue;
            image[c] = cand;
            used[cand] = true;
            extend(depth + 1);
            used[cand] = false;
        }
    };
    extend(0);
    return AutomorphismGroup(std::move(found));
}

PairList apply(const CellPermutation& g, const PairList& pairs) {
    PairList out;
    out.reserve(pairs.size());
    for (const auto& p : pairs) out.push_back({g(p.lower), g(p.upper)});
    std::sort(out.begin(), out.end());
    return out;
}

VectorField apply(const RegularComplex& k, const CellPermutation& g, const VectorField& v) {
    return VectorField::make(k, apply(g, v.pairs()));
}

bool are_isomorphic_fields(const AutomorphismGroup& group, const VectorField& a,
                           const VectorField& b) {
    if (a.size() != b.size()) return false;
    return std::any_of(group.elements().begin(), group.elements().end(),
                       [&](const CellPermutation& g) { return apply(g, a.pairs()) == b.pairs(); });
}

bool are_isomorphic_fields(const RegularComplex& k, const VectorField& a, const VectorField& b) {
    return are_isomorphic_fields(automorphisms(k), a, b);
}

PairList canonical_form(const AutomorphismGroup& group, const PairList& pairs) {
    PairList best = pairs;
    std::sort(best.begin(), best.end());
    for (const auto& g : group.elements()) {
        auto img = apply(g, pairs);
        if (img < best) best = std::move(img);
    }
    return best;
}

PairList canonical_form(const AutomorphismGroup& group, const VectorField& v) {
    return canonical_form(group, v.pairs());
}

std::size_t burnside_class_count(const AutomorphismGroup& group,
                                 const std::vector<VectorField>& fields) {
    std::set<PairList> members;
    for (const auto& v : fields) members.insert(v.pairs());
    std::size_t fixed = 0;
    for (const auto& g : group.elements()) {
        for (const auto& v : fields) {
            const auto img = apply(g, v.pairs());
            if (img == v.pairs()) {
                ++fixed;
            } else if (!members.count(img)) {
                throw NotGroupClosed("field list is not closed under the automorphism group");
            }
        }
    }
    if (group.order() == 0 || fixed % group.order() != 0)
        throw NotGroupClosed("fixed-point average " + std::to_string(fixed) + "/" +
                             std::to_string(group.order()) + " is not an integer");
    return fixed / group.order();
}

}  // namespace morsefield
