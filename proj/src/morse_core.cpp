#include "morsefield/morse_core.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <sstream>

namespace morsefield {

namespace {

std::string describe(const std::vector<FieldViolation>& violations) {
    std::ostringstream os;
    os << "invalid vector field:";
    for (const auto& v : violations) os << "\n  " << v.message;
    return os.str();
}

std::string pair_text(const RegularComplex& k, const Pair& p) {
    auto name = [&](CellId c) {
        return c < k.size() ? k.label(c) : "#" + std::to_string(c);
    };
    return "(" + name(p.lower) + ", " + name(p.upper) + ")";
}

}  // namespace

InvalidField::InvalidField(std::vector<FieldViolation> violations)
    : std::invalid_argument(describe(violations)), violations_(std::move(violations)) {}

VectorField VectorField::make(const RegularComplex& k, PairList pairs) {
    std::vector<FieldViolation> violations;
    VectorField v = empty(k.size());
    for (const auto& p : pairs) {
        if (p.lower >= k.size() || p.upper >= k.size() || !k.is_facet(p.lower, p.upper)) {
            violations.push_back({FieldViolation::Kind::InvalidPair, p,
                                  "pair " + pair_text(k, p) + ": lower cell is not a facet of upper cell"});
            continue;
        }
        bool reused = false;
        for (CellId c : {p.lower, p.upper}) {
            if (v.partner_[c] != kUnmatched) {
                violations.push_back({FieldViolation::Kind::CellReused, p,
                                      "pair " + pair_text(k, p) + ": cell " + k.label(c) +
                                          " already belongs to another pair"});
                reused = true;
            }
        }
        if (reused) continue;
        v.partner_[p.lower] = p.upper;
        v.partner_[p.upper] = p.lower;
        v.is_lower_[p.lower] = true;
        v.pairs_.push_back(p);
    }
    if (!violations.empty()) throw InvalidField(std::move(violations));
    std::sort(v.pairs_.begin(), v.pairs_.end());
    return v;
}

VectorField VectorField::empty(std::size_t cell_count) {
    VectorField v;
    v.partner_.assign(cell_count, kUnmatched);
    v.is_lower_.assign(cell_count, false);
    return v;
}

std::optional<CellId> VectorField::partner(CellId c) const {
    const CellId p = partner_.at(c);
    if (p == kUnmatched) return std::nullopt;
    return p;
}

std::optional<CellId> VectorField::upper_of(CellId c) const {
    if (!is_lower_.at(c)) return std::nullopt;
    return partner_[c];
}

std::vector<CellId> critical_cells(const RegularComplex& k, const VectorField& v) {
    std::vector<CellId> out;
    for (CellId c = 0; c < k.size(); ++c)
        if (!v.is_matched(c)) out.push_back(c);
    return out;
}

GradientCheck check_gradient(const RegularComplex& k, const VectorField& v) {
    enum : char { White, Gray, Black };
    std::vector<char> color(k.size(), White);

    // Iterative DFS over lower cells of pairs; a gray hit closes a V-path.
    struct Frame {
        CellId cell;
        std::size_t next;
    };
    for (const auto& root : v.pairs()) {
        if (color[root.lower] != White) continue;
        std::vector<Frame> stack{{root.lower, 0}};
        color[root.lower] = Gray;
        while (!stack.empty()) {
            auto& top = stack.back();
            const auto upper = v.upper_of(top.cell);
            const auto fs = upper ? k.facets(*upper) : std::span<const CellId>{};
            if (top.next == fs.size()) {
                color[top.cell] = Black;
                stack.pop_back();
                continue;
            }
            const CellId nxt = fs[top.next++];
            if (nxt == top.cell || !v.upper_of(nxt)) continue;
            if (color[nxt] == Gray) {
                GradientCheck result{false, {}};
                auto it = std::find_if(stack.begin(), stack.end(),
                                       [&](const Frame& f) { return f.cell == nxt; });
                for (; it != stack.end(); ++it) {
                    result.cycle.push_back(it->cell);
                    result.cycle.push_back(*v.upper_of(it->cell));
                }
                result.cycle.push_back(nxt);
                return result;
            }
            if (color[nxt] == White) {
                color[nxt] = Gray;
                stack.push_back({nxt, 0});
            }
        }
    }
    return {};
}

bool is_gradient(const RegularComplex& k, const VectorField& v) {
    return check_gradient(k, v).gradient;
}

std::vector<VPath> v_paths(const RegularComplex& k, const VectorField& v, CellId start, CellId end,
                           std::size_t max_steps) {
    if (k.dim(start) != k.dim(end))
        throw DimensionMismatch("V-path endpoints " + k.label(start) + " and " + k.label(end) +
                                " have different dimensions");
    const bool bounded = !is_gradient(k, v);
    std::vector<VPath> out;
    std::vector<CellId> path{start};
    std::function<void(CellId, std::size_t)> walk = [&](CellId s, std::size_t steps) {
        if (s == end) out.push_back({path});
        const auto upper = v.upper_of(s);
        if (!upper || (bounded && steps >= max_steps)) return;
        for (CellId next : k.facets(*upper)) {
            if (next == s) continue;
            path.push_back(*upper);
            path.push_back(next);
            walk(next, steps + 1);
            path.resize(path.size() - 2);
        }
    };
    walk(start, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t count_connecting_paths(const RegularComplex& k, const VectorField& v,
                                     CellId upper_critical, CellId lower_critical) {
    if (k.dim(upper_critical) != k.dim(lower_critical) + 1)
        throw DimensionMismatch("connecting paths need dim(" + k.label(upper_critical) +
                                ") = dim(" + k.label(lower_critical) + ") + 1");
    for (CellId c : {upper_critical, lower_critical})
        if (v.is_matched(c)) throw NotCritical("cell " + k.label(c) + " is not critical");
    if (!is_gradient(k, v)) throw NotGradient("field has a closed V-path");

    // Paths from s to the target; the field is acyclic so memoization is exact.
    std::vector<std::optional<std::uint64_t>> memo(k.size());
    std::function<std::uint64_t(CellId)> count = [&](CellId s) -> std::uint64_t {
        if (memo[s]) return *memo[s];
        std::uint64_t total = (s == lower_critical) ? 1 : 0;
        if (const auto upper = v.upper_of(s)) {
            for (CellId next : k.facets(*upper))
                if (next != s) total += count(next);
        }
        memo[s] = total;
        return total;
    };
    std::uint64_t total = 0;
    for (CellId s : k.facets(upper_critical)) total += count(s);
    return total;
}

int wrong_direction_count(const RegularComplex& k, const MorseFunction& f, CellId c) {
    const auto& val = f.values.at(c);
    int n = 0;
    for (CellId s : k.facets(c))
        if (f.values[s] >= val) ++n;
    for (CellId t : k.cofacets(c))
        if (f.values[t] <= val) ++n;
    return n;
}

namespace {
void require_total(const RegularComplex& k, const MorseFunction& f) {
    if (f.values.size() != k.size())
        throw FunctionNotTotal("function has " + std::to_string(f.values.size()) +
                               " values for a complex with " + std::to_string(k.size()) + " cells");
}
}  // namespace

bool is_discrete_morse(const RegularComplex& k, const MorseFunction& f) {
    require_total(k, f);
    for (CellId c = 0; c < k.size(); ++c)
        if (wrong_direction_count(k, f, c) > 1) return false;
    return true;
}

std::vector<CellId> morse_critical_cells(const RegularComplex& k, const MorseFunction& f) {
    require_total(k, f);
    std::vector<CellId> out;
    for (CellId c = 0; c < k.size(); ++c)
        if (wrong_direction_count(k, f, c) == 0) out.push_back(c);
    return out;
}

bool is_simple(const RegularComplex& k, const MorseFunction& f) {
    std::set<Rational> seen;
    for (CellId c : morse_critical_cells(k, f))
        if (!seen.insert(f.values[c]).second) return false;
    return true;
}

VectorField gradient_field_of(const RegularComplex& k, const MorseFunction& f) {
    if (!is_discrete_morse(k, f)) throw NotMorse("function is not a discrete Morse function");
    PairList pairs;
    for (CellId t = 0; t < k.size(); ++t)
        for (CellId s : k.facets(t))
            if (f.values[s] >= f.values[t]) pairs.push_back({s, t});
    return VectorField::make(k, std::move(pairs));
}

MorseFunction morse_function_from_field(const RegularComplex& k, const VectorField& v) {
    if (const auto check = check_gradient(k, v); !check.gradient)
        throw NotGradient("field has a closed V-path through " + k.label(check.cycle.front()));

    // Modified Hasse digraph: arc x -> y means f(x) < f(y). Unmatched
    // incidences point up in dimension; matched pairs point down.
    const auto n = k.size();
    std::vector<std::vector<CellId>> out(n);
    std::vector<std::size_t> indegree(n, 0);
    for (CellId t = 0; t < n; ++t) {
        for (CellId s : k.facets(t)) {
            if (v.upper_of(s) == t) {
                out[t].push_back(s);
                ++indegree[s];
            } else {
                out[s].push_back(t);
                ++indegree[t];
            }
        }
    }
    std::priority_queue<CellId, std::vector<CellId>, std::greater<>> ready;
    for (CellId c = 0; c < n; ++c)
        if (indegree[c] == 0) ready.push(c);
    MorseFunction f;
    f.values.assign(n, Rational(0));
    std::int64_t rank = 0;
    while (!ready.empty()) {
        const CellId c = ready.top();
        ready.pop();
        f.values[c] = Rational(rank++);
        for (CellId d : out[c])
            if (--indegree[d] == 0) ready.push(d);
    }
    if (rank != static_cast<std::int64_t>(n))
        throw std::logic_error("modified Hasse diagram of a gradient field has a cycle");
    return f;
}

}  // namespace morsefield
