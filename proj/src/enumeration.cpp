#include "morsefield/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

namespace morsefield {

namespace {

constexpr CellId kFree = UINT32_MAX;

// Depth-first search over cells in id order. Each free cell is either left
// critical or paired with a higher-id free neighbour; pairs that would close
// a V-path are rejected as soon as they are added.
class FieldSearch {
public:
    FieldSearch(const RegularComplex& k, std::size_t budget)
        : k_(k), budget_(budget), partner_(k.size(), kFree), mark_(k.size(), 0) {}

    // Choices available at the first cell; each is an independent subtree.
    struct Branch {
        bool critical;
        Pair pair;
    };

    std::vector<Branch> first_branches() const {
        std::vector<Branch> out;
        if (k_.size() == 0) return out;
        out.push_back({true, {}});
        for (CellId x : neighbours(0)) out.push_back({false, oriented(0, x)});
        return out;
    }

    void run_branch(const Branch& b, std::vector<PairList>& sink, bool stop_at_first = false) {
        stop_at_first_ = stop_at_first;
        sink_ = &sink;
        if (k_.size() == 0) {
            if (budget_ == 0) sink.push_back({});
            return;
        }
        if (b.critical) {
            if (budget_ >= 1) descend(1, 1);
            return;
        }
        if (creates_cycle(b.pair)) return;
        link(b.pair);
        descend(1, 0);
        unlink(b.pair);
    }

    void run_all(std::vector<PairList>& sink, bool stop_at_first = false) {
        if (k_.size() == 0) {
            if (budget_ == 0) sink.push_back({});
            return;
        }
        for (const auto& b : first_branches()) {
            run_branch(b, sink, stop_at_first);
            if (stop_at_first && !sink.empty()) return;
        }
    }

private:
    std::vector<CellId> neighbours(CellId c) const {
        std::vector<CellId> out;
        for (CellId f : k_.facets(c))
            if (f > c && partner_[f] == kFree) out.push_back(f);
        for (CellId t : k_.cofacets(c))
            if (t > c && partner_[t] == kFree) out.push_back(t);
        std::sort(out.begin(), out.end());
        return out;
    }

    Pair oriented(CellId a, CellId b) const {
        return k_.dim(a) < k_.dim(b) ? Pair{a, b} : Pair{b, a};
    }

    void link(const Pair& p) {
        partner_[p.lower] = p.upper;
        partner_[p.upper] = p.lower;
        pairs_.push_back(p);
    }

    void unlink(const Pair& p) {
        partner_[p.lower] = kFree;
        partner_[p.upper] = kFree;
        pairs_.pop_back();
    }

    // Adding (s, t) creates arcs s -> s' for the other facets s' of t. A cycle
    // appears exactly when one of those s' already reaches s.
    bool creates_cycle(const Pair& p) {
        ++epoch_;
        stack_.clear();
        for (CellId f : k_.facets(p.upper))
            if (f != p.lower) stack_.push_back(f);
        while (!stack_.empty()) {
            const CellId x = stack_.back();
            stack_.pop_back();
            if (x == p.lower) return true;
            if (mark_[x] == epoch_) continue;
            mark_[x] = epoch_;
            const CellId up = partner_[x];
            if (up == kFree || k_.dim(up) != k_.dim(x) + 1) continue;
            for (CellId f : k_.facets(up))
                if (f != x) stack_.push_back(f);
        }
        return false;
    }

    void descend(CellId c, std::size_t critical) {
        if (stop_at_first_ && !sink_->empty()) return;
        const auto n = static_cast<CellId>(k_.size());
        while (c < n && partner_[c] != kFree) ++c;
        if (c == n) {
            if (critical == budget_) {
                auto found = pairs_;
                std::sort(found.begin(), found.end());
                sink_->push_back(std::move(found));
            }
            return;
        }
        // Every remaining free cell could still end up critical.
        std::size_t free_left = 0;
        for (CellId x = c; x < n; ++x)
            if (partner_[x] == kFree) ++free_left;
        if (critical + free_left < budget_) return;

        // Pairings first: a stop-at-first search then reaches low budgets quickly.
        for (CellId x : neighbours(c)) {
            const Pair p = oriented(c, x);
            if (creates_cycle(p)) continue;
            link(p);
            descend(c + 1, critical);
            unlink(p);
        }
        if (critical < budget_) descend(c + 1, critical + 1);
    }

    const RegularComplex& k_;
    std::size_t budget_;
    std::vector<CellId> partner_;
    std::vector<std::uint64_t> mark_;
    std::uint64_t epoch_ = 0;
    std::vector<CellId> stack_;
    PairList pairs_;
    std::vector<PairList>* sink_ = nullptr;
    bool stop_at_first_ = false;
};

std::vector<PairList> search(const RegularComplex& k, std::size_t budget, unsigned threads) {
    std::vector<PairList> found;
    if (threads <= 1 || k.size() == 0) {
        FieldSearch(k, budget).run_all(found);
    } else {
        const auto branches = FieldSearch(k, budget).first_branches();
        std::vector<std::vector<PairList>> per_branch(branches.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next++; i < branches.size(); i = next++)
                FieldSearch(k, budget).run_branch(branches[i], per_branch[i]);
        };
        std::vector<std::jthread> pool;
        const auto workers = std::min<std::size_t>(threads, branches.size());
        for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
        pool.clear();
        for (auto& part : per_branch)
            found.insert(found.end(), std::make_move_iterator(part.begin()),
                         std::make_move_iterator(part.end()));
    }
    std::sort(found.begin(), found.end());
    return found;
}

}  // namespace

std::size_t min_critical_count(const RegularComplex& k) {
    // No gradient field has fewer critical cells than the Z/2 Betti sum.
    const auto b = k.betti_numbers_mod2();
    for (std::size_t budget = b[0] + b[1] + b[2]; budget <= k.size(); ++budget) {
        std::vector<PairList> found;
        FieldSearch(k, budget).run_all(found, /*stop_at_first=*/true);
        if (!found.empty()) return budget;
    }
    return k.size();  // unreachable: the empty field leaves every cell critical
}

std::vector<VectorField> enumerate_gradient_fields(const RegularComplex& k,
                                                   std::size_t critical_count, unsigned threads) {
    std::vector<VectorField> out;
    for (auto& pairs : search(k, critical_count, threads))
        out.push_back(VectorField::make(k, std::move(pairs)));
    return out;
}

std::string family_signature(const RegularComplex& k, const AutomorphismGroup& group,
                             const PairList& pairs) {
    const auto canon = canonical_form(group, pairs);
    if (canon.empty()) return "-";
    std::string out;
    for (const auto& p : canon) {
        if (!out.empty()) out += ' ';
        out += k.label(p.lower) + k.label(p.upper);
    }
    return out;
}

EnumerationReport enumerate_classes(const RegularComplex& k, std::size_t critical_count,
                                    unsigned threads) {
    const auto group = automorphisms(k);
    const auto fields = enumerate_gradient_fields(k, critical_count, threads);

    EnumerationReport r;
    r.complex = k.name();
    r.critical_count = critical_count;
    r.optimal = critical_count == min_critical_count(k);
    r.group_order = group.order();
    r.raw_count = fields.size();

    std::set<PairList> classes;
    for (const auto& v : fields) classes.insert(canonical_form(group, v));
    r.representatives.assign(classes.begin(), classes.end());
    r.class_count = r.representatives.size();
    r.burnside_count = burnside_class_count(group, fields);

    for (const auto& rep : r.representatives) {
        const auto v = VectorField::make(k, rep);
        PairList face_pairs;
        for (const auto& p : rep)
            if (k.dim(p.upper) == 2) face_pairs.push_back(p);
        ++r.family_partition[family_signature(k, group, face_pairs)];

        std::size_t covered = 0;
        for (CellId face : k.cells_of_dim(2)) {
            if (v.is_matched(face)) continue;
            for (CellId e : k.facets(face)) {
                const auto mate = v.partner(e);
                if (mate && k.dim(*mate) == 2) ++covered;
            }
        }
        ++r.critical_face_partition[covered];
    }
    return r;
}

EnumerationReport enumerate_optimal_classes(const RegularComplex& k, unsigned threads) {
    return enumerate_classes(k, min_critical_count(k), threads);
}

const std::vector<ClaimedCount>& claimed_counts() {
    static const std::vector<ClaimedCount> claims{
        {"disk", 2, ""},
        {"sphere", 13, ""},
        {"cylinder", 104, "listing index ranges overlap (40-44 and 44-49)"},
        {"mobius", 102, "claim is stated for 'the cylinder'; attributed to the Mobius band"},
    };
    return claims;
}

std::vector<AuditRow> audit_against_claims(const std::vector<EnumerationReport>& reports) {
    std::vector<AuditRow> rows;
    for (const auto& r : reports) {
        if (!r.optimal) continue;
        const auto& claims = claimed_counts();
        const auto it = std::find_if(claims.begin(), claims.end(),
                                     [&](const ClaimedCount& c) { return c.complex == r.complex; });
        if (it == claims.end()) continue;
        rows.push_back({r.complex, it->value, r.class_count, it->value == r.class_count, it->note});
    }
    return rows;
}

}  // namespace morsefield
