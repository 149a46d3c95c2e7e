#include "doctest.h"

#include <set>

#include "morsefield/enumeration.hpp"
#include "oracles.hpp"

using namespace morsefield;

namespace {

VectorField field(const RegularComplex& k, std::initializer_list<std::pair<const char*, const char*>> ps) {
    PairList pairs;
    for (auto [l, u] : ps) pairs.push_back({*k.find(l), *k.find(u)});
    return VectorField::make(k, pairs);
}

std::vector<oracle::RawPairs> as_raw(const std::vector<VectorField>& fields) {
    std::vector<oracle::RawPairs> out;
    for (const auto& v : fields) {
        oracle::RawPairs r;
        for (const auto& p : v.pairs()) r.push_back({p.lower, p.upper});
        out.push_back(r);
    }
    return out;
}

}  // namespace

TEST_CASE("minimal critical counts") {
    CHECK(min_critical_count(builtin("disk")) == 1);
    CHECK(min_critical_count(builtin("sphere")) == 2);
    CHECK(min_critical_count(builtin("cylinder")) == 2);
    CHECK(min_critical_count(builtin("mobius")) == 2);
    CHECK(min_critical_count(RegularComplex::build("point", {{0, 0, "v"}}, {{}})) == 1);
}

TEST_CASE("no field has fewer critical cells than the minimum") {
    for (const char* name : {"disk", "sphere", "cylinder", "mobius"}) {
        CAPTURE(name);
        const auto k = builtin(name);
        const auto m = min_critical_count(k);
        for (std::size_t c = 0; c < m; ++c) {
            CHECK(enumerate_gradient_fields(k, c).empty());
            CHECK(oracle::gradient_fields(k, c).empty());
        }
        CHECK_FALSE(enumerate_gradient_fields(k, m).empty());
    }
}

TEST_CASE("torus minimum is four") {
    CHECK(min_critical_count(builtin("torus")) == 4);
}

TEST_CASE("cylinder optimum is one critical vertex and one critical edge") {
    const auto k = builtin("cylinder");
    for (const auto& v : enumerate_gradient_fields(k, 2)) {
        const auto crit = critical_cells(k, v);
        REQUIRE(crit.size() == 2);
        CHECK(k.dim(crit[0]) == 0);
        CHECK(k.dim(crit[1]) == 1);
    }
}

TEST_CASE("raw enumeration matches the brute-force matcher") {
    const auto disk = builtin("disk");
    CHECK(as_raw(enumerate_gradient_fields(disk, 1)) == oracle::gradient_fields(disk, 1));
    CHECK(enumerate_gradient_fields(disk, 1).size() == 9);
    for (std::size_t c = 0; c <= disk.size(); ++c)
        CHECK(as_raw(enumerate_gradient_fields(disk, c)) == oracle::gradient_fields(disk, c));

    const auto all = enumerate_gradient_fields(disk, 7);
    REQUIRE(all.size() == 1);
    CHECK(all[0].size() == 0);

    for (const char* name : {"sphere", "cylinder", "mobius"}) {
        CAPTURE(name);
        const auto k = builtin(name);
        CHECK(as_raw(enumerate_gradient_fields(k, 2)) == oracle::gradient_fields(k, 2));
    }
}

TEST_CASE("enumeration is independent of the thread count") {
    for (const char* name : {"disk", "sphere", "cylinder", "mobius"}) {
        CAPTURE(name);
        const auto k = builtin(name);
        const auto c = min_critical_count(k);
        const auto serial = enumerate_gradient_fields(k, c);
        for (unsigned threads : {2u, 3u, 8u}) CHECK(enumerate_gradient_fields(k, c, threads) == serial);
    }
}

TEST_CASE("every enumerated field is a valid gradient field with the requested count") {
    for (const char* name : {"disk", "sphere", "cylinder", "mobius"}) {
        const auto k = builtin(name);
        const auto c = min_critical_count(k);
        for (const auto& v : enumerate_gradient_fields(k, c)) {
            CHECK(is_gradient(k, v));
            CHECK(critical_cells(k, v).size() == c);
            CHECK(VectorField::make(k, v.pairs()) == v);
        }
    }
}

TEST_CASE("raw lists are closed under the automorphism group") {
    for (const char* name : {"disk", "sphere", "cylinder", "mobius"}) {
        CAPTURE(name);
        const auto k = builtin(name);
        const auto group = automorphisms(k);
        const auto fields = enumerate_gradient_fields(k, min_critical_count(k));
        std::set<PairList> members;
        for (const auto& v : fields) members.insert(v.pairs());
        for (const auto& g : group.elements())
            for (const auto& v : fields) CHECK(members.count(apply(g, v.pairs())) == 1);
    }
}

TEST_CASE("disk and sphere class reports") {
    const auto disk = enumerate_optimal_classes(builtin("disk"));
    CHECK(disk.optimal);
    CHECK(disk.critical_count == 1);
    CHECK(disk.raw_count == 9);
    CHECK(disk.class_count == 2);
    CHECK(disk.burnside_count == 2);
    CHECK(disk.group_order == 6);

    const auto sphere = enumerate_optimal_classes(builtin("sphere"));
    CHECK(sphere.class_count == 13);
    CHECK(sphere.burnside_count == 13);
    CHECK(sphere.critical_face_partition == std::map<std::size_t, std::size_t>{{1, 7}, {2, 4}, {3, 2}});
    std::size_t total = 0;
    for (const auto& [sig, n] : sphere.family_partition) total += n;
    CHECK(total == 13);
}

TEST_CASE("sphere: the critical face always has an edge paired with a 2-cell") {
    const auto k = builtin("sphere");
    for (const auto& v : enumerate_gradient_fields(k, 2)) {
        const auto crit = critical_cells(k, v);
        REQUIRE(k.dim(crit[1]) == 2);
        bool covered = false;
        for (CellId e : k.facets(crit[1])) {
            const auto mate = v.partner(e);
            covered = covered || (mate && k.dim(*mate) == 2);
        }
        CHECK(covered);
    }
}

TEST_CASE("the listed disk and sphere fields are distinct optimal classes") {
    const auto disk = builtin("disk");
    const auto d1 = field(disk, {{"1", "a"}, {"2", "b"}, {"c", "A"}});
    const auto d2 = field(disk, {{"0", "a"}, {"2", "b"}, {"c", "A"}});
    CHECK(is_gradient(disk, d1));
    CHECK(is_gradient(disk, d2));
    CHECK_FALSE(are_isomorphic_fields(disk, d1, d2));

    const auto k = builtin("sphere");
    const std::vector<VectorField> first_case{
        field(k, {{"2", "b"}, {"1", "d"}, {"3", "f"}, {"e", "A"}, {"a", "D"}, {"c", "C"}}),
        field(k, {{"0", "b"}, {"2", "d"}, {"3", "f"}, {"e", "A"}, {"a", "D"}, {"c", "C"}}),
        field(k, {{"0", "b"}, {"1", "d"}, {"3", "f"}, {"e", "A"}, {"a", "D"}, {"c", "C"}}),
        field(k, {{"1", "d"}, {"2", "f"}, {"3", "c"}, {"e", "A"}, {"a", "D"}, {"b", "C"}}),
        field(k, {{"0", "c"}, {"2", "d"}, {"3", "f"}, {"e", "A"}, {"a", "D"}, {"b", "C"}}),
        field(k, {{"0", "c"}, {"1", "d"}, {"3", "f"}, {"e", "A"}, {"a", "D"}, {"b", "C"}}),
        field(k, {{"0", "c"}, {"1", "d"}, {"2", "f"}, {"e", "A"}, {"a", "D"}, {"b", "C"}}),
    };
    const auto group = automorphisms(k);
    std::set<PairList> forms;
    for (const auto& v : first_case) {
        CHECK(is_gradient(k, v));
        CHECK(critical_cells(k, v).size() == 2);
        forms.insert(canonical_form(group, v));
    }
    CHECK(forms.size() == 7);
}

TEST_CASE("cylinder and mobius reports are self-consistent") {
    for (const char* name : {"cylinder", "mobius"}) {
        CAPTURE(name);
        const auto r = enumerate_optimal_classes(builtin(name));
        CHECK(r.class_count == r.burnside_count);
        CHECK(r.class_count == r.representatives.size());
        CHECK(r.raw_count >= r.class_count);
        std::size_t total = 0;
        for (const auto& [sig, n] : r.family_partition) total += n;
        CHECK(total == r.class_count);
    }
}

TEST_CASE("audit ledger") {
    CHECK(audit_against_claims({}).empty());

    std::vector<EnumerationReport> reports;
    for (const auto& [name, value, note] : claimed_counts()) {
        EnumerationReport r;
        r.complex = name;
        r.optimal = true;
        r.class_count = value;
        reports.push_back(r);
    }
    const auto rows = audit_against_claims(reports);
    REQUIRE(rows.size() == 4);
    for (const auto& row : rows) CHECK(row.match);

    EnumerationReport off;
    off.complex = "cylinder";
    off.optimal = true;
    off.class_count = 96;
    const auto mismatch = audit_against_claims({off});
    REQUIRE(mismatch.size() == 1);
    CHECK_FALSE(mismatch[0].match);
    CHECK(mismatch[0].claimed == 104);
    CHECK(mismatch[0].computed == 96);

    EnumerationReport torus;
    torus.complex = "torus";
    torus.optimal = true;
    CHECK(audit_against_claims({torus}).empty());

    EnumerationReport not_optimal = off;
    not_optimal.optimal = false;
    CHECK(audit_against_claims({not_optimal}).empty());
}

TEST_CASE("claimed counts") {
    std::map<std::string, std::size_t> claims;
    for (const auto& c : claimed_counts()) claims[c.complex] = c.value;
    CHECK(claims == std::map<std::string, std::size_t>{{"cylinder", 104}, {"disk", 2}, {"mobius", 102}, {"sphere", 13}});
}
