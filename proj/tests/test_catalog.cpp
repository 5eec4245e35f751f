#include "symref/catalog.hpp"
#include "symref/errors.hpp"

#include <doctest.h>

#include <set>

using namespace symref;

namespace {

// Entries whose closure is too large for a unit test run (E6 is 51840 elements of 12x12).
bool heavy(const CatalogEntry& e) { return e.expected_order > 5000; }

}  // namespace

TEST_CASE("every catalog entry matches its recorded order, reflection count and verdict") {
    std::set<std::string> names;
    for (const auto& entry : catalog_entries()) {
        CAPTURE(entry.name);
        CHECK(names.insert(entry.name).second);
        if (heavy(entry)) continue;
        const GroupSpec spec = entry.spec();
        const auto g = closure(spec);
        CHECK(g.order() == entry.expected_order);
        const auto c = census(g);
        if (entry.expected_reflections) CHECK(c.symplectic_reflections.size() == *entry.expected_reflections);
        if (entry.expected_verdict) CHECK(verdict(g).kind == *entry.expected_verdict);
        const ExactMatrix omega = *spec.form();
        for (const auto& x : g.elements()) CHECK(is_symplectic(x, omega));
    }
    CHECK(names.size() == catalog_entries().size());
}

TEST_CASE("symmetric group examples") {
    const std::vector<std::pair<int, std::size_t>> cases{{2, 2}, {3, 6}, {4, 24}};
    for (auto [n, order] : cases) {
        const auto g = build_symmetric_on_c2n(n);
        CHECK(g.order() == order);
        CHECK(census(g).symplectic_reflections.size() == static_cast<std::size_t>(n * (n - 1) / 2));
        CHECK(verdict(g).kind == VerdictKind::NecessaryConditionHolds);
    }
    CHECK_THROWS_AS(symmetric_on_c2n_spec(1), ParameterOutOfRange);
    CHECK_THROWS_AS(symmetric_on_c2n_spec(6), ParameterOutOfRange);
}

TEST_CASE("Weyl examples") {
    const auto a2 = build_weyl_doubled(WeylType::A, 2);
    CHECK(a2.order() == 6);
    CHECK(a2.dimension() == 4);
    CHECK(census(a2).symplectic_reflections.size() == 3);
    const auto b2 = build_weyl_doubled(WeylType::B, 2);
    CHECK(b2.order() == 8);
    CHECK(census(b2).symplectic_reflections.size() == 4);
    const auto g2 = build_weyl_doubled(WeylType::G, 2);
    CHECK(g2.order() == 12);
    CHECK(census(g2).symplectic_reflections.size() == 6);
    CHECK(verdict(g2).kind == VerdictKind::NecessaryConditionHolds);
    CHECK(g2.conductor() == 1);
}

TEST_CASE("Weyl bounds and parameter checks") {
    CHECK_THROWS_AS(build_weyl_doubled(WeylType::E, 7), OrderBoundExceeded);
    CHECK_THROWS_AS(build_weyl_doubled(WeylType::E, 8), OrderBoundExceeded);
    CHECK(weyl_group_order(WeylType::E, 8) == 696729600);
    CHECK_THROWS_AS(weyl_group_order(WeylType::D, 3), ParameterOutOfRange);
    CHECK_THROWS_AS(weyl_group_order(WeylType::G, 3), ParameterOutOfRange);
    CHECK_THROWS_AS(weyl_group_order(WeylType::E, 5), ParameterOutOfRange);
    CHECK_THROWS_AS(weyl_group_order(WeylType::B, 1), ParameterOutOfRange);
    CHECK_THROWS_AS(weyl_group_order(WeylType::A, 0), ParameterOutOfRange);
}

TEST_CASE("doubled reflection counts equal complex reflection counts of the action") {
    const std::vector<std::pair<WeylType, int>> cases{{WeylType::A, 3}, {WeylType::B, 3}, {WeylType::C, 2}, {WeylType::G, 2}};
    for (auto [type, rank] : cases) {
        const auto action = complex_reflection_census(closure(weyl_action_spec(type, rank)));
        CHECK(census(build_weyl_doubled(type, rank)).symplectic_reflections.size() == action.census.complex_reflections.size());
    }
}

TEST_CASE("SL(2) examples") {
    const auto c5 = build_sl2_subgroup(Sl2Kind::Cyclic, 5);
    CHECK(c5.order() == 5);
    CHECK(census(c5).symplectic_reflections.size() == 4);
    const auto q8 = build_sl2_subgroup(Sl2Kind::BinaryDihedral, 2);
    CHECK(q8.order() == 8);
    CHECK(census(q8).symplectic_reflections.size() == 7);
    const auto ico = build_sl2_subgroup(Sl2Kind::BinaryIcosahedral);
    CHECK(ico.order() == 120);
    CHECK(census(ico).symplectic_reflections.size() == 119);
    for (const auto& g : {c5, q8, ico}) {
        const Verdict v = verdict(g);
        CHECK(v.kind == VerdictKind::NecessaryConditionHolds);
        CHECK(v.dim2_existence_note);
    }
    CHECK(build_sl2_subgroup(Sl2Kind::BinaryTetrahedral).order() == 24);
    CHECK(build_sl2_subgroup(Sl2Kind::BinaryOctahedral).order() == 48);
    CHECK(build_sl2_subgroup(Sl2Kind::BinaryDihedral, 5).order() == 20);
    CHECK_THROWS_AS(sl2_subgroup_spec(Sl2Kind::Cyclic, 1), ParameterOutOfRange);
    CHECK_THROWS_AS(sl2_subgroup_spec(Sl2Kind::BinaryDihedral, 1), ParameterOutOfRange);
}

TEST_CASE("SL(2) generators have determinant one") {
    for (auto kind : {Sl2Kind::Cyclic, Sl2Kind::BinaryDihedral, Sl2Kind::BinaryTetrahedral, Sl2Kind::BinaryOctahedral,
                      Sl2Kind::BinaryIcosahedral}) {
        for (const auto& g : sl2_subgroup_spec(kind, 4).generators)
            CHECK((g.at(0, 0) * g.at(1, 1) - g.at(0, 1) * g.at(1, 0)).is_one());
    }
}

TEST_CASE("imprimitive examples") {
    for (int n = 2; n <= 4; ++n) {
        const auto g = build_imprimitive_doubled(1, 1, n);
        const auto w = build_weyl_doubled(WeylType::A, n - 1);
        CHECK(g.order() == w.order());
        CHECK(census(g).symplectic_reflections.size() == census(w).symplectic_reflections.size());
    }
    CHECK(build_imprimitive_doubled(2, 1, 2).order() == 8);
    const auto klein = build_imprimitive_doubled(2, 2, 2);
    CHECK(klein.order() == 4);
    for (std::size_t i = 1; i < klein.order(); ++i) CHECK(element_order(klein, i) == 2);
    CHECK(verdict(klein).kind == VerdictKind::NecessaryConditionHolds);
    CHECK_THROWS_AS(imprimitive_action_spec(4, 3, 2), ParameterOutOfRange);
    CHECK_THROWS_AS(build_imprimitive_doubled(4, 1, 6, 1000), OrderBoundExceeded);
}

TEST_CASE("negation examples") {
    for (int dim : {4, 6}) {
        const Verdict v = verdict(build_negation(dim));
        CHECK(v.kind == VerdictKind::NoSymplecticResolution);
        CHECK(v.g0_index == 2);
    }
    CHECK_THROWS_AS(build_negation(2), ParameterOutOfRange);
    CHECK_THROWS_AS(negation_spec(5), ParameterOutOfRange);
}

TEST_CASE("products with a negation block") {
    const GroupSpec spec = product_with_negation_spec(weyl_doubled_spec(WeylType::B, 2), 4);
    CHECK(spec.dimension == 8);
    const auto g = closure(spec);
    CHECK(g.order() == 16);
    const auto c = census(g);
    const Subgroup g0 = reflection_subgroup(g, c);
    CHECK(g0.order() == 8);
    CHECK(z_locus_min_codim(g, g0, c) >= 4);
    GroupSpec plain = weyl_action_spec(WeylType::A, 2);
    CHECK_THROWS_AS(product_with_negation_spec(plain, 4), ParameterOutOfRange);
    CHECK_THROWS_AS(product_with_negation_spec(weyl_doubled_spec(WeylType::A, 2), 2), ParameterOutOfRange);
}

TEST_CASE("catalog lookup") {
    CHECK(find_catalog_entry("weyl-G2").expected_order == 12);
    CHECK_THROWS_AS(find_catalog_entry("weyl-Z9"), ParameterOutOfRange);
    const auto& d4 = find_catalog_entry("weyl-D4");
    if (d4.expected_verdict) CHECK(*d4.expected_verdict == VerdictKind::NecessaryConditionHolds);
}
