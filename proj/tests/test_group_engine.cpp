#include "oracles/icosian.hpp"
#include "oracles/permutation.hpp"
#include "symref/catalog.hpp"
#include "symref/errors.hpp"
#include "symref/group.hpp"

#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <numeric>

using namespace symref;

namespace {

ExactMatrix rat(const std::vector<std::vector<BigRational>>& rows) {
    std::vector<Vector> v;
    for (const auto& r : rows) v.emplace_back(r.begin(), r.end());
    return ExactMatrix::from_rows(v, 1);
}

std::vector<std::size_t> codims(const FiniteMatrixGroup& g) {
    std::vector<std::size_t> out;
    for (const auto& x : g.elements()) out.push_back(fixed_space(x).codim());
    return out;
}

std::vector<std::size_t> with_codim(const FiniteMatrixGroup& g, std::size_t c) {
    std::vector<std::size_t> out;
    const auto cs = codims(g);
    for (std::size_t i = 1; i < g.order(); ++i)
        if (cs[i] == c) out.push_back(i);
    return out;
}

}  // namespace

TEST_CASE("closure examples") {
    const auto trivial = closure(4, 1, standard_symplectic_form(4), {ExactMatrix::identity(4)});
    CHECK(trivial.order() == 1);
    CHECK(trivial.generator_indices().empty());
    const auto s2 = build_symmetric_on_c2n(2);
    CHECK(s2.order() == 2);
    CHECK(s2.element(0).is_identity());
}

TEST_CASE("closure diagnostics") {
    const ExactMatrix omega = standard_symplectic_form(2);
    const ExactMatrix shear = rat({{1, 1}, {0, 1}});
    CHECK_THROWS_AS(closure(2, 1, omega, {shear}, 1000), OrderBoundExceeded);
    try {
        closure(2, 1, omega, {ExactMatrix::identity(2), rat({{2, 0}, {0, 2}})});
        FAIL("expected NotSymplectic");
    } catch (const NotSymplectic& e) {
        CHECK(e.generator() == 1);
    }
    try {
        linear_closure(2, 1, {rat({{1, 0}, {0, 0}})});
        FAIL("expected SingularGenerator");
    } catch (const SingularGenerator& e) {
        CHECK(e.generator() == 0);
    }
    CHECK_THROWS_AS(closure(2, 1, omega, {ExactMatrix::identity(4)}), DimensionMismatch);
    CHECK_THROWS_AS(closure(2, 1, rat({{1, 0}, {0, 1}}), {}), BadForm);
    CHECK_THROWS_AS(build_symmetric_on_c2n(4, 10), OrderBoundExceeded);
}

TEST_CASE("closure promotes generators of a subfield conductor") {
    const auto g = linear_closure(2, 4, {ExactMatrix::diagonal({CyclotomicNumber::zeta(4), CyclotomicNumber(1, 4)}, 4),
                                         rat({{0, 1}, {1, 0}})});
    CHECK(g.order() == 32);
    CHECK(g.conductor() == 4);
}

TEST_CASE("S3 on (C^2)^3 against the permutation oracle") {
    const auto g = build_symmetric_on_c2n(3);
    const auto perms = oracle::all_permutations(3);
    CHECK(g.order() == perms.size());

    std::vector<std::size_t> expected;
    for (const auto& p : perms) expected.push_back(static_cast<std::size_t>(oracle::block_fixed_codim(p, 2)));
    auto actual = codims(g);
    std::sort(expected.begin(), expected.end());
    std::sort(actual.begin(), actual.end());
    CHECK(actual == expected);

    std::vector<std::size_t> sizes;
    for (const auto& cls : conjugacy_classes(g)) sizes.push_back(cls.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == oracle::class_sizes(3));
    CHECK(conjugacy_classes(g).front() == std::vector<std::size_t>{0});
}

TEST_CASE("S4 and S5 classes and fixed codims match the permutation oracle") {
    for (int n : {4, 5}) {
        const auto g = build_symmetric_on_c2n(n);
        const auto perms = oracle::all_permutations(n);
        REQUIRE(g.order() == perms.size());
        std::vector<std::size_t> expected;
        for (const auto& p : perms) expected.push_back(static_cast<std::size_t>(oracle::block_fixed_codim(p, 2)));
        auto actual = codims(g);
        std::sort(expected.begin(), expected.end());
        std::sort(actual.begin(), actual.end());
        CHECK(actual == expected);
        std::vector<std::size_t> sizes;
        for (const auto& cls : conjugacy_classes(g)) sizes.push_back(cls.size());
        std::sort(sizes.begin(), sizes.end());
        CHECK(sizes == oracle::class_sizes(n));
    }
}

TEST_CASE("element order examples") {
    const auto neg = build_negation(4);
    CHECK(element_order(neg, ExactMatrix::identity(4)) == 1);
    CHECK(element_order(neg, -ExactMatrix::identity(4)) == 2);
    const auto c3 = build_sl2_subgroup(Sl2Kind::Cyclic, 3);
    const ExactMatrix d = ExactMatrix::diagonal({CyclotomicNumber::zeta(3), CyclotomicNumber::zeta(3, 2)}, 3);
    CHECK(element_order(c3, d) == 3);
    CHECK_THROWS_AS(element_order(neg, ExactMatrix::diagonal({2, 1, BigRational(1, 2), 1}, 1)), NotAMember);
}

TEST_CASE("group tables are consistent") {
    const auto g = build_sl2_subgroup(Sl2Kind::BinaryDihedral, 3);
    REQUIRE(g.order() == 12);
    for (std::size_t i = 0; i < g.order(); ++i) {
        CHECK(g.product(i, g.inverse(i)) == 0);
        CHECK(g.order() % element_order(g, i) == 0);
        for (std::size_t j = 0; j < g.order(); ++j) CHECK(g.element(g.product(i, j)) == g.element(i) * g.element(j));
    }
}

TEST_CASE("generated subgroup examples") {
    const auto g = build_symmetric_on_c2n(3);
    CHECK(generated_subgroup(g, {}).order() == 1);
    std::vector<std::size_t> all(g.order());
    std::iota(all.begin(), all.end(), 0);
    CHECK(generated_subgroup(g, all).order() == 6);
    const auto transpositions = with_codim(g, 2);
    REQUIRE(transpositions.size() == 3);
    const std::vector<std::size_t> two{transpositions[0], transpositions[1]};
    CHECK(generated_subgroup(g, two).order() == 6);
    const std::vector<std::size_t> one{transpositions[0]};
    CHECK(generated_subgroup(g, one).order() == 2);
}

TEST_CASE("normality examples") {
    const auto g = build_symmetric_on_c2n(3);
    CHECK(is_normal(g, generated_subgroup(g, {})));
    std::vector<std::size_t> all(g.order());
    std::iota(all.begin(), all.end(), 0);
    CHECK(is_normal(g, generated_subgroup(g, all)));
    const std::vector<std::size_t> one{with_codim(g, 2)[0]};
    const Subgroup h = generated_subgroup(g, one);
    // Direct oracle: some conjugate of the transposition leaves h.
    bool closed = true;
    for (std::size_t x = 0; x < g.order(); ++x)
        for (std::size_t m : h.members()) closed = closed && h.contains(g.product(g.product(x, m), g.inverse(x)));
    CHECK(!closed);
    CHECK(!is_normal(g, h));
    const std::vector<std::size_t> three_cycle{with_codim(g, 4)[0]};
    CHECK(is_normal(g, generated_subgroup(g, three_cycle)));
}

TEST_CASE("conjugacy examples") {
    const auto trivial = closure(2, 1, standard_symplectic_form(2), {});
    CHECK(conjugacy_classes(trivial).size() == 1);
    const auto c5 = build_sl2_subgroup(Sl2Kind::Cyclic, 5);
    const auto classes = conjugacy_classes(c5);
    CHECK(classes.size() == 5);
    for (const auto& cls : classes) CHECK(cls.size() == 1);
}

TEST_CASE("Lagrange on every cyclic subgroup and every pair-generated subgroup") {
    for (const auto& g : {build_symmetric_on_c2n(4), build_weyl_doubled(WeylType::B, 2), build_sl2_subgroup(Sl2Kind::BinaryTetrahedral)}) {
        for (std::size_t i = 0; i < g.order(); ++i) {
            const std::vector<std::size_t> seed{i};
            CHECK(g.order() % generated_subgroup(g, seed).order() == 0);
            const std::vector<std::size_t> pair{i, (i * 7 + 3) % g.order()};
            CHECK(g.order() % generated_subgroup(g, pair).order() == 0);
        }
    }
}

TEST_CASE("closure is idempotent and independent of generator order") {
    const GroupSpec spec = weyl_doubled_spec(WeylType::B, 3);
    const auto g = closure(spec);
    const auto again = closure(g.dimension(), g.conductor(), *g.form(), g.elements());
    CHECK(again.elements() == g.elements());
    GroupSpec reversed = spec;
    std::reverse(reversed.generators.begin(), reversed.generators.end());
    CHECK(closure(reversed).elements() == g.elements());
    GroupSpec padded = spec;
    padded.generators.push_back(g.element(5));
    padded.generators.insert(padded.generators.begin(), ExactMatrix::identity(spec.dimension));
    CHECK(closure(padded).elements() == g.elements());
}

TEST_CASE("binary icosahedral group against the icosian oracle") {
    const auto icosians = oracle::icosians();
    REQUIRE(icosians.size() == 120);
    REQUIRE(oracle::closed_under_product(icosians));

    const auto start = std::chrono::steady_clock::now();
    const auto g = build_sl2_subgroup(Sl2Kind::BinaryIcosahedral);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(seconds < 5.0);
    CHECK(g.order() == icosians.size());

    // Trace 2 Re(q) and element order are invariants of any faithful 2-dimensional representation.
    std::vector<double> expected_traces, actual_traces;
    std::vector<int> expected_orders, actual_orders;
    std::size_t oracle_nonidentity = 0;
    for (const auto& q : icosians) {
        expected_traces.push_back(2 * q.c[0].value());
        expected_orders.push_back(oracle::quaternion_order(q));
        if (!q.is_one()) ++oracle_nonidentity;  // qv = v forces q = 1 in a division algebra
    }
    for (std::size_t i = 0; i < g.order(); ++i) {
        const auto trace = to_complex(g.element(i).at(0, 0) + g.element(i).at(1, 1));
        CHECK(std::abs(trace.imag()) < 1e-12);
        actual_traces.push_back(trace.real());
        actual_orders.push_back(static_cast<int>(element_order(g, i)));
    }
    std::sort(expected_traces.begin(), expected_traces.end());
    std::sort(actual_traces.begin(), actual_traces.end());
    for (std::size_t i = 0; i < expected_traces.size(); ++i) CHECK(std::abs(expected_traces[i] - actual_traces[i]) < 1e-9);
    std::sort(expected_orders.begin(), expected_orders.end());
    std::sort(actual_orders.begin(), actual_orders.end());
    CHECK(actual_orders == expected_orders);

    CHECK(with_codim(g, 2).size() == oracle_nonidentity);
    CHECK(oracle_nonidentity == 119);
}
