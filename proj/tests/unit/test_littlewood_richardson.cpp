#include <doctest.h>

#include "qschubert/error.hpp"
#include "qschubert/littlewood_richardson.hpp"
#include "qschubert/monomial_oracle.hpp"
#include "qschubert/parallel.hpp"
#include "qschubert/sweeps.hpp"

using namespace qschubert;

namespace {

std::map<Partition, Coefficient> as_map(const SchurCombination& c) { return {c.terms().begin(), c.terms().end()}; }

BoxedPartition boxed(int k, int n, std::initializer_list<int> parts) { return {BoxShape(k, n), Partition(parts)}; }

}  // namespace

TEST_CASE("worked classical product in Gr(4,9)") {
    CHECK(lr_coefficient(Partition{4, 1}, Partition{3, 2, 1, 1}, Partition{5, 3, 2, 2}) == 1);
    auto product = classical_product(boxed(4, 9, {4, 1}), boxed(4, 9, {3, 2, 1, 1}));
    SchurCombination expected;
    expected.add(Partition{5, 3, 2, 2}, 1);
    expected.add(Partition{5, 3, 3, 1}, 1);
    expected.add(Partition{5, 4, 2, 1}, 1);
    CHECK(product == expected);
    CHECK(product.to_string() == "s[5,4,2,1] + s[5,3,3,1] + s[5,3,2,2]");
}

TEST_CASE("lr_coefficient basics") {
    const Partition mu{3, 1};
    CHECK(lr_coefficient(Partition{}, mu, mu) == 1);
    CHECK(lr_coefficient(Partition{1}, Partition{1}, Partition{2}) == 1);
    CHECK(lr_coefficient(Partition{1}, Partition{1}, Partition{1, 1}) == 1);
    CHECK(lr_coefficient(Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1}) == 2);
    // weight mismatch and non-containment give zero
    CHECK(lr_coefficient(Partition{1}, Partition{1}, Partition{3}) == 0);
    CHECK(lr_coefficient(Partition{2}, Partition{1}, Partition{1, 1, 1}) == 0);
}

TEST_CASE("schur_product_k_rows against the monomial oracle") {
    auto p = schur_product_k_rows(Partition{2, 1}, Partition{2, 1}, 2);
    CHECK(as_map(p) == std::map<Partition, Coefficient>{{Partition{4, 2}, 1}, {Partition{3, 3}, 1}});
    CHECK(as_map(p) == schur_expand_monomials({Partition{2, 1}, Partition{2, 1}}, 2));

    auto square = schur_product_k_rows(Partition{2, 2}, Partition{2, 2}, 2);
    CHECK(as_map(square) == std::map<Partition, Coefficient>{{Partition{4, 4}, 1}});
    CHECK(as_map(square) == schur_expand_monomials({Partition{2, 2}, Partition{2, 2}}, 2));

    auto identity = schur_product_k_rows(Partition{}, Partition{3, 1}, 3);
    CHECK(as_map(identity) == std::map<Partition, Coefficient>{{Partition{3, 1}, 1}});

    CHECK_THROWS_AS(schur_product_k_rows(Partition{1, 1, 1}, Partition{1}, 2), InvalidInput);
}

TEST_CASE("monomial oracle") {
    CHECK(schur_expand_monomials({Partition{1}, Partition{1}}, 2) ==
          std::map<Partition, Coefficient>{{Partition{2}, 1}, {Partition{1, 1}, 1}});
    CHECK(schur_expand_monomials({Partition{}, Partition{3, 2}}, 3) ==
          std::map<Partition, Coefficient>{{Partition{3, 2}, 1}});
    // three factors: s_1^3 = s_3 + 2 s_21 + s_111
    CHECK(schur_expand_monomials({Partition{1}, Partition{1}, Partition{1}}, 3) ==
          std::map<Partition, Coefficient>{{Partition{3}, 1}, {Partition{2, 1}, 2}, {Partition{1, 1, 1}, 1}});
    CHECK_THROWS_AS(schur_expand_monomials({Partition{1, 1, 1}}, 2), InvalidInput);
    CHECK_THROWS_AS(schur_expand_monomials({Partition{40}, Partition{40}}, 8), ResourceLimit);
}

TEST_CASE("classical product edge cases") {
    CHECK(classical_product(boxed(4, 9, {5, 4, 4, 3}), boxed(4, 9, {5, 4, 4, 1})).empty());
    CHECK_THROWS_AS(classical_product(boxed(2, 4, {1}), boxed(2, 5, {1})), InvalidInput);
    BoxShape shape(2, 4);
    for (const auto& lambda : boxed_partitions(shape)) {
        CHECK(classical_product(lambda, dual(lambda)).coefficient(Partition{2, 2}) == 1);
    }
}

TEST_CASE("combinations reject nonpositive and inhomogeneous terms") {
    SchurCombination c;
    CHECK_THROWS_AS(c.add(Partition{1}, 0), ConsistencyError);
    c.add(Partition{2}, 1);
    CHECK_THROWS_AS(c.add(Partition{1}, 1), ConsistencyError);
    c.add(Partition{1, 1}, 3);
    CHECK(c.coefficient(Partition{1, 1}) == 3);
    CHECK(c.coefficient(Partition{3}) == 0);
    CHECK(c.weight() == 2);
}

TEST_CASE("LR symmetry for |nu| <= 12") {
    auto result = sweep_lr_symmetry(12);
    CHECK(result.checked > 10000);
    CHECK(result.passed());
}

TEST_CASE("tableau enumeration agrees with monomial expansion") {
    auto result = sweep_lr_vs_monomials(4, 8, 0);
    CHECK(result.checked == 53 * 53);
    CHECK(result.passed());
    for (const auto& f : result.failures) MESSAGE(f);
}

TEST_CASE("Pieri products are the horizontal strips") {
    auto result = sweep_pieri(5, 8);
    CHECK(result.passed());
}

TEST_CASE("pairing with the top class and classical nonvanishing, n <= 8") {
    RingPool pool;
    auto result = sweep_classical_pairing(pool, 8);
    CHECK(result.passed());
    for (const auto& f : result.failures) MESSAGE(f);
}

TEST_CASE("memo returns one shared value under concurrent use") {
    SchurProductCache cache(3);
    std::vector<const SchurCombination*> seen(64);
    parallel_for(seen.size(), 8, [&](std::size_t i) {
        seen[i] = i % 2 ? &cache.product(Partition{2, 1}, Partition{1}) : &cache.product(Partition{1}, Partition{2, 1});
    });
    CHECK(cache.size() == 1);
    for (auto* p : seen) CHECK(p == seen.front());
    CHECK(*seen.front() == schur_product_k_rows(Partition{2, 1}, Partition{1}, 3));
}
