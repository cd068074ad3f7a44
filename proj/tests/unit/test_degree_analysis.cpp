#include <doctest.h>

#include "qschubert/degree_analysis.hpp"
#include "qschubert/error.hpp"
#include "qschubert/sweeps.hpp"

using namespace qschubert;

namespace {

BoxedPartition boxed(int k, int n, std::initializer_list<int> parts) { return {BoxShape(k, n), Partition(parts)}; }

}  // namespace

TEST_CASE("minimal degree of the worked Gr(4,9) pair") {
    auto lambda = boxed(4, 9, {5, 4, 4, 3});
    auto mu = boxed(4, 9, {5, 4, 4, 1});
    CHECK(dmin(lambda, mu) == 2);
    CHECK(dmin(mu, lambda) == 2);
    CHECK(maximal_squares(lambda, mu) ==
          std::vector<SquarePlacement>{{2, 2, 2}, {2, 2, 3}, {2, 3, 2}});

    auto reduction = belkale_reduce(lambda, mu, SquarePlacement{2, 2, 3});
    CHECK(reduction.a == 4);
    CHECK(reduction.b == 5);
    CHECK(reduction.lambda_prime.partition() == Partition{4, 1});
    CHECK(reduction.mu_prime.partition() == Partition{3, 2, 1, 1});

    QuantumRing ring(BoxShape(4, 9));
    auto term = minimal_term(ring, lambda, mu);
    CHECK(term.to_string() == "s[5,4,2,1] + s[5,3,3,1] + s[5,3,2,2]");
    CHECK(degree_support(ring, lambda, mu) == std::set<int>{2, 3});
    CHECK(torus_slide_degree(lambda, mu) == 3);
    CHECK(dmax_slide(ring, lambda, mu) == 3);
}

TEST_CASE("every maximal square gives a consistent reduction") {
    auto lambda = boxed(4, 9, {5, 4, 4, 3});
    auto mu = boxed(4, 9, {5, 4, 4, 1});
    for (const auto& square : maximal_squares(lambda, mu)) {
        auto r = belkale_reduce(lambda, mu, square);
        CHECK(r.a + r.b == 9);
        CHECK(r.lambda_prime.partition().weight() + r.mu_prime.partition().weight() == 12);
    }
}

TEST_CASE("Gr(2,4) cases") {
    auto top = boxed(2, 4, {2, 2});
    CHECK(dmin(top, top) == 2);
    REQUIRE(maximal_squares(top, top) == std::vector<SquarePlacement>{{2, 1, 1}});
    auto r = belkale_reduce(top, top, SquarePlacement{2, 1, 1});
    CHECK(r.a == 2);
    CHECK(r.b == 2);
    CHECK(r.lambda_prime.partition().empty());
    CHECK(r.mu_prime.partition().empty());

    QuantumRing ring(BoxShape(2, 4));
    CHECK(minimal_term(ring, top, top).to_string() == "s[]");
    CHECK(degree_support(ring, top, top) == std::set<int>{2});
    CHECK(dmax_slide(ring, top, top) == 2);

    auto row = boxed(2, 4, {2});
    auto column = boxed(2, 4, {1, 1});
    CHECK(dmin(row, column) == 1);
    CHECK(degree_support(ring, row, column) == std::set<int>{1});
}

TEST_CASE("dmin = 0 has no square") {
    auto one = boxed(2, 4, {1});
    CHECK(dmin(one, one) == 0);
    CHECK(maximal_squares(one, one).empty());
    auto r = belkale_reduce(one, one, std::nullopt);
    CHECK(r.a == 0);
    CHECK(r.b == 0);
    CHECK(r.lambda_prime == one);
    CHECK(r.mu_prime == one);
    QuantumRing ring(BoxShape(2, 4));
    CHECK(minimal_term(ring, one, one).to_string() == "s[2] + s[1,1]");
    CHECK(degree_support(ring, one, one) == std::set<int>{0});
    CHECK(torus_slide_degree(one, one) == 0);
}

TEST_CASE("invalid squares are rejected") {
    auto lambda = boxed(4, 9, {5, 4, 4, 3});
    auto mu = boxed(4, 9, {5, 4, 4, 1});
    CHECK_THROWS_AS(belkale_reduce(lambda, mu, std::nullopt), InvalidInput);
    CHECK_THROWS_AS(belkale_reduce(lambda, mu, SquarePlacement{2, 1, 1}), InvalidInput);
    CHECK_THROWS_AS(belkale_reduce(lambda, mu, SquarePlacement{1, 2, 3}), InvalidInput);
    CHECK_THROWS_AS(belkale_reduce(lambda, mu, SquarePlacement{2, 3, 3}), InvalidInput);
    CHECK_THROWS_AS(dmin(lambda, boxed(4, 8, {1})), InvalidInput);
}

TEST_CASE("degree sweeps for small n") {
    RingPool pool;
    for (auto result : {sweep_min_degree(pool, 7, 0), sweep_degree_interval(pool, 7, 0), sweep_torus_slide(pool, 6, 0),
                        sweep_belkale(pool, 6, 0)}) {
        INFO(result.name);
        CHECK(result.passed());
        for (const auto& f : result.failures) MESSAGE(f);
    }
}
