#include <doctest.h>

#include "qschubert/error.hpp"
#include "qschubert/partition.hpp"
#include "qschubert/sweeps.hpp"

using namespace qschubert;

namespace {

LatticePath steps(std::string_view text) {
    LatticePath path;
    for (char c : text) path.steps.push_back(c == 'D' ? Step::Down : Step::Left);
    return path;
}

BoxedPartition boxed(int k, int n, std::initializer_list<int> parts) { return {BoxShape(k, n), Partition(parts)}; }

}  // namespace

TEST_CASE("partitions normalize trailing zeros") {
    CHECK(Partition{4, 1, 0, 0} == Partition{4, 1});
    CHECK(Partition{4, 1, 0, 0}.length() == 2);
    CHECK(std::hash<Partition>{}(Partition{3, 0}) == std::hash<Partition>{}(Partition{3}));
    CHECK(Partition::parse("0").empty());
    CHECK(Partition::parse("").empty());
    CHECK(Partition::parse(" 5, 4,4,3 ") == Partition{5, 4, 4, 3});
    CHECK(Partition{5, 4, 4, 3}.weight() == 16);
    CHECK(Partition{5, 4, 4, 1}.conjugate() == Partition{4, 3, 3, 3, 1});
}

TEST_CASE("malformed partitions are rejected") {
    CHECK_THROWS_AS(Partition::parse("1,2"), InvalidInput);
    CHECK_THROWS_AS(Partition::parse("3,-1"), InvalidInput);
    CHECK_THROWS_AS(Partition::parse("3,,1"), InvalidInput);
    CHECK_THROWS_AS(Partition::parse("a"), InvalidInput);
    CHECK_THROWS_AS(BoxShape(0, 3), InvalidInput);
    CHECK_THROWS_AS(BoxShape(3, 3), InvalidInput);
    CHECK_THROWS_AS(BoxShape::parse("2"), InvalidInput);
    CHECK_THROWS_AS(boxed(2, 4, {3, 1}), InvalidInput);
    CHECK_THROWS_AS(boxed(2, 4, {1, 1, 1}), InvalidInput);
}

TEST_CASE("box shape derived sizes") {
    BoxShape shape(4, 9);
    CHECK(shape.width() == 5);
    CHECK(shape.cells() == 20);
    CHECK(boxed_partitions(shape).size() == 126);
    CHECK(boxed_partitions(BoxShape(2, 4)).front().partition() == Partition{2, 2});
    CHECK(boxed_partitions(BoxShape(2, 4)).back().partition().empty());
}

TEST_CASE("partition_to_path") {
    CHECK(partition_to_path(boxed(4, 9, {5, 4, 4, 3})) == steps("DLDDLDLLL"));
    CHECK(partition_to_path(boxed(4, 9, {})) == steps("LLLLLDDDD"));
    CHECK(partition_to_path(boxed(2, 4, {2, 2})) == steps("DDLL"));
    CHECK(to_string(steps("DL")) == "D,L");
    CHECK_THROWS_AS(path_to_partition(BoxShape(2, 4), steps("DDDL")), InvalidInput);
}

TEST_CASE("path endpoints") {
    auto points = path_points(boxed(4, 9, {5, 4, 4, 3}));
    REQUIRE(points.size() == 10);
    CHECK(points.front() == LatticePoint{0, 5});
    CHECK(points.back() == LatticePoint{4, 0});
    CHECK(points[4] == LatticePoint{3, 4});
}

TEST_CASE("schubert_rank_vector") {
    CHECK(schubert_rank_vector(boxed(4, 9, {5, 4, 4, 3})) == std::vector<int>{1, 1, 2, 3, 3, 4, 4, 4, 4});
    CHECK(schubert_rank_vector(boxed(4, 9, {})) == std::vector<int>{0, 0, 0, 0, 0, 1, 2, 3, 4});
    CHECK(schubert_rank_vector(boxed(2, 4, {2, 2})) == std::vector<int>{1, 2, 2, 2});
}

TEST_CASE("dual") {
    CHECK(dual(boxed(4, 9, {5, 4, 4, 1})).partition() == Partition{4, 1, 1, 0});
    CHECK(dual(boxed(4, 9, {})).partition() == Partition{5, 5, 5, 5});
    CHECK(dual(boxed(2, 4, {2, 1})).partition() == Partition{1, 0});
}

TEST_CASE("add_left_rectangle") {
    CHECK(add_left_rectangle(Partition{5, 4, 4, 3}, 4, 4) == Partition{9, 8, 8, 7});
    CHECK(add_left_rectangle(Partition{5, 4, 4, 1}, 5, 4) == Partition{10, 9, 9, 6});
    CHECK(add_left_rectangle(Partition{}, 0, 3).empty());
    CHECK(add_left_rectangle(Partition{2}, 1, 3) == Partition{3, 1, 1});
    CHECK_THROWS_AS(add_left_rectangle(Partition{1, 1, 1, 1}, 1, 3), InvalidInput);
}

TEST_CASE("beta_numbers") {
    CHECK(beta_numbers(Partition{9, 8, 8, 7}, 4) == std::vector<int>{12, 10, 9, 7});
    CHECK(beta_numbers(Partition{}, 3) == std::vector<int>{2, 1, 0});
    CHECK(beta_numbers(Partition{10, 9, 9, 6}, 4) == std::vector<int>{13, 11, 10, 6});
}

TEST_CASE("exhaustive round trip and duality for n <= 8") {
    auto paths = sweep_path_round_trip(8);
    auto duals = sweep_duality(8);
    CHECK(paths.passed());
    CHECK(duals.passed());
    // sum over n=2..8 of (2^n - 2) boxed partitions
    CHECK(paths.checked == 2 + 6 + 14 + 30 + 62 + 126 + 254);
}
