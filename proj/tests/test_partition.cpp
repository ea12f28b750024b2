#include "oracles.hpp"

#include "wfin/partition.hpp"

#include <doctest.h>

using namespace wfin;

TEST_CASE("dominance on prefix sums")
{
    CHECK(dominance_leq({1, 1}, {2, 0}));
    CHECK_FALSE(dominance_leq({2, 0}, {1, 1}));
    for (const auto& a : compositions_up_to(3, 3))
        CHECK(dominance_leq(a, a));
    CHECK_THROWS_AS(dominance_leq({1}, {1, 0}), std::invalid_argument);
}

TEST_CASE("partition validation and conjugate")
{
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK(Partition({2, 0}) == Partition{2});
    CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_of(0).size() == 1);
}

TEST_CASE("compositions")
{
    CHECK(compositions_of(2, 2).size() == 3);
    CHECK(compositions_up_to(3, 2).size() == 10);
    CHECK(Composition{1, 0, 2}.reversed() == Composition{2, 0, 1});
    CHECK(Composition{1, 0} + Composition{0, 2} == Composition{1, 2});
    CHECK_THROWS_AS(Composition({-1}), std::invalid_argument);
}

TEST_CASE("Murnaghan-Nakayama characters")
{
    for (int m = 1; m <= 5; ++m)
        for (const auto& mu : partitions_of(m))
            CHECK(mn_character(Partition{m}, mu) == 1);
    CHECK(mn_character({1, 1}, {2}) == -1);
    CHECK(mn_character({2, 1}, {1, 1, 1}) == 2);
    CHECK_THROWS_AS(mn_character({2}, {1}), std::invalid_argument);
}

TEST_CASE("characters agree with the tabloid oracle")
{
    for (int m = 0; m <= 6; ++m)
        for (const auto& lambda : partitions_of(m))
            for (const auto& mu : partitions_of(m))
                CHECK(mn_character(lambda, mu) == oracle::character(lambda, mu));
}

TEST_CASE("Littlewood-Richardson coefficients")
{
    CHECK(lr_coefficient({1}, {1}, {2}) == 1);
    CHECK(lr_coefficient({1}, {1}, {1, 1}) == 1);
    CHECK(lr_coefficient({1}, {1}, {3}) == 0);
    CHECK(lr_coefficient({2, 1}, {2, 1}, {3, 2, 1}) == 2);
    for (int m = 0; m <= 6; ++m)
        for (int p = 0; p <= m; ++p)
            for (const auto& lambda : partitions_of(p))
                for (const auto& mu : partitions_of(m - p))
                    for (const auto& nu : partitions_of(m))
                        CHECK(lr_coefficient(lambda, mu, nu) == oracle::lr(lambda, mu, nu));
}

TEST_CASE("hook dimensions and counting helpers")
{
    CHECK(hook_dimension({4}) == 1);
    CHECK(hook_dimension({1, 1, 1}) == 1);
    CHECK(hook_dimension({2, 1}) == 2);
    CHECK(hook_dimension({3, 2}) == 5);
    CHECK(lambda_factorial(PartitionTuple::empty(3)) == 1);
    CHECK(lambda_factorial(PartitionTuple{Partition{1, 1}}) == 2);
    CHECK(lambda_factorial(PartitionTuple{Partition{2, 1}, Partition{1, 1, 1}}) == 6);
    CHECK(centralizer_order({2, 1, 1}) == 4);
    CHECK(binomial(5, 2) == 10);
}
