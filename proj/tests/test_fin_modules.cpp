#include "oracles.hpp"

#include "wfin/fin_modules.hpp"

#include <doctest.h>

using namespace wfin;

TEST_CASE("principal projectives")
{
    for (const auto& s : compositions_up_to(2, 3))
        CHECK(principal_dim(Composition::zero(2), s) == 1);
    CHECK(principal_dim({1, 0}, {1, 1}) == 2);
    CHECK(principal_dim({0, 2}, {2, 0}) == 0);
    for (const auto& a : compositions_up_to(3, 3))
        for (const auto& s : compositions_up_to(3, 4))
            CHECK(principal_dim(a, s) == oracle::fi_count(a, s));
}

TEST_CASE("simples")
{
    CHECK(simple_dim(PartitionTuple{Partition{1}, Partition{}}, {1, 0}) == 1);
    CHECK(simple_dim(PartitionTuple{Partition{2, 1}}, {3}) == 2);
    CHECK(simple_dim(PartitionTuple{Partition{2, 1}}, {2}) == 0);
}

TEST_CASE("isotypic pieces of principal projectives")
{
    CHECK(isotypic_projective_dim(PartitionTuple{Partition{1}, Partition{}}, {1, 1}) == principal_dim({1, 0}, {1, 1}));
    CHECK(isotypic_projective_dim(PartitionTuple{Partition{2}}, {3}) == 3);
    CHECK(isotypic_projective_dim(PartitionTuple{Partition{1, 1}}, {2}) == 1);
}

TEST_CASE("Day convolution")
{
    const auto p1 = ModuleSpec::principal({1});
    CHECK(day_tensor_dim(p1, p1, {2}) == 2);
    CHECK(day_tensor_dim(p1, p1, {2}) == principal_dim({2}, {2}));
    // n = 1, a = b = (1), c = (3): both sides count injections [2] -> [3]
    CHECK(day_tensor_dim(p1, p1, {3}) == 6);
    const auto m = ModuleSpec::simple(PartitionTuple{Partition{2, 1}, Partition{1}});
    for (const auto& c : compositions_up_to(2, 5))
        CHECK(day_tensor_dim(m, ModuleSpec::unit(2), c) == spec_dim(m, c));
    const auto x = ModuleSpec::simple(PartitionTuple{Partition{1}});
    CHECK(day_tensor_dim(x, x, {2}) == 1 * 1 * 2);
    CHECK(day_tensor_dim(x, x, {3}) == 0);
    CHECK(day_tensor_dim(x, x, {1}) == 0);
}

TEST_CASE("formal sums")
{
    auto m = ModuleSpec::principal({1, 0});
    m += ModuleSpec::simple(PartitionTuple{Partition{}, Partition{1}});
    CHECK(spec_dim(m, {0, 1}) == principal_dim({1, 0}, {0, 1}) + 1);
    CHECK(day_tensor_dim(m, ModuleSpec::unit(2), {1, 1}) == spec_dim(m, {1, 1}));
}
