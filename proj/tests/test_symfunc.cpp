#include "oracles.hpp"

#include "wfin/symfunc.hpp"

#include <doctest.h>

using namespace wfin;

namespace {

PartitionTuple tup(std::initializer_list<Partition> parts)
{
    return PartitionTuple(parts);
}

}  // namespace

TEST_CASE("products in the Schur basis")
{
    const auto s1 = TensorSymElt::schur(tup({{1}}), 6);
    auto expected = TensorSymElt::schur(tup({{2}}), 6) + TensorSymElt::schur(tup({{1, 1}}), 6);
    CHECK(multiply(s1, s1) == expected);

    const auto x = TensorSymElt::schur(tup({{2, 1}, {1}}), 6, Rational(3, 2));
    CHECK(multiply(TensorSymElt::one(2, 6), x) == x);

    const auto a = TensorSymElt::schur(tup({{1}, {}}), 6);
    const auto b = TensorSymElt::schur(tup({{}, {1}}), 6);
    CHECK(multiply(a, b) == TensorSymElt::schur(tup({{1}, {1}}), 6));
}

TEST_CASE("products agree with the lattice-word oracle")
{
    for (int p = 0; p <= 3; ++p) {
        for (int q = 0; q <= 3; ++q) {
            for (const auto& lambda : partitions_of(p)) {
                for (const auto& mu : partitions_of(q)) {
                    const auto prod = multiply(TensorSymElt::schur(tup({lambda}), 6), TensorSymElt::schur(tup({mu}), 6));
                    for (const auto& nu : partitions_of(p + q))
                        CHECK(prod.coefficient(tup({nu})) == oracle::lr(lambda, mu, nu));
                }
            }
        }
    }
}

TEST_CASE("truncation and compatibility")
{
    CHECK(TensorSymElt::schur(tup({{2, 1}}), 2).is_zero());
    const auto s2 = TensorSymElt::schur(tup({{2}}), 3);
    CHECK(multiply(s2, s2).is_zero());
    CHECK_THROWS_AS(multiply(TensorSymElt::one(1, 3), TensorSymElt::one(2, 3)), std::invalid_argument);
    CHECK_THROWS_AS(multiply(TensorSymElt::one(1, 3), TensorSymElt::one(1, 4)), std::invalid_argument);
}

TEST_CASE("traces")
{
    CHECK(trace_at(TensorSymElt::schur(tup({{1}, {}}), 4), tup({{1}, {}})) == 1);
    CHECK(trace_at(TensorSymElt::schur(tup({{1, 1}}), 4), tup({{2}})) == -1);
    CHECK(trace_at(TensorSymElt(2, 4), tup({{1}, {}})) == 0);
    // a key whose sizes differ from mu contributes nothing
    CHECK(trace_at(TensorSymElt::schur(tup({{1}, {}}), 4), tup({{}, {1}})) == 0);
}
