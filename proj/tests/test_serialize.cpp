#include "wfin/serialize.hpp"

#include <doctest.h>

using namespace wfin;

TEST_CASE("round trips")
{
    const PartitionTuple lambda{Partition{2, 1}, Partition{}};
    CHECK(to_json(lambda).dump() == "[[2,1],[]]");
    CHECK(partition_tuple_from_json(to_json(lambda)) == lambda);

    const WeightedInjection f({1, 1}, {0, 3}, {{2, 3}, {2, 1}});
    CHECK(injection_from_json(f.source(), f.target(), to_json(f)) == f);

    const Rational q(-6, 4);
    CHECK(rational_from_json(to_json(q)) == Rational(-3, 2));

    auto x = TensorSymElt::schur(lambda, 5, Rational(2, 3));
    x.add_term(PartitionTuple{Partition{}, Partition{1}}, -1);
    CHECK(symelt_from_json(2, 5, to_json(x)) == x);

    const auto I = PIdeal::canonicalize(3, {{2, 1}, {0, 4}});
    CHECK(ideal_from_json(3, to_json(I)) == I);
    CHECK(ideal_from_json(3, to_json(PIdeal::unit(3))).is_unit());

    auto m = ModuleSpec::principal({1, 0});
    m += ModuleSpec::simple(lambda);
    CHECK(module_spec_from_json(to_json(m)) == m);
}

TEST_CASE("exact values survive")
{
    Rational big(Integer("123456789012345678901234567890"), Integer(11));
    big.canonicalize();
    CHECK(rational_from_json(json::parse(to_json(big).dump())) == big);
    CHECK_THROWS(rational_from_json(json{{"numerator", "1"}, {"denominator", "0"}}));
}

TEST_CASE("text parsers")
{
    CHECK(parse_composition("2,0", 0) == Composition{2, 0});
    CHECK(parse_composition("(1,2,3)", 3) == Composition{1, 2, 3});
    CHECK(parse_composition("\xE2\x88\x85", 2) == Composition{0, 0});
    CHECK_THROWS_AS(parse_composition("1,x", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_composition("1,2", 3), std::invalid_argument);
    CHECK(parse_partition_tuple("2,1|\xE2\x88\x85") == PartitionTuple{Partition{2, 1}, Partition{}});
    CHECK(parse_ideal(2, "[(1,3),(0,1)]") == PIdeal::power(2, 0, 1));
    CHECK(parse_ideal(2, "[]").is_zero());
    CHECK(parse_ideal(2, "unit").is_unit());
    CHECK_THROWS_AS(parse_ideal(2, "[(1,3"), std::invalid_argument);
}

TEST_CASE("linear maps serialize as triplets")
{
    const auto f = build_f_sigma(WeightedInjection({0}, {1}, {}), 2, 0);
    const auto j = to_json(f);
    CHECK(j["cols"] == 2);
    CHECK(j["entries"].size() == 2);
    CHECK(j["entries"][0][2] == "1");
}
