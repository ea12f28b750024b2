#include "wfin/ideal.hpp"

#include <doctest.h>

#include <sstream>

using namespace wfin;

namespace {

PIdeal I2(std::vector<PIdeal::Term> raw)
{
    return PIdeal::canonicalize(2, raw);
}

// m lies in p_i^a iff it has degree >= a in the rows 1..n-i
bool direct_member(const PIdeal& I, const Monomial& m, int k)
{
    if (I.is_unit())
        return true;
    for (const auto& [i, a] : I.terms()) {
        int deg = 0;
        for (int r = 1; r <= I.n() - i; ++r)
            for (int c = 1; c <= k; ++c)
                deg += m[static_cast<std::size_t>((r - 1) * k + c - 1)];
        if (deg >= a)
            return true;
    }
    return false;
}

}  // namespace

TEST_CASE("canonical forms")
{
    CHECK(I2({{1, 3}, {0, 1}}) == I2({{0, 1}}));
    CHECK(I2({{1, 1}, {0, 3}}).terms() == std::vector<PIdeal::Term>{{1, 1}, {0, 3}});
    CHECK(I2({}).is_zero());
    CHECK(I2({{2, 1}}).is_zero());
    CHECK_THROWS_AS(I2({{3, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(I2({{0, 0}}), std::invalid_argument);
}

TEST_CASE("sums")
{
    const auto I = I2({{1, 2}, {0, 5}});
    CHECK(sum(I, PIdeal::zero(2)) == I);
    CHECK(sum(I, I) == I);
    CHECK(sum(PIdeal::power(2, 1, 1), PIdeal::power(2, 0, 3)) == I2({{1, 1}, {0, 3}}));
    CHECK(sum(I, PIdeal::unit(2)).is_unit());
}

TEST_CASE("containment")
{
    CHECK(contains(PIdeal::power(2, 0, 1), PIdeal::power(2, 1, 1)));
    CHECK_FALSE(contains(PIdeal::power(2, 1, 1), PIdeal::power(2, 0, 3)));
    const auto I = I2({{1, 1}, {0, 3}});
    CHECK(contains(I, I));
    // x_{2,1}^3 lies in p_0^3 but not in p_1
    const Monomial witness{0, 3};
    CHECK(monomial_in(PIdeal::power(2, 0, 3), witness, 1));
    CHECK_FALSE(monomial_in(PIdeal::power(2, 1, 1), witness, 1));
}

TEST_CASE("radicals and primes")
{
    CHECK(radical(PIdeal::power(2, 0, 3)) == PIdeal::power(2, 0, 1));
    CHECK(radical(I2({{1, 2}, {0, 5}})) == PIdeal::power(2, 0, 1));
    CHECK(radical(PIdeal::zero(2)).is_zero());
    CHECK(is_prime(PIdeal::power(2, 1, 1)));
    CHECK_FALSE(is_prime(PIdeal::power(2, 0, 2)));
    CHECK_FALSE(is_prime(I2({{1, 1}, {0, 3}})));
    CHECK(is_prime(PIdeal::zero(2)));
    CHECK_FALSE(is_prime(PIdeal::unit(2)));
}

TEST_CASE("prime chains")
{
    const auto c1 = prime_chain(1);
    CHECK(c1 == std::vector<PIdeal>{PIdeal::zero(1), PIdeal::power(1, 0, 1)});
    const auto c3 = prime_chain(3);
    REQUIRE(c3.size() == 4);
    for (std::size_t p = 1; p < c3.size(); ++p) {
        CHECK(contains(c3[p], c3[p - 1]));
        CHECK_FALSE(contains(c3[p - 1], c3[p]));
    }
}

TEST_CASE("monomial realizations")
{
    CHECK(monomial_realize(PIdeal::zero(2), 2, 3).empty());
    const auto vars = monomial_realize(PIdeal::power(2, 0, 1), 2, 1);
    CHECK(vars.size() == 4);
    CHECK(monomial_realize(PIdeal::power(2, 1, 2), 1, 2) == std::set<Monomial>{{2, 0}});
    for (const auto& I : all_canonical_ideals(2, 3))
        for (const auto& m : monomials_up_to(2, 2, 4))
            CHECK(monomial_in(I, m, 2) == direct_member(I, m, 2));
}

TEST_CASE("printing")
{
    std::ostringstream os;
    os << I2({{1, 1}, {0, 3}}) << ' ' << PIdeal::zero(2) << ' ' << PIdeal::unit(2);
    CHECK(os.str() == "[(1,1),(0,3)] [] A");
}
