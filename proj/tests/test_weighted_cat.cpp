#include "oracles.hpp"

#include "wfin/weighted_cat.hpp"

#include <doctest.h>

#include <algorithm>

using namespace wfin;

TEST_CASE("existence of FI morphisms")
{
    CHECK_FALSE(hom_exists(CategoryFlavor::fi(), {0, 1}, {1, 0}));
    CHECK(hom_exists(CategoryFlavor::fi(), {2, 0}, {1, 1}));
    for (const auto& a : compositions_up_to(3, 3))
        CHECK(hom_exists(CategoryFlavor::fi(), a, a));
}

TEST_CASE("hom counts")
{
    CHECK(count_homs(CategoryFlavor::fi(), {2, 0}, {1, 1}) == 2);
    CHECK(count_homs(CategoryFlavor::fb(), {2}, {2}) == 2);
    for (const auto& a : compositions_up_to(3, 3))
        CHECK(count_homs(CategoryFlavor::fi(), Composition::zero(3), a) == 1);
    CHECK(count_homs(CategoryFlavor::fi(), {0, 1}, {1, 0}) == 0);
}

TEST_CASE("enumeration agrees with the brute-force maps")
{
    for (int n = 1; n <= 3; ++n) {
        for (const auto& a : compositions_up_to(n, 3)) {
            for (const auto& b : compositions_up_to(n, 3)) {
                const auto fi = enumerate_homs(CategoryFlavor::fi(), b, a);
                CHECK(static_cast<std::int64_t>(fi.size()) == oracle::fi_count(b, a));
                auto brute = oracle::morphisms(oracle::Cat::FI, 1, b, a);
                std::vector<std::vector<Element>> listed;
                for (const auto& f : fi)
                    listed.push_back(f.images());
                std::sort(brute.begin(), brute.end());
                std::sort(listed.begin(), listed.end());
                CHECK(brute == listed);
                CHECK(enumerate_homs(CategoryFlavor::fb(), b, a).size() == oracle::morphisms(oracle::Cat::FB, 0, b, a).size());
                for (int d = 1; d <= n; ++d)
                    CHECK(enumerate_homs(CategoryFlavor::c(d), b, a).size() == oracle::morphisms(oracle::Cat::C, d, b, a).size());
            }
        }
    }
}

TEST_CASE("composition laws")
{
    const auto objects = compositions_up_to(2, 2);
    const auto fi = CategoryFlavor::fi();
    for (const auto& a : objects) {
        for (const auto& b : objects) {
            for (const auto& f : enumerate_homs(fi, b, a)) {
                CHECK(compose(WeightedInjection::identity(a), f) == f);
                CHECK(compose(f, WeightedInjection::identity(b)) == f);
                for (const auto& c : objects)
                    for (const auto& g : enumerate_homs(fi, c, b))
                        for (const auto& e : objects)
                            for (const auto& h : enumerate_homs(fi, e, c))
                                CHECK(compose(f, compose(g, h)) == compose(compose(f, g), h));
            }
        }
    }
}

TEST_CASE("composition stays in C_d")
{
    for (int d = 1; d <= 2; ++d) {
        const auto flavor = CategoryFlavor::c(d);
        const auto objects = compositions_up_to(2, 3);
        for (const auto& a : objects)
            for (const auto& b : objects)
                for (const auto& f : enumerate_homs(flavor, b, a))
                    for (const auto& c : objects)
                        for (const auto& g : enumerate_homs(flavor, c, b))
                            CHECK(compose(f, g).valid_in(flavor));
    }
}

TEST_CASE("constructor rejects non-morphisms")
{
    CHECK_THROWS_AS(WeightedInjection({0, 1}, {1, 0}, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(WeightedInjection({2, 0}, {2, 0}, {{1, 1}, {1, 1}}), std::invalid_argument);
    CHECK_THROWS(WeightedInjection({1, 0}, {1, 0}, {{1, 2}}));
    CHECK_THROWS_AS(CategoryFlavor::c(0), std::invalid_argument);
}

TEST_CASE("disjoint union")
{
    const WeightedInjection f({1, 0}, {0, 1}, {{2, 1}});
    const WeightedInjection g({1, 0}, {1, 1}, {{1, 1}});
    const auto u = disjoint_union(f, g);
    CHECK(u.source() == Composition{2, 0});
    CHECK(u.target() == Composition{1, 2});
    CHECK(u.images() == std::vector<Element>{{2, 1}, {1, 1}});
}

TEST_CASE("inwards finiteness")
{
    for (int d = 1; d <= 3; ++d)
        CHECK(inward_objects(d, Composition::zero(3)) == std::vector<Composition>{Composition::zero(3)});
    CHECK(inward_objects(1, {2}) == std::vector<Composition>{{0}, {1}, {2}});
    CHECK(inward_objects(2, {1, 0}) == std::vector<Composition>{{1, 0}});
}
