#include <doctest.h>

#include "helpers.hpp"
#include "spherical/weightmonoid.hpp"

using namespace spherical;
using spherical::testing::V;
using spherical::testing::VV;

namespace {

WeightMonoid sl3sl3_rank_one() {
    auto datum = simply_connected({SimpleType(Family::A, 2), SimpleType(Family::A, 2)});
    return WeightMonoid(datum, {V({1, 0, 1, 0})});
}

}  // namespace

TEST_CASE("s_p") {
    // the full monoid of a semisimple group meets every coroot
    auto a2 = simply_connected({SimpleType(Family::A, 2)});
    WeightMonoid full(a2, VV({{1, 0}, {0, 1}}));
    CHECK(full.s_p().empty());

    WeightMonoid diag = sl3sl3_rank_one();
    CHECK(diag.s_p() == std::set<int>{1, 3});

    WeightMonoid zero(a2, {});
    CHECK(zero.s_p() == std::set<int>{0, 1});
    CHECK(zero.lattice_rank() == 0);
}

TEST_CASE("normality") {
    auto a1 = simply_connected({SimpleType(Family::A, 1)});
    WeightMonoid gaps(a1, VV({{2}, {3}}));
    CHECK(!gaps.is_normal());  // the lattice point 1 is missing

    WeightMonoid full(a1, VV({{1}}));
    CHECK(full.is_normal());

    auto a1a1 = simply_connected({SimpleType(Family::A, 1), SimpleType(Family::A, 1)});
    WeightMonoid grid(a1a1, VV({{1, 0}, {0, 1}}));
    CHECK(grid.is_normal());
}

TEST_CASE("saturation") {
    auto a1 = simply_connected({SimpleType(Family::A, 1)});
    CHECK(WeightMonoid(a1, VV({{1}})).is_g_saturated());

    auto a1a1 = simply_connected({SimpleType(Family::A, 1), SimpleType(Family::A, 1)});
    WeightMonoid luna(a1a1, VV({{2, 0}, {4, 2}}));
    CHECK(!luna.is_g_saturated());  // 2w' lies in the lattice but not the monoid
    CHECK(luna.is_normal());
    CHECK(!luna.contains(V({0, 2})));
    CHECK(luna.lattice().contains(V({0, 2})));

    CHECK(sl3sl3_rank_one().is_g_saturated());

    // saturated implies normal on the corpus monoids
    for (const auto& wm : {WeightMonoid(a1, VV({{1}})), sl3sl3_rank_one()}) {
        CHECK(wm.is_g_saturated());
        CHECK(wm.is_normal());
    }
}

TEST_CASE("facet data in rank one") {
    auto a1 = simply_connected({SimpleType(Family::A, 1)});
    WeightMonoid full(a1, VV({{1}}));
    DualFacetData fd = facet_data(full);
    REQUIRE(fd.e_gamma.size() == 1);
    CHECK(fd.e_gamma[0] == V({1}));
    // alpha = 2w pairs to 2 with the only facet normal, so a(alpha) is empty
    REQUIRE(fd.a_map.count(0) == 1);
    CHECK(fd.a_map.at(0).empty());

    WeightMonoid even(a1, VV({{2}}));
    DualFacetData fd2 = facet_data(even);
    REQUIRE(fd2.e_gamma.size() == 1);
    auto a = even.a_set(0);
    REQUIRE(a.has_value());
    CHECK(a->size() == 1);  // delta and coroot - delta coincide

    WeightMonoid zero(a1, {});
    CHECK(facet_data(zero).e_gamma.empty());
}

TEST_CASE("facet data for the luna monoid") {
    auto a1a1 = simply_connected({SimpleType(Family::A, 1), SimpleType(Family::A, 1)});
    WeightMonoid luna(a1a1, VV({{2, 0}, {4, 2}}));
    // lattice 2Z x 2Z with generator coordinates (1,0) and (2,1)
    CHECK(luna.lattice_rank() == 2);
    auto a0 = luna.a_set(0);
    REQUIRE(a0.has_value());
    CHECK(a0->size() == 2);
    auto a1s = luna.a_set(1);
    REQUIRE(a1s.has_value());
    CHECK(a1s->size() == 1);
    for (const auto& delta : *a0)
        for (const auto& g : luna.generator_coords()) CHECK(dot(delta, g) >= 0);
}

TEST_CASE("facet normals vanish on a corank-one set of generators") {
    auto a1a1 = simply_connected({SimpleType(Family::A, 1), SimpleType(Family::A, 1)});
    auto a2 = simply_connected({SimpleType(Family::A, 2)});
    std::vector<WeightMonoid> corpus;
    corpus.emplace_back(a1a1, VV({{2, 0}, {4, 2}}));
    corpus.emplace_back(a2, VV({{1, 0}, {0, 1}}));
    corpus.emplace_back(a2, VV({{1, 0}, {1, 1}, {0, 2}}));
    for (const auto& wm : corpus) {
        const std::size_t r = wm.lattice_rank();
        for (const auto& delta : wm.facet_normals()) {
            std::vector<IntVec> zero_gens;
            for (const auto& g : wm.generator_coords()) {
                Int v = dot(delta, g);
                CHECK(v >= 0);
                if (v == 0) zero_gens.push_back(g);
            }
            REQUIRE(!zero_gens.empty());
            CHECK(rank(IntMatrix(zero_gens)) == r - 1);
        }
    }
}

TEST_CASE("restricted coroots") {
    WeightMonoid diag = sl3sl3_rank_one();
    CHECK(diag.restrict_coroot(0) == V({1}));
    CHECK(diag.restrict_coroot(1) == V({0}));
    CHECK(diag.restrict_coroot(2) == V({1}));

    auto c2 = simply_connected({SimpleType(Family::C, 3)});
    WeightMonoid full(c2, VV({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(full.restrict_coroot(0) == V({1, 0, 0}));
}

TEST_CASE("non-pointed monoids and bad generators are rejected") {
    auto a1 = simply_connected({SimpleType(Family::A, 1)}, 1);  // central torus
    CHECK_THROWS_AS(WeightMonoid(a1, VV({{0, 1}, {0, -1}})), NonPointedCone);
    CHECK_THROWS_AS(WeightMonoid(a1, VV({{-1, 0}})), std::invalid_argument);
    CHECK_NOTHROW(WeightMonoid(a1, VV({{1, 0}, {0, 1}})));
}
