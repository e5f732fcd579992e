#include <doctest.h>

#include "helpers.hpp"
#include "spherical/modelvarieties.hpp"
#include "spherical/smoothness.hpp"

using namespace spherical;
using spherical::testing::V;
using spherical::testing::VV;

namespace {

std::set<int> S(std::initializer_list<int> xs) { return std::set<int>(xs); }

WeightMonoid full_sc(const std::vector<SimpleType>& types) {
    return full_weight_monoid(simply_connected(types));
}

}  // namespace

TEST_CASE("s_gamma on pinned monoids") {
    // no constraints: everything is distinguished
    auto a2a2 = simply_connected({SimpleType(Family::A, 2), SimpleType(Family::A, 2)});
    WeightMonoid diag(a2a2, {V({1, 0, 1, 0})});
    CHECK(s_gamma(diag, sigma_n_of_gsaturated(diag)) == S({0, 1, 2, 3}));

    auto c2 = full_sc({SimpleType(Family::C, 2)});  // canonical B2: alpha2 short
    CHECK(s_gamma(c2, sigma_n_of_gsaturated(c2)) == S({1}));

    auto so3 = adjoint({SimpleType(Family::A, 1)});
    WeightMonoid so3full(so3, VV({{1}}));
    CHECK(s_gamma(so3full, sigma_n_of_gsaturated(so3full)).empty());

    auto b3 = full_sc({SimpleType(Family::B, 3)});
    CHECK(s_gamma(b3, sigma_n_of_gsaturated(b3)) == S({0, 1, 2}));

    // s_p is always contained in s_gamma
    auto sg = s_gamma(diag, sigma_n_of_gsaturated(diag));
    auto sp = diag.s_p();
    CHECK(std::includes(sg.begin(), sg.end(), sp.begin(), sp.end()));
}

TEST_CASE("conditions a and b") {
    auto a2a2 = simply_connected({SimpleType(Family::A, 2), SimpleType(Family::A, 2)});
    WeightMonoid diag(a2a2, {V({1, 0, 1, 0})});
    auto sn = sigma_n_of_gsaturated(diag);
    auto sg = s_gamma(diag, sn);
    auto [ok_a, div] = condition_a(diag, sg);
    CHECK(ok_a);  // the deduplicated restriction set is {1} inside Z
    CHECK(div == V({1}));
    auto [ok_b, viol] = condition_b(diag, sg);
    CHECK(!ok_b);
    REQUIRE(viol.size() == 1);
    CHECK(viol[0] == std::pair<int, int>(0, 2));

    // distinct restrictions make (b) vacuous
    auto a1a1 = full_sc({SimpleType(Family::A, 1), SimpleType(Family::A, 1)});
    auto sg2 = s_gamma(a1a1, sigma_n_of_gsaturated(a1a1));
    CHECK(condition_b(a1a1, sg2).first);

    // a non-primitive restriction fails (a)
    auto a1 = simply_connected({SimpleType(Family::A, 1)});
    WeightMonoid even(a1, VV({{2}}));
    auto [ok, d2] = condition_a(even, S({0}));
    CHECK(!ok);
    CHECK(d2 == V({2}));
}

TEST_CASE("decide_smooth on the corpus") {
    {
        auto wm = full_sc({SimpleType(Family::C, 2)});
        Verdict v = decide_smooth(wm);
        CHECK(v.g_saturated);
        REQUIRE(v.smooth.has_value());
        CHECK(*v.smooth);
    }
    {
        auto a2a2 = simply_connected({SimpleType(Family::A, 2), SimpleType(Family::A, 2)});
        WeightMonoid diag(a2a2, {V({1, 0, 1, 0})});
        Verdict v = decide_smooth(diag);
        CHECK(v.g_saturated);
        CHECK(v.s_p == S({1, 3}));
        CHECK(v.sigma_n.empty());
        CHECK(v.s_gamma == S({0, 1, 2, 3}));
        CHECK(v.failed_conditions == std::set<char>{'b'});
        REQUIRE(v.smooth.has_value());
        CHECK(!*v.smooth);
    }
    {
        auto a1 = simply_connected({SimpleType(Family::A, 1)});
        WeightMonoid zero(a1, {});
        Verdict v = decide_smooth(zero);
        REQUIRE(v.smooth.has_value());
        CHECK(*v.smooth);  // the origin is a point
        CHECK(v.s_gamma == S({0}));
    }
    {
        auto a1a1 = simply_connected({SimpleType(Family::A, 1), SimpleType(Family::A, 1)});
        WeightMonoid luna(a1a1, VV({{2, 0}, {4, 2}}));
        Verdict v = decide_smooth(luna);
        CHECK(!v.g_saturated);
        CHECK(v.normal);
        CHECK(!v.smooth.has_value());
    }
}

TEST_CASE("verdict invariance") {
    auto a2a2 = simply_connected({SimpleType(Family::A, 2), SimpleType(Family::A, 2)});
    WeightMonoid base(a2a2, VV({{1, 0, 1, 0}, {0, 1, 0, 1}}));
    Verdict v0 = decide_smooth(base);

    // generator permutation
    WeightMonoid perm(a2a2, VV({{0, 1, 0, 1}, {1, 0, 1, 0}}));
    Verdict v1 = decide_smooth(perm);
    CHECK(v0.smooth == v1.smooth);
    CHECK(v0.failed_conditions == v1.failed_conditions);
    CHECK(v0.s_gamma == v1.s_gamma);

    // unimodular coordinate change: weights by A, coroots by inverse transpose
    IntMatrix a(VV({{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 3, 1}}));
    IntMatrix ainv(VV({{1, -1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, -3, 1}}));
    auto apply = [&](const IntVec& v, const IntMatrix& m) {
        IntVec out(4, 0);
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t i = 0; i < 4; ++i) out[j] += v[i] * m.a[i][j];
        return out;
    };
    std::vector<IntVec> roots, coroots, gens;
    for (const auto& r : a2a2.simple_roots) roots.push_back(apply(r, a));
    for (const auto& c : a2a2.simple_coroots) coroots.push_back(apply(c, ainv.transpose()));
    for (const auto& g : base.generators()) gens.push_back(apply(g, a));
    BasedRootDatum moved = custom_datum(roots, coroots, 4);
    Verdict v2 = decide_smooth(WeightMonoid(moved, gens));
    CHECK(v0.smooth == v2.smooth);
    CHECK(v0.failed_conditions == v2.failed_conditions);
    CHECK(v0.s_gamma == v2.s_gamma);

    // diagram automorphism: swap the two factors
    WeightMonoid swapped(a2a2, VV({{1, 0, 1, 0}, {0, 1, 0, 1}}));
    Verdict v3 = decide_smooth(swapped);
    CHECK(v0.smooth == v3.smooth);
}
