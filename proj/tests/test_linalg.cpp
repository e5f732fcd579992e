#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "spherical/linalg.hpp"

using namespace spherical;
using spherical::testing::V;
using spherical::testing::VV;

namespace {

void check_snf(const IntMatrix& m) {
    SmithDecomposition s = smith_normal_form(m);
    CHECK(s.u.mul(m).mul(s.v) == s.d);
    CHECK(abs(determinant(s.u)) == 1);
    CHECK(abs(determinant(s.v)) == 1);
    const std::size_t n = std::min(s.d.rows, s.d.cols);
    for (std::size_t i = 0; i < s.d.rows; ++i)
        for (std::size_t j = 0; j < s.d.cols; ++j)
            if (i != j) CHECK(s.d.a[i][j] == 0);
    for (std::size_t i = 0; i < n; ++i) CHECK(s.d.a[i][i] >= 0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (s.d.a[i + 1][i + 1] == 0) continue;
        CHECK(s.d.a[i][i] != 0);
        CHECK(s.d.a[i + 1][i + 1] % s.d.a[i][i] == 0);
    }
}

void check_hnf_shape(const Sublattice& l) {
    std::size_t prev_col = 0;
    bool first = true;
    for (std::size_t i = 0; i < l.basis.size(); ++i) {
        std::size_t col = 0;
        while (col < l.ambient && l.basis[i][col] == 0) ++col;
        REQUIRE(col < l.ambient);
        if (!first) CHECK(col > prev_col);
        first = false;
        prev_col = col;
        CHECK(l.basis[i][col] > 0);
        for (std::size_t j = 0; j < i; ++j) {
            CHECK(l.basis[j][col] >= 0);
            CHECK(l.basis[j][col] < l.basis[i][col]);
        }
    }
}

}  // namespace

TEST_CASE("smith normal form on pinned instances") {
    check_snf(IntMatrix::identity(2));
    CHECK(smith_normal_form(IntMatrix::identity(2)).d == IntMatrix::identity(2));

    // d1 = gcd of the entries = 2, d1*d2 = |det| = 8
    IntMatrix m(VV({{2, 4}, {6, 8}}));
    SmithDecomposition s = smith_normal_form(m);
    check_snf(m);
    CHECK(s.divisors() == V({2, 4}));

    IntMatrix wide(VV({{2, 0}}));
    CHECK(smith_normal_form(wide).divisors() == V({2}));
}

TEST_CASE("smith and hermite forms on random matrices") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> entry(-9, 9);
    std::uniform_int_distribution<int> dim(1, 6);
    for (int trial = 0; trial < 500; ++trial) {
        std::size_t r = dim(rng), c = dim(rng);
        IntMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m.a[i][j] = entry(rng);
        check_snf(m);
        Sublattice l = hermite_basis(m.a, c);
        check_hnf_shape(l);
        for (const auto& row : m.a) CHECK(l.contains(row));
        for (const auto& b : l.basis) {
            // basis rows lie in the row span over Q with the right rank
            CHECK(l.contains(b));
        }
        CHECK(l.rank() == rank(m));
    }
}

TEST_CASE("lattice membership and saturation") {
    Sublattice l = hermite_basis(VV({{2, 0}, {0, 2}}), 2);
    CHECK(l.contains(V({2, 2})));
    CHECK(!l.contains(V({1, 0})));

    Sublattice line = hermite_basis(VV({{2, 0}}), 2);
    Sublattice sat = saturate(line);
    CHECK(sat.rank() == 1);
    CHECK(sat.basis[0] == V({1, 0}));

    Sublattice g = hermite_basis(VV({{1, 0, 1, 0}}), 4);
    CHECK(!g.contains(V({2, -1, 0, 0})));
    CHECK(g.contains(V({3, 0, 3, 0})));
}

TEST_CASE("extends_to_basis") {
    CHECK(extends_to_basis(VV({{1, 0}}), 2));
    CHECK(!extends_to_basis(VV({{2, 0}}), 2));
    IntVec div;
    CHECK(!extends_to_basis(VV({{1, 1}, {1, -1}}), 2, &div));  // det -2
    CHECK(div == V({1, 2}));
    CHECK(extends_to_basis({}, 3));
    CHECK_THROWS_AS(extends_to_basis(VV({{1, 0}, {1, 0}}), 2), std::invalid_argument);
}

TEST_CASE("saturation equals rational span intersection on random lattices") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(-4, 4);
    for (int trial = 0; trial < 100; ++trial) {
        IntMatrix m(2, 3);
        for (auto& row : m.a)
            for (auto& x : row) x = entry(rng);
        Sublattice l = hermite_basis(m.a, 3);
        Sublattice sat = saturate(l);
        CHECK(sat.rank() == l.rank());
        // every saturated basis vector has a rational expression over l and an
        // integer multiple inside l
        for (const auto& b : sat.basis) {
            CHECK(l.rational_coordinates(b).has_value());
            bool multiple = false;
            for (Int k = 1; k <= 12; ++k)
                if (l.contains(scale(k, b))) { multiple = true; break; }
            CHECK(multiple);
        }
        for (const auto& b : l.basis) CHECK(sat.contains(b));
    }
}
