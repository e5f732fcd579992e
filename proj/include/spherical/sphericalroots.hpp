#pragma once

#include "spherical/weightmonoid.hpp"

namespace spherical {

// Nonnegative combination of simple roots matching one of the catalogued
// patterns on its support.
struct SphericalRoot {
    IntVec coeffs;              // over the simple roots
    std::string pattern;
    std::vector<int> support;   // ascending global indices
    std::vector<int> labeling;  // support in Bourbaki order of its subdiagram

    bool operator==(const SphericalRoot& o) const { return coeffs == o.coeffs; }
    bool operator<(const SphericalRoot& o) const { return coeffs < o.coeffs; }
    bool is_simple() const { return pattern == "A1 simple"; }
    bool is_double() const { return pattern == "A1 double"; }
    bool is_orthogonal_pair() const { return pattern == "A1×A1"; }
};

// All spherical roots supported by the root system of the datum.
std::vector<SphericalRoot> enumerate_sigma_sc(const BasedRootDatum& datum);

// Compatibility of a root with a prescribed set of vanishing simple roots.
bool is_compatible(const SphericalRoot& sigma, const std::set<int>& sp, const BasedRootDatum& datum);

// N-spherical roots of a G-saturated monoid. Throws std::invalid_argument
// when the monoid is not G-saturated.
std::vector<SphericalRoot> sigma_n_of_gsaturated(const WeightMonoid& wm);

// Spherical roots adapted to a normal monoid. Throws std::invalid_argument
// when the monoid is not normal.
std::vector<SphericalRoot> sigma_sc_of_monoid(const WeightMonoid& wm);

// Whether a set of spherical roots is adapted to the monoid as a whole.
bool is_adapted_set(const std::vector<SphericalRoot>& sigma, const WeightMonoid& wm);

// Functionals on the lattice that are nonpositive on every given root, as an
// inequality system in dual-basis coordinates.
InequalitySystem valuation_cone(const WeightMonoid& wm, const std::vector<SphericalRoot>& sigma_n);

}  // namespace spherical
