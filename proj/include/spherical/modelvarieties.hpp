#pragma once

#include "spherical/smoothness.hpp"

namespace spherical {

// The monoid of all dominant weights, generated by the Hilbert basis of the
// dominant cone. Throws NonPointedCone for positive central torus rank.
WeightMonoid full_weight_monoid(const BasedRootDatum& datum);

// Closed form for the N-spherical roots of the full monoid of a simply
// connected semisimple group: sums of two distinct non-orthogonal simple
// roots. Used as an oracle.
std::vector<IntVec> sigma_n_closed_form(const BasedRootDatum& datum);

// Closed form for the simple roots singled out by the full monoid of a simply
// connected group, per irreducible factor (1-based Bourbaki indices).
std::vector<int> s_lambda_plus_closed_form(const SimpleType& type);

bool has_smooth_model(const BasedRootDatum& datum);

}  // namespace spherical
