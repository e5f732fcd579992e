#pragma once

#include "spherical/linalg.hpp"

namespace spherical {

struct NonPointedCone : std::runtime_error {
    explicit NonPointedCone(const std::string& what) : std::runtime_error(what) {}
};

enum class Rel { Ge, Gt, Le, Eq };

// coef . x + cst  REL  0
struct LinearConstraint {
    RatVec coef;
    Rat cst = 0;
    Rel rel = Rel::Ge;
};

struct InequalitySystem {
    std::size_t vars = 0;
    std::vector<LinearConstraint> rows;

    void add(RatVec coef, Rat cst, Rel rel) { rows.push_back({std::move(coef), std::move(cst), rel}); }
};

struct FeasibilityResult {
    std::optional<RatVec> witness;
    // Multipliers over the canonical rows (Le negated, Eq split in two), all
    // nonnegative; their combination has zero coefficients and a contradictory
    // constant. Present whenever the system is infeasible.
    std::optional<RatVec> farkas;
    bool feasible() const { return witness.has_value(); }
};

// Canonical form used for Farkas certificates: every row as coef.x + cst >= 0
// (or > 0), Le rows negated, Eq rows split into a >= and a <= pair.
std::vector<LinearConstraint> canonical_rows(const InequalitySystem& sys);

FeasibilityResult feasible_strict(const InequalitySystem& sys);

bool check_witness(const InequalitySystem& sys, const RatVec& x);
bool check_farkas(const InequalitySystem& sys, const RatVec& multipliers);

// Extreme rays of {x in Q^dim : n . x >= 0 for all n}, primitive integer.
// Throws NonPointedCone when the cone contains a line.
std::vector<IntVec> inequality_cone_rays(const std::vector<IntVec>& normals, std::size_t dim);

// Primitive integer normals of the facets of cone(generators); the cone must
// span Q^dim. Empty input gives an empty result.
std::vector<IntVec> dual_cone_rays(const std::vector<IntVec>& generators, std::size_t dim);

// Primitive generators of the extreme rays of cone(generators).
std::vector<IntVec> cone_extreme_rays(const std::vector<IntVec>& generators, std::size_t dim);

// Minimal generating set of {lattice points of Z^dim in cone(generators)}.
// Throws NonPointedCone when the cone is not pointed.
std::vector<IntVec> hilbert_basis(const std::vector<IntVec>& generators, std::size_t dim);

// Same monoid computation relative to a sublattice containing the generators.
std::vector<IntVec> hilbert_basis(const std::vector<IntVec>& generators, const Sublattice& lattice);

// Membership of target in the monoid of nonnegative integer combinations of
// the generators. Throws NonPointedCone when the generators span a line pair.
bool in_monoid(const IntVec& target, const std::vector<IntVec>& generators);

}  // namespace spherical
