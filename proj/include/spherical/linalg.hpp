#pragma once

#include <optional>

#include "spherical/arith.hpp"

namespace spherical {

struct IntMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<IntVec> a;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r, IntVec(c, 0)) {}
    explicit IntMatrix(std::vector<IntVec> entries);

    static IntMatrix identity(std::size_t n);

    IntVec& operator[](std::size_t i) { return a[i]; }
    const IntVec& operator[](std::size_t i) const { return a[i]; }

    IntMatrix mul(const IntMatrix& other) const;
    IntMatrix transpose() const;
    bool operator==(const IntMatrix& other) const { return rows == other.rows && cols == other.cols && a == other.a; }
};

// u * m * v = d, with u and v unimodular and d diagonal with d_i >= 0, d_i | d_{i+1}.
struct SmithDecomposition {
    IntMatrix u, d, v;
    IntVec divisors() const;  // nonzero diagonal entries
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

// Determinant by fraction-free elimination; square matrices only.
Int determinant(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

// Basis of {x in Z^cols : m x = 0}, saturated in Z^cols.
std::vector<IntVec> integer_kernel(const IntMatrix& m);

// True iff the vectors are part of a Z-basis of Z^ambient (all elementary
// divisors 1 and rank equal to the count). Vectors must be pairwise distinct.
bool extends_to_basis(const std::vector<IntVec>& vectors, std::size_t ambient,
                      IntVec* divisors_out = nullptr);

// Row lattice with basis kept in Hermite normal form: row echelon, positive
// pivots, entries above each pivot reduced into [0, pivot).
struct Sublattice {
    std::size_t ambient = 0;
    std::vector<IntVec> basis;

    std::size_t rank() const { return basis.size(); }
    bool contains(const IntVec& v) const;
    // Integral coordinates of v over the basis, if any.
    std::optional<IntVec> coordinates(const IntVec& v) const;
    // Rational coordinates over the basis (span membership), if any.
    std::optional<RatVec> rational_coordinates(const IntVec& v) const;
    IntVec from_coordinates(const IntVec& coords) const;
};

Sublattice hermite_basis(const std::vector<IntVec>& rows, std::size_t ambient);

// Smallest sublattice containing l whose quotient in Z^ambient is torsion free.
Sublattice saturate(const Sublattice& l);

}  // namespace spherical
