#pragma once

#include <set>

#include "spherical/linalg.hpp"

namespace spherical {

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);
Family family_from_letter(char c);

// Rank-2 doubly laced diagrams are stored as B2 and D3 as A3, so equal root
// systems compare equal.
struct SimpleType {
    Family family;
    int rank;

    SimpleType(Family f, int r);
    bool operator==(const SimpleType& o) const { return family == o.family && rank == o.rank; }
    bool operator<(const SimpleType& o) const {
        if (family != o.family) return family < o.family;
        return rank < o.rank;
    }
    std::string str() const;
};

// entry[i][j] = <alpha_i^vee, alpha_j>, Bourbaki numbering.
IntMatrix cartan_matrix(const SimpleType& t);

struct BasedRootDatum {
    std::size_t rank = 0;  // dimension of the character lattice
    std::vector<IntVec> simple_roots;
    std::vector<IntVec> simple_coroots;
    std::vector<SimpleType> component_types;
    std::vector<std::vector<int>> component_nodes;  // Bourbaki order per component

    std::size_t num_simple() const { return simple_roots.size(); }
    Int pairing(std::size_t coroot_index, const IntVec& weight) const;
    Int cartan(std::size_t i, std::size_t j) const { return pairing(i, simple_roots[j]); }
    bool is_dominant(const IntVec& weight) const;
    // weight written over the simple-root coefficients, as a lattice vector
    IntVec root_combination(const IntVec& coeffs) const;
};

BasedRootDatum simply_connected(const std::vector<SimpleType>& types, std::size_t torus_rank = 0);
BasedRootDatum adjoint(const std::vector<SimpleType>& types);
BasedRootDatum custom_datum(std::vector<IntVec> simple_roots, std::vector<IntVec> simple_coroots,
                            std::size_t rank);

struct DynkinDiagram {
    std::vector<int> nodes;  // ascending global indices
    IntMatrix pairing;       // pairing[i][j] over node positions

    std::size_t size() const { return nodes.size(); }
    bool adjacent(std::size_t i, std::size_t j) const { return i != j && pairing.a[i][j] != 0; }
};

DynkinDiagram subdiagram(const BasedRootDatum& datum, const std::vector<int>& nodes);
std::vector<DynkinDiagram> components(const DynkinDiagram& d);

struct TypedLabeling {
    SimpleType type;
    // bourbaki[p] = global node playing alpha_{p+1}; lexicographically minimal
    // among the valid labelings
    std::vector<int> bourbaki;
};

// Connected diagrams only; asserts the diagram is of finite type.
TypedLabeling type_of(const DynkinDiagram& d);

// All permutations of node positions preserving the pairing matrix.
std::vector<std::vector<int>> diagram_automorphisms(const DynkinDiagram& d);

}  // namespace spherical
