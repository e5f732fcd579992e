#pragma once

#include "spherical/sphericalroots.hpp"

namespace spherical {

// Triple (S', Sp', Sigma') over the global simple roots of a datum.
struct AdmissibleTriple {
    std::vector<int> s_nodes;       // ascending
    std::set<int> sp;               // subset of s_nodes
    std::vector<IntVec> sigma;      // coefficient vectors over all simple roots

    static AdmissibleTriple make(const BasedRootDatum& datum, std::vector<int> s_nodes,
                                 std::set<int> sp, std::vector<IntVec> sigma);
};

// One catalogued piece of a decomposition, with the embedding that realizes
// it: bourbaki[p] = global node used for slot p (family 4 lists the larger
// factor first, then the smaller one).
struct PrimitivePiece {
    int family = 0;  // 1..6
    int n = 0;
    int k = 0;       // family 4 only
    std::vector<int> bourbaki;
};

struct Decomposition {
    std::vector<PrimitivePiece> pieces;
};

// Catalogue triple in slot coordinates: sp as slot indices, sigma as vectors
// of slot coefficients. Throws on out-of-range parameters.
struct CatalogTriple {
    std::size_t slots = 0;
    std::set<int> sp;
    std::vector<IntVec> sigma;
};
CatalogTriple catalog_instance(int family, int n, int k = 0, const SimpleType* family1_type = nullptr);

// Search for a decomposition of the triple into catalogued pieces matched
// through diagram automorphisms. Returns the first witness found.
std::optional<Decomposition> is_admissible(const AdmissibleTriple& triple, const BasedRootDatum& datum);

// Witness check: the pieces reassemble the triple exactly.
bool decomposition_matches(const Decomposition& dec, const AdmissibleTriple& triple,
                           const BasedRootDatum& datum);

}  // namespace spherical
