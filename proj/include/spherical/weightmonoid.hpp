#pragma once

#include <map>

#include "spherical/polyhedra.hpp"
#include "spherical/rootdata.hpp"

namespace spherical {

// The monoid generated by a list of dominant weights, together with the
// lattice data derived from it. Immutable after construction.
class WeightMonoid {
  public:
    WeightMonoid(BasedRootDatum datum, std::vector<IntVec> generators);

    const BasedRootDatum& datum() const { return datum_; }
    const std::vector<IntVec>& generators() const { return generators_; }
    const Sublattice& lattice() const { return lattice_; }  // ZGamma
    std::size_t lattice_rank() const { return lattice_.rank(); }
    const std::vector<IntVec>& generator_coords() const { return generator_coords_; }

    // Coordinates over the lattice basis; nullopt when outside the lattice.
    std::optional<IntVec> lattice_coords(const IntVec& weight) const { return lattice_.coordinates(weight); }

    // Coroot of alpha_i as a functional on the lattice, in dual-basis coordinates.
    IntVec restrict_coroot(std::size_t i) const;

    // Simple roots whose coroots vanish on every generator.
    std::set<int> s_p() const;

    // Primitive facet normals of the cone spanned by the generators.
    const std::vector<IntVec>& facet_normals() const { return facet_normals_; }

    // a(alpha) for alpha_i in the lattice: functionals d with <d, alpha> = 1
    // and d or coroot - d a facet normal. Empty optional when alpha_i is not
    // in the lattice.
    std::optional<std::vector<IntVec>> a_set(std::size_t i) const;

    bool is_normal() const;
    bool is_g_saturated() const;

    // Membership of a weight in the monoid itself.
    bool contains(const IntVec& weight) const;

  private:
    BasedRootDatum datum_;
    std::vector<IntVec> generators_;
    Sublattice lattice_;
    std::vector<IntVec> generator_coords_;
    std::vector<IntVec> facet_normals_;
};

struct DualFacetData {
    std::vector<IntVec> e_gamma;
    std::map<int, std::vector<IntVec>> a_map;  // only roots lying in the lattice
};

DualFacetData facet_data(const WeightMonoid& wm);

}  // namespace spherical
