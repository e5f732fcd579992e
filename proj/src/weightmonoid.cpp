#include "spherical/weightmonoid.hpp"

#include <algorithm>

namespace spherical {

WeightMonoid::WeightMonoid(BasedRootDatum datum, std::vector<IntVec> generators)
    : datum_(std::move(datum)) {
    for (auto& g : generators) {
        if (g.size() != datum_.rank) throw std::invalid_argument("generator has wrong length");
        if (!datum_.is_dominant(g)) throw std::invalid_argument("generator is not dominant");
        if (!is_zero(g)) generators_.push_back(std::move(g));
    }
    std::sort(generators_.begin(), generators_.end());
    generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
    lattice_ = hermite_basis(generators_, datum_.rank);
    for (const auto& g : generators_) {
        auto c = lattice_.coordinates(g);
        generator_coords_.push_back(*c);
    }
    const std::size_t r = lattice_.rank();
    if (r > 0) {
        // pointedness: some functional is strictly positive on every generator
        InequalitySystem sys;
        sys.vars = r;
        for (const auto& g : generator_coords_) {
            RatVec row(r);
            for (std::size_t i = 0; i < r; ++i) row[i] = g[i];
            sys.add(std::move(row), 0, Rel::Gt);
        }
        if (!feasible_strict(sys).feasible())
            throw NonPointedCone("weight monoid generators do not span a pointed cone");
        facet_normals_ = dual_cone_rays(generator_coords_, r);
    }
}

IntVec WeightMonoid::restrict_coroot(std::size_t i) const {
    IntVec out(lattice_.rank());
    for (std::size_t k = 0; k < lattice_.rank(); ++k)
        out[k] = datum_.pairing(i, lattice_.basis[k]);
    return out;
}

std::set<int> WeightMonoid::s_p() const {
    std::set<int> out;
    for (std::size_t i = 0; i < datum_.num_simple(); ++i) {
        bool vanish = true;
        for (const auto& g : generators_)
            if (datum_.pairing(i, g) != 0) { vanish = false; break; }
        if (vanish) out.insert(static_cast<int>(i));
    }
    return out;
}

std::optional<std::vector<IntVec>> WeightMonoid::a_set(std::size_t i) const {
    auto alpha = lattice_.coordinates(datum_.simple_roots[i]);
    if (!alpha) return std::nullopt;
    IntVec coroot = restrict_coroot(i);
    std::set<IntVec> out;
    for (const auto& delta : facet_normals_) {
        if (dot(delta, *alpha) != 1) continue;
        out.insert(delta);
        out.insert(sub(coroot, delta));
    }
    return std::vector<IntVec>(out.begin(), out.end());
}

bool WeightMonoid::contains(const IntVec& weight) const {
    if (!lattice_.contains(weight)) return false;
    return in_monoid(*lattice_.coordinates(weight), generator_coords_);
}

bool WeightMonoid::is_normal() const {
    if (generators_.empty()) return true;
    auto hb = hilbert_basis(generator_coords_, lattice_.rank());
    for (const auto& h : hb)
        if (!in_monoid(h, generator_coords_)) return false;
    return true;
}

bool WeightMonoid::is_g_saturated() const {
    const std::size_t r = lattice_.rank();
    if (r == 0) return true;
    // the dominant cone inside the span of the lattice, in lattice coordinates
    std::vector<IntVec> normals;
    for (std::size_t i = 0; i < datum_.num_simple(); ++i) normals.push_back(restrict_coroot(i));
    std::vector<IntVec> rays;
    try {
        rays = inequality_cone_rays(normals, r);
    } catch (const NonPointedCone&) {
        // the saturation contains a line, the pointed monoid cannot equal it
        return false;
    }
    auto hb = hilbert_basis(rays, r);
    for (const auto& h : hb)
        if (!in_monoid(h, generator_coords_)) return false;
    return true;
}

DualFacetData facet_data(const WeightMonoid& wm) {
    DualFacetData out;
    out.e_gamma = wm.facet_normals();
    for (std::size_t i = 0; i < wm.datum().num_simple(); ++i) {
        auto a = wm.a_set(i);
        if (a) out.a_map[static_cast<int>(i)] = *a;
    }
    return out;
}

}  // namespace spherical
