#include "spherical/modelvarieties.hpp"

#include <algorithm>

namespace spherical {

WeightMonoid full_weight_monoid(const BasedRootDatum& datum) {
    if (datum.rank > datum.num_simple())
        throw NonPointedCone("dominant cone is not pointed: positive central torus rank");
    if (datum.rank == 0) return WeightMonoid(datum, {});
    std::vector<IntVec> rays = inequality_cone_rays(datum.simple_coroots, datum.rank);
    return WeightMonoid(datum, hilbert_basis(rays, datum.rank));
}

std::vector<IntVec> sigma_n_closed_form(const BasedRootDatum& datum) {
    const std::size_t n = datum.num_simple();
    std::vector<IntVec> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (datum.cartan(i, j) == 0) continue;
            IntVec v(n, 0);
            v[i] = 1;
            v[j] = 1;
            out.push_back(std::move(v));
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> s_lambda_plus_closed_form(const SimpleType& type) {
    const int n = type.rank;
    std::vector<int> out;
    auto odds = [&]() {
        for (int i = 1; i <= n; i += 2) out.push_back(i);
    };
    auto all = [&]() {
        for (int i = 1; i <= n; ++i) out.push_back(i);
    };
    auto tail = [&]() {
        for (int i = 2; i <= n; ++i) out.push_back(i);
    };
    switch (type.family) {
        case Family::A:
            if (n % 2 == 1) odds();
            break;
        case Family::B:
            if (n % 2 == 1) all();
            else tail();
            break;
        case Family::C:
            odds();
            break;
        case Family::D:
            if (n % 2 == 0) all();
            else tail();
            break;
        case Family::E:
            if (n == 6) out = {2, 3, 4, 5};
            else all();
            break;
        case Family::F:
            out = {1, 2, 3};
            break;
        case Family::G:
            all();
            break;
    }
    return out;
}

bool has_smooth_model(const BasedRootDatum& datum) {
    Verdict v = decide_smooth(full_weight_monoid(datum));
    if (!v.smooth.has_value()) throw std::logic_error("full weight monoid must be saturated");
    // for simply connected data the answer only depends on the factor families
    if (datum.rank == datum.num_simple() && extends_to_basis(datum.simple_coroots, datum.rank)) {
        bool rule = true;
        for (const auto& t : datum.component_types)
            if (!(t.family == Family::A || t.family == Family::C ||
                  (t.family == Family::B && t.rank == 2)))
                rule = false;
        if (rule != *v.smooth) throw std::logic_error("factor-type rule mismatch");
    }
    return *v.smooth;
}

}  // namespace spherical
