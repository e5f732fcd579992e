#include "spherical/sphericalroots.hpp"

#include <algorithm>

namespace spherical {

namespace {

SphericalRoot make_root(const BasedRootDatum& datum, const std::vector<int>& bourbaki,
                        const std::vector<Int>& pattern_coeffs, std::string pattern) {
    SphericalRoot r;
    r.coeffs.assign(datum.num_simple(), Int(0));
    for (std::size_t p = 0; p < bourbaki.size(); ++p) r.coeffs[bourbaki[p]] = pattern_coeffs[p];
    r.pattern = std::move(pattern);
    r.support = bourbaki;
    std::sort(r.support.begin(), r.support.end());
    r.labeling = bourbaki;
    return r;
}

std::vector<Int> ones(std::size_t n) { return std::vector<Int>(n, Int(1)); }
std::vector<Int> twos(std::size_t n) { return std::vector<Int>(n, Int(2)); }

// every Bourbaki numbering of the support can carry a pattern, so patterns
// are emitted for each labeling in the automorphism orbit
std::vector<std::vector<int>> all_labelings(const DynkinDiagram& comp, const TypedLabeling& tl) {
    std::map<int, std::size_t> pos_of;
    for (std::size_t p = 0; p < comp.nodes.size(); ++p) pos_of[comp.nodes[p]] = p;
    std::vector<std::vector<int>> out;
    for (const auto& perm : diagram_automorphisms(comp)) {
        std::vector<int> v(tl.bourbaki.size());
        for (std::size_t s = 0; s < tl.bourbaki.size(); ++s)
            v[s] = comp.nodes[perm[pos_of.at(tl.bourbaki[s])]];
        out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void roots_on_labeling(const BasedRootDatum& datum, const SimpleType& type,
                       const std::vector<int>& lab, std::vector<SphericalRoot>& out) {
    const std::size_t n = lab.size();
    switch (type.family) {
        case Family::A: {
            if (n >= 2) out.push_back(make_root(datum, lab, ones(n), "A_n sum"));
            if (n == 3) out.push_back(make_root(datum, lab, {1, 2, 1}, "A3 1-2-1"));
            break;
        }
        case Family::B: {
            out.push_back(make_root(datum, lab, ones(n), "B_n sum"));
            out.push_back(make_root(datum, lab, twos(n), "2·B_n sum"));
            if (n == 3) out.push_back(make_root(datum, lab, {1, 2, 3}, "B3 1-2-3"));
            break;
        }
        case Family::C: {
            std::vector<Int> c = twos(n);
            c.front() = 1;
            c.back() = 1;
            out.push_back(make_root(datum, lab, c, "C_n"));
            break;
        }
        case Family::D: {
            std::vector<Int> c = twos(n);
            c[n - 2] = 1;
            c[n - 1] = 1;
            out.push_back(make_root(datum, lab, c, "D_n"));
            break;
        }
        case Family::F: {
            out.push_back(make_root(datum, lab, {1, 2, 3, 2}, "F4"));
            break;
        }
        case Family::G: {
            out.push_back(make_root(datum, lab, {4, 2}, "G2 4-2"));
            out.push_back(make_root(datum, lab, {1, 1}, "G2 1-1"));
            break;
        }
        case Family::E:
            break;
    }
}

}  // namespace

std::vector<SphericalRoot> enumerate_sigma_sc(const BasedRootDatum& datum) {
    const std::size_t n = datum.num_simple();
    std::vector<SphericalRoot> out;
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(make_root(datum, {static_cast<int>(i)}, {Int(1)}, "A1 simple"));
        out.push_back(make_root(datum, {static_cast<int>(i)}, {Int(2)}, "A1 double"));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (datum.cartan(i, j) == 0)
                out.push_back(make_root(datum, {static_cast<int>(i), static_cast<int>(j)},
                                        ones(2), "A1×A1"));
    // connected subsets of size >= 2
    for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
        std::vector<int> subset;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t(1) << i)) subset.push_back(static_cast<int>(i));
        if (subset.size() < 2) continue;
        DynkinDiagram sub = subdiagram(datum, subset);
        if (components(sub).size() != 1) continue;
        TypedLabeling tl = type_of(sub);
        for (const auto& lab : all_labelings(sub, tl)) roots_on_labeling(datum, tl.type, lab, out);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_compatible(const SphericalRoot& sigma, const std::set<int>& sp, const BasedRootDatum& datum) {
    IntVec as_weight = datum.root_combination(sigma.coeffs);
    std::set<int> zero_in_support, zero_in_all;
    for (std::size_t i = 0; i < datum.num_simple(); ++i)
        if (datum.pairing(i, as_weight) == 0) zero_in_all.insert(static_cast<int>(i));
    for (int i : sigma.support)
        if (zero_in_all.count(i)) zero_in_support.insert(i);

    std::set<int> lower = zero_in_support, upper = zero_in_all;
    if (sigma.pattern == "B_n sum") {
        int tail = sigma.labeling.back();  // the short end
        lower.erase(tail);
        upper.erase(tail);
    } else if (sigma.pattern == "C_n") {
        lower.erase(sigma.labeling.front());
    }
    return std::includes(sp.begin(), sp.end(), lower.begin(), lower.end()) &&
           std::includes(upper.begin(), upper.end(), sp.begin(), sp.end());
}

std::vector<SphericalRoot> sigma_n_of_gsaturated(const WeightMonoid& wm) {
    if (!wm.is_g_saturated()) throw std::invalid_argument("monoid is not G-saturated");
    const BasedRootDatum& datum = wm.datum();
    std::set<int> sp = wm.s_p();
    std::vector<SphericalRoot> out;
    for (const auto& sigma : enumerate_sigma_sc(datum)) {
        if (sigma.is_simple()) continue;
        IntVec as_weight = datum.root_combination(sigma.coeffs);
        if (!wm.lattice().contains(as_weight)) continue;
        if (!is_compatible(sigma, sp, datum)) continue;
        if (sigma.is_double()) {
            std::size_t alpha = sigma.support[0];
            bool even = true;
            for (const auto& b : wm.lattice().basis)
                if (datum.pairing(alpha, b) % 2 != 0) { even = false; break; }
            if (!even) continue;
        }
        if (sigma.is_orthogonal_pair()) {
            std::size_t a = sigma.support[0], b = sigma.support[1];
            if (wm.restrict_coroot(a) != wm.restrict_coroot(b)) continue;
        }
        out.push_back(sigma);
    }
    return out;
}

std::vector<SphericalRoot> sigma_sc_of_monoid(const WeightMonoid& wm) {
    if (!wm.is_normal()) throw std::invalid_argument("monoid is not normal");
    const BasedRootDatum& datum = wm.datum();
    std::set<int> sp = wm.s_p();
    const auto& facets = wm.facet_normals();
    std::vector<SphericalRoot> out;
    for (const auto& sigma : enumerate_sigma_sc(datum)) {
        IntVec as_weight = datum.root_combination(sigma.coeffs);
        auto coords = wm.lattice_coords(as_weight);
        if (!coords) continue;                              // (1)
        if (!is_compatible(sigma, sp, datum)) continue;     // (2)
        if (!sigma.is_simple()) {                           // (3)
            bool ok = true;
            for (const auto& delta : facets) {
                if (dot(delta, *coords) <= 0) continue;
                bool matched = false;
                for (std::size_t b = 0; b < datum.num_simple() && !matched; ++b) {
                    if (sp.count(static_cast<int>(b))) continue;
                    IntVec cr = wm.restrict_coroot(b);
                    // cr = q * delta with q > 0
                    Int num = 0, den = 0;  // q = num/den from the first nonzero slot
                    bool proportional = true;
                    for (std::size_t k = 0; k < cr.size() && proportional; ++k) {
                        if (delta[k] == 0) { proportional = (cr[k] == 0); continue; }
                        if (den == 0) { num = cr[k]; den = delta[k]; }
                        else if (cr[k] * den != num * delta[k]) proportional = false;
                    }
                    if (proportional && den != 0 && num * den > 0) matched = true;
                }
                if (!matched) { ok = false; break; }
            }
            if (!ok) continue;
        } else {                                            // (4)
            std::size_t alpha = sigma.support[0];
            auto a = wm.a_set(alpha);
            if (!a || a->empty() || a->size() > 2) continue;           // (4a)
            bool ok = true;
            for (const auto& delta : *a) {                             // (4b)
                for (const auto& g : wm.generator_coords())
                    if (dot(delta, g) < 0) { ok = false; break; }
                if (!ok) break;
            }
            if (!ok) continue;
            for (const auto& delta : facets)                           // (4c)
                if (dot(delta, *coords) > 1) { ok = false; break; }
            if (!ok) continue;
        }
        if (sigma.is_double()) {                            // (5)
            std::size_t alpha = sigma.support[0];
            if (wm.lattice().contains(datum.simple_roots[alpha])) continue;
            bool even = true;
            for (const auto& g : wm.generators())
                if (datum.pairing(alpha, g) % 2 != 0) { even = false; break; }
            if (!even) continue;
        }
        if (sigma.is_orthogonal_pair()) {                   // (6)
            std::size_t a = sigma.support[0], b = sigma.support[1];
            bool equal = true;
            for (const auto& g : wm.generators())
                if (datum.pairing(a, g) != datum.pairing(b, g)) { equal = false; break; }
            if (!equal) continue;
        }
        out.push_back(sigma);
    }
    return out;
}

bool is_adapted_set(const std::vector<SphericalRoot>& sigma, const WeightMonoid& wm) {
    auto adapted = sigma_sc_of_monoid(wm);
    for (const auto& s : sigma)
        if (std::find(adapted.begin(), adapted.end(), s) == adapted.end()) return false;
    for (const auto& s : sigma) {
        if (!s.is_simple()) continue;
        std::size_t alpha = s.support[0];
        auto a = wm.a_set(alpha);
        if (!a) return false;
        for (const auto& delta : *a) {
            for (const auto& gamma : sigma) {
                IntVec as_weight = wm.datum().root_combination(gamma.coeffs);
                auto coords = wm.lattice_coords(as_weight);
                if (!coords) return false;
                if (dot(delta, *coords) <= 0) continue;
                if (!gamma.is_simple()) return false;
                auto ag = wm.a_set(gamma.support[0]);
                if (!ag || std::find(ag->begin(), ag->end(), delta) == ag->end()) return false;
            }
        }
    }
    return true;
}

InequalitySystem valuation_cone(const WeightMonoid& wm, const std::vector<SphericalRoot>& sigma_n) {
    InequalitySystem sys;
    sys.vars = wm.lattice_rank();
    for (const auto& s : sigma_n) {
        IntVec as_weight = wm.datum().root_combination(s.coeffs);
        auto coords = wm.lattice_coords(as_weight);
        if (!coords) throw std::invalid_argument("valuation_cone: root outside the lattice");
        RatVec row(sys.vars);
        for (std::size_t i = 0; i < sys.vars; ++i) row[i] = (*coords)[i];
        sys.add(std::move(row), 0, Rel::Le);
    }
    return sys;
}

}  // namespace spherical
