#include "spherical/smoothness.hpp"

#include <algorithm>

namespace spherical {

namespace {

InequalitySystem s_gamma_system(const WeightMonoid& wm, const std::vector<SphericalRoot>& sigma_n,
                                std::size_t alpha) {
    const BasedRootDatum& datum = wm.datum();
    const std::size_t n = datum.num_simple();
    InequalitySystem sys;
    sys.vars = n;
    for (std::size_t b = 0; b < n; ++b) {
        RatVec row(n, Rat(0));
        row[b] = 1;
        sys.add(std::move(row), 0, Rel::Ge);
    }
    {
        RatVec row(n, Rat(0));
        row[alpha] = 1;
        sys.add(std::move(row), -1, Rel::Ge);  // c_alpha >= 1
    }
    for (const auto& s : sigma_n) {
        IntVec w = datum.root_combination(s.coeffs);
        RatVec row(n);
        for (std::size_t b = 0; b < n; ++b) row[b] = datum.pairing(b, w);
        sys.add(std::move(row), 0, Rel::Le);
    }
    return sys;
}

}  // namespace

std::set<int> s_gamma(const WeightMonoid& wm, const std::vector<SphericalRoot>& sigma_n,
                      RatVec* witness_out) {
    const std::size_t n = wm.datum().num_simple();
    std::set<int> out;
    RatVec total(n, Rat(0));
    for (std::size_t alpha = 0; alpha < n; ++alpha) {
        auto res = feasible_strict(s_gamma_system(wm, sigma_n, alpha));
        if (!res.feasible()) continue;
        out.insert(static_cast<int>(alpha));
        for (std::size_t b = 0; b < n; ++b) total[b] += (*res.witness)[b];
    }
    // the sum of witnesses is positive exactly on s_gamma and still feasible
    for (std::size_t b = 0; b < n; ++b) {
        bool in = out.count(static_cast<int>(b)) > 0;
        if (in != (total[b] > 0)) throw std::logic_error("s_gamma: merged witness support mismatch");
    }
    for (const auto& s : sigma_n) {
        IntVec w = wm.datum().root_combination(s.coeffs);
        Rat v = 0;
        for (std::size_t b = 0; b < n; ++b) v += total[b] * Rat(wm.datum().pairing(b, w));
        if (v > 0) throw std::logic_error("s_gamma: merged witness violates the valuation cone");
    }
    if (witness_out) *witness_out = std::move(total);
    return out;
}

std::pair<bool, IntVec> condition_a(const WeightMonoid& wm, const std::set<int>& s_gamma_set) {
    std::set<int> sp = wm.s_p();
    std::vector<IntVec> restrictions;
    for (int alpha : s_gamma_set) {
        if (sp.count(alpha)) continue;
        IntVec r = wm.restrict_coroot(alpha);
        if (std::find(restrictions.begin(), restrictions.end(), r) == restrictions.end())
            restrictions.push_back(std::move(r));
    }
    IntVec divisors;
    bool ok = extends_to_basis(restrictions, wm.lattice_rank(), &divisors);
    return {ok, divisors};
}

std::pair<bool, std::vector<std::pair<int, int>>> condition_b(const WeightMonoid& wm,
                                                              const std::set<int>& s_gamma_set) {
    std::set<int> sp = wm.s_p();
    std::vector<int> roots;
    for (int alpha : s_gamma_set)
        if (!sp.count(alpha)) roots.push_back(alpha);
    std::vector<std::pair<int, int>> violators;
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            if (wm.restrict_coroot(roots[i]) != wm.restrict_coroot(roots[j])) continue;
            IntVec sum = add(wm.datum().simple_roots[roots[i]], wm.datum().simple_roots[roots[j]]);
            if (!wm.lattice().contains(sum)) violators.emplace_back(roots[i], roots[j]);
        }
    return {violators.empty(), violators};
}

std::pair<bool, std::optional<Decomposition>> condition_c(const WeightMonoid& wm,
                                                          const std::set<int>& s_gamma_set,
                                                          const std::vector<SphericalRoot>& sigma_n) {
    std::vector<int> nodes(s_gamma_set.begin(), s_gamma_set.end());
    std::set<int> sp;
    for (int alpha : wm.s_p())
        if (s_gamma_set.count(alpha)) sp.insert(alpha);
    std::vector<IntVec> sigma;
    for (const auto& s : sigma_n) {
        bool inside = true;
        for (int v : s.support)
            if (!s_gamma_set.count(v)) { inside = false; break; }
        if (inside) sigma.push_back(s.coeffs);
    }
    auto triple = AdmissibleTriple::make(wm.datum(), nodes, sp, sigma);
    auto dec = is_admissible(triple, wm.datum());
    if (dec && !decomposition_matches(*dec, triple, wm.datum()))
        throw std::logic_error("condition_c: decomposition witness failed to reassemble");
    return {dec.has_value(), dec};
}

Verdict decide_smooth(const WeightMonoid& wm) {
    Verdict v;
    v.s_p = wm.s_p();
    for (std::size_t i = 0; i < wm.datum().num_simple(); ++i)
        v.restricted_coroots.push_back(wm.restrict_coroot(i));
    v.normal = wm.is_normal();
    v.g_saturated = wm.is_g_saturated();
    if (!v.g_saturated) return v;

    v.sigma_n = sigma_n_of_gsaturated(wm);

    // cross-check: no simple root can be N-spherical, and every simple root
    // adapted to a saturated monoid carries a single functional
    for (const auto& s : v.sigma_n)
        if (s.is_simple()) throw std::logic_error("decide_smooth: simple N-spherical root");
    for (const auto& s : sigma_sc_of_monoid(wm)) {
        if (!s.is_simple()) continue;
        auto a = wm.a_set(s.support[0]);
        if (!a || a->size() != 1) throw std::logic_error("decide_smooth: |a| != 1 on a saturated monoid");
    }

    v.s_gamma = s_gamma(wm, v.sigma_n, &v.s_gamma_witness);
    auto [ok_a, divisors] = condition_a(wm, v.s_gamma);
    auto [ok_b, violators] = condition_b(wm, v.s_gamma);
    auto [ok_c, dec] = condition_c(wm, v.s_gamma, v.sigma_n);
    v.snf_divisors = divisors;
    v.violating_pairs = violators;
    v.decomposition = dec;
    if (!ok_a) v.failed_conditions.insert('a');
    if (!ok_b) v.failed_conditions.insert('b');
    if (!ok_c) v.failed_conditions.insert('c');
    v.smooth = v.failed_conditions.empty();
    return v;
}

}  // namespace spherical
