#pragma once

#include "spherical/admissibility.hpp"

namespace spherical {

struct Verdict {
    bool g_saturated = false;
    bool normal = false;
    std::optional<bool> smooth;          // absent when not G-saturated
    std::set<char> failed_conditions;    // subset of {'a','b','c'}

    // certificate
    std::set<int> s_p;
    std::vector<SphericalRoot> sigma_n;
    std::set<int> s_gamma;
    std::vector<IntVec> restricted_coroots;        // one per simple root
    IntVec snf_divisors;                           // for condition (a)
    std::vector<std::pair<int, int>> violating_pairs;  // condition (b)
    std::optional<Decomposition> decomposition;        // condition (c)
    RatVec s_gamma_witness;                        // positive on s_gamma, zero elsewhere
};

// Largest subset of simple roots whose restricted coroots span a cone meeting
// the valuation cone in its relative interior; computed by one feasibility
// check per root, merged by summing witnesses.
std::set<int> s_gamma(const WeightMonoid& wm, const std::vector<SphericalRoot>& sigma_n,
                      RatVec* witness_out = nullptr);

std::pair<bool, IntVec> condition_a(const WeightMonoid& wm, const std::set<int>& s_gamma_set);
std::pair<bool, std::vector<std::pair<int, int>>> condition_b(const WeightMonoid& wm,
                                                              const std::set<int>& s_gamma_set);
std::pair<bool, std::optional<Decomposition>> condition_c(const WeightMonoid& wm,
                                                          const std::set<int>& s_gamma_set,
                                                          const std::vector<SphericalRoot>& sigma_n);

Verdict decide_smooth(const WeightMonoid& wm);

}  // namespace spherical
