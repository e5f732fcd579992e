#pragma once

#include <initializer_list>
#include <random>

#include "spherical/arith.hpp"

namespace spherical::testing {

inline IntVec V(std::initializer_list<long long> xs) {
    IntVec v;
    for (auto x : xs) v.emplace_back(x);
    return v;
}

inline std::vector<IntVec> VV(std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<IntVec> out;
    for (auto r : rows) out.push_back(V(r));
    return out;
}

}  // namespace spherical::testing
