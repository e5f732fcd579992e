#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace spherical {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Int gcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }

inline Int dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline IntVec add(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline IntVec sub(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline IntVec scale(const Int& c, const IntVec& a) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline bool is_zero(const IntVec& a) {
    for (const auto& x : a) if (x != 0) return false;
    return true;
}

// Divide by the gcd of the entries; sign is untouched. Zero vector stays zero.
inline IntVec primitive(IntVec v) {
    Int g = 0;
    for (const auto& x : v) g = gcd(g, x);
    if (g > 1) for (auto& x : v) x /= g;
    return v;
}

inline std::string to_string(const Int& x) { return x.str(); }
inline std::string to_string(const Rat& x) {
    if (boost::multiprecision::denominator(x) == 1)
        return boost::multiprecision::numerator(x).str();
    return boost::multiprecision::numerator(x).str() + "/" + boost::multiprecision::denominator(x).str();
}

}  // namespace spherical
