#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "ratcells/errors.hpp"

namespace ratcells {

// Exact arithmetic everywhere; no floating point in the core.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Integer lattice vector (character or one-parameter subgroup coordinates).
using Vec = std::vector<Int>;

inline Int gcd_int(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline Int gcd_vec(const Vec& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd_int(g, x);
    return g;
}

inline bool is_zero_vec(const Vec& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

inline bool is_primitive_vec(const Vec& v) { return gcd_vec(v) == 1; }

/// v divided by the gcd of its entries. Rejects the zero vector.
inline Vec primitivized(const Vec& v) {
    Int g = gcd_vec(v);
    if (g == 0) throw precondition_error("cannot primitivize the zero vector");
    Vec out = v;
    for (Int& x : out) x /= g;
    return out;
}

inline Vec negated(const Vec& v) {
    Vec out = v;
    for (Int& x : out) x = -x;
    return out;
}

inline Int dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw dimension_error("dot product of vectors with ranks " +
                              std::to_string(a.size()) + " and " +
                              std::to_string(b.size()));
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline bool lex_less(const Vec& a, const Vec& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

/// Two primitive vectors generate the same ray iff they are equal.
inline bool same_ray(const Vec& a, const Vec& b) {
    return primitivized(a) == primitivized(b);
}

inline Vec vec_of(std::initializer_list<long long> xs) {
    Vec v;
    v.reserve(xs.size());
    for (long long x : xs) v.emplace_back(x);
    return v;
}

inline std::string int_str(const Int& x) { return x.str(); }

inline std::string rat_str(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace ratcells
