#pragma once

#include <string>
#include <vector>

#include "ratcells/linalg.hpp"
#include "ratcells/numeric.hpp"

namespace ratcells {

/// A character of the torus: an integer vector in the weight lattice.
struct Character {
    Vec coords;

    Character() = default;
    explicit Character(Vec c) : coords(std::move(c)) {}

    int rank() const { return static_cast<int>(coords.size()); }
    bool is_primitive() const { return is_primitive_vec(coords); }
    bool is_zero() const { return is_zero_vec(coords); }

    friend bool operator==(const Character& a, const Character& b) {
        return a.coords == b.coords;
    }
    friend bool operator<(const Character& a, const Character& b) {
        return lex_less(a.coords, b.coords);
    }
};

/// A one-parameter subgroup: an integer vector in the dual (cocharacter) lattice.
struct OneParamSubgroup {
    Vec coords;

    OneParamSubgroup() = default;
    explicit OneParamSubgroup(Vec c) : coords(std::move(c)) {}

    int rank() const { return static_cast<int>(coords.size()); }
};

/// Exact integer pairing <lambda, chi>.
inline Int pairing(const OneParamSubgroup& lambda, const Character& chi) {
    return dot(lambda.coords, chi.coords);
}

inline Int pairing(const Vec& lambda, const Vec& chi) { return dot(lambda, chi); }

/// Index [Z^d : span of the given vectors] when the span has full rank d,
/// computed from the Smith normal form; 0 when the rank is smaller.
inline Int lattice_index(const std::vector<Vec>& vectors) {
    if (vectors.empty()) return 0;
    int d = static_cast<int>(vectors[0].size());
    for (const Vec& v : vectors)
        if (static_cast<int>(v.size()) != d)
            throw dimension_error("lattice_index: vectors of mixed rank");
    IMat m = IMat::from_rows(vectors, d);
    Smith s = smith_normal_form(m);
    if (s.rank < d) return 0;
    Int idx = 1;
    for (int i = 0; i < d; ++i) idx *= s.d.at(i, i);
    return idx;
}

inline Int lattice_index(const std::vector<Character>& chars) {
    std::vector<Vec> vs;
    vs.reserve(chars.size());
    for (const Character& c : chars) vs.push_back(c.coords);
    return lattice_index(vs);
}

} // namespace ratcells
