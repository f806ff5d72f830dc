#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "ratcells/numeric.hpp"

namespace ratcells {

enum class WeylFamily { A, B, C, D };

inline std::string family_name(WeylFamily f) {
    switch (f) {
        case WeylFamily::A: return "A";
        case WeylFamily::B: return "B";
        case WeylFamily::C: return "C";
        case WeylFamily::D: return "D";
    }
    return "?";
}

inline WeylFamily family_from_name(const std::string& s) {
    if (s == "A") return WeylFamily::A;
    if (s == "B") return WeylFamily::B;
    if (s == "C") return WeylFamily::C;
    if (s == "D") return WeylFamily::D;
    throw input_error("unknown Weyl family '" + s + "' (expected A, B, C or D)");
}

/// Classical Weyl group with its natural integer matrix action: permutation
/// matrices on rank+1 coordinates for family A, signed permutations on rank
/// coordinates for B/C, even-signed permutations for D.
class WeylDatum {
public:
    using Matrix = std::vector<std::vector<int>>;

    static WeylDatum enumerate(WeylFamily family, int rank) {
        if (rank < 1) throw input_error("Weyl rank must be at least 1");
        if (family == WeylFamily::A && rank > 5)
            throw size_error("family A enumeration is guarded at rank 5");
        if (family != WeylFamily::A && rank > 4)
            throw size_error("families B/C/D are guarded at rank 4");
        if (family == WeylFamily::D && rank < 2)
            throw input_error("family D needs rank at least 2");

        WeylDatum w;
        w.family_ = family;
        w.rank_ = rank;
        w.size_ = (family == WeylFamily::A) ? rank + 1 : rank;

        std::vector<int> perm(w.size_);
        for (int i = 0; i < w.size_; ++i) perm[i] = i;
        do {
            if (family == WeylFamily::A) {
                w.matrices_.push_back(permutation_matrix(perm, {}));
            } else {
                for (int signs = 0; signs < (1 << w.size_); ++signs) {
                    if (family == WeylFamily::D && __builtin_popcount(signs) % 2 == 1)
                        continue;
                    std::vector<int> sv(w.size_);
                    for (int i = 0; i < w.size_; ++i) sv[i] = (signs >> i) & 1 ? -1 : 1;
                    w.matrices_.push_back(permutation_matrix(perm, sv));
                }
            }
        } while (std::next_permutation(perm.begin(), perm.end()));

        w.verify();
        return w;
    }

    WeylFamily family() const { return family_; }
    int rank() const { return rank_; }
    /// Size of the matrices (the lattice the group naturally acts on).
    int matrix_size() const { return size_; }
    const std::vector<Matrix>& matrices() const { return matrices_; }
    long long order() const { return static_cast<long long>(matrices_.size()); }

    long long expected_order() const {
        auto fact = [](int n) {
            long long f = 1;
            for (int i = 2; i <= n; ++i) f *= i;
            return f;
        };
        switch (family_) {
            case WeylFamily::A: return fact(rank_ + 1);
            case WeylFamily::B:
            case WeylFamily::C: return (1LL << rank_) * fact(rank_);
            case WeylFamily::D: return (1LL << (rank_ - 1)) * fact(rank_);
        }
        return 0;
    }

    int root_count() const {
        switch (family_) {
            case WeylFamily::A: return rank_ * (rank_ + 1);
            case WeylFamily::B:
            case WeylFamily::C: return 2 * rank_ * rank_;
            case WeylFamily::D: return 2 * rank_ * (rank_ - 1);
        }
        return 0;
    }

    /// Simple roots in the matrix coordinates.
    std::vector<Vec> simple_roots() const {
        std::vector<Vec> roots;
        auto e = [&](int i) {
            Vec v(size_, Int(0));
            v[i] = 1;
            return v;
        };
        auto diff = [&](int i, int j) {
            Vec v(size_, Int(0));
            v[i] = 1;
            v[j] = -1;
            return v;
        };
        switch (family_) {
            case WeylFamily::A:
                for (int i = 0; i + 1 <= rank_; ++i) roots.push_back(diff(i, i + 1));
                break;
            case WeylFamily::B:
                for (int i = 0; i + 1 < rank_; ++i) roots.push_back(diff(i, i + 1));
                roots.push_back(e(rank_ - 1));
                break;
            case WeylFamily::C:
                for (int i = 0; i + 1 < rank_; ++i) roots.push_back(diff(i, i + 1));
                {
                    Vec v(size_, Int(0));
                    v[rank_ - 1] = 2;
                    roots.push_back(v);
                }
                break;
            case WeylFamily::D:
                for (int i = 0; i + 1 < rank_; ++i) roots.push_back(diff(i, i + 1));
                {
                    Vec v(size_, Int(0));
                    v[rank_ - 2] = 1;
                    v[rank_ - 1] = 1;
                    roots.push_back(v);
                }
                break;
        }
        return roots;
    }

    bool is_dominant(const Vec& v) const {
        if (static_cast<int>(v.size()) != size_)
            throw dimension_error("dominance test at wrong rank");
        for (const Vec& alpha : simple_roots())
            if (dot(v, alpha) < 0) return false;
        return true;
    }

    Vec apply(const Matrix& w, const Vec& v) const {
        Vec out(size_, Int(0));
        for (int i = 0; i < size_; ++i)
            for (int j = 0; j < size_; ++j)
                if (w[i][j] != 0) out[i] += Int(w[i][j]) * v[j];
        return out;
    }

    std::vector<Vec> orbit(const Vec& v) const {
        std::set<Vec> seen;
        for (const Matrix& w : matrices_) seen.insert(apply(w, v));
        return std::vector<Vec>(seen.begin(), seen.end());
    }

    long long stabilizer_order(const Vec& v) const {
        long long n = 0;
        for (const Matrix& w : matrices_)
            if (apply(w, v) == v) ++n;
        return n;
    }

private:
    static Matrix permutation_matrix(const std::vector<int>& perm,
                                     const std::vector<int>& signs) {
        int n = static_cast<int>(perm.size());
        Matrix m(n, std::vector<int>(n, 0));
        for (int j = 0; j < n; ++j)
            m[perm[j]][j] = signs.empty() ? 1 : signs[perm[j]];
        return m;
    }

    void verify() const {
        if (order() != expected_order())
            throw internal_error("Weyl group order mismatch: got " +
                                 std::to_string(order()) + ", expected " +
                                 std::to_string(expected_order()));
        std::set<Matrix> all(matrices_.begin(), matrices_.end());
        if (static_cast<long long>(all.size()) != order())
            throw internal_error("Weyl enumeration repeated an element");

        auto mul = [&](const Matrix& a, const Matrix& b) {
            int n = size_;
            Matrix c(n, std::vector<int>(n, 0));
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < n; ++k) {
                    if (a[i][k] == 0) continue;
                    for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
                }
            return c;
        };
        for (const Matrix& a : matrices_)
            for (const Matrix& b : matrices_)
                if (!all.count(mul(a, b)))
                    throw internal_error("Weyl enumeration is not closed under multiplication");

        // The simple reflections generate the whole enumerated group.
        std::set<Matrix> generated;
        std::vector<Matrix> frontier;
        Matrix id(size_, std::vector<int>(size_, 0));
        for (int i = 0; i < size_; ++i) id[i][i] = 1;
        generated.insert(id);
        frontier.push_back(id);
        std::vector<Matrix> gens;
        for (const Vec& alpha : simple_roots()) gens.push_back(reflection_matrix(alpha));
        while (!frontier.empty()) {
            Matrix w = frontier.back();
            frontier.pop_back();
            for (const Matrix& s : gens) {
                Matrix ws = mul(w, s);
                if (generated.insert(ws).second) frontier.push_back(ws);
            }
        }
        if (generated != all)
            throw internal_error("Weyl enumeration differs from the reflection subgroup");
    }

    Matrix reflection_matrix(const Vec& alpha) const {
        // r(x) = x - 2 <x, alpha> / <alpha, alpha> * alpha; integral for the
        // crystallographic roots used here.
        Int norm = dot(alpha, alpha);
        Matrix m(size_, std::vector<int>(size_, 0));
        for (int j = 0; j < size_; ++j) {
            for (int i = 0; i < size_; ++i) {
                Int entry = (i == j ? Int(1) : Int(0)) - 2 * alpha[i] * alpha[j] / norm;
                m[i][j] = static_cast<int>(entry);
            }
        }
        return m;
    }

    WeylFamily family_ = WeylFamily::A;
    int rank_ = 0;
    int size_ = 0;
    std::vector<Matrix> matrices_;
};

inline WeylDatum weyl_enumerate(WeylFamily family, int rank) {
    return WeylDatum::enumerate(family, rank);
}

} // namespace ratcells
