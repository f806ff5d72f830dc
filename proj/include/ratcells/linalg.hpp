#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "ratcells/numeric.hpp"

namespace ratcells {

/// Dense integer matrix, row major. Rows are lattice vectors.
struct IMat {
    int rows = 0;
    int cols = 0;
    std::vector<Vec> a;

    IMat() = default;
    IMat(int r, int c) : rows(r), cols(c), a(r, Vec(c, Int(0))) {}

    Int& at(int i, int j) { return a[i][j]; }
    const Int& at(int i, int j) const { return a[i][j]; }

    static IMat identity(int n) {
        IMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static IMat from_rows(const std::vector<Vec>& rows_in, int cols_hint) {
        IMat m;
        m.rows = static_cast<int>(rows_in.size());
        m.cols = cols_hint;
        m.a = rows_in;
        return m;
    }

    Vec col(int j) const {
        Vec v(rows);
        for (int i = 0; i < rows; ++i) v[i] = a[i][j];
        return v;
    }

    /// Row vector times matrix: (x M).
    Vec apply_row(const Vec& x) const {
        Vec out(cols, Int(0));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) out[j] += x[i] * a[i][j];
        return out;
    }

    /// Matrix times column vector: (M x).
    Vec apply_col(const Vec& x) const {
        Vec out(rows, Int(0));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) out[i] += a[i][j] * x[j];
        return out;
    }
};

inline IMat mat_mul(const IMat& A, const IMat& B) {
    IMat C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            if (A.at(i, k) == 0) continue;
            for (int j = 0; j < B.cols; ++j) C.at(i, j) += A.at(i, k) * B.at(k, j);
        }
    return C;
}

/// Exact determinant by fraction-free (Bareiss) elimination.
inline Int det(const IMat& m) {
    if (m.rows != m.cols) throw dimension_error("determinant of a non-square matrix");
    int n = m.rows;
    if (n == 0) return 1;
    std::vector<Vec> a = m.a;
    Int sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) { p = i; break; }
            if (p < 0) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

inline int rank_of(std::vector<Vec> a) {
    if (a.empty()) return 0;
    int rows = static_cast<int>(a.size());
    int cols = static_cast<int>(a[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][c] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(a[r], a[p]);
        for (int i = r + 1; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            Int g = gcd_int(a[r][c], a[i][c]);
            Int fr = a[i][c] / g, fi = a[r][c] / g;
            for (int j = c; j < cols; ++j) a[i][j] = a[i][j] * fi - a[r][j] * fr;
        }
        ++r;
    }
    return r;
}

/// Smith normal form: U * A * V = D with U, V unimodular and D diagonal,
/// nonnegative, each entry dividing the next.
struct Smith {
    IMat d;            // rows x cols, diagonal
    IMat u;            // rows x rows
    IMat v;            // cols x cols
    int rank = 0;
    std::vector<Int> diagonal() const {
        std::vector<Int> out;
        int n = std::min(d.rows, d.cols);
        for (int i = 0; i < n; ++i) out.push_back(d.at(i, i));
        return out;
    }
};

inline Smith smith_normal_form(const IMat& input) {
    Smith s;
    s.d = input;
    s.u = IMat::identity(input.rows);
    s.v = IMat::identity(input.cols);
    IMat& d = s.d;
    IMat& u = s.u;
    IMat& v = s.v;
    int n = std::min(d.rows, d.cols);

    auto swap_rows = [&](int i, int j) {
        if (i == j) return;
        std::swap(d.a[i], d.a[j]);
        std::swap(u.a[i], u.a[j]);
    };
    auto swap_cols = [&](int i, int j) {
        if (i == j) return;
        for (int r = 0; r < d.rows; ++r) std::swap(d.a[r][i], d.a[r][j]);
        for (int r = 0; r < v.rows; ++r) std::swap(v.a[r][i], v.a[r][j]);
    };
    auto add_row = [&](int dst, int src, const Int& f) { // row_dst += f * row_src
        for (int j = 0; j < d.cols; ++j) d.a[dst][j] += f * d.a[src][j];
        for (int j = 0; j < u.cols; ++j) u.a[dst][j] += f * u.a[src][j];
    };
    auto add_col = [&](int dst, int src, const Int& f) {
        for (int i = 0; i < d.rows; ++i) d.a[i][dst] += f * d.a[i][src];
        for (int i = 0; i < v.rows; ++i) v.a[i][dst] += f * v.a[i][src];
    };
    auto negate_row = [&](int i) {
        for (int j = 0; j < d.cols; ++j) d.a[i][j] = -d.a[i][j];
        for (int j = 0; j < u.cols; ++j) u.a[i][j] = -u.a[i][j];
    };

    for (int t = 0; t < n; ++t) {
        // Locate a pivot of minimal absolute value in the trailing block.
        int pi = -1, pj = -1;
        Int best = 0;
        for (int i = t; i < d.rows; ++i)
            for (int j = t; j < d.cols; ++j) {
                if (d.a[i][j] == 0) continue;
                Int m = d.a[i][j] < 0 ? Int(-d.a[i][j]) : d.a[i][j];
                if (pi < 0 || m < best) { best = m; pi = i; pj = j; }
            }
        if (pi < 0) break;
        swap_rows(t, pi);
        swap_cols(t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < d.rows; ++i) {
                if (d.a[i][t] == 0) continue;
                Int q = d.a[i][t] / d.a[t][t];
                add_row(i, t, -q);
                if (d.a[i][t] != 0) { swap_rows(t, i); clean = false; }
            }
            for (int j = t + 1; j < d.cols; ++j) {
                if (d.a[t][j] == 0) continue;
                Int q = d.a[t][j] / d.a[t][t];
                add_col(j, t, -q);
                if (d.a[t][j] != 0) { swap_cols(t, j); clean = false; }
            }
        }
        // Divisibility fix: pivot must divide every remaining entry.
        bool restart = false;
        for (int i = t + 1; i < d.rows && !restart; ++i)
            for (int j = t + 1; j < d.cols && !restart; ++j)
                if (d.a[i][j] % d.a[t][t] != 0) {
                    add_row(t, i, Int(1));
                    restart = true;
                }
        if (restart) { --t; continue; }
        if (d.a[t][t] < 0) negate_row(t);
    }

    for (int i = 0; i < n; ++i)
        if (d.at(i, i) != 0) ++s.rank;
    return s;
}

/// Column echelon reduction A * V = H with V unimodular: the first `rank`
/// columns of H form a staircase, the rest are zero, so the trailing columns
/// of V are a basis of the saturated right kernel {x : A x = 0}. Unlike the
/// Smith transforms, the entries of V stay small.
struct ColumnEchelon {
    IMat h;
    IMat v;
    int rank = 0;
};

inline ColumnEchelon column_echelon(const IMat& input) {
    ColumnEchelon ce;
    ce.h = input;
    ce.v = IMat::identity(input.cols);
    IMat& h = ce.h;
    IMat& v = ce.v;
    int rows = input.rows, cols = input.cols;

    auto swap_cols = [&](int i, int j) {
        if (i == j) return;
        for (int r = 0; r < rows; ++r) std::swap(h.a[r][i], h.a[r][j]);
        for (int r = 0; r < cols; ++r) std::swap(v.a[r][i], v.a[r][j]);
    };
    auto add_col = [&](int dst, int src, const Int& f) {
        for (int r = 0; r < rows; ++r) h.a[r][dst] += f * h.a[r][src];
        for (int r = 0; r < cols; ++r) v.a[r][dst] += f * v.a[r][src];
    };
    auto negate_col = [&](int j) {
        for (int r = 0; r < rows; ++r) h.a[r][j] = -h.a[r][j];
        for (int r = 0; r < cols; ++r) v.a[r][j] = -v.a[r][j];
    };

    int col = 0;
    for (int row = 0; row < rows && col < cols; ++row) {
        bool any = false;
        for (int j = col; j < cols; ++j)
            if (h.a[row][j] != 0) { any = true; break; }
        if (!any) continue;
        // gcd cascade across the row's tail until one nonzero remains
        while (true) {
            int p = -1;
            for (int j = col; j < cols; ++j) {
                if (h.a[row][j] == 0) continue;
                if (p < 0) { p = j; continue; }
                Int a = h.a[row][j] < 0 ? Int(-h.a[row][j]) : h.a[row][j];
                Int b = h.a[row][p] < 0 ? Int(-h.a[row][p]) : h.a[row][p];
                if (a < b) p = j;
            }
            swap_cols(col, p);
            bool reduced = true;
            for (int j = col + 1; j < cols; ++j) {
                if (h.a[row][j] == 0) continue;
                Int q = h.a[row][j] / h.a[row][col];
                add_col(j, col, -q);
                if (h.a[row][j] != 0) reduced = false;
            }
            if (reduced) break;
        }
        if (h.a[row][col] < 0) negate_col(col);
        ++col;
    }
    ce.rank = col;
    return ce;
}

/// Basis of the saturated right kernel {x : A x = 0}.
inline std::vector<Vec> kernel_basis(const IMat& A) {
    ColumnEchelon ce = column_echelon(A);
    std::vector<Vec> out;
    for (int j = ce.rank; j < A.cols; ++j) out.push_back(ce.v.col(j));
    return out;
}

inline IMat inverse_unimodular(const IMat& m) {
    // Inverse of a unimodular matrix via the adjugate (dets are +-1).
    if (m.rows != m.cols) throw dimension_error("inverse of a non-square matrix");
    int n = m.rows;
    Int dd = det(m);
    if (dd != 1 && dd != -1) throw internal_error("matrix is not unimodular");
    IMat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            IMat minor(n - 1, n - 1);
            for (int r = 0, rr = 0; r < n; ++r) {
                if (r == j) continue;
                for (int c = 0, cc = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor.at(rr, cc) = m.at(r, c);
                    ++cc;
                }
                ++rr;
            }
            Int cof = det(minor);
            if ((i + j) % 2 == 1) cof = -cof;
            inv.at(i, j) = cof / dd;
        }
    return inv;
}

} // namespace ratcells
