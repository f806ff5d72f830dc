#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "ratcells/cone.hpp"
#include "ratcells/linalg.hpp"

namespace ratcells {

/// Lattice polytope with its full face lattice, computed by exact brute-force
/// facet enumeration over affine point subsets. Desk scale by design; the
/// subset guard keeps runtimes sane.
class Polytope {
public:
    struct Face {
        std::vector<int> vertices; // indices into vertices(), sorted
        int dim = -1;              // -1 for the empty face
    };

    struct FacetInequality {
        Vec normal;   // ambient integer normal
        Int offset;   // <normal, x> >= offset on the polytope
    };

    /// Hull of arbitrary points; non-extreme points are discarded.
    static Polytope convex_hull(int rank, const std::vector<Vec>& points) {
        return build(rank, points, false);
    }

    /// Strict constructor: every input point must be a vertex.
    static Polytope make(int rank, const std::vector<Vec>& vertices) {
        return build(rank, vertices, true);
    }

    int ambient_rank() const { return rank_; }
    int dim() const { return dim_; }
    const std::vector<Vec>& vertices() const { return vertices_; }
    const std::vector<Face>& faces() const { return faces_; }
    const std::vector<FacetInequality>& facet_inequalities() const { return ineqs_; }

    std::vector<Face> faces_of_dim(int d) const {
        std::vector<Face> out;
        for (const Face& f : faces_)
            if (f.dim == d) out.push_back(f);
        return out;
    }

    int edge_count_at(int vertex) const {
        int n = 0;
        for (const Face& f : faces_)
            if (f.dim == 1 &&
                std::binary_search(f.vertices.begin(), f.vertices.end(), vertex))
                ++n;
        return n;
    }

private:
    static Polytope build(int rank, const std::vector<Vec>& input, bool strict) {
        if (input.empty()) throw input_error("polytope needs at least one point");
        for (const Vec& p : input)
            if (static_cast<int>(p.size()) != rank)
                throw dimension_error("polytope point of wrong rank");

        std::vector<Vec> pts;
        for (const Vec& p : input) {
            if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
        }

        Polytope poly;
        poly.rank_ = rank;

        // Affine coordinates relative to the first point.
        Vec base = pts[0];
        std::vector<Vec> diffs;
        for (const Vec& p : pts) {
            Vec d(rank);
            for (int i = 0; i < rank; ++i) d[i] = p[i] - base[i];
            diffs.push_back(std::move(d));
        }
        detail::SpanData sd = detail::SpanData::of(diffs, rank);
        int m = sd.dim;
        poly.dim_ = m;
        std::vector<Vec> q;
        for (const Vec& d : diffs) q.push_back(sd.to_span(d));

        if (m == 0) {
            if (strict && pts.size() > 1)
                throw input_error("duplicate points are not vertices");
            poly.vertices_ = {pts[0]};
            poly.faces_.push_back(Face{{}, -1});
            poly.faces_.push_back(Face{{0}, 0});
            return poly;
        }

        // Subset guard (exact enumeration is combinatorial in the point count).
        double combos = 1;
        for (int i = 0; i < m; ++i)
            combos *= static_cast<double>(pts.size() - i) / (i + 1);
        if (combos > 500000.0)
            throw size_error("convex hull exceeds the desk-scale enumeration guard (" +
                             std::to_string(pts.size()) + " points in dimension " +
                             std::to_string(m) + ")");

        // Facet candidates: affine hyperplanes through m points.
        struct Plane { Vec n; Int c; };
        std::vector<Plane> planes;
        std::set<std::pair<Vec, Int>> seen;
        int np = static_cast<int>(pts.size());
        std::vector<int> idx(m);
        auto consider = [&](const std::vector<int>& chosen) {
            std::vector<Vec> rows;
            for (std::size_t i = 1; i < chosen.size(); ++i) {
                Vec r(m);
                for (int k = 0; k < m; ++k) r[k] = q[chosen[i]][k] - q[chosen[0]][k];
                rows.push_back(std::move(r));
            }
            if (!rows.empty() && rank_of(rows) != m - 1) return;
            IMat mat = rows.empty() ? IMat(0, m) : IMat::from_rows(rows, m);
            std::vector<Vec> ker = kernel_basis(mat);
            if (ker.size() != 1) return;
            Vec n = primitivized(ker[0]);
            Int c = dot(n, q[chosen[0]]);
            bool above = false, below = false;
            for (const Vec& point : q) {
                Int v = dot(n, point);
                if (v > c) above = true;
                if (v < c) below = true;
            }
            if (above && below) return;
            if (above) { /* inner normal already */ }
            else { n = negated(n); c = -c; }
            if (seen.insert({n, c}).second) planes.push_back(Plane{n, c});
        };
        auto rec = [&](auto&& self, int start, int pos) -> void {
            if (pos == m) {
                consider(idx);
                return;
            }
            for (int i = start; i < np; ++i) {
                idx[pos] = i;
                self(self, i + 1, pos + 1);
            }
        };
        rec(rec, 0, 0);

        // Vertices: points whose active facet normals span the space.
        std::vector<int> vertex_of_point(np, -1);
        std::vector<int> vert_idx;
        for (int p = 0; p < np; ++p) {
            std::vector<Vec> active;
            for (const Plane& pl : planes)
                if (dot(pl.n, q[p]) == pl.c) active.push_back(pl.n);
            if (rank_of(active) == m) {
                vertex_of_point[p] = static_cast<int>(vert_idx.size());
                vert_idx.push_back(p);
            } else if (strict) {
                throw input_error("input point " + std::to_string(p) +
                                  " is not an extreme point of the hull");
            }
        }

        // Deterministic vertex order: lex ascending on coordinates.
        std::vector<int> order(vert_idx.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return lex_less(pts[vert_idx[a]], pts[vert_idx[b]]);
        });
        std::vector<int> newpos(vert_idx.size());
        for (std::size_t i = 0; i < order.size(); ++i) newpos[order[i]] = static_cast<int>(i);
        poly.vertices_.resize(vert_idx.size());
        for (std::size_t i = 0; i < order.size(); ++i)
            poly.vertices_[i] = pts[vert_idx[order[i]]];

        // Facet vertex sets; then close under intersection for the lattice.
        std::set<std::vector<int>> face_sets;
        std::vector<std::vector<int>> facet_sets;
        for (const Plane& pl : planes) {
            std::vector<int> on;
            for (std::size_t vi = 0; vi < vert_idx.size(); ++vi)
                if (dot(pl.n, q[vert_idx[vi]]) == pl.c) on.push_back(newpos[vi]);
            std::sort(on.begin(), on.end());
            facet_sets.push_back(on);
            face_sets.insert(on);
            // Ambient form of the inequality.
            Vec n_amb = sd.lift_normal(pl.n);
            Int c_amb = pl.c + dot(n_amb, base);
            poly.ineqs_.push_back(FacetInequality{n_amb, c_amb});
        }
        std::vector<std::vector<int>> work(face_sets.begin(), face_sets.end());
        while (!work.empty()) {
            std::vector<int> cur = work.back();
            work.pop_back();
            for (const std::vector<int>& f : facet_sets) {
                std::vector<int> inter;
                std::set_intersection(cur.begin(), cur.end(), f.begin(), f.end(),
                                      std::back_inserter(inter));
                if (face_sets.insert(inter).second) work.push_back(inter);
            }
        }
        std::vector<int> all(poly.vertices_.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
        face_sets.insert(all);
        face_sets.insert({});

        for (const std::vector<int>& fs : face_sets) {
            Face f;
            f.vertices = fs;
            if (fs.empty()) {
                f.dim = -1;
            } else {
                std::vector<Vec> rows;
                for (std::size_t i = 1; i < fs.size(); ++i) {
                    Vec r(rank);
                    for (int k = 0; k < rank; ++k)
                        r[k] = poly.vertices_[fs[i]][k] - poly.vertices_[fs[0]][k];
                    rows.push_back(std::move(r));
                }
                f.dim = rows.empty() ? 0 : rank_of(rows);
            }
            poly.faces_.push_back(std::move(f));
        }
        std::sort(poly.faces_.begin(), poly.faces_.end(), [](const Face& a, const Face& b) {
            if (a.dim != b.dim) return a.dim < b.dim;
            return a.vertices < b.vertices;
        });
        return poly;
    }

    int rank_ = 0;
    int dim_ = 0;
    std::vector<Vec> vertices_;
    std::vector<Face> faces_;
    std::vector<FacetInequality> ineqs_;
};

inline Polytope convex_hull(int rank, const std::vector<Vec>& points) {
    return Polytope::convex_hull(rank, points);
}

} // namespace ratcells
