#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "ratcells/lattice.hpp"
#include "ratcells/linalg.hpp"
#include "ratcells/numeric.hpp"

namespace ratcells {

namespace detail {

/// Coordinates on the saturated span of a set of lattice vectors.
/// to_span is a lattice isomorphism span_sat -> Z^r; from_span is its inverse.
struct SpanData {
    int ambient = 0;
    int dim = 0;
    IMat v;      // unimodular; trailing columns span the kernel of the rows
    IMat v_inv;

    static SpanData of(const std::vector<Vec>& rows, int ambient) {
        SpanData sd;
        sd.ambient = ambient;
        if (rows.empty()) {
            sd.dim = 0;
            sd.v = IMat::identity(ambient);
            sd.v_inv = IMat::identity(ambient);
            return sd;
        }
        // Trailing columns of V span the saturated kernel of the row matrix,
        // so x -> (x V) maps the saturated row span onto Z^dim x {0}.
        ColumnEchelon ce = column_echelon(IMat::from_rows(rows, ambient));
        sd.dim = ce.rank;
        sd.v = ce.v;
        sd.v_inv = inverse_unimodular(ce.v);
        return sd;
    }

    bool in_span(const Vec& x) const {
        Vec t = v.apply_row(x);
        for (int j = dim; j < ambient; ++j)
            if (t[j] != 0) return false;
        return true;
    }

    Vec to_span(const Vec& x) const {
        Vec t = v.apply_row(x);
        return Vec(t.begin(), t.begin() + dim);
    }

    Vec from_span(const Vec& y) const {
        Vec padded(ambient, Int(0));
        for (int i = 0; i < dim; ++i) padded[i] = y[i];
        return v_inv.apply_row(padded);
    }

    /// Ambient functional restricting to the span-coordinate functional n.
    Vec lift_normal(const Vec& n) const {
        Vec padded(ambient, Int(0));
        for (int i = 0; i < dim; ++i) padded[i] = n[i];
        return v.apply_col(padded);
    }
};

/// All facet normals of cone(gens) inside its full-dimensional span (rank r).
/// Every supporting functional arising from an (r-1)-subset of generators is
/// a facet normal, because each facet contains r-1 independent generators.
inline std::vector<Vec> facet_normals_span(const std::vector<Vec>& gens, int r) {
    std::vector<Vec> normals;
    if (r == 0) return normals;
    int k = static_cast<int>(gens.size());
    std::set<Vec> seen;

    auto consider = [&](const std::vector<int>& idx) {
        std::vector<Vec> rows;
        for (int i : idx) rows.push_back(gens[i]);
        if (rank_of(rows) != r - 1 && r > 1) return;
        IMat m = rows.empty() ? IMat(0, r) : IMat::from_rows(rows, r);
        std::vector<Vec> ker = kernel_basis(m);
        if (ker.size() != 1) return;
        Vec n = primitivized(ker[0]);
        bool pos = false, neg = false;
        for (const Vec& g : gens) {
            Int p = dot(n, g);
            if (p > 0) pos = true;
            if (p < 0) neg = true;
        }
        if (pos && neg) return;
        if (neg) n = negated(n);
        if (seen.insert(n).second) normals.push_back(n);
    };

    // Enumerate (r-1)-subsets.
    std::vector<int> idx(r - 1);
    auto rec = [&](auto&& self, int start, int pos_i) -> void {
        if (pos_i == r - 1) {
            consider(idx);
            return;
        }
        for (int i = start; i < k; ++i) {
            idx[pos_i] = i;
            self(self, i + 1, pos_i + 1);
        }
    };
    if (r == 1) consider({});
    else rec(rec, 0, 0);
    std::sort(normals.begin(), normals.end(), lex_less);
    return normals;
}

inline bool member_of_hull(const std::vector<Vec>& gens, int ambient, const Vec& x) {
    if (gens.empty()) return is_zero_vec(x);
    SpanData sd = SpanData::of(gens, ambient);
    if (!sd.in_span(x)) return false;
    std::vector<Vec> gens_s;
    gens_s.reserve(gens.size());
    for (const Vec& g : gens) gens_s.push_back(sd.to_span(g));
    Vec xs = sd.to_span(x);
    for (const Vec& n : facet_normals_span(gens_s, sd.dim))
        if (dot(n, xs) < 0) return false;
    return true;
}

} // namespace detail

/// Strongly convex rational polyhedral cone, kept with its primitive extremal
/// rays in a fixed order. May sit in a larger ambient lattice than its span.
class Cone {
public:
    struct Facet {
        Vec normal_span;     // inner normal in span coordinates
        Vec normal_ambient;  // an ambient lift of the same functional
        std::vector<int> rays; // indices of rays lying on the facet
    };

    Cone() = default;

    /// Strict constructor: rejects non-primitive, proportional, or
    /// non-extremal rays, and cones containing a line.
    static Cone make(int rank, std::vector<Vec> rays) {
        validate_rays(rank, rays);
        for (std::size_t i = 0; i < rays.size(); ++i) {
            std::vector<Vec> others;
            for (std::size_t j = 0; j < rays.size(); ++j)
                if (j != i) others.push_back(rays[j]);
            if (detail::member_of_hull(others, rank, rays[i]))
                throw input_error("ray " + std::to_string(i) +
                                  " is not extremal (it lies in the cone of the others)");
        }
        return Cone(rank, std::move(rays));
    }

    /// Reduce an arbitrary generator list (zero vectors allowed, dropped) to
    /// the extremal-ray presentation. Rejects cones containing a line.
    static Cone from_generators(int rank, const std::vector<Vec>& gens) {
        std::vector<Vec> cleaned;
        for (const Vec& g : gens) {
            if (static_cast<int>(g.size()) != rank)
                throw dimension_error("generator of wrong rank");
            if (is_zero_vec(g)) continue;
            Vec p = primitivized(g);
            bool dup = false;
            for (const Vec& c : cleaned)
                if (c == p) { dup = true; break; }
            if (!dup) cleaned.push_back(std::move(p));
        }
        check_pointed(rank, cleaned);
        std::vector<Vec> extremal;
        for (std::size_t i = 0; i < cleaned.size(); ++i) {
            std::vector<Vec> others;
            for (std::size_t j = 0; j < cleaned.size(); ++j)
                if (j != i) others.push_back(cleaned[j]);
            if (!detail::member_of_hull(others, rank, cleaned[i]))
                extremal.push_back(cleaned[i]);
        }
        return Cone(rank, std::move(extremal));
    }

    int ambient_rank() const { return ambient_; }
    int dim() const { return span_.dim; }
    bool is_full_dimensional() const { return dim() == ambient_; }
    const std::vector<Vec>& rays() const { return rays_; }
    int ray_count() const { return static_cast<int>(rays_.size()); }
    const std::vector<Facet>& facets() const { return facets_; }

    bool is_simplicial() const { return ray_count() == dim(); }

    /// Index of the sublattice spanned by the rays inside the saturated span.
    Int multiplicity() const {
        if (!is_simplicial())
            throw precondition_error("multiplicity requires a simplicial cone (" +
                                     std::to_string(ray_count()) + " rays, dimension " +
                                     std::to_string(dim()) + ")");
        if (dim() == 0) return 1;
        IMat m(dim(), dim());
        for (int i = 0; i < dim(); ++i) m.a[i] = rays_span_[i];
        Int d = det(m);
        return d < 0 ? -d : d;
    }

    bool contains(const Vec& x) const {
        if (static_cast<int>(x.size()) != ambient_)
            throw dimension_error("membership test at wrong rank");
        if (!span_.in_span(x)) return false;
        Vec xs = span_.to_span(x);
        for (const Facet& f : facets_)
            if (dot(f.normal_span, xs) < 0) return false;
        return true;
    }

    /// Dual cone {m : <m, v> >= 0 for all v in the cone}; requires a
    /// full-dimensional cone, otherwise the dual contains a line.
    Cone dual() const {
        if (!is_full_dimensional())
            throw precondition_error(
                "unsupported: dual of a non-full-dimensional cone contains a line");
        std::vector<Vec> gens;
        gens.reserve(facets_.size());
        for (const Facet& f : facets_) gens.push_back(f.normal_ambient);
        std::sort(gens.begin(), gens.end(), lex_less);
        if (gens.empty()) {
            // dual of the zero cone in rank 0
            return Cone(0, {});
        }
        return from_generators(ambient_, gens);
    }

    /// Ray-index sets of all faces, graded; includes the empty face (the
    /// origin) and the cone itself.
    std::vector<std::vector<int>> face_ray_sets() const {
        std::set<std::vector<int>> out;
        std::vector<int> all(ray_count());
        for (int i = 0; i < ray_count(); ++i) all[i] = i;
        out.insert(all);
        if (is_simplicial()) {
            // Every subset of the rays of a simplicial cone spans a face.
            int n = ray_count();
            for (int mask = 0; mask < (1 << n); ++mask) {
                std::vector<int> s;
                for (int i = 0; i < n; ++i)
                    if (mask & (1 << i)) s.push_back(i);
                out.insert(s);
            }
        } else {
            std::vector<std::vector<int>> work;
            for (const Facet& f : facets_) {
                if (out.insert(f.rays).second) work.push_back(f.rays);
            }
            while (!work.empty()) {
                std::vector<int> cur = work.back();
                work.pop_back();
                for (const Facet& f : facets_) {
                    std::vector<int> inter;
                    std::set_intersection(cur.begin(), cur.end(), f.rays.begin(),
                                          f.rays.end(), std::back_inserter(inter));
                    if (out.insert(inter).second) work.push_back(inter);
                }
            }
            out.insert({});
        }
        return std::vector<std::vector<int>>(out.begin(), out.end());
    }

    /// Rays of the smallest face containing a point of the cone.
    std::vector<int> minimal_face_rays(const Vec& p) const {
        if (!contains(p)) throw precondition_error("point is not in the cone");
        Vec ps = span_.to_span(p);
        std::vector<int> rays_on;
        bool any_active = false;
        std::vector<bool> on(ray_count(), true);
        for (const Facet& f : facets_) {
            if (dot(f.normal_span, ps) != 0) continue;
            any_active = true;
            std::vector<bool> here(ray_count(), false);
            for (int i : f.rays) here[i] = true;
            for (int i = 0; i < ray_count(); ++i) on[i] = on[i] && here[i];
        }
        if (!any_active) {
            std::vector<int> all(ray_count());
            for (int i = 0; i < ray_count(); ++i) all[i] = i;
            return all;
        }
        for (int i = 0; i < ray_count(); ++i)
            if (on[i]) rays_on.push_back(i);
        return rays_on;
    }

    /// Face test for another cone given by its rays (as vectors).
    bool has_face(const std::vector<Vec>& face_rays) const {
        for (const Vec& r : face_rays)
            if (!contains(r)) return false;
        if (face_rays.empty()) return true; // the origin is a face of every pointed cone
        Vec p(ambient_, Int(0));
        for (const Vec& r : face_rays)
            for (int i = 0; i < ambient_; ++i) p[i] += r[i];
        std::vector<int> mf = minimal_face_rays(p);
        std::set<Vec> want(face_rays.begin(), face_rays.end());
        std::set<Vec> got;
        for (int i : mf) got.insert(rays_[i]);
        return want == got;
    }

    /// Deterministic triangulation into simplicial cones spanned by the
    /// existing rays: recursively cone the first ray over the opposite
    /// facets. Returns the pieces as ray-index sets in input order.
    std::vector<std::vector<int>> triangulate_indices() const {
        if (ray_count() == 0) return {{}};
        std::vector<int> all(ray_count());
        for (int i = 0; i < ray_count(); ++i) all[i] = i;
        return triangulate_rec(all);
    }

    std::vector<Cone> triangulate() const {
        std::vector<Cone> out;
        for (const std::vector<int>& piece : triangulate_indices()) {
            std::vector<Vec> rs;
            for (int i : piece) rs.push_back(rays_[i]);
            out.push_back(Cone(ambient_, std::move(rs)));
        }
        return out;
    }

    /// For a simplicial cone: the primitive dual generator matched to each
    /// ray (vanishing on all the other rays, positive on its own).
    std::vector<Vec> matched_dual_generators() const {
        if (!is_simplicial())
            throw precondition_error("matched dual generators need a simplicial cone");
        std::vector<Vec> out(ray_count());
        for (int j = 0; j < ray_count(); ++j) {
            std::vector<Vec> rows;
            for (int i = 0; i < ray_count(); ++i)
                if (i != j) rows.push_back(rays_span_[i]);
            IMat m = rows.empty() ? IMat(0, dim()) : IMat::from_rows(rows, dim());
            std::vector<Vec> ker = kernel_basis(m);
            if (ker.size() != 1) throw internal_error("simplicial cone without a matched dual basis");
            Vec n = primitivized(ker[0]);
            if (dot(n, rays_span_[j]) < 0) n = negated(n);
            out[j] = span_.lift_normal(n);
        }
        return out;
    }

    Vec interior_point() const {
        Vec p(ambient_, Int(0));
        for (const Vec& r : rays_)
            for (int i = 0; i < ambient_; ++i) p[i] += r[i];
        return p;
    }

    friend bool operator==(const Cone& a, const Cone& b) {
        if (a.ambient_ != b.ambient_) return false;
        std::vector<Vec> ra = a.rays_, rb = b.rays_;
        std::sort(ra.begin(), ra.end(), lex_less);
        std::sort(rb.begin(), rb.end(), lex_less);
        return ra == rb;
    }

private:
    Cone(int ambient, std::vector<Vec> rays)
        : ambient_(ambient), rays_(std::move(rays)) {
        init();
    }

    static void validate_rays(int rank, const std::vector<Vec>& rays) {
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (static_cast<int>(rays[i].size()) != rank)
                throw dimension_error("ray " + std::to_string(i) + " has wrong rank");
            if (is_zero_vec(rays[i]))
                throw input_error("ray " + std::to_string(i) + " is the zero vector");
            if (!is_primitive_vec(rays[i]))
                throw input_error("ray " + std::to_string(i) + " is not primitive");
            for (std::size_t j = 0; j < i; ++j)
                if (rays[i] == rays[j])
                    throw input_error("rays " + std::to_string(j) + " and " +
                                      std::to_string(i) + " coincide");
        }
        check_pointed(rank, rays);
    }

    static void check_pointed(int rank, const std::vector<Vec>& rays) {
        if (rays.empty()) return;
        detail::SpanData sd = detail::SpanData::of(rays, rank);
        std::vector<Vec> gens_s;
        for (const Vec& g : rays) gens_s.push_back(sd.to_span(g));
        std::vector<Vec> normals = detail::facet_normals_span(gens_s, sd.dim);
        if (rank_of(normals) != sd.dim)
            throw input_error("cone is not strongly convex (it contains a line)");
    }

    void init() {
        span_ = detail::SpanData::of(rays_, ambient_);
        rays_span_.clear();
        for (const Vec& r : rays_) rays_span_.push_back(span_.to_span(r));
        facets_.clear();
        for (const Vec& n : detail::facet_normals_span(rays_span_, span_.dim)) {
            Facet f;
            f.normal_span = n;
            f.normal_ambient = span_.lift_normal(n);
            for (int i = 0; i < ray_count(); ++i)
                if (dot(n, rays_span_[i]) == 0) f.rays.push_back(i);
            facets_.push_back(std::move(f));
        }
    }

    std::vector<std::vector<int>> triangulate_rec(const std::vector<int>& subset) const {
        std::vector<Vec> rs;
        for (int i : subset) rs.push_back(rays_[i]);
        Cone sub = subset.size() == rays_.size() ? *this : Cone(ambient_, rs);
        if (sub.is_simplicial()) return {subset};
        int apex = subset[0];
        std::vector<std::vector<int>> pieces;
        for (const Facet& f : sub.facets_) {
            bool has_apex = false;
            std::vector<int> facet_global;
            for (int local : f.rays) {
                if (subset[local] == apex) { has_apex = true; break; }
                facet_global.push_back(subset[local]);
            }
            if (has_apex) continue;
            for (std::vector<int> piece : triangulate_rec(facet_global)) {
                piece.insert(piece.begin(), apex);
                std::sort(piece.begin(), piece.end());
                pieces.push_back(std::move(piece));
            }
        }
        std::sort(pieces.begin(), pieces.end());
        return pieces;
    }

    int ambient_ = 0;
    std::vector<Vec> rays_;
    detail::SpanData span_;
    std::vector<Vec> rays_span_;
    std::vector<Facet> facets_;
};

/// Result of slicing a cone by one of its faces: the image in the saturated
/// quotient lattice together with the matrix embedding the quotient's
/// characters into the ambient character lattice (columns span tau-perp).
struct QuotientCone {
    Cone image;
    IMat embed; // ambient_rank x quotient_rank
    int quotient_rank = 0;

    Vec project(const Vec& x) const { return embed.apply_row(x); }
    Vec embed_character(const Vec& m) const { return embed.apply_col(m); }
};

inline QuotientCone quotient_cone(const Cone& tau, const Cone& sigma) {
    if (tau.ambient_rank() != sigma.ambient_rank())
        throw dimension_error("quotient of cones in different lattices");
    if (!sigma.has_face(tau.rays()))
        throw precondition_error("quotient requires the first cone to be a face of the second");
    int d = sigma.ambient_rank();
    int k = tau.dim();
    QuotientCone q;
    q.quotient_rank = d - k;
    if (tau.ray_count() == 0) {
        q.embed = IMat::identity(d);
        q.image = sigma;
        return q;
    }
    ColumnEchelon ce = column_echelon(IMat::from_rows(tau.rays(), d));
    q.embed = IMat(d, d - k);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d - k; ++j) q.embed.at(i, j) = ce.v.at(i, k + j);
    std::vector<Vec> images;
    for (const Vec& r : sigma.rays()) images.push_back(q.project(r));
    q.image = Cone::from_generators(d - k, images);
    return q;
}

// Free-function spellings of the member operations.
inline Cone dual_cone(const Cone& c) { return c.dual(); }
inline bool is_simplicial(const Cone& c) { return c.is_simplicial(); }
inline Int cone_multiplicity(const Cone& c) { return c.multiplicity(); }
inline std::vector<Cone> triangulate(const Cone& c) { return c.triangulate(); }

} // namespace ratcells
