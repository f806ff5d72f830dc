#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ratcells/cone.hpp"
#include "ratcells/polytope.hpp"
#include "ratcells/weyl.hpp"

namespace ratcells {

/// Combinatorial model of a reductive monoid with zero: a Weyl group together
/// with dominant weights. The closed torus is the cone over the weight
/// polytope P = conv(W . points). For family A the natural permutation
/// lattice already carries the central height functional (the coordinate
/// sum); for B/C/D an explicit height coordinate is appended so the cone is
/// pointed and the monoid has a zero.
class MonoidDatum {
public:
    static MonoidDatum make(WeylDatum weyl, std::vector<Vec> dominant_points,
                            std::optional<Int> dim_m_override = std::nullopt) {
        MonoidDatum d;
        d.weyl_ = std::move(weyl);
        if (dominant_points.empty())
            throw input_error("monoid needs at least one dominant point");
        for (std::size_t i = 0; i < dominant_points.size(); ++i) {
            const Vec& p = dominant_points[i];
            if (static_cast<int>(p.size()) != d.weyl_.matrix_size())
                throw input_error("dominant point " + std::to_string(i) +
                                  " has wrong rank (expected " +
                                  std::to_string(d.weyl_.matrix_size()) + ")");
            if (is_zero_vec(p))
                throw input_error("dominant point " + std::to_string(i) + " is zero");
            if (!d.weyl_.is_dominant(p))
                throw input_error("point " + std::to_string(i) +
                                  " is not weakly dominant for the standard chamber");
            if (d.weyl_.family() == WeylFamily::A) {
                Int h = 0;
                for (const Int& x : p) h += x;
                if (h <= 0)
                    throw input_error("monoid has no zero: point " + std::to_string(i) +
                                      " has non-positive height (coordinate sum)");
            }
        }
        d.points_ = std::move(dominant_points);
        d.dim_m_override_ = dim_m_override;

        // Orbit points, their polytope, and the cone over it.
        std::set<Vec> orbit_set;
        for (const Vec& p : d.points_)
            for (const Vec& q : d.weyl_.orbit(p)) orbit_set.insert(q);
        d.orbit_points_.assign(orbit_set.begin(), orbit_set.end());
        d.polytope_ = Polytope::convex_hull(d.weyl_.matrix_size(), d.orbit_points_);

        std::vector<Vec> lifted;
        for (const Vec& q : d.orbit_points_) lifted.push_back(d.lift(q));
        d.cone_ = Cone::from_generators(d.lifted_rank(), lifted);
        return d;
    }

    const WeylDatum& weyl() const { return weyl_; }
    const std::vector<Vec>& dominant_points() const { return points_; }
    const Polytope& weight_polytope() const { return polytope_; }
    const Cone& torus_cone() const { return cone_; }
    const std::optional<Int>& dim_m_override() const { return dim_m_override_; }

    int dim_torus() const { return weyl_.rank() + 1; }

    /// Rank of the lattice the torus cone lives in (always dim_torus).
    int lifted_rank() const {
        return weyl_.family() == WeylFamily::A ? weyl_.matrix_size()
                                               : weyl_.matrix_size() + 1;
    }

    Vec lift(const Vec& p) const {
        if (weyl_.family() == WeylFamily::A) return p;
        Vec out = p;
        out.push_back(Int(1));
        return out;
    }

    /// The Weyl action on the lifted lattice (height fixed).
    Vec apply_lifted(const WeylDatum::Matrix& w, const Vec& v) const {
        Vec base(v.begin(), v.begin() + weyl_.matrix_size());
        Vec img = weyl_.apply(w, base);
        if (weyl_.family() != WeylFamily::A) img.push_back(v.back());
        return img;
    }

    bool is_dominant_lifted(const Vec& v) const {
        for (const Vec& alpha : weyl_.simple_roots()) {
            Int s = 0;
            for (int i = 0; i < weyl_.matrix_size(); ++i) s += v[i] * alpha[i];
            if (s < 0) return false;
        }
        return true;
    }

private:
    WeylDatum weyl_;
    std::vector<Vec> points_;
    std::optional<Int> dim_m_override_;
    std::vector<Vec> orbit_points_;
    Polytope polytope_{Polytope::convex_hull(1, {Vec{Int(0)}})};
    Cone cone_;
};

inline Polytope orbit_polytope(const MonoidDatum& d) { return d.weight_polytope(); }

/// One member of the cross-section lattice: a face of the torus cone whose
/// barycenter is dominant, with its dimension as the idempotent rank and the
/// order of its setwise Weyl stabilizer (the centralizer data, exposed for
/// inspection only).
struct LambdaFace {
    std::vector<int> cone_rays; // indices into torus_cone().rays()
    int rank = 0;
    long long centralizer_order = 0;
};

/// The cross-section lattice: one face of the torus cone per Weyl orbit of
/// faces, picked by dominance of the face barycenter. Distinct faces have
/// distinct barycenters (they lie in disjoint relative interiors) and the
/// closed chamber meets each orbit of barycenters exactly once, so this is a
/// genuine cross-section; the property is also tested, not just asserted.
inline std::vector<LambdaFace> cross_section_lattice(const MonoidDatum& d) {
    const Cone& c = d.torus_cone();
    std::vector<LambdaFace> lambda;
    for (const std::vector<int>& face : c.face_ray_sets()) {
        Vec bary(d.lifted_rank(), Int(0));
        for (int i : face)
            for (int k = 0; k < d.lifted_rank(); ++k) bary[k] += c.rays()[i][k];
        if (!d.is_dominant_lifted(bary)) continue;
        LambdaFace lf;
        lf.cone_rays = face;
        std::vector<Vec> rs;
        for (int i : face) rs.push_back(c.rays()[i]);
        lf.rank = rs.empty() ? 0 : rank_of(rs);
        // Setwise stabilizer of the face under the lifted action.
        std::set<Vec> face_set(rs.begin(), rs.end());
        for (const WeylDatum::Matrix& w : d.weyl().matrices()) {
            std::set<Vec> img;
            for (const Vec& r : rs) img.insert(d.apply_lifted(w, r));
            if (img == face_set) lf.centralizer_order += 1;
        }
        lambda.push_back(std::move(lf));
    }
    std::sort(lambda.begin(), lambda.end(), [](const LambdaFace& a, const LambdaFace& b) {
        if (a.rank != b.rank) return a.rank < b.rank;
        return a.cone_rays < b.cone_rays;
    });
    return lambda;
}

/// |R_1|: over each vertex of the weight polytope, the index of its Weyl
/// stabilizer; equivalently the sum of the squared orbit sizes.
inline long long rank1_count(const MonoidDatum& d) {
    long long total = 0;
    for (const Vec& v : d.weight_polytope().vertices()) {
        long long stab = d.weyl().stabilizer_order(v);
        total += d.weyl().order() / stab;
    }
    return total;
}

/// dim M = dim T + number of roots, from the root-system tables.
inline Int dim_m(const MonoidDatum& d) {
    return Int(d.dim_torus()) + Int(d.weyl().root_count());
}

struct QuasismoothReport {
    std::vector<int> per_vertex_edge_counts;
    std::vector<bool> per_vertex_verdicts;
    bool overall = false;
    bool orbit_consistent = true; // equal counts within each Weyl orbit of vertices
};

/// Quasismoothness in the combinatorial model: every vertex figure of the
/// weight polytope is simple (edge count equals dim P), which is the
/// rational-cell criterion for each local monoid at a minimal idempotent.
inline QuasismoothReport quasismooth_check(const MonoidDatum& d) {
    const Polytope& p = d.weight_polytope();
    QuasismoothReport r;
    r.overall = true;
    for (std::size_t v = 0; v < p.vertices().size(); ++v) {
        int e = p.edge_count_at(static_cast<int>(v));
        r.per_vertex_edge_counts.push_back(e);
        bool ok = (e == p.dim());
        r.per_vertex_verdicts.push_back(ok);
        if (!ok) r.overall = false;
    }
    // Cross-check Weyl invariance of the counts on each vertex orbit.
    std::map<Vec, int> count_of;
    for (std::size_t v = 0; v < p.vertices().size(); ++v)
        count_of[p.vertices()[v]] = r.per_vertex_edge_counts[v];
    for (const auto& [vtx, cnt] : count_of)
        for (const WeylDatum::Matrix& w : d.weyl().matrices()) {
            Vec img = d.weyl().apply(w, vtx);
            auto it = count_of.find(img);
            if (it != count_of.end() && it->second != cnt) r.orbit_consistent = false;
        }
    return r;
}

struct MonoidReport {
    int dim_t = 0;
    long long e1_count = 0;
    long long r1_count = 0;
    Int dim_m;
    bool rational_cell_b = false;  // dim T == |E_1|
    bool rational_cell_f = false;  // dim M == |R_1|
    bool equivalence_ok = false;
    bool quasismooth = false;
    std::vector<int> per_vertex_edge_counts;
    std::vector<int> lambda_rank_counts;   // members of Lambda per rank
    std::vector<LambdaFace> lambda;
    bool dim_m_override_mismatch = false;
    std::vector<long long> vertex_orbit_sizes;
};

/// Run the two independent rational-cell criteria and report whether they
/// agree; disagreement falsifies the combinatorial model, not the theory.
inline MonoidReport monoid_cell_check(const MonoidDatum& d) {
    MonoidReport r;
    r.dim_t = d.dim_torus();
    r.e1_count = static_cast<long long>(d.torus_cone().ray_count());
    r.r1_count = rank1_count(d);
    r.dim_m = dim_m(d);
    if (d.dim_m_override() && *d.dim_m_override() != r.dim_m)
        r.dim_m_override_mismatch = true;
    r.rational_cell_b = (Int(r.dim_t) == Int(r.e1_count));
    r.rational_cell_f = (r.dim_m == Int(r.r1_count));
    r.equivalence_ok = (r.rational_cell_b == r.rational_cell_f);
    QuasismoothReport q = quasismooth_check(d);
    r.quasismooth = q.overall;
    r.per_vertex_edge_counts = q.per_vertex_edge_counts;
    r.lambda = cross_section_lattice(d);
    int max_rank = 0;
    for (const LambdaFace& f : r.lambda) max_rank = std::max(max_rank, f.rank);
    r.lambda_rank_counts.assign(max_rank + 1, 0);
    for (const LambdaFace& f : r.lambda) r.lambda_rank_counts[f.rank] += 1;
    std::set<Vec> seen;
    for (const Vec& v : d.weight_polytope().vertices()) {
        if (seen.count(v)) continue;
        std::vector<Vec> orb = d.weyl().orbit(v);
        for (const Vec& o : orb) seen.insert(o);
        r.vertex_orbit_sizes.push_back(static_cast<long long>(orb.size()));
    }
    return r;
}

/// Total rational Chow rank of the projective embedding of the monoid:
/// defined (and equal to |R_1|) when the monoid is quasismooth, which is what
/// guarantees the embedding carries a filtration by rational cells.
inline long long embedding_chow_rank(const MonoidDatum& d) {
    QuasismoothReport q = quasismooth_check(d);
    if (!q.overall) {
        int bad = 0;
        while (q.per_vertex_verdicts[bad]) ++bad;
        std::ostringstream os;
        os << "hypothesis not met: monoid is not quasismooth (vertex " << bad
           << " of the weight polytope has " << q.per_vertex_edge_counts[bad]
           << " edges, expected dim P = " << d.weight_polytope().dim()
           << "), so the projective embedding need not be filtrable by rational cells";
        throw input_error(os.str());
    }
    return rank1_count(d);
}

} // namespace ratcells
