#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ratcells/cone.hpp"

namespace ratcells {

/// Intersection of two strongly convex cones in the same lattice, computed
/// from the joint H-representation by enumerating candidate extremal rays.
inline Cone intersect_cones(const Cone& a, const Cone& b) {
    if (a.ambient_rank() != b.ambient_rank())
        throw dimension_error("intersection of cones in different lattices");
    int d = a.ambient_rank();

    // Equations: complements of both spans.
    std::vector<Vec> eq;
    auto span_perp = [&](const Cone& c) {
        if (c.ray_count() == 0) {
            for (int i = 0; i < d; ++i) {
                Vec e(d, Int(0));
                e[i] = 1;
                eq.push_back(e);
            }
            return;
        }
        IMat rows = IMat::from_rows(c.rays(), d);
        for (const Vec& k : kernel_basis(rows)) eq.push_back(k);
    };
    span_perp(a);
    span_perp(b);

    std::vector<Vec> w; // basis of the common span
    if (eq.empty()) {
        for (int i = 0; i < d; ++i) {
            Vec e(d, Int(0));
            e[i] = 1;
            w.push_back(e);
        }
    } else {
        w = kernel_basis(IMat::from_rows(eq, d));
    }
    int s = static_cast<int>(w.size());
    if (s == 0) return Cone::from_generators(d, {});

    // Inequalities restricted to the common span.
    std::vector<Vec> nw;
    auto push_facets = [&](const Cone& c) {
        for (const Cone::Facet& f : c.facets()) {
            Vec row(s);
            for (int i = 0; i < s; ++i) row[i] = dot(f.normal_ambient, w[i]);
            nw.push_back(std::move(row));
        }
    };
    push_facets(a);
    push_facets(b);

    std::vector<Vec> candidates;
    std::vector<int> idx(std::max(s - 1, 0));
    auto consider = [&](const std::vector<int>& chosen) {
        std::vector<Vec> rows;
        for (int i : chosen) rows.push_back(nw[i]);
        if (!rows.empty() && rank_of(rows) != s - 1) return;
        IMat m = rows.empty() ? IMat(0, s) : IMat::from_rows(rows, s);
        std::vector<Vec> ker = kernel_basis(m);
        if (ker.size() != 1) return;
        Vec y = ker[0];
        bool pos = false, neg = false;
        for (const Vec& row : nw) {
            Int p = dot(row, y);
            if (p > 0) pos = true;
            if (p < 0) neg = true;
        }
        if (pos && neg) return;
        if (neg) y = negated(y);
        Vec amb(d, Int(0));
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < d; ++j) amb[j] += y[i] * w[i][j];
        if (!is_zero_vec(amb)) candidates.push_back(std::move(amb));
    };
    auto rec = [&](auto&& self, int start, int pos_i) -> void {
        if (pos_i == s - 1) {
            consider(idx);
            return;
        }
        for (int i = start; i < static_cast<int>(nw.size()); ++i) {
            idx[pos_i] = i;
            self(self, i + 1, pos_i + 1);
        }
    };
    if (s == 1) consider({});
    else rec(rec, 0, 0);
    return Cone::from_generators(d, candidates);
}

/// Fan: a global primitive ray list plus maximal cones as ray-index sets.
/// Construction validates each cone individually; the mutual (face-to-face)
/// conditions are checked by fan_validate, which reports rather than throws.
class Fan {
public:
    static Fan make(int rank, std::vector<Vec> rays,
                    std::vector<std::vector<int>> max_cones) {
        if (rank < 1) throw input_error("fan rank must be at least 1");
        Fan f;
        f.rank_ = rank;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (static_cast<int>(rays[i].size()) != rank)
                throw input_error("fan ray " + std::to_string(i) + " has wrong rank");
            if (is_zero_vec(rays[i]))
                throw input_error("fan ray " + std::to_string(i) + " is zero");
            if (!is_primitive_vec(rays[i]))
                throw input_error("fan ray " + std::to_string(i) + " is not primitive");
            for (std::size_t j = 0; j < i; ++j)
                if (rays[i] == rays[j])
                    throw input_error("fan rays " + std::to_string(j) + " and " +
                                      std::to_string(i) + " coincide");
        }
        f.rays_ = std::move(rays);
        if (max_cones.empty()) throw input_error("fan has no maximal cones");
        for (std::vector<int>& c : max_cones) {
            std::sort(c.begin(), c.end());
            if (std::adjacent_find(c.begin(), c.end()) != c.end())
                throw input_error("maximal cone repeats a ray index");
            for (int i : c)
                if (i < 0 || i >= static_cast<int>(f.rays_.size()))
                    throw input_error("maximal cone uses ray index " + std::to_string(i) +
                                      " out of range");
            std::vector<Vec> rs;
            for (int i : c) rs.push_back(f.rays_[i]);
            f.cones_.push_back(Cone::make(rank, rs)); // throws input_error on defects
        }
        for (std::size_t i = 0; i < max_cones.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (max_cones[i] == max_cones[j])
                    throw input_error("maximal cones " + std::to_string(j) + " and " +
                                      std::to_string(i) + " coincide");
        f.max_cones_ = std::move(max_cones);
        return f;
    }

    int rank() const { return rank_; }
    const std::vector<Vec>& rays() const { return rays_; }
    const std::vector<std::vector<int>>& max_cones() const { return max_cones_; }
    const Cone& cone(int i) const { return cones_[i]; }
    int cone_count() const { return static_cast<int>(cones_.size()); }

    /// All cones of the fan as global ray-index sets (deduplicated faces of
    /// the maximal cones; includes the zero cone).
    std::vector<std::vector<int>> all_cone_ray_sets() const {
        std::set<std::vector<int>> out;
        for (int c = 0; c < cone_count(); ++c) {
            for (const std::vector<int>& local : cones_[c].face_ray_sets()) {
                std::vector<int> global;
                for (int l : local) global.push_back(max_cones_[c][l]);
                std::sort(global.begin(), global.end());
                out.insert(global);
            }
        }
        return std::vector<std::vector<int>>(out.begin(), out.end());
    }

    /// f-vector of the fan: entry k is the number of k-dimensional cones.
    std::vector<int> f_vector() const {
        std::vector<int> f(rank_ + 1, 0);
        for (const std::vector<int>& c : all_cone_ray_sets()) {
            std::vector<Vec> rs;
            for (int i : c) rs.push_back(rays_[i]);
            int dim = rs.empty() ? 0 : rank_of(rs);
            f[dim] += 1;
        }
        return f;
    }

private:
    int rank_ = 0;
    std::vector<Vec> rays_;
    std::vector<std::vector<int>> max_cones_;
    std::vector<Cone> cones_;
};

struct FanValidation {
    bool pairwise_faces = true;
    bool pure_full_dimensional = true;
    bool facets_paired = true;
    bool connected = true;
    bool all_simplicial = true;
    std::vector<std::string> defects;

    bool complete_certified() const {
        return pairwise_faces && pure_full_dimensional && facets_paired && connected;
    }
    std::string label() const {
        return complete_certified() ? "complete (certified)" : "defective";
    }
};

/// Pairwise face-intersection check plus a completeness certificate: the fan
/// is certified complete when it is pure full-dimensional, every facet of a
/// maximal cone is shared by exactly two maximal cones, and the facet graph
/// is connected.
inline FanValidation fan_validate(const Fan& fan) {
    FanValidation v;
    int m = fan.cone_count();

    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            Cone k = intersect_cones(fan.cone(i), fan.cone(j));
            if (!fan.cone(i).has_face(k.rays()) || !fan.cone(j).has_face(k.rays())) {
                v.pairwise_faces = false;
                v.defects.push_back("cones " + std::to_string(i) + " and " +
                                    std::to_string(j) + " intersect in a non-face");
            }
        }

    std::map<std::vector<int>, int> facet_count;
    std::map<std::vector<int>, std::vector<int>> facet_owners;
    for (int c = 0; c < m; ++c) {
        if (fan.cone(c).dim() != fan.rank()) {
            v.pure_full_dimensional = false;
            v.defects.push_back("maximal cone " + std::to_string(c) +
                                " is not full-dimensional");
            continue;
        }
        if (!fan.cone(c).is_simplicial()) v.all_simplicial = false;
        for (const Cone::Facet& f : fan.cone(c).facets()) {
            std::vector<int> key;
            for (int local : f.rays) key.push_back(fan.max_cones()[c][local]);
            std::sort(key.begin(), key.end());
            facet_count[key] += 1;
            facet_owners[key].push_back(c);
        }
    }
    if (v.pure_full_dimensional) {
        for (const auto& [key, count] : facet_count) {
            if (count == 2) continue;
            v.facets_paired = false;
            std::ostringstream os;
            os << "facet {";
            for (std::size_t i = 0; i < key.size(); ++i) os << (i ? "," : "") << key[i];
            os << "} is shared by " << count << " maximal cone(s), expected 2";
            v.defects.push_back(os.str());
        }
        // Connectivity of the facet graph.
        std::vector<int> comp(m, -1);
        std::vector<int> stack;
        if (m > 0) {
            comp[0] = 0;
            stack.push_back(0);
            while (!stack.empty()) {
                int c = stack.back();
                stack.pop_back();
                for (const auto& [key, owners] : facet_owners)
                    for (std::size_t i = 0; i < owners.size(); ++i)
                        if (owners[i] == c)
                            for (std::size_t j = 0; j < owners.size(); ++j)
                                if (comp[owners[j]] < 0) {
                                    comp[owners[j]] = 0;
                                    stack.push_back(owners[j]);
                                }
            }
            for (int c = 0; c < m; ++c)
                if (comp[c] < 0) {
                    v.connected = false;
                    v.defects.push_back("facet graph is disconnected");
                    break;
                }
        }
    }
    return v;
}

} // namespace ratcells
