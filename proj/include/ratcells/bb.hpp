#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ratcells/char_fraction.hpp"
#include "ratcells/eqmult.hpp"
#include "ratcells/fan.hpp"

namespace ratcells {

/// One attracting cell of the decomposition: the fixed point of a maximal
/// cone together with the cell's dimension, its dense-orbit cone (the face
/// spanned by the repelling rays), and the attracting tangent characters.
struct CellReport {
    int fixed_point = 0;               // maximal-cone index
    int cell_dim = 0;
    std::vector<int> dense_cone_rays;  // global ray indices, sorted
    std::vector<Character> attracting_weights;
};

struct Filtration {
    std::vector<int> order;                          // fixed points, closed cells first
    std::vector<std::vector<std::vector<int>>> pieces; // cumulative assigned cones
};

/// Localization of a class: its multiplicity at each fixed point. Fixed
/// points not in the support carry no entry (equivalently, entry zero).
struct LocalizedClass {
    std::map<int, CharFraction> entries;
};

namespace detail {

inline void require_bb_ready(const Fan& fan) {
    FanValidation v = fan_validate(fan);
    if (!v.complete_certified()) {
        std::string msg = "fan is not certified complete";
        if (!v.defects.empty()) msg += ": " + v.defects.front();
        throw input_error(msg);
    }
    if (!v.all_simplicial)
        throw input_error(
            "fan has a non-simplicial maximal cone: its attracting sets are not "
            "algebraic rational cells, refusing the decomposition");
    for (int i = 0; i < fan.cone_count(); ++i)
        if (!fan.cone(i).is_full_dimensional())
            throw input_error("maximal cone " + std::to_string(i) +
                              " is not full-dimensional");
}

/// Matched dual generators of each maximal cone, in the cone's ray order.
inline std::vector<std::vector<Vec>> matched_weights(const Fan& fan) {
    std::vector<std::vector<Vec>> out;
    for (int i = 0; i < fan.cone_count(); ++i)
        out.push_back(fan.cone(i).matched_dual_generators());
    return out;
}

} // namespace detail

/// A one-parameter subgroup is generic when no tangent weight at any fixed
/// point pairs to zero against it.
inline bool is_generic(const OneParamSubgroup& lambda, const Fan& fan) {
    detail::require_bb_ready(fan);
    if (lambda.rank() != fan.rank())
        throw dimension_error("lambda has wrong rank for this fan");
    for (int i = 0; i < fan.cone_count(); ++i)
        for (const Character& chi : orbifold_tangent_weights(fan.cone(i)))
            if (pairing(lambda, chi) == 0) return false;
    return true;
}

inline void require_generic(const OneParamSubgroup& lambda, const Fan& fan) {
    detail::require_bb_ready(fan);
    if (lambda.rank() != fan.rank())
        throw dimension_error("lambda has wrong rank for this fan");
    for (int i = 0; i < fan.cone_count(); ++i) {
        std::vector<Character> ws = orbifold_tangent_weights(fan.cone(i));
        std::sort(ws.begin(), ws.end());
        for (const Character& chi : ws)
            if (pairing(lambda, chi) == 0) {
                std::ostringstream os;
                os << "lambda not generic: weight (";
                for (std::size_t k = 0; k < chi.coords.size(); ++k)
                    os << (k ? "," : "") << chi.coords[k].str();
                os << ") at fixed point " << i << " pairs to 0";
                throw input_error(os.str());
            }
    }
}

/// Attracting-cell decomposition for a generic lambda. A tangent coordinate
/// of weight chi is attracting iff <lambda, chi> > 0; the dense-orbit cone of
/// a cell is spanned by the rays whose matched dual generator pairs
/// negatively. Convention fixed by the projective-line example: the dense
/// cell sits at the maximal cone containing lambda.
inline std::vector<CellReport> bb_decomposition(const Fan& fan,
                                                const OneParamSubgroup& lambda) {
    require_generic(lambda, fan);
    std::vector<CellReport> cells;
    for (int i = 0; i < fan.cone_count(); ++i) {
        const Cone& sigma = fan.cone(i);
        std::vector<Vec> matched = sigma.matched_dual_generators();
        CellReport cell;
        cell.fixed_point = i;
        for (int j = 0; j < sigma.ray_count(); ++j) {
            Int p = dot(lambda.coords, matched[j]);
            if (p > 0) {
                cell.cell_dim += 1;
                cell.attracting_weights.push_back(Character(matched[j]));
            } else {
                cell.dense_cone_rays.push_back(fan.max_cones()[i][j]);
            }
        }
        std::sort(cell.dense_cone_rays.begin(), cell.dense_cone_rays.end());
        cells.push_back(std::move(cell));
    }
    return cells;
}

/// Assign every cone of the fan to the cell that absorbs its orbit: the
/// unique maximal cone sigma containing it with all dual generators off the
/// cone pairing positively against lambda.
inline std::map<std::vector<int>, int> cell_assignment(const Fan& fan,
                                                       const OneParamSubgroup& lambda) {
    std::map<std::vector<int>, int> assigned;
    std::vector<std::vector<Vec>> matched = detail::matched_weights(fan);
    for (const std::vector<int>& gamma : fan.all_cone_ray_sets()) {
        std::vector<int> hits;
        for (int i = 0; i < fan.cone_count(); ++i) {
            const std::vector<int>& sig = fan.max_cones()[i];
            if (!std::includes(sig.begin(), sig.end(), gamma.begin(), gamma.end()))
                continue;
            bool ok = true;
            for (int j = 0; j < static_cast<int>(sig.size()); ++j) {
                bool in_gamma = std::binary_search(gamma.begin(), gamma.end(), sig[j]);
                if (in_gamma) continue;
                if (dot(lambda.coords, matched[i][j]) < 0) { ok = false; break; }
            }
            if (ok) hits.push_back(i);
        }
        if (hits.size() != 1)
            throw internal_error("cone is assigned to " + std::to_string(hits.size()) +
                                 " cells; the decomposition must partition the fan");
        assigned[gamma] = hits[0];
    }
    return assigned;
}

/// Topological order of the fixed points under the closure relation: x_i lies
/// in the closure of cell j iff the dense cone of j is a face of sigma_i, and
/// then i must come first. Ties break by ascending cell dimension, then index.
inline Filtration build_filtration(const Fan& fan, const OneParamSubgroup& lambda,
                                   const std::vector<CellReport>& cells) {
    int m = fan.cone_count();
    std::vector<std::set<int>> succ(m);   // i -> cells that must come after
    std::vector<int> pending(m, 0);       // number of unfinished predecessors
    for (int j = 0; j < m; ++j) {
        const std::vector<int>& tau = cells[j].dense_cone_rays;
        for (int i = 0; i < m; ++i) {
            if (i == j) continue;
            const std::vector<int>& sig = fan.max_cones()[i];
            if (std::includes(sig.begin(), sig.end(), tau.begin(), tau.end())) {
                if (succ[i].insert(j).second) pending[j] += 1;
            }
        }
    }
    Filtration fil;
    auto better = [&](int a, int b) {
        if (cells[a].cell_dim != cells[b].cell_dim)
            return cells[a].cell_dim < cells[b].cell_dim;
        return a < b;
    };
    std::vector<bool> done(m, false);
    for (int step = 0; step < m; ++step) {
        int chosen = -1;
        for (int i = 0; i < m; ++i)
            if (!done[i] && pending[i] == 0 && (chosen < 0 || better(i, chosen)))
                chosen = i;
        if (chosen < 0)
            throw internal_error("cycle in the cell-closure relation for a generic lambda");
        done[chosen] = true;
        fil.order.push_back(chosen);
        for (int j : succ[chosen]) pending[j] -= 1;
    }
    std::map<std::vector<int>, int> assigned = cell_assignment(fan, lambda);
    std::vector<std::vector<std::vector<int>>> cum;
    std::vector<std::vector<int>> acc;
    for (int idx : fil.order) {
        for (const auto& [gamma, owner] : assigned)
            if (owner == idx) acc.push_back(gamma);
        std::sort(acc.begin(), acc.end());
        cum.push_back(acc);
    }
    fil.pieces = std::move(cum);
    return fil;
}

inline Filtration build_filtration(const Fan& fan, const OneParamSubgroup& lambda) {
    return build_filtration(fan, lambda, bb_decomposition(fan, lambda));
}

/// h-polynomial coefficients: h_k is the number of k-dimensional cells.
inline std::vector<int> h_polynomial(const Fan& fan, const OneParamSubgroup& lambda) {
    std::vector<int> h(fan.rank() + 1, 0);
    for (const CellReport& c : bb_decomposition(fan, lambda)) h[c.cell_dim] += 1;
    return h;
}

/// Localization of the class of the orbit closure V(tau): its multiplicity at
/// x_i is the multiplicity of the sliced chart sigma_i / tau, pushed into the
/// ambient character algebra; fixed points whose cone does not contain tau
/// carry zero.
inline LocalizedClass localize_orbit_closure(const Fan& fan,
                                             const std::vector<int>& tau_rays) {
    detail::require_bb_ready(fan);
    LocalizedClass out;
    int d = fan.rank();
    std::vector<Vec> tau_vecs;
    for (int r : tau_rays) tau_vecs.push_back(fan.rays()[r]);
    for (int i = 0; i < fan.cone_count(); ++i) {
        const std::vector<int>& sig = fan.max_cones()[i];
        if (!std::includes(sig.begin(), sig.end(), tau_rays.begin(), tau_rays.end()))
            continue;
        Cone tau = Cone::make(d, tau_vecs);
        QuotientCone q = quotient_cone(tau, fan.cone(i));
        EqMult em = eq_mult(q.image);
        // Push the fraction through the character embedding.
        std::vector<Polynomial> images;
        for (int k = 0; k < q.quotient_rank; ++k) {
            Vec unit(q.quotient_rank, Int(0));
            unit[k] = 1;
            images.push_back(Polynomial::linear(Character(q.embed_character(unit))));
        }
        Polynomial num = em.value.numerator().substituted(images, d);
        std::map<Character, int> den;
        for (const auto& [chi, mult] : em.value.denominator())
            den[Character(q.embed_character(chi.coords))] += mult;
        out.entries[i] = CharFraction(std::move(num), std::move(den));
    }
    return out;
}

inline LocalizedClass localize_fundamental_class(const Fan& fan) {
    return localize_orbit_closure(fan, {});
}

inline LocalizedClass localize_point_class(const Fan& fan, int fixed_point) {
    return localize_orbit_closure(fan, fan.max_cones()[fixed_point]);
}

/// Sum of the localized multiplicities: the pushforward to a point. Zero for
/// classes of positive dimension, one for a point class.
inline CharFraction integrate(const LocalizedClass& alpha, const Fan& fan) {
    CharFraction acc(fan.rank());
    for (const auto& [i, f] : alpha.entries) {
        if (i < 0 || i >= fan.cone_count())
            throw precondition_error("localized class supported outside the fan's fixed points");
        acc = acc + f;
    }
    return acc;
}

/// Free-basis matrix of the cell-closure classes. Row j is the localization
/// of the class of the closure of the j-th cell in filtration order; column i
/// is the fixed point of the i-th cell in the same order. The matrix is then
/// lower-triangular with nonzero diagonal: the freeness witness.
struct BasisMatrix {
    std::vector<int> order;                       // fixed points, filtration order
    std::vector<std::vector<int>> closures;       // dense cone of each class, same order
    std::vector<LocalizedClass> rows;             // one localized class per closure
    int rank = 0;

    /// Entry e_{x_i}[V(tau_j)] by cell indices (not filtration positions).
    const CharFraction* entry(int fixed_point, int class_cell) const {
        for (std::size_t p = 0; p < order.size(); ++p) {
            if (order[p] != class_cell) continue;
            auto it = rows[p].entries.find(fixed_point);
            return it == rows[p].entries.end() ? nullptr : &it->second;
        }
        return nullptr;
    }
};

inline BasisMatrix localized_basis_matrix(const Fan& fan,
                                          const OneParamSubgroup& lambda) {
    std::vector<CellReport> cells = bb_decomposition(fan, lambda);
    Filtration fil = build_filtration(fan, lambda, cells);
    BasisMatrix m;
    m.rank = fan.rank();
    m.order = fil.order;
    for (int idx : fil.order) {
        m.closures.push_back(cells[idx].dense_cone_rays);
        m.rows.push_back(localize_orbit_closure(fan, cells[idx].dense_cone_rays));
    }
    return m;
}

/// Rank data of the equivariant Chow module read off the decomposition.
struct ChowRanks {
    std::vector<int> ranks;      // per degree: the h-polynomial
    int total = 0;               // = number of fixed points
    int fixed_points = 0;
    bool free_module = false;
    std::vector<int> step_ranks; // rank after each filtration step
};

inline ChowRanks chow_ranks(const Fan& fan, const OneParamSubgroup& lambda) {
    ChowRanks r;
    r.ranks = h_polynomial(fan, lambda);
    for (int h : r.ranks) r.total += h;
    r.fixed_points = fan.cone_count();
    r.free_module = (r.total == r.fixed_points);
    for (int i = 1; i <= r.fixed_points; ++i) r.step_ranks.push_back(i);
    return r;
}

} // namespace ratcells
