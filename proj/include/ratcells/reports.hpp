#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ratcells/io.hpp"

namespace ratcells {

/// Which fan analyses to include in the report (all by default).
struct FanSelector {
    bool hpoly = true;
    bool cells = true;
    bool basis = true;
    bool ranks = true;
};

struct MonoidSelector {
    bool report = true;
    bool lattice = true;
    bool quasismooth = true;
};

inline Json cone_report(const Cone& c, const std::optional<OneParamSubgroup>& lambda) {
    Json j;
    j["kind"] = "cone";
    j["rank"] = c.ambient_rank();
    j["rays"] = json_vecs(c.rays());
    j["dimension"] = c.dim();
    j["simplicial"] = c.is_simplicial();
    if (c.is_simplicial()) j["multiplicity"] = json_int(c.multiplicity());
    EqMult e = eq_mult(c);
    j["e0"] = json_fraction_full(e.value);
    j["e0_degree"] = e.homogeneity_degree;
    if (lambda) j["e0_at_lambda"] = rat_str(frac_eval(e.value, *lambda));
    j["rational_cell"] = json_certificate(is_algebraic_rational_cell(c));
    return j;
}

inline Json fan_report(const Fan& fan, const std::optional<OneParamSubgroup>& lambda,
                       const FanSelector& sel = FanSelector{}) {
    Json j;
    j["kind"] = "fan";
    j["rank"] = fan.rank();
    j["rays"] = json_vecs(fan.rays());
    Json mc = Json::array();
    for (const std::vector<int>& c : fan.max_cones()) mc.push_back(c);
    j["max_cones"] = mc;

    FanValidation v = fan_validate(fan);
    Json val;
    val["label"] = v.label();
    val["complete"] = v.complete_certified();
    val["simplicial"] = v.all_simplicial;
    val["defects"] = v.defects;
    j["validation"] = val;
    if (!lambda) return j;

    j["lambda"] = json_vec(lambda->coords);
    std::vector<CellReport> cells = bb_decomposition(fan, *lambda);
    if (sel.cells) {
        Json cj = Json::array();
        for (const CellReport& c : cells) cj.push_back(json_cell(c));
        j["cells"] = cj;
    }
    if (sel.hpoly) {
        j["h_polynomial"] = h_polynomial(fan, *lambda);
    }
    Filtration fil = build_filtration(fan, *lambda, cells);
    j["filtration_order"] = fil.order;
    if (sel.basis) {
        BasisMatrix m = localized_basis_matrix(fan, *lambda);
        Json bj;
        bj["order"] = m.order;
        Json rows = Json::array();
        for (std::size_t p = 0; p < m.rows.size(); ++p) {
            Json row;
            row["closure_rays"] = m.closures[p];
            row["class_dim"] = fan.rank() - static_cast<int>(m.closures[p].size());
            Json entries = Json::array();
            for (int q = 0; q < static_cast<int>(m.order.size()); ++q) {
                auto it = m.rows[p].entries.find(m.order[q]);
                if (it == m.rows[p].entries.end()) continue;
                Json entry;
                entry["fixed_point"] = m.order[q];
                entry["value"] = json_fraction_full(it->second);
                entries.push_back(entry);
            }
            row["entries"] = entries;
            rows.push_back(row);
        }
        bj["classes"] = rows;
        j["basis_matrix"] = bj;
    }
    if (sel.ranks) {
        ChowRanks r = chow_ranks(fan, *lambda);
        Json rj;
        rj["per_degree"] = r.ranks;
        rj["total"] = r.total;
        rj["fixed_points"] = r.fixed_points;
        rj["free"] = r.free_module;
        rj["step_ranks"] = r.step_ranks;
        j["ranks"] = rj;
    }
    return j;
}

inline Json monoid_report_json(const MonoidDatum& d,
                               const MonoidSelector& sel = MonoidSelector{}) {
    Json j;
    j["kind"] = "monoid";
    Json wj;
    wj["family"] = family_name(d.weyl().family());
    wj["rank"] = d.weyl().rank();
    wj["order"] = d.weyl().order();
    j["weyl"] = wj;
    j["dominant_points"] = json_vecs(d.dominant_points());

    MonoidReport r = monoid_cell_check(d);
    if (sel.report) {
        j["dim_T"] = r.dim_t;
        j["E1"] = r.e1_count;
        j["R1"] = r.r1_count;
        j["dim_M"] = json_int(r.dim_m);
        if (d.dim_m_override())
            j["dim_M_override_mismatch"] = r.dim_m_override_mismatch;
        j["rational_cell_b"] = r.rational_cell_b;
        j["rational_cell_f"] = r.rational_cell_f;
        j["equivalence_ok"] = r.equivalence_ok;
        j["polytope"] = json_polytope(d.weight_polytope());
        j["vertex_orbit_sizes"] = r.vertex_orbit_sizes;
    }
    if (sel.quasismooth) {
        j["quasismooth"] = r.quasismooth;
        j["per_vertex_edge_counts"] = r.per_vertex_edge_counts;
        j["polytope_dim"] = d.weight_polytope().dim();
    }
    if (sel.lattice) {
        Json lj = Json::array();
        for (const LambdaFace& f : r.lambda) {
            Json fj;
            fj["rank"] = f.rank;
            Json rays = Json::array();
            for (int i : f.cone_rays) rays.push_back(json_vec(d.torus_cone().rays()[i]));
            fj["rays"] = rays;
            fj["centralizer_order"] = f.centralizer_order;
            lj.push_back(fj);
        }
        j["lambda"] = lj;
        j["lambda_rank_counts"] = r.lambda_rank_counts;
    }
    if (sel.report) {
        if (r.quasismooth) {
            j["embedding_chow_rank"] = embedding_chow_rank(d);
        } else {
            j["embedding_chow_rank"] = nullptr;
            j["embedding_chow_rank_error"] =
                "not quasismooth: the projective embedding need not be filtrable "
                "by rational cells";
        }
    }
    return j;
}

// ---------------------------------------------------------------------------
// Table rendering: deterministic aligned text views of the reports.
// ---------------------------------------------------------------------------

namespace detail {

inline void table_line(std::ostringstream& os, const std::string& key,
                       const std::string& value) {
    os << key;
    for (std::size_t i = key.size(); i < 28; ++i) os << ' ';
    os << value << "\n";
}

inline std::string vec_str(const Json& arr) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (i) os << ",";
        if (arr[i].is_string()) os << arr[i].get<std::string>();
        else os << arr[i].dump();
    }
    os << ")";
    return os.str();
}

inline std::string list_str(const Json& arr) {
    std::ostringstream os;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (i) os << " ";
        os << vec_str(arr[i]);
    }
    return os.str();
}

inline std::string ints_str(const Json& arr) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (i) os << ",";
        os << arr[i].dump();
    }
    os << ")";
    return os.str();
}

} // namespace detail

inline std::string render_table(const Json& report) {
    std::ostringstream os;
    std::string kind = report.at("kind").get<std::string>();
    if (kind == "cone") {
        detail::table_line(os, "kind", "cone");
        detail::table_line(os, "rank", report.at("rank").dump());
        detail::table_line(os, "rays", detail::list_str(report.at("rays")));
        detail::table_line(os, "simplicial",
                           report.at("simplicial").get<bool>() ? "yes" : "no");
        if (report.contains("multiplicity"))
            detail::table_line(os, "multiplicity", report.at("multiplicity").dump());
        detail::table_line(os, "e0", report.at("e0").at("string").get<std::string>());
        if (report.contains("e0_at_lambda"))
            detail::table_line(os, "e0(lambda)",
                               report.at("e0_at_lambda").get<std::string>());
        const Json& cert = report.at("rational_cell");
        detail::table_line(os, "rational cell",
                           cert.at("verdict").get<bool>() ? "yes" : "no");
        if (cert.contains("cover_degree"))
            detail::table_line(os, "cover degree", cert.at("cover_degree").dump());
        if (cert.contains("failure_reason"))
            detail::table_line(os, "reason", cert.at("failure_reason").get<std::string>());
        detail::table_line(os, "curve characters",
                           detail::list_str(cert.at("curve_characters")));
    } else if (kind == "fan") {
        detail::table_line(os, "kind", "fan");
        detail::table_line(os, "rank", report.at("rank").dump());
        detail::table_line(os, "rays", detail::list_str(report.at("rays")));
        detail::table_line(os, "validation",
                           report.at("validation").at("label").get<std::string>());
        for (const Json& d : report.at("validation").at("defects"))
            detail::table_line(os, "  defect", d.get<std::string>());
        if (report.contains("lambda"))
            detail::table_line(os, "lambda", detail::vec_str(report.at("lambda")));
        if (report.contains("h_polynomial"))
            detail::table_line(os, "h-polynomial",
                               detail::ints_str(report.at("h_polynomial")));
        if (report.contains("cells"))
            for (const Json& c : report.at("cells")) {
                std::ostringstream key;
                key << "cell x" << c.at("fixed_point").get<int>();
                std::ostringstream val;
                val << "dim " << c.at("cell_dim").get<int>() << ", dense cone rays "
                    << detail::ints_str(c.at("dense_cone_rays"));
                detail::table_line(os, key.str(), val.str());
            }
        if (report.contains("filtration_order"))
            detail::table_line(os, "filtration order",
                               detail::ints_str(report.at("filtration_order")));
        if (report.contains("basis_matrix")) {
            const Json& bm = report.at("basis_matrix");
            int jdx = 0;
            for (const Json& row : bm.at("classes")) {
                for (const Json& entry : row.at("entries")) {
                    std::ostringstream key;
                    key << "e[x" << entry.at("fixed_point").get<int>() << "][Y" << jdx
                        << "]";
                    detail::table_line(os, key.str(),
                                       entry.at("value").at("string").get<std::string>());
                }
                ++jdx;
            }
        }
        if (report.contains("ranks")) {
            detail::table_line(os, "chow ranks",
                               detail::ints_str(report.at("ranks").at("per_degree")));
            detail::table_line(os, "total rank", report.at("ranks").at("total").dump());
            detail::table_line(os, "free",
                               report.at("ranks").at("free").get<bool>() ? "yes" : "no");
        }
    } else if (kind == "monoid") {
        detail::table_line(os, "kind", "monoid");
        detail::table_line(os, "weyl",
                           report.at("weyl").at("family").get<std::string>() +
                               std::to_string(report.at("weyl").at("rank").get<int>()) +
                               " (order " + report.at("weyl").at("order").dump() + ")");
        detail::table_line(os, "dominant points",
                           detail::list_str(report.at("dominant_points")));
        if (report.contains("dim_T")) {
            detail::table_line(os, "dim T", report.at("dim_T").dump());
            detail::table_line(os, "|E1|", report.at("E1").dump());
            detail::table_line(os, "|R1|", report.at("R1").dump());
            detail::table_line(os, "dim M", report.at("dim_M").dump());
            detail::table_line(os, "cell (dim T = |E1|)",
                               report.at("rational_cell_b").get<bool>() ? "yes" : "no");
            detail::table_line(os, "cell (dim M = |R1|)",
                               report.at("rational_cell_f").get<bool>() ? "yes" : "no");
            detail::table_line(os, "criteria agree",
                               report.at("equivalence_ok").get<bool>() ? "yes" : "no");
        }
        if (report.contains("quasismooth")) {
            detail::table_line(os, "quasismooth",
                               report.at("quasismooth").get<bool>() ? "yes" : "no");
            detail::table_line(os, "vertex edge counts",
                               detail::ints_str(report.at("per_vertex_edge_counts")));
        }
        if (report.contains("lambda_rank_counts"))
            detail::table_line(os, "lambda ranks",
                               detail::ints_str(report.at("lambda_rank_counts")));
        if (report.contains("embedding_chow_rank")) {
            if (report.at("embedding_chow_rank").is_null())
                detail::table_line(os, "embedding chow rank",
                                   report.at("embedding_chow_rank_error").get<std::string>());
            else
                detail::table_line(os, "embedding chow rank",
                                   report.at("embedding_chow_rank").dump());
        }
    }
    return os.str();
}

} // namespace ratcells
