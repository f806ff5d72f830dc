#pragma once

#include <json.hpp>

#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "ratcells/bb.hpp"
#include "ratcells/char_fraction.hpp"
#include "ratcells/cone.hpp"
#include "ratcells/fan.hpp"
#include "ratcells/monoid.hpp"
#include "ratcells/polytope.hpp"

namespace ratcells {

// Reports use insertion-ordered JSON so that output is byte-deterministic.
using Json = nlohmann::ordered_json;

inline Json json_int(const Int& x) {
    static const Int lo = Int(std::numeric_limits<long long>::min());
    static const Int hi = Int(std::numeric_limits<long long>::max());
    if (x >= lo && x <= hi) return Json(static_cast<long long>(x));
    return Json(x.str());
}

inline Int int_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
            throw input_error(where + ": cannot parse integer '" +
                              j.get<std::string>() + "'");
        }
    }
    throw input_error(where + ": expected an integer (number or string)");
}

inline Json json_vec(const Vec& v) {
    Json a = Json::array();
    for (const Int& x : v) a.push_back(json_int(x));
    return a;
}

inline Vec vec_from_json(const Json& j, const std::string& where) {
    if (!j.is_array()) throw input_error(where + ": expected an array of integers");
    Vec v;
    for (const Json& x : j) v.push_back(int_from_json(x, where));
    return v;
}

inline Json json_vecs(const std::vector<Vec>& vs) {
    Json a = Json::array();
    for (const Vec& v : vs) a.push_back(json_vec(v));
    return a;
}

inline Json json_rat(const Rat& r) { return Json(rat_str(r)); }

// ---------------------------------------------------------------------------
// CharFraction: {"num": [[coeff_num, coeff_den, [exponents]], ...],
//                "den": [[[character], multiplicity], ...]}
// ---------------------------------------------------------------------------

inline Json json_fraction(const CharFraction& f) {
    Json num = Json::array();
    for (auto it = f.numerator().terms().rbegin(); it != f.numerator().terms().rend();
         ++it) {
        Json term = Json::array();
        term.push_back(json_int(numerator(it->second)));
        term.push_back(json_int(denominator(it->second)));
        Json exps = Json::array();
        for (int e : it->first) exps.push_back(e);
        term.push_back(exps);
        num.push_back(term);
    }
    Json den = Json::array();
    for (const auto& [chi, m] : f.denominator()) {
        Json factor = Json::array();
        factor.push_back(json_vec(chi.coords));
        factor.push_back(m);
        den.push_back(factor);
    }
    Json out;
    out["num"] = num;
    out["den"] = den;
    return out;
}

inline CharFraction fraction_from_json(const Json& j, int rank) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw input_error("fraction: expected {\"num\": ..., \"den\": ...}");
    Polynomial num(rank);
    for (const Json& term : j.at("num")) {
        if (!term.is_array() || term.size() != 3)
            throw input_error("fraction term: expected [coeff_num, coeff_den, exponents]");
        Int cn = int_from_json(term[0], "fraction coefficient");
        Int cd = int_from_json(term[1], "fraction coefficient");
        if (cd == 0) throw input_error("fraction coefficient with zero denominator");
        Polynomial mono(rank);
        std::vector<int> exps;
        for (const Json& e : term[2]) exps.push_back(e.get<int>());
        if (static_cast<int>(exps.size()) != rank)
            throw input_error("fraction term exponent array has wrong rank");
        Polynomial t = Polynomial::constant(rank, Rat(cn, cd));
        for (int i = 0; i < rank; ++i)
            for (int k = 0; k < exps[i]; ++k) {
                Vec unit(rank, Int(0));
                unit[i] = 1;
                t = t * Polynomial::linear(Character(unit));
            }
        num += t;
    }
    std::map<Character, int> den;
    for (const Json& factor : j.at("den")) {
        if (!factor.is_array() || factor.size() != 2)
            throw input_error("fraction denominator: expected [[character], multiplicity]");
        Vec chi = vec_from_json(factor[0], "denominator character");
        int m = factor[1].get<int>();
        if (m <= 0) throw input_error("denominator multiplicity must be positive");
        den[Character(chi)] += m;
    }
    return CharFraction(std::move(num), std::move(den));
}

// ---------------------------------------------------------------------------
// Cone / Fan / Polytope / Monoid inputs
// ---------------------------------------------------------------------------

inline Cone cone_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("rank") || !j.contains("rays"))
        throw input_error("cone: expected {\"rank\": d, \"rays\": [[...]]}");
    int rank = j.at("rank").get<int>();
    if (rank < 1) throw input_error("cone: rank must be positive");
    std::vector<Vec> rays;
    for (const Json& r : j.at("rays")) rays.push_back(vec_from_json(r, "cone ray"));
    return Cone::make(rank, std::move(rays));
}

inline Json json_cone(const Cone& c) {
    Json j;
    j["rank"] = c.ambient_rank();
    j["rays"] = json_vecs(c.rays());
    return j;
}

inline Fan fan_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("rank") || !j.contains("rays") ||
        !j.contains("max_cones"))
        throw input_error(
            "fan: expected {\"rank\": d, \"rays\": [[...]], \"max_cones\": [[...]]}");
    int rank = j.at("rank").get<int>();
    std::vector<Vec> rays;
    for (const Json& r : j.at("rays")) rays.push_back(vec_from_json(r, "fan ray"));
    std::vector<std::vector<int>> max_cones;
    for (const Json& c : j.at("max_cones")) {
        std::vector<int> idx;
        for (const Json& i : c) idx.push_back(i.get<int>());
        max_cones.push_back(std::move(idx));
    }
    return Fan::make(rank, std::move(rays), std::move(max_cones));
}

inline Json json_fan(const Fan& f) {
    Json j;
    j["rank"] = f.rank();
    j["rays"] = json_vecs(f.rays());
    Json mc = Json::array();
    for (const std::vector<int>& c : f.max_cones()) mc.push_back(c);
    j["max_cones"] = mc;
    return j;
}

inline Json json_polytope(const Polytope& p) {
    Json j;
    j["rank"] = p.ambient_rank();
    j["dim"] = p.dim();
    j["vertices"] = json_vecs(p.vertices());
    return j;
}

inline MonoidDatum monoid_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("weyl") || !j.contains("dominant_points"))
        throw input_error(
            "monoid: expected {\"weyl\": {\"family\": ..., \"rank\": ...}, "
            "\"dominant_points\": [[...]]}");
    const Json& w = j.at("weyl");
    if (!w.contains("family") || !w.contains("rank"))
        throw input_error("monoid weyl: expected {\"family\": ..., \"rank\": ...}");
    WeylFamily fam = family_from_name(w.at("family").get<std::string>());
    int rank = w.at("rank").get<int>();
    std::vector<Vec> points;
    for (const Json& p : j.at("dominant_points"))
        points.push_back(vec_from_json(p, "dominant point"));
    std::optional<Int> dim_override;
    if (j.contains("dim_M")) dim_override = int_from_json(j.at("dim_M"), "dim_M");
    return MonoidDatum::make(weyl_enumerate(fam, rank), std::move(points), dim_override);
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

inline Json json_cell(const CellReport& c) {
    Json j;
    j["fixed_point"] = c.fixed_point;
    j["cell_dim"] = c.cell_dim;
    j["dense_cone_rays"] = c.dense_cone_rays;
    std::string closure = "V({";
    for (std::size_t i = 0; i < c.dense_cone_rays.size(); ++i)
        closure += (i ? "," : "") + std::to_string(c.dense_cone_rays[i]);
    closure += "})";
    j["closure"] = closure;
    Json w = Json::array();
    for (const Character& chi : c.attracting_weights) w.push_back(json_vec(chi.coords));
    j["attracting_weights"] = w;
    return j;
}

inline Json json_certificate(const RationalCellCertificate& cert) {
    Json j;
    j["verdict"] = cert.verdict;
    j["ray_count"] = cert.ray_count;
    j["dimension"] = cert.dimension;
    if (cert.cover_degree) j["cover_degree"] = json_int(*cert.cover_degree);
    if (!cert.cover_weights.empty()) {
        Json w = Json::array();
        for (const Character& chi : cert.cover_weights) w.push_back(json_vec(chi.coords));
        j["cover_weights"] = w;
    }
    Json cc = Json::array();
    for (const Character& chi : cert.curve_characters) cc.push_back(json_vec(chi.coords));
    j["curve_characters"] = cc;
    if (cert.failure_reason) j["failure_reason"] = *cert.failure_reason;
    return j;
}

inline Json json_fraction_full(const CharFraction& f) {
    Json j = json_fraction(f);
    j["string"] = f.to_string();
    return j;
}

} // namespace ratcells
