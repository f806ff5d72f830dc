#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ratcells/corpus.hpp"
#include "ratcells/io.hpp"
#include "ratcells/reports.hpp"

namespace ratcells::cli {

namespace detail {

inline Json read_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open input file '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw input_error("cannot parse JSON from '" + path + "': " + e.what());
    }
    return j;
}

inline OneParamSubgroup parse_lambda(const std::string& csv, int rank) {
    Vec v;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t a = tok.find_first_not_of(" \t");
        std::size_t b = tok.find_last_not_of(" \t");
        if (a == std::string::npos) throw input_error("empty entry in --lambda");
        try {
            v.emplace_back(Int(tok.substr(a, b - a + 1)));
        } catch (const std::exception&) {
            throw input_error("cannot parse --lambda entry '" + tok + "' as an integer");
        }
    }
    if (static_cast<int>(v.size()) != rank)
        throw input_error("--lambda has " + std::to_string(v.size()) +
                          " entries, expected " + std::to_string(rank));
    return OneParamSubgroup(std::move(v));
}

inline void emit(const Json& report, const std::string& format, std::ostream& out) {
    if (format == "json") out << report.dump(2) << "\n";
    else out << render_table(report);
}

/// The canonical report of a corpus entry, compared byte-for-byte against the
/// frozen goldens.
inline std::string corpus_report(const std::string& kind, const std::string& input,
                                 const std::vector<long long>& lambda) {
    Json in = Json::parse(input);
    if (kind == "fan") {
        Fan f = fan_from_json(in);
        Vec lv;
        for (long long x : lambda) lv.emplace_back(x);
        return fan_report(f, OneParamSubgroup(lv)).dump(2);
    }
    if (kind == "cone") {
        return cone_report(cone_from_json(in), std::nullopt).dump(2);
    }
    return monoid_report_json(monoid_from_json(in)).dump(2);
}

/// Randomized property sweeps: triangulation independence and the
/// cover-degree identity on random cones, h-polynomial invariance on the
/// corpus fans under random generic one-parameter subgroups.
inline bool run_sweeps(unsigned long long seed, long long count, std::ostream& out) {
    std::mt19937_64 gen(seed);
    auto pick = [&](long long lo, long long hi) {
        return std::uniform_int_distribution<long long>(lo, hi)(gen);
    };
    bool ok = true;
    for (long long s = 0; s < count; ++s) {
        int rank = static_cast<int>(pick(2, 4));
        // Random full-dimensional pointed cone: generators in an open half-space.
        std::vector<Vec> gens;
        int want = static_cast<int>(pick(rank, rank + 3));
        while (static_cast<int>(gens.size()) < want) {
            Vec v(rank);
            for (int i = 0; i < rank; ++i) v[i] = Int(pick(-4, 4));
            if (is_zero_vec(v)) continue;
            if (v[0] <= 0) continue; // open half-space x_1 > 0
            gens.push_back(v);
        }
        Cone c = Cone::from_generators(rank, gens);
        if (c.dim() != rank) { --s; continue; }

        CharFraction base = eq_mult(c).value;
        std::vector<Vec> shuffled = c.rays();
        std::shuffle(shuffled.begin(), shuffled.end(), gen);
        Cone c2 = Cone::make(rank, shuffled);
        if (!(eq_mult(c2).value == base)) {
            out << "sweep " << s << ": triangulation independence FAILED\n";
            ok = false;
            continue;
        }
        if (c.is_simplicial()) {
            Int d = product_formula_check(c);
            if (d != lattice_index(orbifold_tangent_weights(c))) {
                out << "sweep " << s << ": cover-degree identity FAILED\n";
                ok = false;
                continue;
            }
        }

        // Random generic lambda on a corpus fan: the h-polynomial is intrinsic.
        const Corpus& corpus = load_corpus();
        const CorpusFan& cf = corpus.fans[static_cast<std::size_t>(
            pick(0, static_cast<long long>(corpus.fans.size()) - 1))];
        Fan fan = fan_from_json(Json::parse(cf.input_json));
        Vec base_lambda;
        for (long long x : cf.lambda) base_lambda.emplace_back(x);
        std::vector<int> base_h = h_polynomial(fan, OneParamSubgroup(base_lambda));
        OneParamSubgroup random_lambda(Vec{});
        while (true) {
            Vec v(fan.rank());
            for (int i = 0; i < fan.rank(); ++i) v[i] = Int(pick(-9, 9));
            if (is_zero_vec(v)) continue;
            OneParamSubgroup cand(v);
            if (is_generic(cand, fan)) {
                random_lambda = cand;
                break;
            }
        }
        if (h_polynomial(fan, random_lambda) != base_h) {
            out << "sweep " << s << ": h-polynomial depends on lambda (" << cf.name
                << ") FAILED\n";
            ok = false;
            continue;
        }
        out << "sweep " << s << ": ok\n";
    }
    return ok;
}

} // namespace detail

/// Entry point shared by the binary and the tests. Exit codes: 0 success,
/// 2 input or validation error, 3 internal property violation.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
    CLI::App app{"exact equivariant toolkit for toric varieties and monoid embeddings"};
    app.require_subcommand(1);

    std::string input_path;
    std::string lambda_csv;
    std::string format = "table";
    unsigned long long seed = 0;
    long long sweep = 0;

    CLI::App* cone_cmd = app.add_subcommand("cone", "analyze an affine toric chart");
    cone_cmd->add_option("--input", input_path, "cone JSON file")->required();
    cone_cmd->add_option("--lambda", lambda_csv, "one-parameter subgroup (csv integers)");
    cone_cmd->add_option("--format", format, "json|table")
        ->check(CLI::IsMember({"json", "table"}));

    CLI::App* fan_cmd = app.add_subcommand("fan", "analyze a complete simplicial fan");
    fan_cmd->add_option("--input", input_path, "fan JSON file")->required();
    fan_cmd->add_option("--lambda", lambda_csv, "one-parameter subgroup (csv integers)");
    fan_cmd->add_option("--format", format, "json|table")
        ->check(CLI::IsMember({"json", "table"}));
    bool f_hpoly = false, f_cells = false, f_basis = false, f_ranks = false;
    fan_cmd->add_flag("--hpoly", f_hpoly, "h-polynomial only");
    fan_cmd->add_flag("--cells", f_cells, "cell reports only");
    fan_cmd->add_flag("--basis", f_basis, "localized basis matrix only");
    fan_cmd->add_flag("--ranks", f_ranks, "chow ranks only");

    CLI::App* monoid_cmd = app.add_subcommand("monoid", "analyze a reductive monoid datum");
    monoid_cmd->add_option("--input", input_path, "monoid JSON file")->required();
    monoid_cmd->add_option("--format", format, "json|table")
        ->check(CLI::IsMember({"json", "table"}));
    bool m_report = false, m_lattice = false, m_quasi = false;
    monoid_cmd->add_flag("--report", m_report, "full report only");
    monoid_cmd->add_flag("--lattice", m_lattice, "cross-section lattice only");
    monoid_cmd->add_flag("--quasismooth", m_quasi, "quasismoothness only");

    CLI::App* selftest_cmd = app.add_subcommand("selftest", "run the bundled corpus");
    selftest_cmd->add_option("--seed", seed, "seed for randomized sweeps");
    selftest_cmd->add_option("--sweep", sweep, "number of randomized property sweeps");
    selftest_cmd->add_option("--format", format, "json|table")
        ->check(CLI::IsMember({"json", "table"}));

    std::vector<std::string> argv = args;
    std::vector<const char*> cargv;
    cargv.push_back("ratcells");
    for (const std::string& a : argv) cargv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(cone_cmd)) {
            Json in = detail::read_input(input_path);
            Cone c = cone_from_json(in);
            std::optional<OneParamSubgroup> lambda;
            if (!lambda_csv.empty())
                lambda = detail::parse_lambda(lambda_csv, c.ambient_rank());
            detail::emit(cone_report(c, lambda), format, out);
            return 0;
        }
        if (app.got_subcommand(fan_cmd)) {
            Json in = detail::read_input(input_path);
            Fan f = fan_from_json(in);
            std::optional<OneParamSubgroup> lambda;
            if (!lambda_csv.empty()) lambda = detail::parse_lambda(lambda_csv, f.rank());
            FanSelector sel;
            if (f_hpoly || f_cells || f_basis || f_ranks) {
                sel.hpoly = f_hpoly;
                sel.cells = f_cells;
                sel.basis = f_basis;
                sel.ranks = f_ranks;
            }
            detail::emit(fan_report(f, lambda, sel), format, out);
            return 0;
        }
        if (app.got_subcommand(monoid_cmd)) {
            Json in = detail::read_input(input_path);
            MonoidDatum d = monoid_from_json(in);
            MonoidSelector sel;
            if (m_report || m_lattice || m_quasi) {
                sel.report = m_report;
                sel.lattice = m_lattice;
                sel.quasismooth = m_quasi;
            }
            detail::emit(monoid_report_json(d, sel), format, out);
            return 0;
        }
        // selftest
        const Corpus& corpus = load_corpus();
        const auto& goldens = corpus_goldens();
        int passed = 0, total = 0;
        auto check = [&](const std::string& name, const std::string& kind,
                         const std::string& input, const std::vector<long long>& lambda) {
            ++total;
            std::string got = detail::corpus_report(kind, input, lambda);
            std::string rerun = detail::corpus_report(kind, input, lambda);
            auto it = goldens.find(name);
            bool ok = (it != goldens.end()) && (got == it->second) && (got == rerun);
            out << (ok ? "[pass] " : "[FAIL] ") << kind << " " << name << "\n";
            if (ok) ++passed;
            else if (it == goldens.end()) out << "       (no golden bundled)\n";
        };
        for (const CorpusFan& f : corpus.fans) {
            Fan fan = fan_from_json(Json::parse(f.input_json));
            FanValidation v = fan_validate(fan);
            if (!v.complete_certified())
                throw internal_error("corpus fan " + f.name + " failed validation");
            check(f.name, "fan", f.input_json, f.lambda);
        }
        for (const CorpusCone& c : corpus.cones) check(c.name, "cone", c.input_json, {});
        for (const CorpusMonoid& m : corpus.monoids)
            check(m.name, "monoid", m.input_json, {});
        bool sweeps_ok = true;
        if (sweep > 0) sweeps_ok = detail::run_sweeps(seed, sweep, out);
        out << "selftest: " << passed << "/" << total << " corpus checks passed\n";
        if (passed != total)
            throw internal_error("corpus goldens did not match; the bundle is corrupted "
                                 "or the build is non-deterministic");
        if (!sweeps_ok) throw internal_error("randomized property sweep failed");
        return 0;
    } catch (const internal_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace ratcells::cli
