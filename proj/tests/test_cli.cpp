#include <catch2/catch.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "ratcells/cli.hpp"

using namespace ratcells;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& contents) {
        static int counter = 0;
        path = "ratcells_test_input_" + std::to_string(counter++) + ".json";
        std::ofstream out(path);
        out << contents;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("cone subcommand reports the quadric chart") {
    TempFile in(R"({"rank": 2, "rays": [[1, 0], [1, 2]]})");
    RunResult r = run_cli({"cone", "--input", in.path});
    CHECK(r.code == 0);
    CHECK(r.out.find("simplicial") != std::string::npos);
    CHECK(r.out.find("2/(y*(2x - y))") != std::string::npos);
    CHECK(r.out.find("cover degree") != std::string::npos);

    RunResult j = run_cli({"cone", "--input", in.path, "--format", "json"});
    CHECK(j.code == 0);
    Json parsed = Json::parse(j.out);
    CHECK(parsed.at("multiplicity") == 2);
    CHECK(parsed.at("rational_cell").at("verdict") == true);
    CHECK(parsed.at("rational_cell").at("cover_degree") == 2);
}

TEST_CASE("cone subcommand evaluates at lambda") {
    TempFile in(R"({"rank": 2, "rays": [[1, 0], [1, 2]]})");
    RunResult r = run_cli({"cone", "--input", in.path, "--lambda", "1,1",
                           "--format", "json"});
    CHECK(r.code == 0);
    Json parsed = Json::parse(r.out);
    CHECK(parsed.at("e0_at_lambda") == "2");
}

TEST_CASE("fan subcommand rejects a non-generic lambda with exit 2") {
    TempFile in(R"({"rank": 2, "rays": [[1, 0], [0, 1], [-1, -1]],
                    "max_cones": [[0, 1], [1, 2], [2, 0]]})");
    RunResult r = run_cli({"fan", "--input", in.path, "--lambda", "1,1"});
    CHECK(r.code == 2);
    CHECK(r.err.find("not generic") != std::string::npos);
    CHECK(r.err.find("pairs to 0") != std::string::npos);
    CHECK(r.out.empty()); // no partial report on the error path
}

TEST_CASE("fan subcommand produces the full report") {
    TempFile in(R"({"rank": 2, "rays": [[1, 0], [0, 1], [-1, -1]],
                    "max_cones": [[0, 1], [1, 2], [2, 0]]})");
    RunResult r = run_cli({"fan", "--input", in.path, "--lambda", "1,2",
                           "--format", "json"});
    REQUIRE(r.code == 0);
    Json parsed = Json::parse(r.out);
    CHECK(parsed.at("validation").at("complete") == true);
    CHECK(parsed.at("h_polynomial") == Json::array({1, 1, 1}));
    CHECK(parsed.at("ranks").at("total") == 3);
    CHECK(parsed.at("ranks").at("free") == true);

    RunResult only_h = run_cli({"fan", "--input", in.path, "--lambda", "1,2",
                                "--hpoly", "--format", "json"});
    Json hj = Json::parse(only_h.out);
    CHECK(hj.contains("h_polynomial"));
    CHECK_FALSE(hj.contains("basis_matrix"));
}

TEST_CASE("monoid subcommand") {
    TempFile in(R"({"weyl": {"family": "B", "rank": 3}, "dominant_points": [[1, 0, 0]]})");
    RunResult r = run_cli({"monoid", "--input", in.path, "--format", "json"});
    REQUIRE(r.code == 0);
    Json parsed = Json::parse(r.out);
    CHECK(parsed.at("E1") == 6);
    CHECK(parsed.at("R1") == 36);
    CHECK(parsed.at("dim_M") == 22);
    CHECK(parsed.at("quasismooth") == false);
    CHECK(parsed.at("embedding_chow_rank").is_null());

    RunResult t = run_cli({"monoid", "--input", in.path, "--quasismooth"});
    CHECK(t.code == 0);
    CHECK(t.out.find("quasismooth") != std::string::npos);
}

TEST_CASE("invalid inputs exit 2") {
    TempFile bad(R"({"rank": 2, "rays": [[1, 0], [2, 0]]})");
    RunResult r = run_cli({"cone", "--input", bad.path});
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());

    RunResult missing = run_cli({"cone", "--input", "no_such_file.json"});
    CHECK(missing.code == 2);

    RunResult unknown = run_cli({"cone", "--input", bad.path, "--frobnicate"});
    CHECK(unknown.code == 2);

    RunResult nosub = run_cli({});
    CHECK(nosub.code == 2);
}

TEST_CASE("json reports are byte-identical across runs and reparse cleanly") {
    TempFile in(R"({"rank": 2, "rays": [[1, 0], [0, 1], [-1, -1]],
                    "max_cones": [[0, 1], [1, 2], [2, 0]]})");
    RunResult a = run_cli({"fan", "--input", in.path, "--lambda", "1,2", "--format", "json"});
    RunResult b = run_cli({"fan", "--input", in.path, "--lambda", "1,2", "--format", "json"});
    CHECK(a.out == b.out);
    // reparse and re-render: byte identical
    Json parsed = Json::parse(a.out);
    CHECK(parsed.dump(2) + "\n" == a.out);
}

TEST_CASE("selftest runs the corpus clean") {
    RunResult r = run_cli({"selftest"});
    INFO(r.out);
    INFO(r.err);
    CHECK(r.code == 0);
    CHECK(r.out.find("[FAIL]") == std::string::npos);

    RunResult sweep = run_cli({"selftest", "--sweep", "3", "--seed", "42"});
    CHECK(sweep.code == 0);
    // sweeps are deterministic given the seed
    RunResult sweep2 = run_cli({"selftest", "--sweep", "3", "--seed", "42"});
    CHECK(sweep.out == sweep2.out);
}

TEST_CASE("the bundled corpus meets its packaging contract") {
    const Corpus& corpus = load_corpus();
    CHECK(corpus.fans.size() >= 5);
    CHECK(corpus.monoids.size() >= 5);
    for (const CorpusFan& f : corpus.fans) {
        Fan fan = fan_from_json(Json::parse(f.input_json));
        CHECK(fan_validate(fan).complete_certified());
        CHECK(is_generic(OneParamSubgroup([&] {
                             Vec v;
                             for (long long x : f.lambda) v.emplace_back(x);
                             return v;
                         }()),
                         fan));
        CHECK(corpus_goldens().count(f.name) == 1);
    }
    for (const CorpusCone& c : corpus.cones) CHECK(corpus_goldens().count(c.name) == 1);
    for (const CorpusMonoid& m : corpus.monoids)
        CHECK(corpus_goldens().count(m.name) == 1);
}
