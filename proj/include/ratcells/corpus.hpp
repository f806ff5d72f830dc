#pragma once

#include <map>
#include <string>
#include <vector>

#include "ratcells/numeric.hpp"

namespace ratcells {

/// Bundled example set: the inputs every release is checked against, with
/// frozen expected reports (see corpus_goldens.hpp).
struct CorpusFan {
    std::string name;
    std::string input_json;
    std::vector<long long> lambda;
};

struct CorpusCone {
    std::string name;
    std::string input_json;
};

struct CorpusMonoid {
    std::string name;
    std::string input_json;
};

struct Corpus {
    std::vector<CorpusFan> fans;
    std::vector<CorpusCone> cones;
    std::vector<CorpusMonoid> monoids;
};

inline const Corpus& load_corpus() {
    static const Corpus corpus = [] {
        Corpus c;
        c.fans = {
            {"p1",
             R"({"rank": 1, "rays": [[1], [-1]], "max_cones": [[0], [1]]})",
             {1}},
            {"p2",
             R"({"rank": 2, "rays": [[1, 0], [0, 1], [-1, -1]], "max_cones": [[0, 1], [1, 2], [2, 0]]})",
             {1, 2}},
            {"p1xp1",
             R"({"rank": 2, "rays": [[1, 0], [0, 1], [-1, 0], [0, -1]], "max_cones": [[0, 1], [1, 2], [2, 3], [3, 0]]})",
             {1, 2}},
            {"hirzebruch1",
             R"({"rank": 2, "rays": [[1, 0], [0, 1], [-1, 1], [0, -1]], "max_cones": [[0, 1], [1, 2], [2, 3], [3, 0]]})",
             {1, 2}},
            {"p112",
             R"({"rank": 2, "rays": [[1, 0], [0, 1], [-1, -2]], "max_cones": [[0, 1], [1, 2], [2, 0]]})",
             {1, 1}},
            {"p3",
             R"({"rank": 3, "rays": [[1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, -1, -1]], "max_cones": [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]})",
             {1, 2, 4}},
        };
        c.cones = {
            {"smooth2", R"({"rank": 2, "rays": [[1, 0], [0, 1]]})"},
            {"singular2", R"({"rank": 2, "rays": [[1, 0], [1, 2]]})"},
            {"singular3", R"({"rank": 2, "rays": [[1, 0], [1, 3]]})"},
            {"cone_over_square",
             R"({"rank": 3, "rays": [[1, 0, 0], [0, 1, 0], [1, 0, 1], [0, 1, 1]]})"},
            {"dual_of_cone_over_square",
             R"({"rank": 3, "rays": [[0, 0, 1], [1, 0, 0], [0, 1, 0], [1, 1, -1]]})"},
        };
        c.monoids = {
            {"m2", R"({"weyl": {"family": "A", "rank": 1}, "dominant_points": [[1, 0]]})"},
            {"m3", R"({"weyl": {"family": "A", "rank": 2}, "dominant_points": [[1, 0, 0]]})"},
            {"m4", R"({"weyl": {"family": "A", "rank": 3}, "dominant_points": [[1, 0, 0, 0]]})"},
            {"b3_octahedron",
             R"({"weyl": {"family": "B", "rank": 3}, "dominant_points": [[1, 0, 0]]})"},
            {"b3_cube",
             R"({"weyl": {"family": "B", "rank": 3}, "dominant_points": [[1, 1, 1]]})"},
            {"c2_square",
             R"({"weyl": {"family": "C", "rank": 2}, "dominant_points": [[1, 1]]})"},
            {"d2_diamond",
             R"({"weyl": {"family": "D", "rank": 2}, "dominant_points": [[1, 0]]})"},
        };
        return c;
    }();
    return corpus;
}

} // namespace ratcells

// Frozen expected reports, keyed by corpus entry name: corpus_goldens().
#include "ratcells/corpus_goldens.hpp"
