#include <catch2/catch.hpp>

#include <random>

#include "oracles.hpp"
#include "ratcells/fan.hpp"
#include "ratcells/io.hpp"

using namespace ratcells;

namespace {

Fan projective_plane() {
    return Fan::make(2, {vec_of({1, 0}), vec_of({0, 1}), vec_of({-1, -1})},
                     {{0, 1}, {1, 2}, {2, 0}});
}

} // namespace

TEST_CASE("the textbook complete fans are certified") {
    CHECK(fan_validate(projective_plane()).complete_certified());

    Fan p1p1 = Fan::make(2, {vec_of({1, 0}), vec_of({0, 1}), vec_of({-1, 0}), vec_of({0, -1})},
                         {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(fan_validate(p1p1).complete_certified());

    Fan hirzebruch = Fan::make(2, {vec_of({1, 0}), vec_of({0, 1}), vec_of({-1, 1}), vec_of({0, -1})},
                               {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(fan_validate(hirzebruch).complete_certified());

    Fan p3 = Fan::make(3,
                       {vec_of({1, 0, 0}), vec_of({0, 1, 0}), vec_of({0, 0, 1}),
                        vec_of({-1, -1, -1})},
                       {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    CHECK(fan_validate(p3).complete_certified());
}

TEST_CASE("a missing cone breaks the facet pairing") {
    Fan broken = Fan::make(2, {vec_of({1, 0}), vec_of({0, 1}), vec_of({-1, -1})},
                           {{0, 1}, {2, 0}});
    FanValidation v = fan_validate(broken);
    CHECK_FALSE(v.complete_certified());
    bool found = false;
    for (const std::string& d : v.defects)
        if (d.find("shared by 1") != std::string::npos) found = true;
    CHECK(found);
}

TEST_CASE("overlapping cones are a non-face intersection") {
    Fan overlap = Fan::make(2, {vec_of({1, 0}), vec_of({1, 1}), vec_of({0, 1})},
                            {{0, 1}, {0, 2}});
    FanValidation v = fan_validate(overlap);
    CHECK_FALSE(v.pairwise_faces);
    bool found = false;
    for (const std::string& d : v.defects)
        if (d.find("non-face") != std::string::npos) found = true;
    CHECK(found);
}

TEST_CASE("fan construction validates rays and indices") {
    CHECK_THROWS_AS(Fan::make(2, {vec_of({2, 0}), vec_of({0, 1})}, {{0, 1}}), input_error);
    CHECK_THROWS_AS(Fan::make(2, {vec_of({1, 0}), vec_of({0, 1})}, {{0, 5}}), input_error);
    CHECK_THROWS_AS(Fan::make(2, {vec_of({1, 0}), vec_of({0, 1})}, {}), input_error);
}

TEST_CASE("all_cone_ray_sets enumerates every face once") {
    Fan p2 = projective_plane();
    auto cones = p2.all_cone_ray_sets();
    // zero cone + 3 rays + 3 maximal cones
    CHECK(cones.size() == 7);
    std::vector<int> f = p2.f_vector();
    REQUIRE(f.size() == 3);
    CHECK(f[0] == 1);
    CHECK(f[1] == 3);
    CHECK(f[2] == 3);
}

TEST_CASE("a triangulation of a random cone is itself a valid fan") {
    std::mt19937_64 gen(47);
    for (int t = 0; t < 8; ++t) {
        int d = 3;
        Cone c = oracles::random_pointed_cone(gen, d, d + 3);
        auto pieces = c.triangulate_indices();
        if (pieces.size() < 2) continue;
        Fan local = Fan::make(d, c.rays(), pieces);
        FanValidation v = fan_validate(local);
        CHECK(v.pairwise_faces); // pieces intersect pairwise in common faces
    }
}

TEST_CASE("fan json round-trip") {
    Fan p2 = projective_plane();
    Json j = json_fan(p2);
    Fan back = fan_from_json(j);
    CHECK(json_fan(back).dump() == j.dump());
}
