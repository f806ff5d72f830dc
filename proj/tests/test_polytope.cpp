#include <catch2/catch.hpp>

#include "ratcells/polytope.hpp"

using namespace ratcells;

namespace {

long long alternating_face_sum(const Polytope& p) {
    long long s = 0;
    for (const Polytope::Face& f : p.faces())
        s += (f.dim % 2 == 0) ? 1 : -1; // dim -1 counts as odd
    return s;
}

} // namespace

TEST_CASE("segment") {
    Polytope p = convex_hull(2, {vec_of({1, 0}), vec_of({0, 1})});
    CHECK(p.dim() == 1);
    CHECK(p.vertices().size() == 2);
    CHECK(p.faces_of_dim(1).size() == 1);
    CHECK(alternating_face_sum(p) == 0);
}

TEST_CASE("square with interior point discards the center") {
    Polytope p = convex_hull(2, {vec_of({1, 1}), vec_of({1, -1}), vec_of({-1, 1}),
                                 vec_of({-1, -1}), vec_of({0, 0})});
    CHECK(p.vertices().size() == 4);
    CHECK(p.faces_of_dim(1).size() == 4);
    CHECK(alternating_face_sum(p) == 0);
    CHECK_THROWS_AS(Polytope::make(2, {vec_of({1, 1}), vec_of({1, -1}), vec_of({-1, 1}),
                                       vec_of({-1, -1}), vec_of({0, 0})}),
                    input_error);
}

TEST_CASE("cube face lattice") {
    std::vector<Vec> pts;
    for (int s = 0; s < 8; ++s)
        pts.push_back(vec_of({s & 1 ? 1 : -1, s & 2 ? 1 : -1, s & 4 ? 1 : -1}));
    Polytope p = convex_hull(3, pts);
    CHECK(p.vertices().size() == 8);
    CHECK(p.faces_of_dim(1).size() == 12);
    CHECK(p.faces_of_dim(2).size() == 6);
    CHECK(p.facet_inequalities().size() == 6);
    CHECK(alternating_face_sum(p) == 0);
    for (int v = 0; v < 8; ++v) CHECK(p.edge_count_at(v) == 3);
}

TEST_CASE("octahedron face lattice") {
    Polytope p = convex_hull(3, {vec_of({1, 0, 0}), vec_of({-1, 0, 0}), vec_of({0, 1, 0}),
                                 vec_of({0, -1, 0}), vec_of({0, 0, 1}), vec_of({0, 0, -1})});
    CHECK(p.vertices().size() == 6);
    CHECK(p.faces_of_dim(1).size() == 12);
    CHECK(p.faces_of_dim(2).size() == 8);
    CHECK(alternating_face_sum(p) == 0);
    for (int v = 0; v < 6; ++v) CHECK(p.edge_count_at(v) == 4);
}

TEST_CASE("single point and lower-dimensional hulls") {
    Polytope p = convex_hull(3, {vec_of({2, 1, 0})});
    CHECK(p.dim() == 0);
    CHECK(p.vertices().size() == 1);
    CHECK(alternating_face_sum(p) == 0);

    Polytope tri = convex_hull(3, {vec_of({1, 0, 0}), vec_of({0, 1, 0}), vec_of({0, 0, 1})});
    CHECK(tri.dim() == 2);
    CHECK(tri.vertices().size() == 3);
    CHECK(tri.faces_of_dim(1).size() == 3);
    CHECK(alternating_face_sum(tri) == 0);
}

TEST_CASE("facet inequalities hold on every vertex with equality somewhere") {
    std::vector<Vec> pts;
    for (int s = 0; s < 8; ++s)
        pts.push_back(vec_of({s & 1 ? 1 : -1, s & 2 ? 1 : -1, s & 4 ? 1 : -1}));
    Polytope p = convex_hull(3, pts);
    for (const auto& ineq : p.facet_inequalities()) {
        bool tight = false;
        for (const Vec& v : p.vertices()) {
            Int val = dot(ineq.normal, v);
            CHECK(val >= ineq.offset);
            if (val == ineq.offset) tight = true;
        }
        CHECK(tight);
    }
}

TEST_CASE("desk-scale guard rejects oversized hull problems") {
    std::vector<Vec> pts;
    for (int i = 0; i < 130; ++i)
        for (int j = 0; j < 4; ++j)
            if (static_cast<int>(pts.size()) < 520)
                pts.push_back(vec_of({i, j, (i * j) % 7, (i + j) % 5}));
    CHECK_THROWS_AS(convex_hull(4, pts), size_error);
}
