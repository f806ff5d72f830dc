#include <catch2/catch.hpp>

#include <random>

#include "oracles.hpp"
#include "ratcells/cone.hpp"

using namespace ratcells;

TEST_CASE("dual cone on the named examples") {
    Cone orthant = Cone::make(2, {vec_of({1, 0}), vec_of({0, 1})});
    CHECK(orthant.dual() == orthant);

    Cone c = Cone::make(2, {vec_of({1, 0}), vec_of({1, 2})});
    Cone expected = Cone::make(2, {vec_of({0, 1}), vec_of({2, -1})});
    CHECK(c.dual() == expected);

    // a cone spanning the plane contains a line and is rejected outright
    CHECK_THROWS_AS(Cone::make(2, {vec_of({1, 0}), vec_of({0, 1}), vec_of({-1, -1})}),
                    input_error);
    // the dual of a non-full-dimensional cone is not strongly convex
    Cone ray = Cone::make(2, {vec_of({1, 0})});
    CHECK_THROWS_AS(ray.dual(), precondition_error);
}

TEST_CASE("dual is an involution on random full-dimensional cones") {
    std::mt19937_64 gen(37);
    for (int t = 0; t < 30; ++t) {
        int d = 2 + static_cast<int>(gen() % 3);
        Cone c = oracles::random_pointed_cone(gen, d, d + 3);
        CHECK(c.dual().dual() == c);
    }
}

TEST_CASE("is_simplicial") {
    CHECK(Cone::make(2, {vec_of({1, 0}), vec_of({1, 2})}).is_simplicial());
    Cone square = Cone::make(
        3, {vec_of({1, 0, 0}), vec_of({0, 1, 0}), vec_of({1, 0, 1}), vec_of({0, 1, 1})});
    CHECK_FALSE(square.is_simplicial());
    CHECK(Cone::make(1, {vec_of({1})}).is_simplicial());
}

TEST_CASE("cone multiplicity") {
    CHECK(Cone::make(2, {vec_of({1, 0}), vec_of({0, 1})}).multiplicity() == 1);
    CHECK(Cone::make(2, {vec_of({1, 0}), vec_of({1, 2})}).multiplicity() == 2);
    CHECK(Cone::make(2, {vec_of({1, 0}), vec_of({1, 3})}).multiplicity() == 3);
    Cone square = Cone::make(
        3, {vec_of({1, 0, 0}), vec_of({0, 1, 0}), vec_of({1, 0, 1}), vec_of({0, 1, 1})});
    CHECK_THROWS_AS(square.multiplicity(), precondition_error);
}

TEST_CASE("multiplicity matches the lattice index of the rays in span coordinates") {
    std::mt19937_64 gen(41);
    for (int t = 0; t < 25; ++t) {
        int d = 2 + static_cast<int>(gen() % 3);
        Cone c = oracles::random_simplicial_cone(gen, d);
        CHECK(c.multiplicity() == oracles::lattice_index_minor_gcd(c.rays()));
    }
}

TEST_CASE("triangulation of the named examples") {
    Cone simp = Cone::make(2, {vec_of({1, 0}), vec_of({1, 2})});
    auto pieces = simp.triangulate();
    REQUIRE(pieces.size() == 1);
    CHECK(pieces[0] == simp);

    Cone square = Cone::make(
        3, {vec_of({1, 0, 0}), vec_of({0, 1, 0}), vec_of({1, 0, 1}), vec_of({0, 1, 1})});
    auto sq = square.triangulate_indices();
    REQUIRE(sq.size() == 2);
    for (const std::vector<int>& p : sq) CHECK(p.size() == 3);

    // redundant interior ray rejected at construction
    CHECK_THROWS_AS(Cone::make(2, {vec_of({1, 0}), vec_of({1, 1}), vec_of({1, 2})}),
                    input_error);
}

TEST_CASE("triangulations measure the same normalized volume") {
    // The invariant quantity is the volume of the slab {x in sigma : <l,x> <= 1}
    // for a fixed positive functional l: per simplicial piece it equals
    // multiplicity / (d! * product of <l, generator>), and the sum must not
    // depend on the triangulation. (The bare multiplicity sum is NOT
    // invariant: ray determinants measure simplices truncated at
    // ray-dependent heights.)
    std::mt19937_64 gen(43);
    for (int t = 0; t < 20; ++t) {
        int d = 2 + static_cast<int>(gen() % 3);
        Cone c = oracles::random_pointed_cone(gen, d, d + 3);
        Cone dual = c.dual();
        Vec ell(d, Int(0));
        for (const Vec& n : dual.rays())
            for (int i = 0; i < d; ++i) ell[i] += n[i];
        auto slab_volume = [&](const Cone& cone) {
            Rat s = 0;
            for (const Cone& piece : cone.triangulate()) {
                Rat term(piece.multiplicity());
                for (const Vec& g : piece.rays()) term /= Rat(dot(ell, g));
                s += term;
            }
            return s;
        };
        Rat v1 = slab_volume(c);
        std::vector<Vec> rev(c.rays().rbegin(), c.rays().rend());
        Rat v2 = slab_volume(Cone::make(d, rev));
        CHECK(v1 == v2);
        CHECK(v1 > 0);
    }
}

TEST_CASE("quotient cone") {
    Cone sigma = Cone::make(2, {vec_of({1, 0}), vec_of({0, 1})});

    // trivial face: identity projection
    Cone zero = Cone::make(2, {});
    QuotientCone q0 = quotient_cone(zero, sigma);
    CHECK(q0.quotient_rank == 2);
    CHECK(q0.image == sigma);

    Cone tau = Cone::make(2, {vec_of({1, 0})});
    QuotientCone q = quotient_cone(tau, sigma);
    CHECK(q.quotient_rank == 1);
    CHECK(q.image.ray_count() == 1);

    // the quotient characters embed into tau-perp
    Vec unit{Int(1)};
    Vec chi = q.embed_character(unit);
    CHECK(dot(chi, vec_of({1, 0})) == 0);

    Cone sigma2 = Cone::make(2, {vec_of({0, 1}), vec_of({-1, -1})});
    Cone tau2 = Cone::make(2, {vec_of({-1, -1})});
    QuotientCone q2 = quotient_cone(tau2, sigma2);
    CHECK(q2.quotient_rank == 1);
    CHECK(q2.image.ray_count() == 1);

    // non-face input rejected
    Cone notface = Cone::make(2, {vec_of({1, 1})});
    CHECK_THROWS_AS(quotient_cone(notface, sigma), precondition_error);

    // slicing a non-simplicial cone along an edge face
    Cone square = Cone::make(
        3, {vec_of({1, 0, 0}), vec_of({0, 1, 0}), vec_of({1, 0, 1}), vec_of({0, 1, 1})});
    Cone edge = Cone::make(3, {vec_of({1, 0, 0}), vec_of({0, 1, 0})});
    QuotientCone qs = quotient_cone(edge, square);
    CHECK(qs.quotient_rank == 1);
    CHECK(qs.image.ray_count() == 1);
    CHECK(qs.image.dim() == 1);
}

TEST_CASE("membership and extremality guard construction") {
    CHECK_THROWS_AS(Cone::make(2, {vec_of({2, 0}), vec_of({0, 1})}), input_error);
    CHECK_THROWS_AS(Cone::make(2, {vec_of({1, 0}), vec_of({1, 0})}), input_error);
    CHECK_THROWS_AS(Cone::make(2, {vec_of({1, 0}), vec_of({-1, 0})}), input_error);
    Cone c = Cone::from_generators(2, {vec_of({2, 0}), vec_of({1, 1}), vec_of({2, 2}),
                                       vec_of({1, 2}), vec_of({0, 0})});
    CHECK(c.ray_count() == 2);
    CHECK(c.contains(vec_of({1, 1})));
    CHECK_FALSE(c.contains(vec_of({-1, 0})));
}

TEST_CASE("face enumeration of the cone over the square") {
    Cone square = Cone::make(
        3, {vec_of({1, 0, 0}), vec_of({0, 1, 0}), vec_of({1, 0, 1}), vec_of({0, 1, 1})});
    auto faces = square.face_ray_sets();
    // 1 empty + 4 rays + 4 facets + the cone itself
    CHECK(faces.size() == 10);
}
