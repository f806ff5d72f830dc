#include <catch2/catch.hpp>

#include <random>

#include "oracles.hpp"
#include "ratcells/lattice.hpp"

using namespace ratcells;

TEST_CASE("pairing is the exact dot product") {
    CHECK(pairing(OneParamSubgroup(vec_of({1, 2})), Character(vec_of({3, -1}))) == 1);
    CHECK(pairing(OneParamSubgroup(vec_of({0, 0})), Character(vec_of({5, 7}))) == 0);
    CHECK(pairing(OneParamSubgroup(vec_of({1, 1, 1})), Character(vec_of({1, 0, 1}))) == 2);
}

TEST_CASE("pairing rejects mismatched ranks") {
    CHECK_THROWS_AS(pairing(OneParamSubgroup(vec_of({1, 2})), Character(vec_of({1}))),
                    dimension_error);
}

TEST_CASE("pairing is linear in the character") {
    std::mt19937_64 gen(7);
    for (int t = 0; t < 50; ++t) {
        int d = 1 + static_cast<int>(gen() % 4);
        Vec lam = oracles::random_vec(gen, d, -9, 9);
        Vec chi = oracles::random_vec(gen, d, -9, 9);
        Int c = Int(static_cast<long long>(gen() % 19)) - 9;
        Vec scaled = chi;
        for (Int& x : scaled) x *= c;
        CHECK(pairing(lam, scaled) == c * pairing(lam, chi));
    }
}

TEST_CASE("lattice_index on the named examples") {
    CHECK(lattice_index({vec_of({1, 0}), vec_of({0, 1})}) == 1);
    CHECK(lattice_index({vec_of({1, 0}), vec_of({1, 2})}) == 2);
    CHECK(lattice_index({vec_of({1, 1})}) == 0); // not full rank in Z^2
}

TEST_CASE("lattice_index agrees with the maximal-minor-gcd oracle") {
    std::mt19937_64 gen(11);
    for (int t = 0; t < 60; ++t) {
        int d = 2 + static_cast<int>(gen() % 3);
        int k = d + static_cast<int>(gen() % 3);
        std::vector<Vec> vs;
        for (int i = 0; i < k; ++i) vs.push_back(oracles::random_vec(gen, d, -5, 5));
        CHECK(lattice_index(vs) == oracles::lattice_index_minor_gcd(vs));
    }
}

TEST_CASE("lattice_index is invariant under unimodular changes of basis") {
    std::mt19937_64 gen(13);
    for (int t = 0; t < 40; ++t) {
        int d = 2 + static_cast<int>(gen() % 3);
        std::vector<Vec> vs;
        int k = d + static_cast<int>(gen() % 2);
        for (int i = 0; i < k; ++i) vs.push_back(oracles::random_vec(gen, d, -4, 4));
        IMat u = oracles::random_unimodular(gen, d);
        std::vector<Vec> transformed;
        for (const Vec& v : vs) transformed.push_back(u.apply_row(v));
        CHECK(lattice_index(vs) == lattice_index(transformed));
    }
}

TEST_CASE("smith normal form reconstructs the matrix") {
    std::mt19937_64 gen(17);
    for (int t = 0; t < 30; ++t) {
        int r = 1 + static_cast<int>(gen() % 4);
        int c = 1 + static_cast<int>(gen() % 4);
        IMat a(r, c);
        for (int i = 0; i < r; ++i) a.a[i] = oracles::random_vec(gen, c, -6, 6);
        Smith s = smith_normal_form(a);
        CHECK(mat_mul(mat_mul(s.u, a), s.v).a == s.d.a);
        Int du = det(s.u), dv = det(s.v);
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));
        auto diag = s.diagonal();
        for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
            if (diag[i + 1] == 0) continue;
            REQUIRE(diag[i] != 0);
            CHECK(diag[i + 1] % diag[i] == 0);
        }
    }
}

TEST_CASE("primitivity predicate") {
    CHECK(Character(vec_of({2, 3})).is_primitive());
    CHECK_FALSE(Character(vec_of({2, 4})).is_primitive());
    CHECK_FALSE(Character(vec_of({0, 0})).is_primitive());
    CHECK(primitivized(vec_of({2, 4})) == vec_of({1, 2}));
}
