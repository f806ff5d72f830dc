#include <catch2/catch.hpp>

#include <random>

#include "oracles.hpp"
#include "ratcells/bb.hpp"

using namespace ratcells;

namespace {

Fan p1() { return Fan::make(1, {vec_of({1}), vec_of({-1})}, {{0}, {1}}); }
Fan p2() {
    return Fan::make(2, {vec_of({1, 0}), vec_of({0, 1}), vec_of({-1, -1})},
                     {{0, 1}, {1, 2}, {2, 0}});
}
Fan p1p1() {
    return Fan::make(2, {vec_of({1, 0}), vec_of({0, 1}), vec_of({-1, 0}), vec_of({0, -1})},
                     {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}
Fan hirzebruch1() {
    return Fan::make(2, {vec_of({1, 0}), vec_of({0, 1}), vec_of({-1, 1}), vec_of({0, -1})},
                     {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}
Fan p112() {
    return Fan::make(2, {vec_of({1, 0}), vec_of({0, 1}), vec_of({-1, -2})},
                     {{0, 1}, {1, 2}, {2, 0}});
}
Fan p3() {
    return Fan::make(3,
                     {vec_of({1, 0, 0}), vec_of({0, 1, 0}), vec_of({0, 0, 1}),
                      vec_of({-1, -1, -1})},
                     {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

std::vector<Fan> corpus_fans() {
    return {p1(), p2(), p1p1(), hirzebruch1(), p112(), p3()};
}
std::vector<Vec> corpus_lambdas() {
    return {vec_of({1}),    vec_of({1, 2}), vec_of({1, 2}),
            vec_of({1, 2}), vec_of({1, 1}), vec_of({1, 2, 4})};
}

} // namespace

TEST_CASE("genericity") {
    CHECK(is_generic(OneParamSubgroup(vec_of({1, 2})), p2()));
    CHECK_FALSE(is_generic(OneParamSubgroup(vec_of({1, 1})), p2()));
    CHECK(is_generic(OneParamSubgroup(vec_of({1})), p1()));
    try {
        require_generic(OneParamSubgroup(vec_of({1, 1})), p2());
        FAIL("expected a genericity error");
    } catch (const input_error& e) {
        std::string msg = e.what();
        CHECK(msg.find("not generic") != std::string::npos);
        CHECK(msg.find("pairs to 0") != std::string::npos);
    }
}

TEST_CASE("cells of the projective line") {
    auto cells = bb_decomposition(p1(), OneParamSubgroup(vec_of({1})));
    REQUIRE(cells.size() == 2);
    // dense cell at the cone containing lambda
    CHECK(cells[0].cell_dim == 1);
    CHECK(cells[0].dense_cone_rays.empty());
    CHECK(cells[1].cell_dim == 0);
    CHECK(cells[1].dense_cone_rays == std::vector<int>{1});
}

TEST_CASE("cells of the projective plane") {
    auto cells = bb_decomposition(p2(), OneParamSubgroup(vec_of({1, 2})));
    REQUIRE(cells.size() == 3);
    CHECK(cells[0].cell_dim == 2);
    CHECK(cells[0].dense_cone_rays.empty());
    CHECK(cells[1].cell_dim == 1);
    CHECK(cells[1].dense_cone_rays == std::vector<int>{2});
    CHECK(cells[2].cell_dim == 0);
    CHECK(cells[2].dense_cone_rays == std::vector<int>{0, 2});
}

TEST_CASE("cells of the product of two lines") {
    auto cells = bb_decomposition(p1p1(), OneParamSubgroup(vec_of({1, 2})));
    std::vector<int> dims;
    for (const CellReport& c : cells) dims.push_back(c.cell_dim);
    CHECK(dims == std::vector<int>{2, 1, 0, 1});
}

TEST_CASE("h polynomials of the corpus") {
    CHECK(h_polynomial(p2(), OneParamSubgroup(vec_of({1, 2}))) ==
          std::vector<int>{1, 1, 1});
    CHECK(h_polynomial(p1p1(), OneParamSubgroup(vec_of({1, 2}))) ==
          std::vector<int>{1, 2, 1});
    CHECK(h_polynomial(hirzebruch1(), OneParamSubgroup(vec_of({1, 2}))) ==
          std::vector<int>{1, 2, 1});
    CHECK(h_polynomial(p112(), OneParamSubgroup(vec_of({1, 1}))) ==
          std::vector<int>{1, 1, 1});
}

TEST_CASE("h polynomial is independent of the generic lambda and matches the face-count oracle") {
    std::mt19937_64 gen(67);
    auto fans = corpus_fans();
    auto lambdas = corpus_lambdas();
    for (std::size_t f = 0; f < fans.size(); ++f) {
        std::vector<int> base = h_polynomial(fans[f], OneParamSubgroup(lambdas[f]));
        // palindromic
        for (std::size_t k = 0; k < base.size(); ++k)
            CHECK(base[k] == base[base.size() - 1 - k]);
        // equal to the binomial transform of the face numbers
        std::vector<long long> oracle = oracles::h_from_f(fans[f]);
        REQUIRE(oracle.size() == base.size());
        for (std::size_t k = 0; k < base.size(); ++k) CHECK(base[k] == oracle[k]);
        for (int t = 0; t < 10; ++t) {
            OneParamSubgroup lam = oracles::random_generic_lambda(gen, fans[f]);
            CHECK(h_polynomial(fans[f], lam) == base);
        }
    }
}

TEST_CASE("filtration order respects cell closures") {
    auto cells = bb_decomposition(p1(), OneParamSubgroup(vec_of({1})));
    Filtration fil = build_filtration(p1(), OneParamSubgroup(vec_of({1})), cells);
    REQUIRE(fil.order.size() == 2);
    CHECK(cells[fil.order[0]].cell_dim == 0);
    CHECK(cells[fil.order[1]].cell_dim == 1);
    // pieces grow by one cell each step
    REQUIRE(fil.pieces.size() == 2);
    CHECK(fil.pieces[0].size() < fil.pieces[1].size());

    auto cells2 = bb_decomposition(p2(), OneParamSubgroup(vec_of({1, 2})));
    Filtration fil2 = build_filtration(p2(), OneParamSubgroup(vec_of({1, 2})), cells2);
    std::vector<int> dims;
    for (int i : fil2.order) dims.push_back(cells2[i].cell_dim);
    CHECK(dims == std::vector<int>{0, 1, 2});

    Fan prod = p1p1();
    auto cells3 = bb_decomposition(prod, OneParamSubgroup(vec_of({1, 2})));
    Filtration fil3 = build_filtration(prod, OneParamSubgroup(vec_of({1, 2})), cells3);
    std::vector<int> dims3;
    for (int i : fil3.order) dims3.push_back(cells3[i].cell_dim);
    CHECK(dims3 == std::vector<int>{0, 1, 1, 2});
    // the closure relation itself: i before j whenever tau_j <= sigma_i
    for (std::size_t a = 0; a < fil3.order.size(); ++a)
        for (std::size_t b = 0; b < fil3.order.size(); ++b) {
            if (a == b) continue;
            int i = fil3.order[a], j = fil3.order[b];
            const std::vector<int>& tau = cells3[j].dense_cone_rays;
            const std::vector<int>& sig = prod.max_cones()[i];
            bool face = std::includes(sig.begin(), sig.end(), tau.begin(), tau.end());
            if (face && i != j) CHECK(a < b);
        }
}

TEST_CASE("every cone of the fan lands in exactly one cell") {
    auto fans = corpus_fans();
    auto lambdas = corpus_lambdas();
    for (std::size_t f = 0; f < fans.size(); ++f) {
        OneParamSubgroup lam(lambdas[f]);
        auto cells = bb_decomposition(fans[f], lam);
        auto assigned = cell_assignment(fans[f], lam);
        CHECK(assigned.size() == fans[f].all_cone_ray_sets().size());
        // the fixed point's own cone belongs to its cell; the dense cone too
        for (const CellReport& c : cells) {
            CHECK(assigned.at(fans[f].max_cones()[c.fixed_point]) == c.fixed_point);
            CHECK(assigned.at(c.dense_cone_rays) == c.fixed_point);
        }
    }
}

TEST_CASE("localized basis matrix of the projective line") {
    BasisMatrix m = localized_basis_matrix(p1(), OneParamSubgroup(vec_of({1})));
    REQUIRE(m.order.size() == 2);
    // first class: the fixed point of the zero-dimensional cell
    int pt = m.order[0];
    int dense = m.order[1];
    CHECK(*m.entry(pt, pt) == CharFraction::constant(1, 1));
    CHECK(m.entry(dense, pt) == nullptr); // vanishing off the closure
    // fundamental class entries: 1/x at the cone containing lambda, -1/x opposite
    CharFraction at_dense = *m.entry(dense, dense);
    CharFraction at_pt = *m.entry(pt, dense);
    CHECK(at_dense ==
          CharFraction::reciprocal_product(1, 1, {Character(vec_of({1}))}));
    CHECK(at_pt ==
          CharFraction::reciprocal_product(1, -1, {Character(vec_of({1}))}));
}

TEST_CASE("basis matrices are triangular with nonzero diagonal and vanishing column sums") {
    auto fans = corpus_fans();
    auto lambdas = corpus_lambdas();
    for (std::size_t f = 0; f < fans.size(); ++f) {
        BasisMatrix m = localized_basis_matrix(fans[f], OneParamSubgroup(lambdas[f]));
        for (std::size_t j = 0; j < m.rows.size(); ++j) {
            // diagonal nonzero
            auto diag = m.rows[j].entries.find(m.order[j]);
            REQUIRE(diag != m.rows[j].entries.end());
            CHECK_FALSE(diag->second.is_zero());
            // entries vanish past the diagonal (lower-triangular rows)
            for (std::size_t q = j + 1; q < m.order.size(); ++q) {
                auto it = m.rows[j].entries.find(m.order[q]);
                if (it != m.rows[j].entries.end()) CHECK(it->second.is_zero());
            }
            // sum rule: zero for positive-dimensional classes, one for points
            CharFraction sum = integrate(m.rows[j], fans[f]);
            int dim_j = fans[f].rank() - static_cast<int>(m.closures[j].size());
            if (dim_j > 0) {
                CHECK(sum.is_zero());
            } else {
                CHECK(sum == CharFraction::constant(fans[f].rank(), 1));
            }
        }
    }
}

TEST_CASE("integration of fundamental and point classes") {
    auto fans = corpus_fans();
    for (Fan& f : fans) {
        CHECK(integrate(localize_fundamental_class(f), f).is_zero());
        CHECK(integrate(localize_point_class(f, 0), f) ==
              CharFraction::constant(f.rank(), 1));
    }
}

TEST_CASE("chow ranks") {
    ChowRanks r = chow_ranks(p2(), OneParamSubgroup(vec_of({1, 2})));
    CHECK(r.ranks == std::vector<int>{1, 1, 1});
    CHECK(r.total == 3);
    CHECK(r.fixed_points == 3);
    CHECK(r.free_module);
    CHECK(r.step_ranks == std::vector<int>{1, 2, 3});

    ChowRanks r2 = chow_ranks(p112(), OneParamSubgroup(vec_of({1, 1})));
    CHECK(r2.ranks == std::vector<int>{1, 1, 1});
    CHECK(r2.total == 3);
    CHECK(r2.free_module);

    ChowRanks r3 = chow_ranks(p1p1(), OneParamSubgroup(vec_of({1, 2})));
    CHECK(r3.ranks == std::vector<int>{1, 2, 1});
    CHECK(r3.total == 4);
}

TEST_CASE("products and higher rank") {
    // triple product of projective lines: h = (1,3,3,1)
    Fan cube_fan = Fan::make(
        3,
        {vec_of({1, 0, 0}), vec_of({0, 1, 0}), vec_of({0, 0, 1}), vec_of({-1, 0, 0}),
         vec_of({0, -1, 0}), vec_of({0, 0, -1})},
        {{0, 1, 2}, {0, 1, 5}, {0, 4, 2}, {0, 4, 5}, {3, 1, 2}, {3, 1, 5}, {3, 4, 2},
         {3, 4, 5}});
    CHECK(fan_validate(cube_fan).complete_certified());
    OneParamSubgroup lam(vec_of({1, 2, 4}));
    CHECK(h_polynomial(cube_fan, lam) == std::vector<int>{1, 3, 3, 1});
    std::vector<long long> oracle = oracles::h_from_f(cube_fan);
    for (int k = 0; k <= 3; ++k) CHECK(oracle[k] == h_polynomial(cube_fan, lam)[k]);
    BasisMatrix m = localized_basis_matrix(cube_fan, lam);
    for (std::size_t j = 0; j < m.rows.size(); ++j) {
        auto diag = m.rows[j].entries.find(m.order[j]);
        REQUIRE(diag != m.rows[j].entries.end());
        CHECK_FALSE(diag->second.is_zero());
        CharFraction sum = integrate(m.rows[j], cube_fan);
        int dim_j = 3 - static_cast<int>(m.closures[j].size());
        if (dim_j > 0) CHECK(sum.is_zero());
        else CHECK(sum == CharFraction::constant(3, 1));
    }

    // projective 4-space: five fixed points, one cell per dimension
    Fan p4 = Fan::make(4,
                       {vec_of({1, 0, 0, 0}), vec_of({0, 1, 0, 0}), vec_of({0, 0, 1, 0}),
                        vec_of({0, 0, 0, 1}), vec_of({-1, -1, -1, -1})},
                       {{0, 1, 2, 3},
                        {0, 1, 2, 4},
                        {0, 1, 3, 4},
                        {0, 2, 3, 4},
                        {1, 2, 3, 4}});
    CHECK(fan_validate(p4).complete_certified());
    OneParamSubgroup lam4(vec_of({1, 2, 4, 8}));
    CHECK(h_polynomial(p4, lam4) == std::vector<int>{1, 1, 1, 1, 1});
    CHECK(integrate(localize_fundamental_class(p4), p4).is_zero());
    ChowRanks r = chow_ranks(p4, lam4);
    CHECK(r.total == 5);
    CHECK(r.free_module);
}

TEST_CASE("embedded quotient fractions evaluate consistently") {
    // e_{x_i}[V(tau)] pushed into the ambient character algebra must evaluate,
    // at any lambda clear of its poles, to the quotient-chart fraction at the
    // projected lambda. This pins the substitution path independently.
    std::mt19937_64 gen(71);
    auto fans = corpus_fans();
    for (Fan& fan : fans) {
        for (int i = 0; i < fan.cone_count(); ++i) {
            for (const std::vector<int>& tau_idx : fan.cone(i).face_ray_sets()) {
                std::vector<int> global;
                for (int l : tau_idx) global.push_back(fan.max_cones()[i][l]);
                std::sort(global.begin(), global.end());
                std::vector<Vec> tau_vecs;
                for (int r : global) tau_vecs.push_back(fan.rays()[r]);
                Cone tau = Cone::make(fan.rank(), tau_vecs);
                QuotientCone q = quotient_cone(tau, fan.cone(i));
                EqMult em = eq_mult(q.image);
                LocalizedClass cls = localize_orbit_closure(fan, global);
                const CharFraction& embedded = cls.entries.at(i);
                for (int t = 0; t < 5; ++t) {
                    Vec lam = oracles::random_vec(gen, fan.rank(), -9, 9);
                    bool pole = false;
                    for (const auto& [chi, m] : embedded.denominator())
                        if (dot(lam, chi.coords) == 0) pole = true;
                    Vec plam = q.project(lam);
                    for (const auto& [chi, m] : em.value.denominator())
                        if (dot(plam, chi.coords) == 0) pole = true;
                    if (pole) continue;
                    CHECK(embedded.eval(lam) == em.value.eval(plam));
                }
            }
        }
    }
}

TEST_CASE("blowup of projective 3-space and a weighted plane") {
    // star-subdividing one chart of projective 3-space adds a fixed point
    Fan bl = Fan::make(3,
                       {vec_of({1, 0, 0}), vec_of({0, 1, 0}), vec_of({0, 0, 1}),
                        vec_of({-1, -1, -1}), vec_of({1, 1, 1})},
                       {{0, 1, 4}, {0, 2, 4}, {1, 2, 4}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    CHECK(fan_validate(bl).complete_certified());
    std::mt19937_64 gen(73);
    OneParamSubgroup lam = oracles::random_generic_lambda(gen, bl);
    std::vector<int> h = h_polynomial(bl, lam);
    std::vector<long long> oracle = oracles::h_from_f(bl);
    REQUIRE(h.size() == oracle.size());
    for (std::size_t k = 0; k < h.size(); ++k) CHECK(h[k] == oracle[k]);
    CHECK(h == std::vector<int>{1, 2, 2, 1});

    Fan p123 = Fan::make(2, {vec_of({1, 0}), vec_of({0, 1}), vec_of({-2, -3})},
                         {{0, 1}, {1, 2}, {2, 0}});
    CHECK(fan_validate(p123).complete_certified());
    OneParamSubgroup lam2 = oracles::random_generic_lambda(gen, p123);
    CHECK(h_polynomial(p123, lam2) == std::vector<int>{1, 1, 1});
    BasisMatrix m = localized_basis_matrix(p123, lam2);
    for (std::size_t j = 0; j < m.rows.size(); ++j) {
        CharFraction sum = integrate(m.rows[j], p123);
        int dim_j = 2 - static_cast<int>(m.closures[j].size());
        if (dim_j > 0) CHECK(sum.is_zero());
        else CHECK(sum == CharFraction::constant(2, 1));
    }
}

TEST_CASE("basis matrix properties hold for random generic lambdas") {
    std::mt19937_64 gen(79);
    auto fans = corpus_fans();
    for (Fan& fan : fans) {
        for (int t = 0; t < 3; ++t) {
            OneParamSubgroup lam = oracles::random_generic_lambda(gen, fan);
            BasisMatrix m = localized_basis_matrix(fan, lam);
            for (std::size_t j = 0; j < m.rows.size(); ++j) {
                auto diag = m.rows[j].entries.find(m.order[j]);
                REQUIRE(diag != m.rows[j].entries.end());
                CHECK_FALSE(diag->second.is_zero());
                for (std::size_t q = j + 1; q < m.order.size(); ++q)
                    CHECK(m.rows[j].entries.find(m.order[q]) == m.rows[j].entries.end());
            }
        }
    }
}

TEST_CASE("bb refuses non-simplicial and incomplete fans") {
    // complete but with a non-simplicial cone: a cone over a square glued
    // with four simplicial cones to fill space
    Fan octa = Fan::make(3,
                         {vec_of({1, 0, 0}), vec_of({0, 1, 0}), vec_of({1, 0, 1}),
                          vec_of({0, 1, 1}), vec_of({0, 0, -1}), vec_of({-1, 0, 0}),
                          vec_of({0, -1, 0})},
                         {{0, 1, 2, 3}, {0, 1, 4}, {1, 4, 5}, {4, 5, 6}, {0, 4, 6},
                          {1, 2, 5}, {2, 3, 5}, {3, 5, 6}, {0, 3, 6}});
    FanValidation v = fan_validate(octa);
    if (v.complete_certified()) {
        CHECK_THROWS_AS(bb_decomposition(octa, OneParamSubgroup(vec_of({1, 2, 5}))),
                        input_error);
    } else {
        // glue above is not face-to-face; the incomplete fan must be refused too
        CHECK_THROWS_AS(bb_decomposition(octa, OneParamSubgroup(vec_of({1, 2, 5}))),
                        input_error);
    }
    Fan broken = Fan::make(2, {vec_of({1, 0}), vec_of({0, 1}), vec_of({-1, -1})},
                           {{0, 1}, {2, 0}});
    CHECK_THROWS_AS(bb_decomposition(broken, OneParamSubgroup(vec_of({1, 2}))),
                    input_error);
}
