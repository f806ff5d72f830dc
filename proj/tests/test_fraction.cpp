#include <catch2/catch.hpp>

#include <random>

#include "oracles.hpp"
#include "ratcells/char_fraction.hpp"
#include "ratcells/io.hpp"

using namespace ratcells;

namespace {

CharFraction recip(std::vector<Vec> chars, long long num = 1) {
    std::vector<Character> cs;
    for (Vec& v : chars) cs.push_back(Character(std::move(v)));
    return CharFraction::reciprocal_product(static_cast<int>(cs[0].coords.size()),
                                            Rat(num), cs);
}

CharFraction random_fraction(std::mt19937_64& gen, int d) {
    std::vector<Character> den;
    int nden = 1 + static_cast<int>(gen() % 2);
    for (int i = 0; i < nden; ++i) {
        Vec v = oracles::random_vec(gen, d, -3, 3);
        if (is_zero_vec(v)) v[0] = 1;
        den.push_back(Character(v));
    }
    long long c = 1 + static_cast<long long>(gen() % 5);
    return CharFraction::reciprocal_product(d, Rat(c), den);
}

} // namespace

TEST_CASE("frac_sum identities") {
    // 1/x + 1/(-x) = 0
    CharFraction a = recip({vec_of({1})});
    CharFraction b = recip({vec_of({-1})});
    CHECK(frac_sum({a, b}).is_zero());

    // 1/(xy) + 0 = 1/(xy)
    CharFraction xy = recip({vec_of({1, 0}), vec_of({0, 1})});
    CHECK(frac_sum({xy, CharFraction(2)}) == xy);

    // the three-chart vanishing sum on the projective plane
    CharFraction f1 = recip({vec_of({1, 0}), vec_of({0, 1})});
    CharFraction f2 = recip({vec_of({-1, 0}), vec_of({-1, 1})});
    CharFraction f3 = recip({vec_of({0, -1}), vec_of({1, -1})});
    CHECK(frac_sum({f1, f2, f3}).is_zero());
}

TEST_CASE("frac_eval substitutes exactly and reports poles") {
    CharFraction f = recip({vec_of({1, 0}), vec_of({0, 1})});
    CHECK(frac_eval(f, OneParamSubgroup(vec_of({1, 2}))) == Rat(1, 2));

    CharFraction g = recip({vec_of({0, 1}), vec_of({2, -1})}, 2);
    CHECK(frac_eval(g, OneParamSubgroup(vec_of({1, 1}))) == Rat(2));

    CharFraction h = recip({vec_of({1, 0})});
    CHECK_THROWS_AS(frac_eval(h, OneParamSubgroup(vec_of({0, 1}))), pole_error);
    try {
        frac_eval(h, OneParamSubgroup(vec_of({0, 1})));
    } catch (const pole_error& e) {
        CHECK(std::string(e.what()).find("(1,0)") != std::string::npos);
    }
}

TEST_CASE("canonical form normalizes signs and scalars into the numerator") {
    CharFraction f = recip({vec_of({-2, 0})}); // 1/(-2x) = (-1/2)/x
    CHECK(f.denominator().size() == 1);
    CHECK(f.denominator().begin()->first == Character(vec_of({1, 0})));
    CHECK(f.numerator().constant_value() == Rat(-1, 2));
    CHECK(f.to_string() == "(-1/2)/x");

    // equality is representation independent (cross multiplication)
    CharFraction g = recip({vec_of({2, 0})}, -1);
    CHECK(f == g);
}

TEST_CASE("linear factors dividing the numerator are cancelled") {
    // (x + y) / (x (x + y)) == 1 / x
    Polynomial num = Polynomial::linear(Character(vec_of({1, 1})));
    std::map<Character, int> den;
    den[Character(vec_of({1, 0}))] = 1;
    den[Character(vec_of({1, 1}))] = 1;
    CharFraction f(num, den);
    CHECK(f.denominator().size() == 1);
    CHECK(f == recip({vec_of({1, 0})}));
    CHECK(f.to_string() == "1/x");
}

TEST_CASE("homogeneous components") {
    Polynomial p = Polynomial::linear(Character(vec_of({1, 1}))) *
                       Polynomial::linear(Character(vec_of({1, -1}))) +
                   Polynomial::linear(Character(vec_of({3, 0}))) +
                   Polynomial::constant(2, Rat(7));
    CHECK_FALSE(p.is_homogeneous());
    CHECK(p.total_degree() == 2);
    CHECK(p.homogeneous_component(0) == Polynomial::constant(2, Rat(7)));
    CHECK(p.homogeneous_component(1) ==
          Polynomial::linear(Character(vec_of({3, 0}))));
    CHECK(p.homogeneous_component(0) + p.homogeneous_component(1) +
              p.homogeneous_component(2) ==
          p);
    CHECK(p.homogeneous_component(5).is_zero());
}

TEST_CASE("repeated factors cancel to their full multiplicity") {
    // (x + y)^2 / (x^2 (x + y)^2) == 1 / x^2
    Polynomial sq = Polynomial::linear(Character(vec_of({1, 1}))) *
                    Polynomial::linear(Character(vec_of({1, 1})));
    std::map<Character, int> den;
    den[Character(vec_of({1, 0}))] = 2;
    den[Character(vec_of({1, 1}))] = 2;
    CharFraction f(sq, den);
    CHECK(f.denominator().size() == 1);
    CHECK(f.denominator().begin()->second == 2);
    CHECK(f.to_string() == "1/x^2");
}

TEST_CASE("is_polynomial and zero handling") {
    CHECK(CharFraction::constant(2, 5).is_polynomial());
    Polynomial zero(2);
    std::map<Character, int> den;
    den[Character(vec_of({1, 0}))] = 2;
    CharFraction f(zero, den);
    CHECK(f.is_zero());
    CHECK(f.is_polynomial()); // zero clears its denominator
}

TEST_CASE("zero denominator characters are rejected") {
    std::map<Character, int> den;
    den[Character(vec_of({0, 0}))] = 1;
    CHECK_THROWS_AS(CharFraction(Polynomial::constant(2, 1), den), precondition_error);
}

TEST_CASE("frac_sum is associative and commutative on random fractions") {
    std::mt19937_64 gen(23);
    for (int t = 0; t < 25; ++t) {
        int d = 1 + static_cast<int>(gen() % 3);
        CharFraction a = random_fraction(gen, d);
        CharFraction b = random_fraction(gen, d);
        CharFraction c = random_fraction(gen, d);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
    }
}

TEST_CASE("f plus minus f evaluates to zero at a generic point") {
    std::mt19937_64 gen(29);
    for (int t = 0; t < 20; ++t) {
        int d = 1 + static_cast<int>(gen() % 3);
        CharFraction f = random_fraction(gen, d);
        CharFraction s = frac_sum({f, -f});
        CHECK(s.is_zero());
        Vec lam = oracles::random_vec(gen, d, 1, 50); // strictly positive entries
        bool pole = false;
        for (const auto& [chi, m] : f.denominator())
            if (dot(lam, chi.coords) == 0) pole = true;
        if (!pole) CHECK(s.eval(lam) == 0);
    }
}

TEST_CASE("fraction json round-trips through the documented schema") {
    std::mt19937_64 gen(31);
    for (int t = 0; t < 10; ++t) {
        int d = 1 + static_cast<int>(gen() % 3);
        CharFraction f = random_fraction(gen, d) + random_fraction(gen, d);
        Json j = json_fraction(f);
        CharFraction back = fraction_from_json(j, d);
        CHECK(back == f);
        CHECK(json_fraction(back).dump() == j.dump());
    }
}
