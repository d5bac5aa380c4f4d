#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cpa/tpoly.hpp"
#include "cpa/upoly.hpp"

using namespace cpa;

namespace {

TPoly tp(std::vector<long> c) {
    std::vector<BigInt> v(c.begin(), c.end());
    return TPoly::from_coeffs(std::move(v));
}

TPoly random_tpoly(std::mt19937& rng, int max_deg = 12) {
    std::uniform_int_distribution<int> deg(0, max_deg), coeff(-9, 9);
    std::vector<BigInt> c(deg(rng) + 1);
    for (auto& x : c) x = coeff(rng);
    return TPoly::from_coeffs(std::move(c));
}

UPoly random_upoly(std::mt19937& rng, int max_deg = 6) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::vector<TPoly> c(deg(rng) + 1);
    for (auto& x : c) x = random_tpoly(rng, 4);
    return UPoly::from_coeffs(std::move(c));
}

} // namespace

TEST_CASE("tpoly arithmetic basics") {
    TPoly tm1 = TPoly::t_minus_one();
    CHECK(tm1 * tm1 == tp({1, -2, 1}));       // (t-1)^2 = t^2 - 2t + 1
    TPoly p = tp({3, 0, 7});
    CHECK(p + TPoly{} == p);                  // identity
    TPoly c5 = TPoly::t_minus_one_pow(2) + TPoly::t_minus_one_pow(3);
    CHECK(c5.at0() == 0);                     // constant terms 1 + (-1)
    CHECK((p - p).is_zero());
    CHECK(tp({1, 1}) * TPoly{} == TPoly{});
}

TEST_CASE("tpoly evaluation") {
    CHECK(tp({1, -2, 1}).eval(0) == 1);
    CHECK(tp({122, 300, 236, 60, 2}).eval(0) == 122);
    TPoly c5 = TPoly::t_minus_one_pow(2) + TPoly::t_minus_one_pow(3);
    CHECK(c5.eval(1) == 0);
    CHECK(tp({122, 300, 236, 60, 2}).eval(1) == 720);
}

TEST_CASE("tpoly exact division") {
    TPoly a = tp({1, -2, 1});
    CHECK(*TPoly::div_exact(a, TPoly::t_minus_one()) == TPoly::t_minus_one());
    CHECK(!TPoly::div_exact(tp({1, 1}), tp({2})).has_value()); // content blocks
    CHECK(!TPoly::div_exact(tp({1, 0, 1}), tp({1, 1})).has_value());
    CHECK(*TPoly::div_exact(TPoly{}, tp({1, 1})) == TPoly{});
}

TEST_CASE("ring axioms on random tpolys") {
    std::mt19937 rng(20240817);
    for (int i = 0; i < 200; ++i) {
        TPoly a = random_tpoly(rng), b = random_tpoly(rng), c = random_tpoly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("ring axioms on random upolys") {
    std::mt19937 rng(987654);
    for (int i = 0; i < 60; ++i) {
        UPoly a = random_upoly(rng), b = random_upoly(rng), c = random_upoly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("urat arithmetic and normalization") {
    TPoly one(BigInt(1));
    UPoly u = UPoly::monomial(one, 1);
    UPoly one_minus_u = UPoly(one) - u;

    // 1/(1-u) + (-u)/(1-u) = 1
    URat a(UPoly(one), one_minus_u);
    URat b(-u, one_minus_u);
    CHECK(a + b == URat(UPoly(one)));

    // (u/(1-u)) * ((1-u)/1) = u
    CHECK(URat(u, one_minus_u) * URat(one_minus_u) == URat(u));

    // (u^3 - u^6)/(1-u) normalizes/divides to u^3 + u^4 + u^5
    UPoly num = UPoly::monomial(one, 3) - UPoly::monomial(one, 6);
    UPoly want = UPoly::monomial(one, 3) + UPoly::monomial(one, 4) + UPoly::monomial(one, 5);
    CHECK(URat(num, one_minus_u).to_poly() == want);
}

TEST_CASE("urat cross-multiplication identity on random values") {
    std::mt19937 rng(1234123);
    auto nonzero = [&](auto gen) {
        UPoly p = gen();
        while (p.is_zero()) p = gen();
        return p;
    };
    for (int i = 0; i < 40; ++i) {
        auto gen = [&] { return random_upoly(rng, 4); };
        URat a(gen(), nonzero(gen)), b(gen(), nonzero(gen));
        URat s = a + b;
        // a.num*b.den + b.num*a.den == s scaled to the common denominator
        CHECK(s.num() * (a.den() * b.den()) ==
              (a.num() * b.den() + b.num() * a.den()) * s.den());
        URat m = a * b;
        CHECK(m.num() * (a.den() * b.den()) == (a.num() * b.num()) * m.den());
    }
}

TEST_CASE("urat_to_poly") {
    TPoly one(BigInt(1));
    UPoly one_minus_u = UPoly(one) - UPoly::monomial(one, 1);
    UPoly one_minus_u3 = UPoly(one) - UPoly::monomial(one, 3);
    UPoly want = UPoly(one) + UPoly::monomial(one, 1) + UPoly::monomial(one, 2);
    CHECK(URat(one_minus_u3, one_minus_u).to_poly() == want);

    UPoly p = UPoly::monomial(TPoly::t_minus_one(), 4) + UPoly(one);
    CHECK(URat(p).to_poly() == p); // p / 1

    // (t-1)(u^6 - u^9) / (u^2 (1-u)) = (t-1)(u^4 + u^5 + u^6)
    UPoly tnum = UPoly::monomial(TPoly::t_minus_one(), 6) - UPoly::monomial(TPoly::t_minus_one(), 9);
    UPoly tden = UPoly::monomial(one, 2) * one_minus_u;
    UPoly twant = UPoly::monomial(TPoly::t_minus_one(), 4) +
                  UPoly::monomial(TPoly::t_minus_one(), 5) +
                  UPoly::monomial(TPoly::t_minus_one(), 6);
    CHECK(URat(tnum, tden).to_poly() == twant);

    CHECK_THROWS_AS(URat(UPoly(one), one_minus_u).to_poly(), NonDivisible);
}

TEST_CASE("upoly evaluation at u=1") {
    TPoly one(BigInt(1));
    UPoly p = UPoly(one) + UPoly::monomial(one, 1) + UPoly::monomial(one, 2);
    CHECK(p.eval_at_one() == TPoly(BigInt(3)));
    CHECK(UPoly{}.eval_at_one() == TPoly{});
    CHECK(UPoly::monomial(TPoly::t_minus_one(), 6).eval_at_one() == TPoly::t_minus_one());
}

TEST_CASE("decimal rendering truncates") {
    CHECK(decimal_string(BigRat(1, 3), 6) == "0.333333");
    CHECK(decimal_string(BigRat(2, 3), 6) == "0.666666");
    CHECK(decimal_string(BigRat(-1, 8), 3) == "-0.125");
    CHECK(decimal_string(BigRat(5), 2) == "5.00");
    // shorter renderings are prefixes of longer ones
    CHECK(decimal_string(BigRat(2, 3), 4) == decimal_string(BigRat(2, 3), 6).substr(0, 6));
}
