#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "laurin/laurent.hpp"
#include "laurin/textio.hpp"

using namespace laurin;

namespace {

LaurentPoly random_poly(const RingPtr& R, std::mt19937_64& rng, int window = 5, int bound = 7) {
    LaurentPoly f(R);
    int terms = static_cast<int>(rng() % 4);
    for (int t = 0; t < terms; ++t) {
        std::int64_t e = static_cast<std::int64_t>(rng() % (2 * window + 1)) - window;
        Int c = Int(static_cast<long long>(rng() % (2 * bound + 1)) - bound);
        f.set_coeff(e, f.coeff(e) + R->from_int(c));
    }
    return f;
}

} // namespace

TEST_CASE("degree data on the paper's worked example") {
    auto Q = Ring::rationals();
    LaurentPoly f = parse_poly(Q, "X^-3 + X^2");
    auto d = f.degree_data();
    CHECK(d.hdeg == 2);
    CHECK(d.ldeg == -3);
    CHECK(d.deg == 5);
    CHECK(d.hc.is_one());
    CHECK(d.lc.is_one());

    LaurentPoly c = parse_poly(Q, "7");
    auto dc = c.degree_data();
    CHECK(dc.hdeg == 0);
    CHECK(dc.deg == 0);
    CHECK(dc.hc == Q->from_int(7));

    CHECK_THROWS_AS(LaurentPoly::zero(Q).degree_data(), Error);
}

TEST_CASE("mul collapses over non-domains") {
    auto z4 = Ring::integers_mod(4);
    LaurentPoly a = LaurentPoly::monomial(z4->from_int(2), 1);
    LaurentPoly b = LaurentPoly::monomial(z4->from_int(2), -1);
    CHECK((a * b).is_zero());

    auto z = Ring::integers();
    CHECK(parse_poly(z, "X + 1") * parse_poly(z, "X - 1") == parse_poly(z, "X^2 - 1"));
    LaurentPoly f = parse_poly(z, "3*X^-2 + 1 - X^5");
    CHECK(f * LaurentPoly::one(z) == f);
}

TEST_CASE("shift") {
    auto Q = Ring::rationals();
    LaurentPoly f = parse_poly(Q, "X^-3 + X^2");
    CHECK(f.shift(3) == parse_poly(Q, "1 + X^5"));
    CHECK(f.shift(0) == f);
    CHECK(LaurentPoly::zero(Q).shift(5).is_zero());
    auto d = f.shift(3).degree_data();
    CHECK(d.hdeg == 5);
    CHECK(d.ldeg == 0);
}

TEST_CASE("invert_variable") {
    auto Q = Ring::rationals();
    LaurentPoly f = parse_poly(Q, "X^-3 + X^2");
    CHECK(f.invert_variable() == parse_poly(Q, "X^3 + X^-2"));
    CHECK(parse_poly(Q, "5").invert_variable() == parse_poly(Q, "5"));
    std::mt19937_64 rng(7);
    for (int k = 0; k < 200; ++k) {
        LaurentPoly g = random_poly(Q, rng);
        CHECK(g.invert_variable().invert_variable() == g);
    }
}

TEST_CASE("invert_variable and shift commute the right way") {
    auto z = Ring::integers();
    std::mt19937_64 rng(11);
    for (int k = 0; k < 200; ++k) {
        LaurentPoly f = random_poly(z, rng);
        std::int64_t s = static_cast<std::int64_t>(rng() % 9) - 4;
        CHECK(f.shift(s).invert_variable() == f.invert_variable().shift(-s));
    }
}

TEST_CASE("to_ordinary") {
    auto Q = Ring::rationals();
    auto [f1, k1] = parse_poly(Q, "X^-3 + X^2").to_ordinary();
    CHECK(f1 == parse_poly(Q, "1 + X^5"));
    CHECK(k1 == 3);
    auto [f2, k2] = parse_poly(Q, "1 + X").to_ordinary();
    CHECK(k2 == 0);
    auto [f3, k3] = parse_poly(Q, "X^7").to_ordinary();
    CHECK(f3 == LaurentPoly::one(Q));
    CHECK(k3 == -7);
    CHECK_THROWS_AS(LaurentPoly::zero(Q).to_ordinary(), Error);
}

TEST_CASE("degree bookkeeping under products with unit top coefficients") {
    for (auto R : {Ring::integers(), RingPtr(Ring::prime_field(5))}) {
        std::mt19937_64 rng(3);
        for (int k = 0; k < 300; ++k) {
            LaurentPoly f = random_poly(R, rng);
            LaurentPoly g = random_poly(R, rng);
            if (f.is_zero() || g.is_zero()) continue;
            if ((f.hc() * g.hc()).is_zero() || (f.lc() * g.lc()).is_zero()) continue;
            CHECK((f * g).hdeg() == f.hdeg() + g.hdeg());
            CHECK((f * g).ldeg() == f.ldeg() + g.ldeg());
        }
    }
}

TEST_CASE("ring axioms on randomized triples") {
    auto z6 = Ring::integers_mod(6);
    std::mt19937_64 rng(23);
    for (int k = 0; k < 200; ++k) {
        LaurentPoly a = random_poly(z6, rng), b = random_poly(z6, rng), c = random_poly(z6, rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
    }
}

TEST_CASE("doubly unitary predicate") {
    auto z = Ring::integers();
    CHECK(parse_poly(z, "X^-1 + 3 + X^2").doubly_unitary());
    CHECK(parse_poly(z, "-X^-1 + 3 + X^2").doubly_unitary());
    CHECK(!parse_poly(z, "X^-1 + 3 + 2*X^2").doubly_unitary());
    CHECK(!parse_poly(z, "2*X^-1 + 3 + X^2").doubly_unitary());
    auto z6 = Ring::integers_mod(6);
    CHECK(parse_poly(z6, "5*X^-2 + 3 + X").doubly_unitary());
    CHECK(!parse_poly(z6, "2*X^-2 + 3 + X").doubly_unitary());
}

TEST_CASE("laurent units") {
    auto z6 = Ring::integers_mod(6);
    // mixed-degree unit: 4X + 3 = (X,1) componentwise over Z/3 x Z/2... i.e.
    // e*X + (1-e) with e = 4
    LaurentPoly u = parse_poly(z6, "4*X + 3");
    auto inv = laurent_try_inverse(u);
    REQUIRE(inv.has_value());
    CHECK(u * *inv == LaurentPoly::one(z6));
    // 2X + 3 is also a unit: (1, 2X) componentwise under 6 = 2*3
    auto inv23 = laurent_try_inverse(parse_poly(z6, "2*X + 3"));
    REQUIRE(inv23.has_value());
    CHECK(parse_poly(z6, "2*X + 3") * *inv23 == LaurentPoly::one(z6));
    // 2X + 2 collapses mod 3 to a two-term polynomial: not a unit
    CHECK(!laurent_try_inverse(parse_poly(z6, "2*X + 2")).has_value());

    auto z4 = Ring::integers_mod(4);
    // 1 + 2X is a unit (2 nilpotent)
    auto i2 = laurent_try_inverse(parse_poly(z4, "1 + 2*X"));
    REQUIRE(i2.has_value());
    CHECK(parse_poly(z4, "1 + 2*X") * *i2 == LaurentPoly::one(z4));

    auto z = Ring::integers();
    CHECK(laurent_try_inverse(parse_poly(z, "X^3")).has_value());
    CHECK(!laurent_try_inverse(parse_poly(z, "1 + X")).has_value());
    CHECK(!laurent_try_inverse(parse_poly(z, "2")).has_value());
    CHECK(laurent_try_inverse(parse_poly(z, "-X^-2")).has_value());
}

TEST_CASE("polynomial text grammar round trips") {
    auto Q = Ring::rationals();
    for (const char* s : {"3*X^-2 + 1 - X^5", "0", "-X", "1/2*X^3 - 2/3", "X^-1"}) {
        LaurentPoly f = parse_poly(Q, s);
        CHECK(parse_poly(Q, f.to_text()) == f);
    }
    CHECK_THROWS_AS(parse_poly(Q, "X^^2"), Error);
    CHECK_THROWS_AS(parse_poly(Q, "foo"), Error);
    CHECK_THROWS_AS(parse_poly(Q, ""), Error);
}

TEST_CASE("canonical printing is ascending with explicit negative exponents") {
    auto z = Ring::integers();
    CHECK(parse_poly(z, "1 - X^5 + 3*X^-2").to_text() == "3*X^-2 + 1 - X^5");
}

TEST_CASE("degree window budget") {
    auto z = Ring::integers();
    LaurentPoly big = LaurentPoly::monomial(z->one(), 60000);
    CHECK_THROWS_AS(big * big, Error);
}
