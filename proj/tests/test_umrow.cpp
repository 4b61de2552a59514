#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "laurin/textio.hpp"
#include "laurin/umrow.hpp"

using namespace laurin;

TEST_CASE("verify_certificate examples") {
    auto f2 = Ring::prime_field(2);
    // f = (X, 1+X), g = (1, 1): X + 1 + X = 1 over F_2
    UmRow row({parse_poly(f2, "X"), parse_poly(f2, "1 + X")},
              {LaurentPoly::one(f2), LaurentPoly::one(f2)});
    CHECK(row.verify_certificate());

    auto Q = Ring::rationals();
    CHECK(UmRow::unit(Q, 2).verify_certificate());

    // f = (X, X^2) admits no certificate: constant term of any combination is 0
    CHECK_THROWS_AS(UmRow({parse_poly(Q, "X"), parse_poly(Q, "X^2")},
                          {LaurentPoly::one(Q), LaurentPoly::one(Q)}),
                    Error);
}

TEST_CASE("update_cofactors survives arbitrary ops") {
    auto Q = Ring::rationals();
    UmRow row = UmRow::unit(Q, 2);
    row.apply_op({1, 2, parse_poly(Q, "X^2 - 3")});
    CHECK(row.verify_certificate());
    CHECK(row.entry(2) == parse_poly(Q, "X^2 - 3"));

    std::mt19937_64 rng(4);
    for (auto R : {RingPtr(Ring::integers()), RingPtr(Ring::integers_mod(12))}) {
        UmRow r = UmRow::unit(R, 3);
        for (int k = 0; k < 100; ++k) {
            int i = static_cast<int>(rng() % 3) + 1;
            int j = static_cast<int>(rng() % 2) + 1;
            if (j >= i) ++j;
            std::int64_t e = static_cast<std::int64_t>(rng() % 9) - 4;
            Int c = Int(static_cast<long long>(rng() % 7) - 3);
            if (c == 0) c = 2;
            r.apply_op({i, j, LaurentPoly::monomial(R->from_int(c), e)});
            CHECK(r.verify_certificate());
        }
    }
}

TEST_CASE("certificate preservation property: 1000 random op sequences") {
    auto z6 = Ring::integers_mod(6);
    std::mt19937_64 rng(99);
    int checked = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        UmRow r = UmRow::unit(z6, 2 + static_cast<int>(rng() % 3));
        int steps = static_cast<int>(rng() % 10);
        for (int s = 0; s < steps; ++s) {
            int n = r.n();
            int i = static_cast<int>(rng() % n) + 1;
            int j = static_cast<int>(rng() % (n - 1)) + 1;
            if (j >= i) ++j;
            std::int64_t e = static_cast<std::int64_t>(rng() % 5) - 2;
            r.apply_op({i, j, LaurentPoly::monomial(z6->from_int(Int(static_cast<long long>(rng() % 5) + 1)), e)});
        }
        CHECK(r.verify_certificate());
        ++checked;
    }
    CHECK(checked == 1000);
}

TEST_CASE("random_unimodular determinism and shape") {
    auto z = Ring::integers();
    ScrambleParams p;
    p.n = 3;
    p.ops = 0;
    p.seed = 5;
    auto sc0 = random_unimodular(z, p);
    CHECK(sc0.row.entries() == unit_row(z, 3));
    CHECK(sc0.ground_truth.size() == 0);

    p.ops = 12;
    auto a = random_unimodular(z, p);
    auto b = random_unimodular(z, p);
    CHECK(umrow_to_text(a.row) == umrow_to_text(b.row));
    CHECK(transcript_to_json(a.ground_truth) == transcript_to_json(b.ground_truth));
    CHECK(a.row.verify_certificate());

    p.seed = 6;
    auto c = random_unimodular(z, p);
    CHECK(umrow_to_text(a.row) != umrow_to_text(c.row));
}

TEST_CASE("row file format round trips") {
    auto z12 = Ring::integers_mod(12);
    ScrambleParams p;
    p.n = 4;
    p.ops = 9;
    p.seed = 123;
    auto sc = random_unimodular(z12, p);
    std::string text = umrow_to_text(sc.row);
    UmRow back = umrow_from_text(text);
    CHECK(back.entries() == sc.row.entries());
    CHECK(back.cofactors() == sc.row.cofactors());
    CHECK(umrow_to_text(back) == text);
}

TEST_CASE("rows are 1-indexed in interfaces") {
    auto Q = Ring::rationals();
    UmRow r = UmRow::unit(Q, 3);
    CHECK(r.entry(1).is_constant());
    CHECK(r.entry(1) == LaurentPoly::one(Q));
    CHECK(r.entry(2).is_zero());
}
