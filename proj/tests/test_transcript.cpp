#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "laurin/textio.hpp"
#include "laurin/transcript.hpp"
#include "laurin/umrow.hpp"

using namespace laurin;

namespace {

Transcript random_transcript(const RingPtr& R, int n, int k, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Transcript t(R, n);
    for (int s = 0; s < k; ++s) {
        int i = static_cast<int>(rng() % n) + 1;
        int j = static_cast<int>(rng() % (n - 1)) + 1;
        if (j >= i) ++j;
        std::int64_t e = static_cast<std::int64_t>(rng() % 7) - 3;
        Int c = Int(static_cast<long long>(rng() % 9) - 4);
        if (c == 0) c = 1;
        t.push(i, j, LaurentPoly::monomial(R->from_int(c), e));
    }
    return t;
}

} // namespace

TEST_CASE("apply: the action convention") {
    auto Q = Ring::rationals();
    Row r = {LaurentPoly::one(Q), LaurentPoly::zero(Q), LaurentPoly::zero(Q)};
    Row out = laurin::apply(r, ElementaryOp{1, 2, LaurentPoly::variable(Q)});
    CHECK(out[0] == LaurentPoly::one(Q));
    CHECK(out[1] == LaurentPoly::variable(Q));
    CHECK(out[2].is_zero());

    Transcript empty(Q, 3);
    CHECK(laurin::apply(r, empty) == r);

    Row r2 = {LaurentPoly::variable(Q), LaurentPoly::one(Q)};
    Row out2 = laurin::apply(r2, ElementaryOp{2, 1, -LaurentPoly::variable(Q)});
    CHECK(out2[0].is_zero());
    CHECK(out2[1] == LaurentPoly::one(Q));
}

TEST_CASE("matrix_of") {
    auto z5 = Ring::prime_field(5);
    Transcript empty(z5, 3);
    CHECK(matrix_of(empty) == identity_matrix(z5, 3));

    Transcript one_op(z5, 3);
    LaurentPoly h = parse_poly(z5, "2*X^-1 + 1");
    one_op.push(1, 2, h);
    Matrix m = matrix_of(one_op);
    CHECK(m[0][1] == h);
    CHECK(m[0][0] == LaurentPoly::one(z5));
    CHECK(m[1][0].is_zero());

    // replay on basis rows agrees with apply
    Transcript t = random_transcript(z5, 3, 8, 42);
    Matrix mt = matrix_of(t);
    for (int b = 0; b < 3; ++b) {
        Row e(3, LaurentPoly::zero(z5));
        e[b] = LaurentPoly::one(z5);
        CHECK(laurin::apply(e, t) == row_times_matrix(e, mt));
    }
}

TEST_CASE("invert") {
    auto z = Ring::integers();
    Transcript empty(z, 2);
    CHECK(invert(empty).size() == 0);

    Transcript t = random_transcript(z, 3, 10, 9);
    Matrix prod = matrix_multiply(matrix_of(t), matrix_of(invert(t)));
    CHECK(prod == identity_matrix(z, 3));
}

TEST_CASE("right-action consistency") {
    auto z6 = Ring::integers_mod(6);
    Transcript t1 = random_transcript(z6, 3, 6, 1);
    Transcript t2 = random_transcript(z6, 3, 6, 2);
    Transcript joined = t1;
    joined.append(t2);
    std::mt19937_64 rng(5);
    Row r = {parse_poly(z6, "X + 1"), parse_poly(z6, "3*X^-1"), parse_poly(z6, "2")};
    CHECK(laurin::apply(r, joined) == laurin::apply(laurin::apply(r, t1), t2));
}

TEST_CASE("verify detects tampering") {
    auto z = Ring::integers();
    ScrambleParams p;
    p.n = 3;
    p.ops = 6;
    p.seed = 77;
    auto sc = random_unimodular(z, p);
    // ground truth maps e1 to the row
    CHECK(verify(unit_row(z, 3), sc.ground_truth, sc.row.entries()));
    // inverted maps the row back to e1
    CHECK(verify(sc.row.entries(), invert(sc.ground_truth), unit_row(z, 3)));

    Transcript tampered(z, 3);
    bool flipped = false;
    Transcript inverted = invert(sc.ground_truth);
    for (const auto& op : inverted.ops()) {
        if (!flipped) {
            tampered.push(op.i, op.j, op.h + LaurentPoly::one(z));
            flipped = true;
        } else {
            tampered.push(op);
        }
    }
    CHECK(!verify(sc.row.entries(), tampered, unit_row(z, 3)));
}

TEST_CASE("determinant of transcripts is 1") {
    for (int n : {2, 3, 4, 5}) {
        auto z6 = Ring::integers_mod(6);
        Transcript t = random_transcript(z6, n, 9, 100 + n);
        CHECK(determinant(matrix_of(t)) == LaurentPoly::one(z6));
    }
}

TEST_CASE("annotations never affect replay") {
    auto z = Ring::integers();
    Transcript t = random_transcript(z, 3, 8, 13);
    Transcript labeled = t;
    labeled.add_annotation(0, "roitman-scale");
    labeled.add_annotation(3, "idempotent-glue");
    Row r = unit_row(z, 3);
    CHECK(laurin::apply(r, t) == laurin::apply(r, labeled));
    Transcript stripped = labeled;
    stripped.strip_annotations();
    CHECK(laurin::apply(r, stripped) == laurin::apply(r, labeled));
}

TEST_CASE("complete_row") {
    auto Q = Ring::rationals();
    // f = (X, 1), reduced by (op 2->1 h=-X) then normalize to e1
    Row f = {LaurentPoly::variable(Q), LaurentPoly::one(Q)};
    Transcript t(Q, 2);
    t.push(2, 1, -LaurentPoly::variable(Q)); // (0, 1)
    t.push(2, 1, LaurentPoly::one(Q));       // (1, 1)
    t.push(1, 2, -LaurentPoly::one(Q));      // (1, 0)
    REQUIRE(verify(f, t, unit_row(Q, 2)));
    UmRow row(f, {LaurentPoly::zero(Q), LaurentPoly::one(Q)});
    Matrix m = complete_row(row, t);
    CHECK(m[0][0] == f[0]);
    CHECK(m[0][1] == f[1]);
    CHECK(determinant(m) == LaurentPoly::one(Q));

    // completion identity: e1 * matrix_of(invert(t)) = f
    CHECK(row_times_matrix(unit_row(Q, 2), matrix_of(invert(t))) == f);

    // identity on e1 input
    UmRow e1 = UmRow::unit(Q, 3);
    Transcript empty(Q, 3);
    Matrix id = complete_row(e1, empty);
    CHECK(id == identity_matrix(Q, 3));

    // verification failure is rejected
    Transcript wrong(Q, 2);
    CHECK_THROWS_AS(complete_row(row, wrong), Error);
}

TEST_CASE("transcript JSON round trip") {
    auto z12 = Ring::integers_mod(12);
    Transcript t = random_transcript(z12, 3, 7, 21);
    t.add_annotation(2, "roitman-scale");
    std::string j = transcript_to_json(t);
    Transcript u = transcript_from_json(j);
    CHECK(u.n() == t.n());
    CHECK(u.ring()->equals(t.ring()));
    REQUIRE(u.size() == t.size());
    for (size_t k = 0; k < t.size(); ++k) {
        CHECK(u.ops()[k].i == t.ops()[k].i);
        CHECK(u.ops()[k].j == t.ops()[k].j);
        CHECK(u.ops()[k].h == t.ops()[k].h);
    }
    // byte-stable serialization
    CHECK(transcript_to_json(u) == j);
}
