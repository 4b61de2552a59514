#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "laurin/engine.hpp"
#include "laurin/oracle.hpp"
#include "laurin/textio.hpp"

using namespace laurin;

TEST_CASE("bfs trivial reachability") {
    auto f2 = Ring::prime_field(2);
    OrbitSpace sp{f2, 2, -1, 1};
    Row e1 = unit_row(f2, 2);
    BfsResult r = bfs_orbit_member(e1, e1, sp);
    CHECK(r.reachable);
    CHECK(r.path.empty());
}

TEST_CASE("bfs reaches (X, 1+X) over F_2 and the path replays") {
    auto f2 = Ring::prime_field(2);
    OrbitSpace sp{f2, 2, -1, 1};
    Row target = {parse_poly(f2, "X"), parse_poly(f2, "1 + X")};
    Row e1 = unit_row(f2, 2);
    BfsResult r = bfs_orbit_member(e1, target, sp);
    REQUIRE(r.reachable);
    Row replay = e1;
    for (const auto& op : r.path) replay = laurin::apply(replay, op);
    CHECK(replay == target);
}

TEST_CASE("bfs never reaches a non-unimodular row") {
    auto f2 = Ring::prime_field(2);
    OrbitSpace sp{f2, 2, -1, 1};
    Row bad = {parse_poly(f2, "X"), parse_poly(f2, "X")};
    BfsResult r = bfs_orbit_member(unit_row(f2, 2), bad, sp);
    CHECK(!r.reachable);
}

TEST_CASE("engine agrees with BFS on window-bounded instances") {
    auto f2 = Ring::prime_field(2);
    OrbitSpace sp{f2, 2, -1, 1};
    Row e1 = unit_row(f2, 2);
    // enumerate all rows with entries supported on [-1, 1]
    std::vector<LaurentPoly> all;
    for (int c0 = 0; c0 < 2; ++c0)
        for (int c1 = 0; c1 < 2; ++c1)
            for (int c2 = 0; c2 < 2; ++c2) {
                LaurentPoly f(f2);
                f.set_coeff(-1, f2->from_int(c0));
                f.set_coeff(0, f2->from_int(c1));
                f.set_coeff(1, f2->from_int(c2));
                all.push_back(f);
            }
    OracleReport report;
    for (const auto& a : all)
        for (const auto& b : all) {
            Row row = {a, b};
            ++report.instances;
            BfsResult r = bfs_orbit_member(e1, row, sp);
            if (!r.reachable) continue;
            ++report.reachable;
            // a BFS-reachable row is certified by inverting the path
            Transcript path_t(f2, 2);
            for (const auto& op : r.path) path_t.push(op);
            UmRow certified = UmRow::unit(f2, 2);
            certified.apply_transcript(path_t);
            REQUIRE(certified.entries() == row);
            ReductionOutcome out = zero_dim_reduce(certified);
            bool ok = verify(row, out.transcript, e1);
            CHECK(ok);
            if (ok)
                ++report.agreed;
            else
                ++report.disagreed;
        }
    CHECK(report.disagreed == 0);
    CHECK(report.reachable >= 10);
    CHECK(report.to_text().find("disagreed 0") != std::string::npos);
}

TEST_CASE("shrink finds smaller failing cases") {
    auto f2 = Ring::prime_field(2);
    // synthetic failure predicate: "entry 2 is nonzero"
    auto fails = [](const UmRow& r) { return !r.entry(2).is_zero(); };
    std::vector<ElementaryOp> ops = {
        {1, 2, parse_poly(f2, "X")},
        {2, 1, parse_poly(f2, "1")},
        {1, 2, parse_poly(f2, "X^-1")},
        {2, 1, parse_poly(f2, "X")},
    };
    auto minimal = shrink_failing(f2, 2, ops, fails);
    CHECK(minimal.size() <= ops.size());
    CHECK(minimal.size() >= 1);
    UmRow row = UmRow::unit(f2, 2);
    for (const auto& op : minimal) row.apply_op(op);
    CHECK(fails(row));

    // already minimal stays unchanged
    std::vector<ElementaryOp> one = {{1, 2, parse_poly(f2, "1")}};
    auto same = shrink_failing(f2, 2, one, fails);
    CHECK(same.size() == 1);

    // non-failing input is rejected
    std::vector<ElementaryOp> none;
    CHECK_THROWS_AS(shrink_failing(f2, 2, none, fails), Error);
}
