#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "laurin/engine.hpp"
#include "laurin/oracle.hpp"
#include "laurin/slfactor.hpp"
#include "laurin/textio.hpp"

// Batch front end: parse rings/rows/matrices, run reductions, verify
// transcripts, complete rows, factor matrices, emit scrambles and run the
// self-test corpus. Exit codes: 0 success, 1 precondition failure or
// failed verification (with the violated bound named), 2 parse or budget
// errors.

namespace {

using namespace laurin;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    check(in.good(), ErrorKind::Parse, "cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void spit(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    check(out.good(), ErrorKind::Parse, "cannot write file: " + path);
    out << content;
}

struct RowArgs {
    std::string row_file;
    std::string ring_text;
    std::string row_inline;
    std::string cofactors_inline;
};

Row parse_semicolon_polys(const RingPtr& ring, const std::string& text) {
    Row out;
    std::string cur;
    std::istringstream is(text);
    while (std::getline(is, cur, ';')) out.push_back(parse_poly(ring, cur));
    return out;
}

UmRow load_row(const RowArgs& a) {
    if (!a.row_file.empty()) return umrow_from_text(slurp(a.row_file));
    check(!a.ring_text.empty() && !a.row_inline.empty() && !a.cofactors_inline.empty(),
          ErrorKind::Parse,
          "need --row-file, or --ring with --row and --cofactors");
    RingPtr ring = parse_ring(a.ring_text);
    return UmRow(parse_semicolon_polys(ring, a.row_inline),
                 parse_semicolon_polys(ring, a.cofactors_inline));
}

void add_row_options(CLI::App* cmd, RowArgs& a) {
    cmd->add_option("--row-file", a.row_file, "row file (ring/entry/cofactor lines)");
    cmd->add_option("--ring", a.ring_text, "ring text, e.g. Z, F_7, Z/12, Z[1/6]");
    cmd->add_option("--row", a.row_inline, "semicolon-separated entries");
    cmd->add_option("--cofactors", a.cofactors_inline, "semicolon-separated cofactors");
}

int run_selftest() {
    int failures = 0;
    auto report = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
        if (!ok) ++failures;
    };
    for (const char* rt : {"F_2", "F_7", "Q", "Z/4", "Z/12", "Z/30"}) {
        RingPtr R = parse_ring(rt);
        bool ok = true;
        for (std::uint64_t seed = 1; seed <= 25 && ok; ++seed) {
            ScrambleParams p;
            p.n = 2 + static_cast<int>(seed % 3);
            p.ops = 10;
            p.seed = seed;
            auto sc = random_unimodular(R, p);
            try {
                ReductionOutcome out = main_reduce(sc.row);
                ok = verify(sc.row.entries(), out.transcript, unit_row(R, p.n));
            } catch (const Error& e) {
                ok = false;
            }
        }
        report(std::string("reduce corpus ") + rt, ok);
    }
    {
        bool ok = true;
        RingPtr R = parse_ring("Z");
        for (std::uint64_t seed = 1; seed <= 10 && ok; ++seed) {
            ScrambleParams p;
            p.n = 3;
            p.ops = 8;
            p.seed = seed;
            auto sc = random_unimodular(R, p);
            try {
                ReductionOutcome out = main_reduce(sc.row);
                ok = verify(sc.row.entries(), out.transcript, unit_row(R, 3));
            } catch (const Error&) {
                ok = false;
            }
        }
        report("reduce corpus Z", ok);
    }
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact unimodular-row reduction over Laurent polynomial rings"};
    app.require_subcommand(1);

    // reduce
    auto* reduce = app.add_subcommand("reduce", "reduce a certified row to e_1");
    RowArgs reduce_row;
    add_row_options(reduce, reduce_row);
    std::string reduce_out, trace_out;
    std::size_t max_ops = 100000;
    std::int64_t max_degree = 65536;
    reduce->add_option("--out", reduce_out, "transcript output file (JSON)");
    reduce->add_option("--trace-out", trace_out, "trace log output file");
    reduce->add_option("--max-ops", max_ops, "op budget");
    reduce->add_option("--max-degree", max_degree, "degree budget");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "replay a transcript against a row");
    RowArgs verify_row;
    add_row_options(verify_cmd, verify_row);
    std::string transcript_path, target_inline;
    verify_cmd->add_option("--transcript", transcript_path, "transcript JSON file")->required();
    verify_cmd->add_option("--target", target_inline,
                           "semicolon-separated target row (default e_1)");

    // complete
    auto* complete = app.add_subcommand("complete", "complete a reduced row to a matrix");
    RowArgs complete_row_args;
    add_row_options(complete, complete_row_args);
    std::string complete_transcript, complete_out;
    complete->add_option("--transcript", complete_transcript, "reducing transcript")->required();
    complete->add_option("--out", complete_out, "matrix output file");

    // factor
    auto* factor = app.add_subcommand("factor", "factor an SL_n matrix into elementary ops");
    std::string matrix_file, factor_out;
    factor->add_option("--matrix-file", matrix_file, "matrix file")->required();
    factor->add_option("--out", factor_out, "transcript output file (JSON)");

    // scramble
    auto* scramble = app.add_subcommand("scramble", "emit a certified random row");
    std::string scr_ring = "Z", scr_out, scr_truth_out;
    ScrambleParams scr;
    scramble->add_option("--ring", scr_ring, "coefficient ring");
    scramble->add_option("--n", scr.n, "row length");
    scramble->add_option("--ops", scr.ops, "number of scramble ops");
    scramble->add_option("--seed", scr.seed, "PRNG seed (fixed default, never time-based)");
    scramble->add_option("--degree-window", scr.degree_window, "op exponent window");
    scramble->add_option("--coeff-bound", scr.coeff_bound, "op coefficient bound");
    scramble->add_option("--out", scr_out, "row output file");
    scramble->add_option("--truth-out", scr_truth_out, "ground-truth transcript output");

    // selftest
    app.add_subcommand("selftest", "run the embedded acceptance-style corpus");

    CLI11_PARSE(app, argc, argv);

    try {
        if (reduce->parsed()) {
            UmRow row = load_row(reduce_row);
            EngineBudget budget;
            budget.max_ops = max_ops;
            budget.max_degree = max_degree;
            ReductionOutcome out = main_reduce(row, budget);
            std::string json = transcript_to_json(out.transcript);
            if (reduce_out.empty())
                std::cout << json;
            else
                spit(reduce_out, json);
            if (!trace_out.empty()) spit(trace_out, trace_to_text(out.trace));
            return 0;
        }
        if (verify_cmd->parsed()) {
            UmRow row = load_row(verify_row);
            Transcript t = transcript_from_json(slurp(transcript_path));
            Row target = target_inline.empty()
                             ? unit_row(row.ring(), row.n())
                             : parse_semicolon_polys(row.ring(), target_inline);
            bool ok = verify(row.entries(), t, target);
            std::cout << (ok ? "verified" : "mismatch") << "\n";
            return ok ? 0 : 1;
        }
        if (complete->parsed()) {
            UmRow row = load_row(complete_row_args);
            Transcript t = transcript_from_json(slurp(complete_transcript));
            Matrix m = complete_row(row, t);
            std::string text = matrix_to_text(m);
            if (complete_out.empty())
                std::cout << text;
            else
                spit(complete_out, text);
            return 0;
        }
        if (factor->parsed()) {
            Matrix m = matrix_from_text(slurp(matrix_file));
            Transcript t = factor_sl(m);
            std::string json = transcript_to_json(t);
            if (factor_out.empty())
                std::cout << json;
            else
                spit(factor_out, json);
            return 0;
        }
        if (scramble->parsed()) {
            RingPtr R = parse_ring(scr_ring);
            auto sc = random_unimodular(R, scr);
            std::string text = umrow_to_text(sc.row);
            if (scr_out.empty())
                std::cout << text;
            else
                spit(scr_out, text);
            if (!scr_truth_out.empty())
                spit(scr_truth_out, transcript_to_json(sc.ground_truth));
            return 0;
        }
        if (app.get_subcommand("selftest")->parsed()) {
            return run_selftest();
        }
    } catch (const laurin::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.kind()) {
            case laurin::ErrorKind::Precondition: return 1;
            case laurin::ErrorKind::Parse:
            case laurin::ErrorKind::Budget: return 2;
            default: return 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
