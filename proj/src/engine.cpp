#include "laurin/engine.hpp"

#include <algorithm>
#include <sstream>

#include "engine_internal.hpp"

namespace laurin {

using detail::Ctx;

namespace detail {

// --- Remark 3.5: lifting along R -> R/Nil(R) --------------------------------

namespace {

// Apply the quotient-ring reduction by lifting each op, then clean up the
// resulting unit (1 + nilpotent) first entry.
void apply_lifted_and_finish(Ctx& c, const Transcript& reduced_ts, const RingMap& q) {
    for (const auto& op : reduced_ts.ops())
        c.op(op.i, op.j, op.h.map_coeffs(c.ring(), q.section));
    auto inv = laurent_try_inverse(c.f(1));
    check(inv.has_value(), ErrorKind::Internal,
          "nilpotent lift: first entry is not a unit after replay");
    finish_with_unit_entry(c, 1, *inv);
}

UmRow project_row(const UmRow& row, const RingPtr& dst,
                  const std::function<RElem(const RElem&)>& pr) {
    Row e, g;
    for (const auto& f : row.entries()) e.push_back(f.map_coeffs(dst, pr));
    for (const auto& f : row.cofactors()) g.push_back(f.map_coeffs(dst, pr));
    return UmRow(std::move(e), std::move(g));
}

// --- Prop 3.6: the idempotent splitting branch ------------------------------

void zero_dim_split_branch(Ctx& c, const RElem& d) {
    const RingPtr& R = c.ring();
    IdempotentWitness iw = idempotent_for_principal(d);
    RingSplit sp = split_by_idempotent(iw.e);
    check(!sp.ring_e->is_trivial() && !sp.ring_1e->is_trivial(), ErrorKind::Internal,
          "split on a nonzero non-unit must be proper");

    Ctx ce(project_row(c.row, sp.ring_e, sp.proj_e), c.trace, c.budget, c.depth + 1);
    ce.log("zero-dim-split-e", 0, 0, 0);
    reduce_zero_dim_inner(ce);
    Ctx c1e(project_row(c.row, sp.ring_1e, sp.proj_1e), c.trace, c.budget, c.depth + 1);
    c1e.log("zero-dim-split-1e", 0, 0, 0);
    reduce_zero_dim_inner(c1e);

    // glue C = A'B': lift the (1-e)-side word, then the e-side word
    const RElem zero_e = sp.ring_e->zero();
    const RElem zero_1e = sp.ring_1e->zero();
    for (const auto& op : c1e.ts.ops())
        c.op(op.i, op.j, op.h.map_coeffs(R, [&](const RElem& x) { return sp.glue(zero_e, x); }));
    for (const auto& op : ce.ts.ops())
        c.op(op.i, op.j, op.h.map_coeffs(R, [&](const RElem& x) { return sp.glue(x, zero_1e); }));
    check(c.row.entries() == unit_row(R, c.n()), ErrorKind::Internal,
          "idempotent glue did not reach e_1");
}

} // namespace

// --- Prop 3.6: zero-dimensional reduction -----------------------------------

void reduce_zero_dim_inner(Ctx& c) {
    const RingPtr& R = c.ring();
    check(R->zero_dimensional(), ErrorKind::Precondition,
          "zero_dim_reduce requires a zero-dimensional ring, got " + R->to_text());
    if (R->is_trivial()) return;

    if (!R->is_reduced()) {
        RingMap q = nilradical_quotient(R);
        Ctx cq(project_row(c.row, q.dst, q.map), c.trace, c.budget, c.depth + 1);
        cq.log("nilradical-descent", 0, 0, 0);
        reduce_zero_dim_inner(cq);
        apply_lifted_and_finish(c, cq.ts, q);
        return;
    }

    // Euclidean lowering on the first two entries; idempotent split when
    // the pivot's extreme coefficients are not both units.
    while (true) {
        if (try_finishers(c)) return;
        int p = (c.f(1).deg() <= c.f(2).deg()) ? 1 : 2;
        int o = 3 - p;
        RElem a = c.f(p).hc();
        RElem b = c.f(p).lc();
        if (!is_unit(a * b)) {
            RElem d = is_unit(a) ? b : a;
            c.log("zero-dim-idempotent-split", 0, c.f(p).term_count(),
                  c.f(1).deg() + c.f(2).deg());
            zero_dim_split_branch(c, d);
            return;
        }
        c.log("zero-dim-euclid", 0, 0, c.f(1).deg() + c.f(2).deg());
        if (c.f(o).ldeg() <= c.f(p).ldeg()) {
            c.op(p, o,
                 -LaurentPoly::monomial(c.f(o).lc() * *try_inverse(b),
                                        c.f(o).ldeg() - c.f(p).ldeg()));
        } else {
            check(c.f(o).hdeg() >= c.f(p).hdeg(), ErrorKind::Internal,
                  "euclid step: no reducible end");
            c.op(p, o,
                 -LaurentPoly::monomial(c.f(o).hc() * *try_inverse(a),
                                        c.f(o).hdeg() - c.f(p).hdeg()));
        }
    }
}

// --- Lemma 3.9: reduction via a constant entry -------------------------------

void reduce_constant_entry_inner(Ctx& c) {
    const RingPtr& R = c.ring();
    if (try_finishers(c)) return;
    int cidx = 0;
    for (int i = 1; i <= c.n(); ++i)
        if (c.f(i).is_constant()) {
            cidx = i;
            break;
        }
    check(cidx != 0, ErrorKind::Precondition,
          "constant_entry_reduce: no constant entry present");
    if (cidx != 1) swap_entries(c, cidx, 1);
    RElem r = c.f(1).constant_value();

    RingMap bq = boundary_quotient(r);
    check(bq.dst->dim_bound() < R->dim_bound() || bq.dst->is_trivial(), ErrorKind::Internal,
          "boundary quotient must drop the dimension bound");

    // project the tail (entries 2..n) and reduce it recursively
    Row e, g;
    for (int i = 2; i <= c.n(); ++i) e.push_back(c.f(i).map_coeffs(bq.dst, bq.map));
    for (int i = 2; i <= c.n(); ++i)
        g.push_back(c.row.cofactors()[i - 1].map_coeffs(bq.dst, bq.map));
    Ctx cq(UmRow(std::move(e), std::move(g)), c.trace, c.budget, c.depth + 1);
    cq.log("boundary-descent", bq.dst->dim_bound(), 0, 0);
    reduce_any(cq);

    // lift, shifting indices past the constant slot
    for (const auto& op : cq.ts.ops())
        c.op(op.i + 1, op.j + 1, op.h.map_coeffs(R, bq.section));

    // row = (r, 1 + v_1, v_2, ..., v_n), v_i in I(r)[X,X^-1]; peel each
    // coefficient into r*w + h with r*h nilpotent, clear the r*w parts
    // through slot 1, then sweep.
    Ideal ann = nil_annihilator(r);
    RElem ann_gen = ann.principal();
    Ideal full(R, {r, ann_gen});
    for (int i = 2; i <= c.n(); ++i) {
        LaurentPoly v = c.f(i);
        if (i == 2) v = v - LaurentPoly::one(R);
        LaurentPoly w(R);
        for (const auto& [d, coef] : v.terms()) {
            auto mem = full.membership(coef);
            check(mem.has_value(), ErrorKind::Internal,
                  "entry coefficient escaped the boundary ideal");
            w.set_coeff(d, (*mem)[0]);
        }
        if (!w.is_zero()) c.op(1, i, -w);
    }
    c.op(2, 1, -LaurentPoly::constant(r)); // slot 1 becomes -r*h_1, nilpotent
    Row cof = c.row.cofactors();
    for (int i = 2; i <= c.n(); ++i) c.op(i, 1, cof[i - 1]);
    auto inv = laurent_try_inverse(c.f(1));
    check(inv.has_value(), ErrorKind::Internal,
          "constant-entry cleanup: slot 1 is not a unit");
    finish_with_unit_entry(c, 1, *inv);
}

// --- dispatch ----------------------------------------------------------------

void reduce_any(Ctx& c) {
    const RingPtr& R = c.ring();
    if (R->is_trivial()) return;
    if (R->zero_dimensional()) {
        reduce_zero_dim_inner(c);
        return;
    }
    reduce_dim1_inner(c);
}

} // namespace detail

// --- public wrappers ----------------------------------------------------------

std::string trace_to_text(const std::vector<TraceEntry>& trace) {
    std::ostringstream os;
    for (const auto& t : trace)
        os << t.step << " dim=" << t.dim << " M=" << t.m_measure << " deg=" << t.deg_measure
           << " n=" << t.n << "\n";
    return os.str();
}

ReductionOutcome zero_dim_reduce(const UmRow& row, const EngineBudget& budget) {
    std::vector<TraceEntry> trace;
    Ctx c(row, &trace, budget, 0);
    c.log("zero-dim-reduce", 0, 0, 0);
    detail::reduce_zero_dim_inner(c);
    check(verify(row.entries(), c.ts, unit_row(row.ring(), row.n())), ErrorKind::Internal,
          "zero_dim_reduce: verification failed");
    return {std::move(c.ts), std::move(trace)};
}

ReductionOutcome lift_mod_nil(const UmRow& row, const Transcript& reduced_transcript,
                              const EngineBudget& budget) {
    const RingPtr& R = row.ring();
    RingMap q = nilradical_quotient(R);
    Row proj;
    for (const auto& f : row.entries()) proj.push_back(f.map_coeffs(q.dst, q.map));
    check(verify(proj, reduced_transcript, unit_row(q.dst, row.n())), ErrorKind::Precondition,
          "lift_mod_nil: the quotient transcript does not reduce the projected row");
    std::vector<TraceEntry> trace;
    Ctx c(row, &trace, budget, 0);
    for (const auto& op : reduced_transcript.ops())
        c.op(op.i, op.j, op.h.map_coeffs(R, q.section));
    auto inv = laurent_try_inverse(c.f(1));
    check(inv.has_value(), ErrorKind::Internal,
          "lift_mod_nil: first entry is not a unit after replay");
    detail::finish_with_unit_entry(c, 1, *inv);
    check(verify(row.entries(), c.ts, unit_row(R, row.n())), ErrorKind::Internal,
          "lift_mod_nil: verification failed");
    return {std::move(c.ts), std::move(trace)};
}

ReductionOutcome constant_entry_reduce(const UmRow& row, const EngineBudget& budget) {
    check(row.n() >= row.ring()->dim_bound() + 2, ErrorKind::Precondition,
          "constant_entry_reduce: row length < dim_bound + 2");
    std::vector<TraceEntry> trace;
    Ctx c(row, &trace, budget, 0);
    c.log("constant-entry-reduce", c.ring()->dim_bound(), 0, 0);
    detail::reduce_constant_entry_inner(c);
    check(verify(row.entries(), c.ts, unit_row(row.ring(), row.n())), ErrorKind::Internal,
          "constant_entry_reduce: verification failed");
    return {std::move(c.ts), std::move(trace)};
}

} // namespace laurin
