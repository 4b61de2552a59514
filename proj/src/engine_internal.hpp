#ifndef LAURIN_ENGINE_INTERNAL_HPP
#define LAURIN_ENGINE_INTERNAL_HPP

#include <functional>
#include <string>
#include <vector>

#include "laurin/engine.hpp"

// Shared reduction state and row surgery helpers used by the engine
// translation units. Not installed; engine internals only.

namespace laurin::detail {

inline std::size_t hash_row(const Row& row) {
    std::hash<std::string> h;
    std::string s;
    for (const auto& f : row) {
        s += f.to_text();
        s += '|';
    }
    return h(s);
}

struct Ctx {
    UmRow row;
    Transcript ts;
    std::vector<TraceEntry>* trace;
    EngineBudget budget;
    int depth = 0;

    Ctx(UmRow r, std::vector<TraceEntry>* tr, const EngineBudget& b, int d)
        : row(std::move(r)), ts(row.ring(), row.n()), trace(tr), budget(b), depth(d) {
        check(d <= b.max_recursion_depth, ErrorKind::Budget, "max recursion depth exceeded");
    }

    const RingPtr& ring() const { return row.ring(); }
    int n() const { return row.n(); }
    const LaurentPoly& f(int i) const { return row.entry(i); }

    void op(int i, int j, const LaurentPoly& h) {
        if (h.is_zero()) return;
        ElementaryOp e{i, j, h};
        ts.push(e);
        row.apply_op(e);
        check(ts.size() <= budget.max_ops, ErrorKind::Budget, "op budget exceeded (max_ops)");
        for (const auto& g : row.entries())
            if (!g.is_zero())
                check(g.hdeg() <= budget.max_degree && g.ldeg() >= -budget.max_degree,
                      ErrorKind::Budget, "degree budget exceeded");
    }

    void log(const std::string& step, int dim, int m, std::int64_t deg) {
        if (trace) trace->push_back({step, dim, m, deg, n(), hash_row(row.entries())});
    }
};

// A certified row with a zero entry sweeps to e_1 directly.
inline void finish_with_zero_entry(Ctx& c, int zidx) {
    const RingPtr& R = c.ring();
    Row g = c.row.cofactors();
    for (int i = 1; i <= c.n(); ++i)
        if (i != zidx) c.op(i, zidx, g[i - 1]);
    check(c.f(zidx) == LaurentPoly::one(R), ErrorKind::Internal, "zero-entry sweep failed");
    if (zidx != 1) {
        c.op(zidx, 1, LaurentPoly::one(R) - c.f(1));
        check(c.f(1) == LaurentPoly::one(R), ErrorKind::Internal, "pivot move failed");
    }
    for (int j = 2; j <= c.n(); ++j)
        if (!c.f(j).is_zero()) c.op(1, j, -c.f(j));
}

// A row with a unit entry normalizes that entry to 1 and sweeps.
inline void finish_with_unit_entry(Ctx& c, int idx, const LaurentPoly& inverse) {
    const RingPtr& R = c.ring();
    LaurentPoly one = LaurentPoly::one(R);
    if (idx == 1) {
        c.op(1, 2, (one - c.f(2)) * inverse);
        check(c.f(2) == one, ErrorKind::Internal, "unit finisher: staging failed");
        c.op(2, 1, one - c.f(1));
    } else {
        c.op(idx, 1, (one - c.f(1)) * inverse);
    }
    check(c.f(1) == one, ErrorKind::Internal, "unit finisher failed");
    for (int j = 2; j <= c.n(); ++j)
        if (!c.f(j).is_zero()) c.op(1, j, -c.f(j));
}

inline bool try_finishers(Ctx& c) {
    if (c.ring()->is_trivial()) return true; // every row over Z/1 is e_1
    for (int i = 1; i <= c.n(); ++i)
        if (c.f(i).is_zero()) {
            finish_with_zero_entry(c, i);
            return true;
        }
    for (int i = 1; i <= c.n(); ++i) {
        auto inv = laurent_try_inverse(c.f(i));
        if (inv) {
            finish_with_unit_entry(c, i, *inv);
            return true;
        }
    }
    return false;
}

// Three-op swap; entry j ends up negated (harmless for our uses).
inline void swap_entries(Ctx& c, int i, int j) {
    LaurentPoly one = LaurentPoly::one(c.ring());
    c.op(j, i, one);
    c.op(i, j, -one);
    c.op(j, i, one);
}

// diag(X^e, X^-e) on the slot pair (i, j) as an exact six-op word:
// slot i is multiplied by X^e, slot j by X^-e.
inline void whitehead_shift(Ctx& c, int i, int j, std::int64_t e) {
    if (e == 0) return;
    const RingPtr& R = c.ring();
    LaurentPoly a = LaurentPoly::monomial(R->one(), e);
    LaurentPoly binv = LaurentPoly::monomial(R->one(), -e);
    LaurentPoly one = LaurentPoly::one(R);
    c.op(i, j, a);
    c.op(j, i, -binv);
    c.op(i, j, a);
    c.op(i, j, -one);
    c.op(j, i, one);
    c.op(i, j, -one);
}

// Raise every non-pivot entry's ldeg to at least the pivot's, spending the
// compensating shifts on the pivot slot (which only widens the window).
inline void normalize_ldeg(Ctx& c, int pivot) {
    bool again = true;
    int guard = 0;
    while (again) {
        again = false;
        std::int64_t lp = c.f(pivot).ldeg();
        for (int i = 1; i <= c.n(); ++i) {
            if (i == pivot || c.f(i).is_zero()) continue;
            std::int64_t gap = lp - c.f(i).ldeg();
            if (gap > 0) {
                whitehead_shift(c, i, pivot, gap);
                again = true;
                lp = c.f(pivot).ldeg();
            }
        }
        check(++guard < 256, ErrorKind::Budget, "ldeg normalization did not settle");
    }
}

// Kill tops of entry j against a pivot with unit hc until
// hdeg(f_j) < hdeg(pivot). Keeps ldeg(f_j) >= ldeg(pivot).
inline void window_top(Ctx& c, int pivot, int j) {
    int guard = 0;
    while (!c.f(j).is_zero() && c.f(j).hdeg() >= c.f(pivot).hdeg()) {
        auto ainv = try_inverse(c.f(pivot).hc());
        check(ainv.has_value(), ErrorKind::Internal, "window_top needs a unit pivot hc");
        std::int64_t delta = c.f(j).hdeg() - c.f(pivot).hdeg();
        c.op(pivot, j, -LaurentPoly::monomial(c.f(j).hc() * *ainv, delta));
        check(++guard < 100000, ErrorKind::Budget, "window_top did not terminate");
    }
}

// Cross-TU entry points.
void reduce_zero_dim_inner(Ctx& c);
void reduce_constant_entry_inner(Ctx& c);
void reduce_dim1_inner(Ctx& c);

// Full dispatch on a fresh context (used by recursive descents).
void reduce_any(Ctx& c);

} // namespace laurin::detail

#endif
