#ifndef LAURIN_ENGINE_HPP
#define LAURIN_ENGINE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "laurin/umrow.hpp"

namespace laurin {

struct EngineBudget {
    std::size_t max_ops = 100000;
    std::int64_t max_degree = std::int64_t(1) << 16;
    int max_recursion_depth = 64;
};

struct TraceEntry {
    std::string step;
    int dim = 0;
    int m_measure = 0;        // nonzero-coefficient count of the pivot
    std::int64_t deg_measure = 0; // deg f0 + deg f1 style measure
    int n = 0;
    std::size_t row_hash = 0;
};

struct ReductionOutcome {
    Transcript transcript;
    std::vector<TraceEntry> trace;
};

std::string trace_to_text(const std::vector<TraceEntry>& trace);

// Roitman scaling (the lemma's two conclusions). The witness shows t
// invertible modulo the ideal generated by entries 1..n-2: t*u + sum
// combo_i * entry_i = 1 with combo supported on those entries.
struct RoitmanWitness {
    LaurentPoly u;
    std::vector<LaurentPoly> combo; // length n, nonzero only at 1..n-2
};

enum class RoitmanShape {
    ScaleLastTwo, // (x1,...,x_{n-2}, t*x_{n-1}, t*x_n)
    ScaleLastSq   // (x1,...,x_{n-1}, t^2*x_n)
};

Transcript roitman_scale(const UmRow& row, const LaurentPoly& t, const RoitmanWitness& witness,
                         RoitmanShape shape);

// Suslin's lemma for Laurent rows: a combination h of the f_i and f with
// hdeg(h) = k-1, ldeg(h) >= -m and unit hc. The coefficient certificate
// lists ring-element multipliers against chosen coefficients of the f_i.
struct CoeffCombinationTerm {
    int poly_index = 0; // 1-based index into fs
    std::int64_t degree = 0;
    RElem c;
};
struct SuslinResult {
    LaurentPoly h;
    std::vector<LaurentPoly> p_fs; // h = sum p_fs[i]*fs[i] + p_f*f
    LaurentPoly p_f;
};
SuslinResult suslin_lower(const std::vector<LaurentPoly>& fs,
                          const std::vector<CoeffCombinationTerm>& coeff_cert,
                          const LaurentPoly& f, std::int64_t k, std::int64_t m);

// Prop 3.3: from I = <g1, g2> with g1 doubly unitary and a sum certificate
// a*g1 + b*g2 + h3 = 1 with h3 in J[X,X^-1], produce r in I cap R and
// j in J with r + j = 1.
struct ConstantsContractResult {
    RElem r, j;
    LaurentPoly r_of_g1, r_of_g2;   // r = r_of_g1*g1 + r_of_g2*g2
    std::vector<RElem> j_combo;     // j = sum j_combo_i * J.generators()[i]
};
ConstantsContractResult constants_contract(const LaurentPoly& g1, const LaurentPoly& g2,
                                           const LaurentPoly& a, const LaurentPoly& b,
                                           const Ideal& J);

// Thm 2.2 / Prop 2.3 on constant rows. Returns b_1..b_n, the exponent kappa
// with s = m^kappa, and the membership certificate s = sum cert_i * (a_i +
// b_i a_0), all over R.
struct StableRangeResult {
    std::vector<RElem> b;    // length n (for the tail a_1..a_n)
    RElem s;                 // element of S
    int s_exponent = 0;      // s = m^s_exponent
    std::vector<RElem> cert; // s = sum cert_i * (a_i + b_i a_0)
};
StableRangeResult localized_stable_range(const RingPtr& R, const std::vector<RElem>& row,
                                         const Int& m, int depth = 0);
StableRangeResult stable_range(const RingPtr& R, const std::vector<RElem>& row);

// Lemma 3.8: with hc(f1) invertible modulo f1 (witness: hc(f1)*u + gamma*f1
// = 1), bring all other entries into the window hdeg < hdeg(f1), ldeg >=
// ldeg(f1). Returns the transcript; the row is updated in place.
struct DegreeLowerWitness {
    LaurentPoly u, gamma; // hc(f1)*u + gamma*f1 = 1 in R[X,X^-1]
};
Transcript degree_lower(UmRow& row, const DegreeLowerWitness& witness, EngineBudget budget);

// Per-proof reductions. Each returns a verified transcript mapping the
// input row to e_1 together with the dispatch trace.
ReductionOutcome zero_dim_reduce(const UmRow& row, const EngineBudget& budget = {});
ReductionOutcome lift_mod_nil(const UmRow& row, const Transcript& reduced_transcript,
                              const EngineBudget& budget = {});
ReductionOutcome constant_entry_reduce(const UmRow& row, const EngineBudget& budget = {});
ReductionOutcome doubly_unitary_reduce(const UmRow& row, const EngineBudget& budget = {});
ReductionOutcome hc_power_descent(const UmRow& row, const RElem& a,
                                  const EngineBudget& budget = {});
ReductionOutcome lc_power_descent(const UmRow& row, const RElem& c,
                                  const EngineBudget& budget = {});

// Thm 3.12: the top-level entry point. Requires n >= dim_bound + 2.
ReductionOutcome main_reduce(const UmRow& row, const EngineBudget& budget = {});

} // namespace laurin

#endif
