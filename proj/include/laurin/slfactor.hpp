#ifndef LAURIN_SLFACTOR_HPP
#define LAURIN_SLFACTOR_HPP

#include "laurin/engine.hpp"

namespace laurin {

// Prop 3.7: over a zero-dimensional tower ring every SL_n matrix of
// Laurent polynomials is a product of elementary matrices. factor_sl
// returns a transcript whose matrix_of equals M exactly.
struct SlFactorOptions {
    int max_n = 6; // exact determinant cost cap
    EngineBudget budget;
};

Transcript factor_sl(const Matrix& M, const SlFactorOptions& opts = {});

// Matrix file format (row-major, polynomial grammar).
std::string matrix_to_text(const Matrix& m);
Matrix matrix_from_text(const std::string& text);

} // namespace laurin

#endif
