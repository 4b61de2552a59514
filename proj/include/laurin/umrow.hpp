#ifndef LAURIN_UMROW_HPP
#define LAURIN_UMROW_HPP

#include <cstdint>
#include <random>

#include "laurin/transcript.hpp"

namespace laurin {

// A unimodular row together with explicit cofactors: sum entries[i] *
// cofactors[i] = 1 exactly. Every engine entry point consumes one of
// these; the cofactors are maintained under every elementary operation.
class UmRow {
public:
    UmRow(Row entries, Row cofactors);

    static UmRow unit(const RingPtr& ring, int n); // e_1 with cofactors e_1

    const RingPtr& ring() const { return ring_; }
    int n() const { return static_cast<int>(entries_.size()); }
    const Row& entries() const { return entries_; }
    const Row& cofactors() const { return cofactors_; }
    const LaurentPoly& entry(int i) const { return entries_[i - 1]; }     // 1-based
    const LaurentPoly& cofactor(int i) const { return cofactors_[i - 1]; } // 1-based

    bool verify_certificate() const;

    // entries <- entries * E, cofactors <- E^{-1} * cofactors
    void apply_op(const ElementaryOp& op);
    void apply_transcript(const Transcript& t);

    // replace cofactors with another valid combination
    void set_cofactors(Row cofactors);

private:
    RingPtr ring_;
    Row entries_;
    Row cofactors_;
};

struct ScrambleParams {
    int n = 3;
    int ops = 12;
    std::uint64_t seed = 1;
    int degree_window = 4;   // op polynomials use exponents in [-w, w]
    int coeff_bound = 5;     // op coefficients drawn from [-b, b] \ {0}
};

struct ScrambleResult {
    UmRow row;
    Transcript ground_truth; // maps e_1 to row
};

// Deterministic scrambled row: start at e_1 / e_1, apply k pseudo-random
// elementary ops. Identical parameters give byte-identical output.
ScrambleResult random_unimodular(const RingPtr& ring, const ScrambleParams& params);

// complete_row: matrix M with first row equal to row.entries() and
// det(M) = 1, built from a verified transcript reducing the row to e_1.
Matrix complete_row(const UmRow& row, const Transcript& t);

// Row/cofactor file format (line-oriented, re-readable by the CLI).
std::string umrow_to_text(const UmRow& row);
UmRow umrow_from_text(const std::string& text);

} // namespace laurin

#endif
