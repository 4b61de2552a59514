#ifndef LAURIN_LAURENT_HPP
#define LAURIN_LAURENT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "laurin/ring.hpp"

namespace laurin {

// Hard guard against runaway degree growth; the reductions shift
// aggressively and must fail loudly instead of wrapping.
constexpr std::int64_t kDegreeWindow = std::int64_t(1) << 16;

// Finite-support map degree -> nonzero coefficient over a tower ring.
class LaurentPoly {
public:
    explicit LaurentPoly(RingPtr ring) : ring_(std::move(ring)) {}
    LaurentPoly() = default;

    static LaurentPoly zero(const RingPtr& R) { return LaurentPoly(R); }
    static LaurentPoly constant(const RElem& c);
    static LaurentPoly monomial(const RElem& c, std::int64_t e);
    static LaurentPoly one(const RingPtr& R) { return constant(R->one()); }
    static LaurentPoly variable(const RingPtr& R) { return monomial(R->one(), 1); }

    const RingPtr& ring() const { return ring_; }
    const std::map<std::int64_t, RElem>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // the coefficient at degree 0 if the poly is constant (or zero)
    RElem constant_value() const;

    std::int64_t hdeg() const;
    std::int64_t ldeg() const;
    std::int64_t deg() const { return hdeg() - ldeg(); }
    RElem hc() const;
    RElem lc() const;
    RElem coeff(std::int64_t d) const;
    int term_count() const { return static_cast<int>(terms_.size()); }

    struct DegreeData {
        std::int64_t hdeg, ldeg, deg;
        RElem hc, lc;
    };
    DegreeData degree_data() const; // rejects the zero polynomial

    bool doubly_unitary() const; // nonzero with hc and lc units

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator*(const RElem& c) const;
    bool operator==(const LaurentPoly& o) const;
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly shift(std::int64_t k) const;       // multiply by X^k
    LaurentPoly invert_variable() const;           // X -> X^-1
    // shift(f, -ldeg(f)) together with the applied shift amount -ldeg(f)
    std::pair<LaurentPoly, std::int64_t> to_ordinary() const;

    // coefficient-wise ring map application
    LaurentPoly map_coeffs(const RingPtr& dst, const std::function<RElem(const RElem&)>& f) const;

    void set_coeff(std::int64_t d, const RElem& c);

    std::string to_text() const;

private:
    RingPtr ring_;
    std::map<std::int64_t, RElem> terms_;
};

// Inverse in R[X,X^-1] if f is a unit there (unit-coefficient monomial up
// to nilpotents, componentwise over product rings).
std::optional<LaurentPoly> laurent_try_inverse(const LaurentPoly& f);

} // namespace laurin

#endif
