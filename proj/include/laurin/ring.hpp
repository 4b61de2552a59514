#ifndef LAURIN_RING_HPP
#define LAURIN_RING_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "laurin/error.hpp"
#include "laurin/intutil.hpp"

namespace laurin {

// The effective coefficient-ring tower: Q, F_p, Z, Z/n, Z[1/m] and finite
// products of these. Z/1 is the trivial ring and is first-class. Z/n[1/m]
// is realized eagerly as Z/n' with n' the m-coprime part of n; Z[1/m] is
// kept with m squarefree (Z[1/4] = Z[1/2]).
enum class RingKind { Rationals, PrimeField, Integers, IntegersMod, LocalizedIntegers, Product };

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

class RElem;

class Ring : public std::enable_shared_from_this<Ring> {
public:
    RingKind kind;
    Int modulus;  // PrimeField p, IntegersMod n
    Int inverted; // LocalizedIntegers m (squarefree, >= 2)
    RingPtr left, right;

    static RingPtr rationals();
    static RingPtr prime_field(const Int& p);
    static RingPtr integers();
    static RingPtr integers_mod(const Int& n);
    static RingPtr localized_integers(const Int& m);
    // Z/n localized at m, realized as Z/coprime_part(n, m).
    static RingPtr localized_integers_mod(const Int& n, const Int& m);
    static RingPtr product(const RingPtr& a, const RingPtr& b);

    int dim_bound() const;
    bool is_trivial() const;
    bool is_field() const;
    bool is_reduced() const;
    bool zero_dimensional() const { return dim_bound() == 0; }
    std::optional<Int> size() const;

    bool equals(const Ring& other) const;
    bool equals(const RingPtr& other) const { return equals(*other); }

    std::string to_text() const;

    RElem zero() const;
    RElem one() const;
    RElem from_int(const Int& v) const;
    // v/w with w invertible in the ring; rejects otherwise.
    RElem from_rational(const Int& v, const Int& w) const;
    RElem pair(const RElem& a, const RElem& b) const; // Product only

    std::vector<RElem> enumerate() const; // finite rings only

private:
    Ring() = default;
    static RingPtr make(RingKind k);
};

class RElem {
public:
    RingPtr ring;
    Int num;   // Q numerator / residue / integer / Z[1/m] numerator
    Int den;   // Q denominator (> 0); 1 otherwise
    int lpow;  // Z[1/m]: value = num / m^lpow
    std::shared_ptr<const std::pair<RElem, RElem>> comps; // Product

    RElem() : den(1), lpow(0) {}

    bool is_zero() const;
    bool is_one() const;

    RElem operator+(const RElem& o) const;
    RElem operator-(const RElem& o) const;
    RElem operator-() const;
    RElem operator*(const RElem& o) const;
    bool operator==(const RElem& o) const;
    bool operator!=(const RElem& o) const { return !(*this == o); }

    RElem pow(unsigned k) const;

    const RElem& first() const { return comps->first; }
    const RElem& second() const { return comps->second; }

    std::string to_text() const;
};

// unit_test: inverse if r is a unit. In the trivial ring 0 is a unit.
std::optional<RElem> try_inverse(const RElem& r);
bool is_unit(const RElem& r);

// nilpotent_test: r^k = 0 for some k >= 1.
bool is_nilpotent(const RElem& r);

// Smallest k >= 1 with r^k = 0 (r nilpotent).
int nilpotency_index(const RElem& r);

// q with q*b = a, if one exists.
std::optional<RElem> divide_exact(const RElem& a, const RElem& b);

// idempotent_for_principal: e with e^2 = e, <e> = <r>, plus witnesses
// e = alpha*r and r = beta*e. Requires a reduced zero-dimensional ring.
struct IdempotentWitness {
    RElem e, alpha, beta;
};
IdempotentWitness idempotent_for_principal(const RElem& r);

// A ring map together with a section of it (section o map need not be the
// identity; map o section is, on the codomain).
struct RingMap {
    RingPtr src, dst;
    std::function<RElem(const RElem&)> map;
    std::function<RElem(const RElem&)> section;
};

// nilradical_quotient: R -> R/Nil(R).
RingMap nilradical_quotient(const RingPtr& R);

// boundary_quotient: R -> R/I(r), I(r) = <r> + {y : r*y nilpotent}.
RingMap boundary_quotient(const RElem& r);

// localize: invert m. Accepts Integers, IntegersMod, LocalizedIntegers.
RingMap localize(const RingPtr& R, const Int& m);

// split_by_idempotent: R ~ Re x R(1-e).
struct RingSplit {
    RingPtr ring_e, ring_1e;
    std::function<RElem(const RElem&)> proj_e, proj_1e;
    std::function<RElem(const RElem&, const RElem&)> glue;
};
RingSplit split_by_idempotent(const RElem& e);

// Finitely generated ideal with a principal normal form (the tower is a
// product of Bezout rings) and a membership witness for the normal form.
class Ideal {
public:
    Ideal(RingPtr ring, std::vector<RElem> gens);

    const RingPtr& ring() const { return ring_; }
    const std::vector<RElem>& generators() const { return gens_; }
    const RElem& principal() const { return principal_; }
    // principal == sum witness[i] * gens[i] (modulo ring relations).
    const std::vector<RElem>& principal_witness() const { return witness_; }

    bool contains(const RElem& x) const;
    bool is_full() const; // contains 1
    // coefficients c with x = sum c_i * gens_i, if x is a member.
    std::optional<std::vector<RElem>> membership(const RElem& x) const;

private:
    RingPtr ring_;
    std::vector<RElem> gens_;
    RElem principal_;
    std::vector<RElem> witness_;
};

// {y : r*y nilpotent} as an ideal (closed form per tower variant).
Ideal nil_annihilator(const RElem& r);

} // namespace laurin

#endif
