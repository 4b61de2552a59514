#include "laurin/ring.hpp"

#include <algorithm>
#include <sstream>

namespace laurin {

namespace {

bool is_prime(const Int& p) {
    if (p < 2) return false;
    Int d = 2;
    while (d * d <= p) {
        if (p % d == 0) return false;
        d += (d == 2) ? 1 : 2;
    }
    return true;
}

// CRT for coprime moduli a, b: x = u (mod a), x = v (mod b), 0 <= x < ab.
Int crt(const Int& u, const Int& a, const Int& v, const Int& b) {
    if (a == 1) return imod(v, b);
    if (b == 1) return imod(u, a);
    Egcd e = egcd(a, b); // s*a + t*b = 1
    Int x = u * e.t % (a * b) * b % (a * b) + v * e.s % (a * b) * a % (a * b);
    return imod(x, a * b);
}

} // namespace

RingPtr Ring::make(RingKind k) {
    auto r = std::shared_ptr<Ring>(new Ring());
    r->kind = k;
    r->modulus = 0;
    r->inverted = 0;
    return r;
}

RingPtr Ring::rationals() {
    static RingPtr q = make(RingKind::Rationals);
    return q;
}

RingPtr Ring::integers() {
    static RingPtr z = make(RingKind::Integers);
    return z;
}

RingPtr Ring::prime_field(const Int& p) {
    check(is_prime(p), ErrorKind::Parse, "F_p requires a prime, got " + p.str());
    auto r = make(RingKind::PrimeField);
    std::const_pointer_cast<Ring>(r)->modulus = p;
    return r;
}

RingPtr Ring::integers_mod(const Int& n) {
    check(n >= 1, ErrorKind::Parse, "Z/n requires n >= 1, got " + n.str());
    auto r = make(RingKind::IntegersMod);
    std::const_pointer_cast<Ring>(r)->modulus = n;
    return r;
}

RingPtr Ring::localized_integers(const Int& m) {
    check(m >= 1, ErrorKind::Parse, "Z[1/m] requires m >= 1, got " + m.str());
    Int mr = radical(m);
    if (mr == 1) return integers();
    auto r = make(RingKind::LocalizedIntegers);
    std::const_pointer_cast<Ring>(r)->inverted = mr;
    return r;
}

RingPtr Ring::localized_integers_mod(const Int& n, const Int& m) {
    check(n >= 1 && m >= 1, ErrorKind::Parse, "Z/n[1/m] requires n, m >= 1");
    return integers_mod(coprime_part(n, m) == 0 ? Int(1) : coprime_part(n, m));
}

RingPtr Ring::product(const RingPtr& a, const RingPtr& b) {
    auto r = make(RingKind::Product);
    auto w = std::const_pointer_cast<Ring>(r);
    w->left = a;
    w->right = b;
    return r;
}

int Ring::dim_bound() const {
    switch (kind) {
        case RingKind::Rationals:
        case RingKind::PrimeField:
        case RingKind::IntegersMod: return 0;
        case RingKind::Integers:
        case RingKind::LocalizedIntegers: return 1;
        case RingKind::Product: return std::max(left->dim_bound(), right->dim_bound());
    }
    return 0;
}

bool Ring::is_trivial() const {
    switch (kind) {
        case RingKind::IntegersMod: return modulus == 1;
        case RingKind::Product: return left->is_trivial() && right->is_trivial();
        default: return false;
    }
}

bool Ring::is_field() const {
    switch (kind) {
        case RingKind::Rationals:
        case RingKind::PrimeField: return true;
        case RingKind::IntegersMod: return modulus > 1 && is_prime(modulus);
        default: return false;
    }
}

bool Ring::is_reduced() const {
    switch (kind) {
        case RingKind::IntegersMod: return modulus == radical(modulus);
        case RingKind::Product: return left->is_reduced() && right->is_reduced();
        default: return true;
    }
}

std::optional<Int> Ring::size() const {
    switch (kind) {
        case RingKind::PrimeField: return modulus;
        case RingKind::IntegersMod: return modulus;
        case RingKind::Product: {
            auto a = left->size(), b = right->size();
            if (a && b) return *a * *b;
            return std::nullopt;
        }
        default: return std::nullopt;
    }
}

bool Ring::equals(const Ring& o) const {
    if (kind != o.kind) return false;
    switch (kind) {
        case RingKind::Rationals:
        case RingKind::Integers: return true;
        case RingKind::PrimeField:
        case RingKind::IntegersMod: return modulus == o.modulus;
        case RingKind::LocalizedIntegers: return inverted == o.inverted;
        case RingKind::Product: return left->equals(*o.left) && right->equals(*o.right);
    }
    return false;
}

std::string Ring::to_text() const {
    switch (kind) {
        case RingKind::Rationals: return "Q";
        case RingKind::Integers: return "Z";
        case RingKind::PrimeField: return "F_" + modulus.str();
        case RingKind::IntegersMod: return "Z/" + modulus.str();
        case RingKind::LocalizedIntegers: return "Z[1/" + inverted.str() + "]";
        case RingKind::Product: return "(" + left->to_text() + ") x (" + right->to_text() + ")";
    }
    return "?";
}

RElem Ring::zero() const { return from_int(0); }
RElem Ring::one() const { return from_int(1); }

RElem Ring::from_int(const Int& v) const {
    RElem e;
    e.ring = shared_from_this();
    switch (kind) {
        case RingKind::Rationals:
        case RingKind::Integers:
        case RingKind::LocalizedIntegers:
            e.num = v;
            break;
        case RingKind::PrimeField:
        case RingKind::IntegersMod:
            e.num = imod(v, modulus);
            break;
        case RingKind::Product:
            e.comps = std::make_shared<std::pair<RElem, RElem>>(left->from_int(v), right->from_int(v));
            break;
    }
    return e;
}

RElem Ring::from_rational(const Int& v, const Int& w) const {
    check(w != 0, ErrorKind::Parse, "zero denominator");
    if (kind == RingKind::Rationals) {
        RElem e;
        e.ring = shared_from_this();
        Int g = igcd(v, w);
        if (g == 0) g = 1;
        e.num = v / g;
        e.den = w / g;
        if (e.den < 0) { e.den = -e.den; e.num = -e.num; }
        return e;
    }
    RElem denom = from_int(w);
    auto inv = try_inverse(denom);
    check(inv.has_value(), ErrorKind::Parse,
          "denominator " + w.str() + " is not invertible in " + to_text());
    return from_int(v) * *inv;
}

RElem Ring::pair(const RElem& a, const RElem& b) const {
    check(kind == RingKind::Product, ErrorKind::Internal, "pair() on non-product ring");
    check(a.ring->equals(*left) && b.ring->equals(*right), ErrorKind::Internal,
          "pair(): component ring mismatch");
    RElem e;
    e.ring = shared_from_this();
    e.comps = std::make_shared<std::pair<RElem, RElem>>(a, b);
    return e;
}

std::vector<RElem> Ring::enumerate() const {
    auto sz = size();
    check(sz.has_value(), ErrorKind::Internal, "enumerate() needs a finite ring");
    std::vector<RElem> out;
    if (kind == RingKind::Product) {
        for (const auto& a : left->enumerate())
            for (const auto& b : right->enumerate())
                out.push_back(pair(a, b));
        return out;
    }
    for (Int i = 0; i < *sz; ++i) out.push_back(from_int(i));
    return out;
}

// ---------------------------------------------------------------------------
// RElem

namespace {

void require_same_ring(const RElem& a, const RElem& b) {
    check(a.ring && b.ring && a.ring->equals(*b.ring), ErrorKind::Precondition,
          "ring mismatch in element arithmetic");
}

RElem normalize_localized(const RingPtr& ring, Int z, int k) {
    const Int& m = ring->inverted;
    if (z == 0) k = 0;
    while (k > 0 && z % m == 0) {
        z /= m;
        --k;
    }
    RElem e;
    e.ring = ring;
    e.num = z;
    e.lpow = k;
    return e;
}

} // namespace

bool RElem::is_zero() const {
    switch (ring->kind) {
        case RingKind::Product: return first().is_zero() && second().is_zero();
        default: return num == 0;
    }
}

bool RElem::is_one() const { return *this == ring->one(); }

RElem RElem::operator+(const RElem& o) const {
    require_same_ring(*this, o);
    RElem e;
    e.ring = ring;
    switch (ring->kind) {
        case RingKind::Rationals:
            return ring->from_rational(num * o.den + o.num * den, den * o.den);
        case RingKind::Integers:
            e.num = num + o.num;
            return e;
        case RingKind::PrimeField:
        case RingKind::IntegersMod:
            e.num = imod(num + o.num, ring->modulus);
            return e;
        case RingKind::LocalizedIntegers: {
            int k = std::max(lpow, o.lpow);
            Int m = ring->inverted;
            Int za = num, zb = o.num;
            for (int i = lpow; i < k; ++i) za *= m;
            for (int i = o.lpow; i < k; ++i) zb *= m;
            return normalize_localized(ring, za + zb, k);
        }
        case RingKind::Product:
            return ring->pair(first() + o.first(), second() + o.second());
    }
    return e;
}

RElem RElem::operator-() const {
    RElem e;
    e.ring = ring;
    switch (ring->kind) {
        case RingKind::Rationals:
            e.num = -num;
            e.den = den;
            return e;
        case RingKind::Integers:
            e.num = -num;
            return e;
        case RingKind::PrimeField:
        case RingKind::IntegersMod:
            e.num = imod(-num, ring->modulus);
            return e;
        case RingKind::LocalizedIntegers:
            e.num = -num;
            e.lpow = lpow;
            return e;
        case RingKind::Product:
            return ring->pair(-first(), -second());
    }
    return e;
}

RElem RElem::operator-(const RElem& o) const { return *this + (-o); }

RElem RElem::operator*(const RElem& o) const {
    require_same_ring(*this, o);
    RElem e;
    e.ring = ring;
    switch (ring->kind) {
        case RingKind::Rationals:
            return ring->from_rational(num * o.num, den * o.den);
        case RingKind::Integers:
            e.num = num * o.num;
            return e;
        case RingKind::PrimeField:
        case RingKind::IntegersMod:
            e.num = imod(num * o.num, ring->modulus);
            return e;
        case RingKind::LocalizedIntegers:
            return normalize_localized(ring, num * o.num, lpow + o.lpow);
        case RingKind::Product:
            return ring->pair(first() * o.first(), second() * o.second());
    }
    return e;
}

bool RElem::operator==(const RElem& o) const {
    require_same_ring(*this, o);
    switch (ring->kind) {
        case RingKind::Rationals: return num == o.num && den == o.den;
        case RingKind::LocalizedIntegers: return num == o.num && lpow == o.lpow;
        case RingKind::Product: return first() == o.first() && second() == o.second();
        default: return num == o.num;
    }
}

RElem RElem::pow(unsigned k) const {
    RElem acc = ring->one();
    RElem base = *this;
    while (k > 0) {
        if (k & 1u) acc = acc * base;
        base = base * base;
        k >>= 1u;
    }
    return acc;
}

std::string RElem::to_text() const {
    switch (ring->kind) {
        case RingKind::Rationals:
            return den == 1 ? num.str() : num.str() + "/" + den.str();
        case RingKind::LocalizedIntegers: {
            if (lpow == 0) return num.str();
            Int d = 1;
            for (int i = 0; i < lpow; ++i) d *= ring->inverted;
            return num.str() + "/" + d.str();
        }
        case RingKind::Product:
            return "(" + first().to_text() + ", " + second().to_text() + ")";
        default:
            return num.str();
    }
}

// ---------------------------------------------------------------------------
// Units, nilpotents, exact division

std::optional<RElem> try_inverse(const RElem& r) {
    const RingPtr& R = r.ring;
    switch (R->kind) {
        case RingKind::Rationals:
            if (r.num == 0) return std::nullopt;
            return R->from_rational(r.den, r.num);
        case RingKind::PrimeField:
        case RingKind::IntegersMod: {
            if (R->modulus == 1) return R->zero(); // trivial ring: 0 = 1
            if (igcd(r.num, R->modulus) != 1) return std::nullopt;
            return R->from_int(modinv(r.num, R->modulus));
        }
        case RingKind::Integers:
            if (r.num == 1 || r.num == -1) return r;
            return std::nullopt;
        case RingKind::LocalizedIntegers: {
            if (r.num == 0) return std::nullopt;
            const Int& m = R->inverted;
            if (!smooth_over(r.num, m)) return std::nullopt;
            int t = smooth_power(r.num, m);
            check(t >= 0, ErrorKind::Internal, "smooth_power failed");
            // 1/(z/m^k) = m^k * (m^t/z) / m^t
            Int mt = 1;
            for (int i = 0; i < t; ++i) mt *= m;
            Int w = mt / r.num;
            Int zk = w;
            for (int i = 0; i < r.lpow; ++i) zk *= m;
            return normalize_localized(R, zk, t);
        }
        case RingKind::Product: {
            auto a = try_inverse(r.first());
            auto b = try_inverse(r.second());
            if (!a || !b) return std::nullopt;
            return R->pair(*a, *b);
        }
    }
    return std::nullopt;
}

bool is_unit(const RElem& r) { return try_inverse(r).has_value(); }

bool is_nilpotent(const RElem& r) {
    const RingPtr& R = r.ring;
    switch (R->kind) {
        case RingKind::Rationals:
        case RingKind::Integers:
            return r.num == 0;
        case RingKind::PrimeField:
            return R->modulus == 0 ? false : r.num == 0;
        case RingKind::IntegersMod:
            return imod(r.num, radical(R->modulus)) == 0;
        case RingKind::LocalizedIntegers:
            return r.num == 0;
        case RingKind::Product:
            return is_nilpotent(r.first()) && is_nilpotent(r.second());
    }
    return false;
}

int nilpotency_index(const RElem& r) {
    check(is_nilpotent(r), ErrorKind::Internal, "nilpotency_index of non-nilpotent");
    RElem acc = r;
    int k = 1;
    while (!acc.is_zero()) {
        acc = acc * r;
        ++k;
        check(k <= 512, ErrorKind::Internal, "nilpotency index out of range");
    }
    return k;
}

std::optional<RElem> divide_exact(const RElem& a, const RElem& b) {
    const RingPtr& R = a.ring;
    require_same_ring(a, b);
    switch (R->kind) {
        case RingKind::Rationals: {
            if (b.num == 0) return a.num == 0 ? std::optional<RElem>(R->zero()) : std::nullopt;
            return a * *try_inverse(b);
        }
        case RingKind::Integers: {
            if (b.num == 0) return a.num == 0 ? std::optional<RElem>(R->zero()) : std::nullopt;
            if (a.num % b.num != 0) return std::nullopt;
            return R->from_int(a.num / b.num);
        }
        case RingKind::PrimeField:
        case RingKind::IntegersMod: {
            const Int& n = R->modulus;
            if (n == 1) return R->zero();
            Int d = igcd(b.num, n);
            if (d == 0) return a.num == 0 ? std::optional<RElem>(R->zero()) : std::nullopt;
            if (a.num % d != 0) return std::nullopt;
            Int q = imod(a.num / d * modinv(b.num / d, n / d), n / d);
            return R->from_int(q);
        }
        case RingKind::LocalizedIntegers: {
            if (b.num == 0) return a.num == 0 ? std::optional<RElem>(R->zero()) : std::nullopt;
            Int zb = coprime_part(b.num, R->inverted);
            if (zb < 0) zb = -zb;
            if (a.num % zb != 0) return std::nullopt;
            RElem unit_part = normalize_localized(R, b.num / zb, b.lpow);
            auto inv = try_inverse(unit_part);
            check(inv.has_value(), ErrorKind::Internal, "unit part not invertible");
            return normalize_localized(R, a.num / zb, a.lpow) * *inv;
        }
        case RingKind::Product: {
            auto x = divide_exact(a.first(), b.first());
            auto y = divide_exact(a.second(), b.second());
            if (!x || !y) return std::nullopt;
            return R->pair(*x, *y);
        }
    }
    return std::nullopt;
}

IdempotentWitness idempotent_for_principal(const RElem& r) {
    const RingPtr& R = r.ring;
    check(R->zero_dimensional(), ErrorKind::Precondition,
          "idempotent_for_principal requires a zero-dimensional ring, got " + R->to_text());
    check(R->is_reduced(), ErrorKind::Precondition,
          "idempotent_for_principal requires a reduced ring, got " + R->to_text());
    switch (R->kind) {
        case RingKind::Rationals:
        case RingKind::PrimeField: {
            if (r.is_zero()) return {R->zero(), R->zero(), R->zero()};
            return {R->one(), *try_inverse(r), r};
        }
        case RingKind::IntegersMod: {
            const Int& n = R->modulus;
            if (n == 1) return {R->zero(), R->zero(), R->zero()};
            Int g = igcd(r.num, n);
            if (g == 0) return {R->zero(), R->zero(), R->zero()};
            Int h = n / g;
            Int e = crt(0, g, 1, h);
            Int alpha = (h == 1) ? Int(0) : crt(0, g, modinv(imod(r.num, h), h), h);
            return {R->from_int(e), R->from_int(alpha), r};
        }
        case RingKind::Product: {
            auto a = idempotent_for_principal(r.first());
            auto b = idempotent_for_principal(r.second());
            return {R->pair(a.e, b.e), R->pair(a.alpha, b.alpha), R->pair(a.beta, b.beta)};
        }
        default:
            precondition_error("idempotent_for_principal: unsupported ring " + R->to_text());
    }
}

// ---------------------------------------------------------------------------
// Quotients, localization, splitting

namespace {

RingMap identity_map(const RingPtr& R) {
    return {R, R, [](const RElem& x) { return x; }, [](const RElem& x) { return x; }};
}

RingMap trivial_quotient(const RingPtr& R) {
    RingPtr T = Ring::integers_mod(1);
    return {R, T,
            [T](const RElem&) { return T->zero(); },
            [R](const RElem&) { return R->zero(); }};
}

// Residue map Z-like ring -> Z/n ring for IntegersMod-to-IntegersMod style
// projections where the section is the canonical representative embedding.
RingMap residue_map(const RingPtr& src, const Int& n) {
    RingPtr dst = Ring::integers_mod(n);
    return {src, dst,
            [dst](const RElem& x) { return dst->from_int(x.num); },
            [src](const RElem& x) { return src->from_int(x.num); }};
}

} // namespace

RingMap nilradical_quotient(const RingPtr& R) {
    switch (R->kind) {
        case RingKind::IntegersMod: {
            Int rad = radical(R->modulus);
            if (rad == R->modulus) return identity_map(R);
            return residue_map(R, rad);
        }
        case RingKind::Product: {
            RingMap a = nilradical_quotient(R->left);
            RingMap b = nilradical_quotient(R->right);
            RingPtr dst = Ring::product(a.dst, b.dst);
            return {R, dst,
                    [dst, a, b](const RElem& x) { return dst->pair(a.map(x.first()), b.map(x.second())); },
                    [R, a, b](const RElem& x) { return R->pair(a.section(x.first()), b.section(x.second())); }};
        }
        default:
            return identity_map(R);
    }
}

RingMap boundary_quotient(const RElem& r) {
    const RingPtr& R = r.ring;
    switch (R->kind) {
        case RingKind::Rationals:
        case RingKind::PrimeField:
            return trivial_quotient(R);
        case RingKind::IntegersMod: {
            const Int& n = R->modulus;
            if (n == 1) return trivial_quotient(R);
            Int rad = radical(n);
            Int annrad = rad / igcd(rad, r.num);
            Int g = igcd(igcd(r.num, annrad), n);
            if (g == 1) return trivial_quotient(R);
            return residue_map(R, g);
        }
        case RingKind::Integers: {
            if (r.num == 0) return trivial_quotient(R);
            Int a = iabs(r.num);
            if (a == 1) return trivial_quotient(R);
            return residue_map(R, a);
        }
        case RingKind::LocalizedIntegers: {
            if (r.num == 0) return trivial_quotient(R);
            Int zp = coprime_part(r.num, R->inverted);
            if (zp == 1) return trivial_quotient(R);
            RingPtr dst = Ring::integers_mod(zp);
            Int minv = modinv(imod(R->inverted, zp), zp);
            return {R, dst,
                    [dst, zp, minv](const RElem& x) {
                        Int v = imod(x.num, zp);
                        for (int i = 0; i < x.lpow; ++i) v = imod(v * minv, zp);
                        return dst->from_int(v);
                    },
                    [R](const RElem& x) { return R->from_int(x.num); }};
        }
        case RingKind::Product: {
            RingMap a = boundary_quotient(r.first());
            RingMap b = boundary_quotient(r.second());
            if (a.dst->is_trivial() && b.dst->is_trivial()) return trivial_quotient(R);
            if (a.dst->is_trivial()) {
                RingMap out{R, b.dst,
                            [b](const RElem& x) { return b.map(x.second()); },
                            [R, a, b](const RElem& x) {
                                return R->pair(a.section(a.dst->zero()), b.section(x));
                            }};
                return out;
            }
            if (b.dst->is_trivial()) {
                RingMap out{R, a.dst,
                            [a](const RElem& x) { return a.map(x.first()); },
                            [R, a, b](const RElem& x) {
                                return R->pair(a.section(x), b.section(b.dst->zero()));
                            }};
                return out;
            }
            RingPtr dst = Ring::product(a.dst, b.dst);
            return {R, dst,
                    [dst, a, b](const RElem& x) { return dst->pair(a.map(x.first()), b.map(x.second())); },
                    [R, a, b](const RElem& x) { return R->pair(a.section(x.first()), b.section(x.second())); }};
        }
    }
    internal_error("boundary_quotient: unhandled ring kind");
}

RingMap localize(const RingPtr& R, const Int& m) {
    check(m >= 1, ErrorKind::Precondition, "localize requires m >= 1");
    switch (R->kind) {
        case RingKind::Integers: {
            RingPtr dst = Ring::localized_integers(m);
            if (dst->kind == RingKind::Integers) return identity_map(R);
            return {R, dst,
                    [dst](const RElem& x) { return dst->from_int(x.num); },
                    [R](const RElem& x) {
                        check(x.lpow == 0, ErrorKind::Internal, "section of fractional element");
                        return R->from_int(x.num);
                    }};
        }
        case RingKind::IntegersMod: {
            Int n1 = coprime_part(R->modulus, m);
            if (n1 == R->modulus) return identity_map(R);
            return residue_map(R, n1);
        }
        case RingKind::LocalizedIntegers: {
            RingPtr dst = Ring::localized_integers(R->inverted * m);
            if (dst->equals(*R)) return identity_map(R);
            return {R, dst,
                    [dst, R](const RElem& x) {
                        RElem y = dst->from_int(x.num);
                        RElem mm = dst->from_int(R->inverted);
                        RElem inv = *try_inverse(mm);
                        for (int i = 0; i < x.lpow; ++i) y = y * inv;
                        return y;
                    },
                    [R](const RElem& x) {
                        // partial section: defined on images of the map
                        check(x.lpow == 0 || smooth_over(x.num, R->inverted), ErrorKind::Internal,
                              "section of element outside the image");
                        return normalize_localized(R, x.num, x.lpow);
                    }};
        }
        default:
            precondition_error("localize: unsupported ring " + R->to_text());
    }
}

RingSplit split_by_idempotent(const RElem& e) {
    const RingPtr& R = e.ring;
    check(e * e == e, ErrorKind::Precondition, "split_by_idempotent: element is not idempotent");
    switch (R->kind) {
        case RingKind::Rationals:
        case RingKind::PrimeField:
        case RingKind::Integers:
        case RingKind::LocalizedIntegers: {
            // domains: e is 0 or 1
            RingPtr T = Ring::integers_mod(1);
            if (e.is_one()) {
                return {R, T,
                        [](const RElem& x) { return x; },
                        [T](const RElem&) { return T->zero(); },
                        [](const RElem& x, const RElem&) { return x; }};
            }
            return {T, R,
                    [T](const RElem&) { return T->zero(); },
                    [](const RElem& x) { return x; },
                    [](const RElem&, const RElem& y) { return y; }};
        }
        case RingKind::IntegersMod: {
            const Int& n = R->modulus;
            Int ne = (n == 1) ? Int(1) : n / igcd(n, e.num);
            Int n1e = (n == 1) ? Int(1) : n / igcd(n, imod(1 - e.num, n));
            RingPtr A = Ring::integers_mod(ne), B = Ring::integers_mod(n1e);
            return {A, B,
                    [A](const RElem& x) { return A->from_int(x.num); },
                    [B](const RElem& x) { return B->from_int(x.num); },
                    [R, ne, n1e](const RElem& u, const RElem& v) {
                        return R->from_int(crt(u.num, ne, v.num, n1e));
                    }};
        }
        case RingKind::Product: {
            RingSplit a = split_by_idempotent(e.first());
            RingSplit b = split_by_idempotent(e.second());
            RingPtr A = Ring::product(a.ring_e, b.ring_e);
            RingPtr B = Ring::product(a.ring_1e, b.ring_1e);
            return {A, B,
                    [A, a, b](const RElem& x) { return A->pair(a.proj_e(x.first()), b.proj_e(x.second())); },
                    [B, a, b](const RElem& x) { return B->pair(a.proj_1e(x.first()), b.proj_1e(x.second())); },
                    [R, a, b](const RElem& u, const RElem& v) {
                        return R->pair(a.glue(u.first(), v.first()), b.glue(u.second(), v.second()));
                    }};
        }
    }
    internal_error("split_by_idempotent: unhandled ring kind");
}

// ---------------------------------------------------------------------------
// Ideals

Ideal::Ideal(RingPtr ring, std::vector<RElem> gens) : ring_(std::move(ring)), gens_(std::move(gens)) {
    for (const auto& g : gens_)
        check(g.ring->equals(*ring_), ErrorKind::Precondition, "ideal generator ring mismatch");
    const size_t k = gens_.size();
    witness_.assign(k, ring_->zero());

    switch (ring_->kind) {
        case RingKind::Rationals:
        case RingKind::PrimeField: {
            principal_ = ring_->zero();
            for (size_t i = 0; i < k; ++i) {
                if (!gens_[i].is_zero()) {
                    principal_ = ring_->one();
                    witness_[i] = *try_inverse(gens_[i]);
                    break;
                }
            }
            break;
        }
        case RingKind::Integers: {
            Int g = 0;
            std::vector<Int> c(k, 0);
            for (size_t i = 0; i < k; ++i) {
                Egcd e = egcd(g, gens_[i].num);
                for (size_t j = 0; j < i; ++j) c[j] *= e.s;
                c[i] = e.t;
                g = e.g;
            }
            principal_ = ring_->from_int(g);
            for (size_t i = 0; i < k; ++i) witness_[i] = ring_->from_int(c[i]);
            break;
        }
        case RingKind::IntegersMod: {
            const Int& n = ring_->modulus;
            if (n == 1) {
                principal_ = ring_->zero();
                break;
            }
            Int g = n; // modulus participates silently
            std::vector<Int> c(k, 0);
            for (size_t i = 0; i < k; ++i) {
                Egcd e = egcd(g, gens_[i].num);
                for (size_t j = 0; j < i; ++j) c[j] = imod(c[j] * e.s, n);
                c[i] = imod(e.t, n);
                g = e.g;
            }
            principal_ = ring_->from_int(g);
            for (size_t i = 0; i < k; ++i) witness_[i] = ring_->from_int(c[i]);
            break;
        }
        case RingKind::LocalizedIntegers: {
            Int g = 0;
            std::vector<Int> c(k, 0);
            for (size_t i = 0; i < k; ++i) {
                Egcd e = egcd(g, gens_[i].num);
                for (size_t j = 0; j < i; ++j) c[j] *= e.s;
                c[i] = e.t;
                g = e.g;
            }
            // strip the m-part of g: it is a unit
            Int gp = coprime_part(g, ring_->inverted);
            if (g != 0) {
                RElem unit_part = normalize_localized(ring_, g / gp, 0);
                RElem uinv = *try_inverse(unit_part);
                principal_ = ring_->from_int(gp);
                for (size_t i = 0; i < k; ++i) {
                    // c_i pairs with gens_[i].num = gens_[i] * m^lpow
                    Int mp = 1;
                    for (int t = 0; t < gens_[i].lpow; ++t) mp *= ring_->inverted;
                    witness_[i] = ring_->from_int(c[i] * mp) * uinv;
                }
            } else {
                principal_ = ring_->zero();
            }
            break;
        }
        case RingKind::Product: {
            std::vector<RElem> lg, rg;
            lg.reserve(k); rg.reserve(k);
            for (const auto& g : gens_) { lg.push_back(g.first()); rg.push_back(g.second()); }
            Ideal li(ring_->left, lg), ri(ring_->right, rg);
            principal_ = ring_->pair(li.principal(), ri.principal());
            for (size_t i = 0; i < k; ++i)
                witness_[i] = ring_->pair(li.principal_witness()[i], ri.principal_witness()[i]);
            break;
        }
    }
}

bool Ideal::contains(const RElem& x) const { return membership(x).has_value(); }

bool Ideal::is_full() const { return contains(ring_->one()); }

std::optional<std::vector<RElem>> Ideal::membership(const RElem& x) const {
    if (ring_->is_trivial()) return std::vector<RElem>(gens_.size(), ring_->zero());
    if (ring_->kind == RingKind::Product) {
        std::vector<RElem> lg, rg;
        for (const auto& g : gens_) { lg.push_back(g.first()); rg.push_back(g.second()); }
        Ideal li(ring_->left, lg), ri(ring_->right, rg);
        auto a = li.membership(x.first());
        auto b = ri.membership(x.second());
        if (!a || !b) return std::nullopt;
        std::vector<RElem> out;
        for (size_t i = 0; i < gens_.size(); ++i) out.push_back(ring_->pair((*a)[i], (*b)[i]));
        return out;
    }
    auto q = divide_exact(x, principal_);
    if (!q) return std::nullopt;
    std::vector<RElem> out;
    out.reserve(gens_.size());
    for (const auto& w : witness_) out.push_back(*q * w);
    return out;
}

Ideal nil_annihilator(const RElem& r) {
    const RingPtr& R = r.ring;
    switch (R->kind) {
        case RingKind::Rationals:
        case RingKind::PrimeField:
        case RingKind::Integers:
        case RingKind::LocalizedIntegers: {
            if (r.is_zero()) return Ideal(R, {R->one()});
            return Ideal(R, {R->zero()});
        }
        case RingKind::IntegersMod: {
            const Int& n = R->modulus;
            if (n == 1) return Ideal(R, {R->one()});
            Int rad = radical(n);
            Int g0 = rad / igcd(rad, r.num);
            return Ideal(R, {R->from_int(g0)});
        }
        case RingKind::Product: {
            Ideal a = nil_annihilator(r.first());
            Ideal b = nil_annihilator(r.second());
            return Ideal(R, {R->pair(a.principal(), b.principal())});
        }
    }
    internal_error("nil_annihilator: unhandled ring kind");
}

} // namespace laurin
