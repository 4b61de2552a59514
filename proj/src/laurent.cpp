#include "laurin/laurent.hpp"

#include <sstream>

namespace laurin {

namespace {

void check_degree(std::int64_t d) {
    if (d > kDegreeWindow || d < -kDegreeWindow)
        budget_error("degree " + std::to_string(d) + " exceeds the +/-2^16 window");
}

bool coeff_negative(const RElem& c) {
    switch (c.ring->kind) {
        case RingKind::Rationals:
        case RingKind::Integers:
        case RingKind::LocalizedIntegers: return c.num < 0;
        default: return false;
    }
}

} // namespace

LaurentPoly LaurentPoly::constant(const RElem& c) {
    LaurentPoly f(c.ring);
    f.set_coeff(0, c);
    return f;
}

LaurentPoly LaurentPoly::monomial(const RElem& c, std::int64_t e) {
    check_degree(e);
    LaurentPoly f(c.ring);
    f.set_coeff(e, c);
    return f;
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

RElem LaurentPoly::constant_value() const {
    check(is_constant(), ErrorKind::Internal, "constant_value() of non-constant polynomial");
    return coeff(0);
}

std::int64_t LaurentPoly::hdeg() const {
    check(!is_zero(), ErrorKind::Precondition, "degree data of the zero polynomial is undefined");
    return terms_.rbegin()->first;
}

std::int64_t LaurentPoly::ldeg() const {
    check(!is_zero(), ErrorKind::Precondition, "degree data of the zero polynomial is undefined");
    return terms_.begin()->first;
}

RElem LaurentPoly::hc() const {
    check(!is_zero(), ErrorKind::Precondition, "degree data of the zero polynomial is undefined");
    return terms_.rbegin()->second;
}

RElem LaurentPoly::lc() const {
    check(!is_zero(), ErrorKind::Precondition, "degree data of the zero polynomial is undefined");
    return terms_.begin()->second;
}

RElem LaurentPoly::coeff(std::int64_t d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? ring_->zero() : it->second;
}

LaurentPoly::DegreeData LaurentPoly::degree_data() const {
    check(!is_zero(), ErrorKind::Precondition, "degree data of the zero polynomial is undefined");
    return {hdeg(), ldeg(), deg(), hc(), lc()};
}

bool LaurentPoly::doubly_unitary() const {
    return !is_zero() && is_unit(hc()) && is_unit(lc());
}

void LaurentPoly::set_coeff(std::int64_t d, const RElem& c) {
    check_degree(d);
    check(c.ring->equals(*ring_), ErrorKind::Precondition, "coefficient ring mismatch");
    if (c.is_zero())
        terms_.erase(d);
    else
        terms_[d] = c;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    check(ring_->equals(*o.ring_), ErrorKind::Precondition, "polynomial ring mismatch");
    LaurentPoly out = *this;
    for (const auto& [d, c] : o.terms_) out.set_coeff(d, out.coeff(d) + c);
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out(ring_);
    for (const auto& [d, c] : terms_) out.set_coeff(d, -c);
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    check(ring_->equals(*o.ring_), ErrorKind::Precondition, "polynomial ring mismatch");
    LaurentPoly out(ring_);
    for (const auto& [d1, c1] : terms_)
        for (const auto& [d2, c2] : o.terms_) {
            std::int64_t d = d1 + d2;
            check_degree(d);
            out.set_coeff(d, out.coeff(d) + c1 * c2);
        }
    return out;
}

LaurentPoly LaurentPoly::operator*(const RElem& c) const {
    LaurentPoly out(ring_);
    for (const auto& [d, cd] : terms_) out.set_coeff(d, cd * c);
    return out;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    if (!ring_->equals(*o.ring_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
        if (it->first != jt->first || !(it->second == jt->second)) return false;
    return true;
}

LaurentPoly LaurentPoly::shift(std::int64_t k) const {
    LaurentPoly out(ring_);
    for (const auto& [d, c] : terms_) {
        check_degree(d + k);
        out.set_coeff(d + k, c);
    }
    return out;
}

LaurentPoly LaurentPoly::invert_variable() const {
    LaurentPoly out(ring_);
    for (const auto& [d, c] : terms_) out.set_coeff(-d, c);
    return out;
}

std::pair<LaurentPoly, std::int64_t> LaurentPoly::to_ordinary() const {
    check(!is_zero(), ErrorKind::Precondition, "to_ordinary of the zero polynomial");
    std::int64_t k = -ldeg();
    return {shift(k), k};
}

LaurentPoly LaurentPoly::map_coeffs(const RingPtr& dst,
                                    const std::function<RElem(const RElem&)>& f) const {
    LaurentPoly out(dst);
    for (const auto& [d, c] : terms_) out.set_coeff(d, f(c));
    return out;
}

std::string LaurentPoly::to_text() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        bool neg = coeff_negative(c);
        RElem mag = neg ? -c : c;
        std::string cs = mag.to_text();
        std::string body;
        if (e == 0) {
            body = cs;
        } else {
            body = (cs == "1") ? "" : cs + "*";
            body += "X";
            if (e != 1) body += "^" + std::to_string(e);
        }
        if (first) {
            os << (neg ? "-" : "") << body;
            first = false;
        } else {
            os << (neg ? " - " : " + ") << body;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------

namespace {

bool is_prime_local(const Int& p) {
    if (p < 2) return false;
    Int d = 2;
    while (d * d <= p) {
        if (p % d == 0) return false;
        d += (d == 2) ? 1 : 2;
    }
    return true;
}

// Inverse over a reduced coefficient ring: per-domain the unit must be a
// monomial with unit coefficient; over Z/squarefree glue the prime
// components with CRT; over products recurse componentwise.
std::optional<LaurentPoly> reduced_inverse(const LaurentPoly& f) {
    const RingPtr& R = f.ring();
    if (R->is_trivial()) return LaurentPoly::zero(R); // 0 = 1 there
    if (f.is_zero()) return std::nullopt;
    switch (R->kind) {
        case RingKind::Rationals:
        case RingKind::PrimeField:
        case RingKind::Integers:
        case RingKind::LocalizedIntegers: {
            if (f.term_count() != 1) return std::nullopt;
            auto inv = try_inverse(f.hc());
            if (!inv) return std::nullopt;
            return LaurentPoly::monomial(*inv, -f.hdeg());
        }
        case RingKind::IntegersMod: {
            const Int& n = R->modulus;
            if (is_prime_local(n) || n == 1) {
                if (f.term_count() != 1) return std::nullopt;
                auto inv = try_inverse(f.hc());
                if (!inv) return std::nullopt;
                return LaurentPoly::monomial(*inv, -f.hdeg());
            }
            // factor the squarefree modulus and glue componentwise inverses
            Int rest = n;
            Int p = 2;
            LaurentPoly acc = LaurentPoly::zero(R);
            Int done = 1;
            auto absorb = [&](const Int& prime) -> bool {
                RingPtr Fp = Ring::integers_mod(prime);
                LaurentPoly fp = f.map_coeffs(Fp, [&](const RElem& c) { return Fp->from_int(c.num); });
                auto ip = reduced_inverse(fp);
                if (!ip) return false;
                // CRT-merge acc (mod done) with *ip (mod prime)
                RingPtr merged = Ring::integers_mod(done * prime);
                LaurentPoly out = LaurentPoly::zero(merged);
                Egcd e = egcd(done, prime);
                for (const auto& [d, c] : acc.terms()) {
                    Int v = imod(c.num * e.t % (done * prime) * prime, done * prime);
                    out.set_coeff(d, merged->from_int(out.coeff(d).num + v));
                }
                for (const auto& [d, c] : ip->terms()) {
                    Int v = imod(c.num * e.s % (done * prime) * done, done * prime);
                    out.set_coeff(d, merged->from_int(out.coeff(d).num + v));
                }
                acc = out;
                done *= prime;
                return true;
            };
            while (p * p <= rest) {
                if (rest % p == 0) {
                    if (!absorb(p)) return std::nullopt;
                    rest /= p;
                }
                p += (p == 2) ? 1 : 2;
            }
            if (rest > 1 && !absorb(rest)) return std::nullopt;
            return acc.map_coeffs(R, [&](const RElem& c) { return R->from_int(c.num); });
        }
        case RingKind::Product: {
            LaurentPoly f1 = f.map_coeffs(R->left, [](const RElem& c) { return c.first(); });
            LaurentPoly f2 = f.map_coeffs(R->right, [](const RElem& c) { return c.second(); });
            auto i1 = reduced_inverse(f1);
            auto i2 = reduced_inverse(f2);
            if (!i1 || !i2) return std::nullopt;
            LaurentPoly out = LaurentPoly::zero(R);
            for (const auto& [d, c] : i1->terms())
                out.set_coeff(d, R->pair(c, i2->coeff(d)));
            for (const auto& [d, c] : i2->terms())
                if (i1->coeff(d).is_zero()) out.set_coeff(d, R->pair(R->left->zero(), c));
            return out;
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<LaurentPoly> laurent_try_inverse(const LaurentPoly& f) {
    const RingPtr& R = f.ring();
    LaurentPoly one = LaurentPoly::one(R);
    std::optional<LaurentPoly> g;
    if (R->is_reduced()) {
        g = reduced_inverse(f);
    } else {
        RingMap q = nilradical_quotient(R);
        LaurentPoly fbar = f.map_coeffs(q.dst, q.map);
        auto gbar = reduced_inverse(fbar);
        if (!gbar) return std::nullopt;
        LaurentPoly g0 = gbar->map_coeffs(R, q.section);
        // f*g0 = 1 - e with nilpotent-coefficient e; finish by Neumann series
        LaurentPoly e = one - f * g0;
        LaurentPoly series = one;
        LaurentPoly epow = e;
        int guard = 0;
        while (!epow.is_zero()) {
            series = series + epow;
            epow = epow * e;
            check(++guard <= 512, ErrorKind::Internal, "Neumann series did not terminate");
        }
        g = g0 * series;
    }
    if (!g) return std::nullopt;
    if (!(f * *g == one)) return std::nullopt;
    return g;
}

} // namespace laurin
