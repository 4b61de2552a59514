#ifndef LAURIN_INTUTIL_HPP
#define LAURIN_INTUTIL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <utility>

namespace laurin {

using Int = boost::multiprecision::cpp_int;

inline Int iabs(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int igcd(Int a, Int b) {
    a = iabs(a);
    b = iabs(b);
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

// g = gcd(a,b) >= 0 together with s,t such that s*a + t*b = g.
struct Egcd {
    Int g, s, t;
};

inline Egcd egcd(const Int& a, const Int& b) {
    Int old_r = a, r = b;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
        tmp = old_t - q * t; old_t = t; t = tmp;
    }
    if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
    return {old_r, old_s, old_t};
}

// Floor-mod into [0, n) for n >= 1.
inline Int imod(const Int& a, const Int& n) {
    Int r = a % n;
    if (r < 0) r += n;
    return r;
}

// Inverse of a mod n; requires gcd(a, n) = 1.
inline Int modinv(const Int& a, const Int& n) {
    Egcd e = egcd(imod(a, n), n);
    return imod(e.s, n);
}

// Largest divisor of n coprime to m: repeatedly strip gcd(n, m^inf).
inline Int coprime_part(Int n, const Int& m) {
    n = iabs(n);
    if (n == 0) return 0;
    Int mm = iabs(m);
    while (true) {
        Int g = igcd(n, mm);
        if (g <= 1) return n;
        n /= g;
    }
}

// radical(n): product of distinct prime divisors, by trial division.
// Desk-scale moduli make this adequate.
inline Int radical(Int n) {
    n = iabs(n);
    if (n <= 1) return n;
    Int rad = 1;
    Int p = 2;
    while (p * p <= n) {
        if (n % p == 0) {
            rad *= p;
            while (n % p == 0) n /= p;
        }
        p += (p == 2) ? 1 : 2;
    }
    if (n > 1) rad *= n;
    return rad;
}

// True iff every prime factor of a divides m (units count as smooth).
inline bool smooth_over(const Int& a, const Int& m) {
    return coprime_part(a, m) == 1;
}

// Smallest k >= 0 with a | m^k, for a m-smooth (|a| >= 1).
inline int smooth_power(const Int& a, const Int& m) {
    Int target = iabs(a);
    Int acc = 1;
    int k = 0;
    while (acc % target != 0) {
        acc *= iabs(m);
        ++k;
        if (k > 4096) return -1; // not smooth; caller should have checked
    }
    return k;
}

inline std::string to_string(const Int& a) { return a.str(); }

} // namespace laurin

#endif
