#pragma once

// Exact scalars for a p-adic field realized inside Q.  The uniformizer is the
// rational number p itself, so every field element that the engine ever
// touches is a rational whose denominator is a power of p.  Working in Q keeps
// all arithmetic exact; valuations, unit parts and residues are derived on
// demand.

#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <stdexcept>
#include <string>

namespace sp4hecke {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Valuation assigned to 0; large enough that min/plus arithmetic on real
// valuations never reaches it.
inline constexpr long kInfiniteValuation = std::numeric_limits<long>::max() / 4;

inline Int int_pow(Int base, unsigned long exp) {
    Int result = 1;
    while (exp > 0) {
        if (exp & 1) result *= base;
        base *= base;
        exp >>= 1;
    }
    return result;
}

// p^k as an exact rational, k may be negative.
inline Rat rat_p_pow(long p, long k) {
    if (k >= 0) return Rat(int_pow(Int(p), static_cast<unsigned long>(k)));
    return Rat(Int(1), int_pow(Int(p), static_cast<unsigned long>(-k)));
}

// r^k for rational r, k may be negative (then r must be nonzero).
inline Rat rat_pow(const Rat& r, long k) {
    if (k < 0) {
        if (r == 0) throw std::domain_error("rat_pow: negative power of zero");
        return rat_pow(1 / r, -k);
    }
    Rat num(int_pow(boost::multiprecision::numerator(r),
                    static_cast<unsigned long>(k)));
    Rat den(int_pow(boost::multiprecision::denominator(r),
                    static_cast<unsigned long>(k)));
    return num / den;
}

namespace detail {
// Largest e with p^e | n (n != 0), removing the factor from n.
inline long strip_p(Int& n, long p) {
    long e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    return e;
}
}  // namespace detail

// p-adic valuation of an exact rational; kInfiniteValuation for 0.
inline long valuation(const Rat& r, long p) {
    if (r == 0) return kInfiniteValuation;
    Int num = numerator(r);
    Int den = denominator(r);
    return detail::strip_p(num, p) - detail::strip_p(den, p);
}

// r / p^valuation(r); the unit part of a nonzero scalar.
inline Rat unit_part(const Rat& r, long p) {
    if (r == 0) throw std::domain_error("unit_part: zero has no unit part");
    return r / rat_p_pow(p, valuation(r, p));
}

inline bool is_integral(const Rat& r, long p) { return valuation(r, p) >= 0; }

inline bool is_unit(const Rat& r, long p) { return valuation(r, p) == 0; }

namespace detail {
// Inverse of a mod m for gcd(a, m) = 1, via extended Euclid.
inline Int mod_inverse(Int a, const Int& m) {
    Int r0 = m, r1 = a % m;
    if (r1 < 0) r1 += m;
    Int t0 = 0, t1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1) throw std::domain_error("mod_inverse: argument not invertible");
    if (t0 < 0) t0 += m;
    return t0;
}
}  // namespace detail

// Image of an integral scalar in R/p^e R, represented in [0, p^e).
inline long residue(const Rat& r, long p, unsigned long e = 1) {
    if (valuation(r, p) < 0)
        throw std::domain_error("residue: scalar has negative valuation");
    Int m = int_pow(Int(p), e);
    Int num = numerator(r) % m;
    if (num < 0) num += m;
    Int den = denominator(r) % m;  // coprime to p by p-power-denominator shape
    Int res = (num * detail::mod_inverse(den, m)) % m;
    return static_cast<long>(res);
}

// Legendre symbol (a | p) for odd prime p, in {-1, 0, +1}.
inline int legendre_symbol(long a, long p) {
    long r = a % p;
    if (r < 0) r += p;
    if (r == 0) return 0;
    // Euler's criterion by fast exponentiation mod p.
    long result = 1, base = r, exp = (p - 1) / 2;
    while (exp > 0) {
        if (exp & 1) result = (result * base) % p;
        base = (base * base) % p;
        exp >>= 1;
    }
    return result == 1 ? 1 : -1;
}

// Smallest primitive root mod the odd prime p (p is tiny here; brute force).
inline long primitive_root(long p) {
    auto is_generator = [p](long g) {
        long x = 1;
        for (long k = 1; k < p - 1; ++k) {
            x = (x * g) % p;
            if (x == 1) return false;
        }
        return true;
    };
    for (long g = 2; g < p; ++g)
        if (is_generator(g)) return g;
    throw std::domain_error("primitive_root: no generator found (p="
                            + std::to_string(p) + ")");
}

}  // namespace sp4hecke
