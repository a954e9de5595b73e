#pragma once

#include <gmpxx.h>

#include <cassert>
#include <cstdlib>
#include <vector>

namespace lenspec {

// All counts and series coefficients are arbitrary-precision integers;
// rationals appear only in the harmonic-mass estimates.
using Integer = mpz_class;
using Rational = mpq_class;

// binom(n, k) with the convention binom(n, k) = 0 for k < 0 or k > n.
// A negative upper argument is a caller bug, not a value.
inline Integer binomial(long n, long k) {
    assert(n >= 0);
    if (k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

inline Integer factorial(long n) {
    assert(n >= 0);
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline long gcd_long(long a, long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Reduce x into [0, q-1]. q >= 1.
inline long mod_norm(long x, long q) {
    assert(q >= 1);
    long r = x % q;
    return r < 0 ? r + q : r;
}

// Inverse of a modulo q; requires gcd(a, q) = 1.
inline long mod_inverse(long a, long q) {
    assert(q >= 1);
    a = mod_norm(a, q);
    long old_r = a, r = q;
    long old_t = 1, t = 0;
    while (r != 0) {
        long quot = old_r / r;
        long tmp = old_r - quot * r;
        old_r = r;
        r = tmp;
        tmp = old_t - quot * t;
        old_t = t;
        t = tmp;
    }
    assert(old_r == 1 && "mod_inverse of a non-unit");
    return mod_norm(old_t, q);
}

// The units of Z/q, ascending. For q = 1 this is {0} (the only residue).
inline std::vector<long> unit_residues(long q) {
    if (q == 1) return {0};
    std::vector<long> units;
    for (long t = 1; t < q; ++t)
        if (gcd_long(t, q) == 1) units.push_back(t);
    return units;
}

inline std::vector<long> divisors(long q) {
    std::vector<long> small, large;
    for (long d = 1; d * d <= q; ++d) {
        if (q % d == 0) {
            small.push_back(d);
            if (d != q / d) large.push_back(q / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace lenspec
