#pragma once

#include <vector>

#include "lenspec/lattice.hpp"
#include "lenspec/series.hpp"

namespace lenspec {

// Which sphere the finite rotation group acts on. The standard maximal tori
// of SO(2n) and SO(2n+1) share the weight lattice Z^n, so one shell table
// serves both quotients S^{2n-1}/G and S^{2n}/G.
enum class Geometry { odd_sphere, even_sphere };

/// Laurent polynomial with exact integer coefficients and finite support.
struct LaurentPolynomial {
    long low = 0;
    std::vector<Integer> coeff;  // coeff[i] at exponent low + i

    Integer at(long e) const {
        long i = e - low;
        if (i < 0 || i >= static_cast<long>(coeff.size())) return 0;
        return coeff[static_cast<size_t>(i)];
    }
    long high() const { return low + static_cast<long>(coeff.size()) - 1; }
    void trim();
    bool operator==(const LaurentPolynomial& o) const;
};

/// Sorted eigenvalue/multiplicity list. Each entry remembers the (k, p) label
/// that generated it: eigenvalue (k+p)(k+2n-p) for a p >= 1 form family,
/// k(k+2n-2) for functions on the odd sphere, k(k+2n-1) on the even sphere.
struct SpectrumReport {
    struct Entry {
        long eigenvalue;
        Integer multiplicity;
        long k;
        int p;
    };
    std::vector<Entry> entries;  // strictly increasing eigenvalues
};

long lambda_kp(long k, int p, int n);       // (k+p)(k+2n-p), p >= 1 families
long lambda_function(long k, int n);        // k(k+2n-2), odd-sphere functions
long lambda_even(long k, int n);            // k(k+2n-1)

// Spectral generating function: coefficient of z^k is the multiplicity of
// the k-th Laplace eigenvalue on the quotient. theta / (1-z^2)^(n-1) on the
// odd sphere, theta (1+z) / (1-z^2)^n on the even sphere.
FormalSeries function_gf(const ShellTable& t, Geometry geom = Geometry::odd_sphere);

SpectrumReport function_spectrum(const ShellTable& t, long K,
                                 Geometry geom = Geometry::odd_sphere);

// The Laurent weight A_p^(l)(z) combining the zero-count theta slices into
// the p-form generating function; 1 <= p <= n, 0 <= l <= n.
LaurentPolynomial a_poly(int n, int p, int l);

// F^p(z): coefficient of z^k is the multiplicity of the eigenvalue
// lambda_{k,p+1} in the p-form (and (p+1)-form) spectrum, 0 <= p <= n-1.
// Requires an untwisted table.
FormalSeries fp_gf(const ShellTable& t, int p);

// The p-form spectrum: the lambda_{k,p} family (multiplicities from F^{p-1};
// the single invariant constant for p = 0) merged with the lambda_{k,p+1}
// family from F^p. Entries with zero multiplicity are omitted. Requests with
// n <= p <= 2n-1 are answered by Hodge duality as the (2n-1-p)-form spectrum.
SpectrumReport p_spectrum(const ShellTable& t, int p, long K);

}  // namespace lenspec
