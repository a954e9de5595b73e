#pragma once

#include <vector>

#include "lenspec/lattice.hpp"
#include "lenspec/lens.hpp"
#include "lenspec/series.hpp"

namespace lenspec {

/// Z-basis v_1 = (q, 0, ..., 0), v_j = (-s_j, 0, .., 1, .., 0) of the
/// congruence lattice (after an isometry normalizing s_1 = 1), together with
/// the change-of-basis matrix T with T v_j = e_j. T has determinant 1/q and
/// maps the lattice onto Z^n; it is stored as the integer matrix q*T.
struct LatticeBasis {
    LensParams normalized;                   // isometric parameters with s_1 = 1
    std::vector<std::vector<long>> vectors;  // v_1..v_n, rows
    std::vector<std::vector<long>> qT;       // q * T, rows
    long q = 0;
};

LatticeBasis basis(const LensParams& L);

// Ehrhart series of the dilates of the image of the one-norm unit ball:
// coefficient k is the cumulative lattice-point count sum_{j<=k} N(j).
// Satisfies (1-z) Ehr(z) = theta(z).
FormalSeries ehrhart_series(const LensParams& L, long K);
FormalSeries ehrhart_series(const ShellTable& t);

// The numerator polynomial g(z) with
//   F(z) = (1-z) g(z) / ((1-z^2)^(n-1) (1-z^q)^(n+1)),
// certified of degree < q(n+1).
Poly g_polynomial(const LensParams& L);
Poly g_polynomial(const ShellTable& t);

/// Weyl-law mass of the harmonic-counting measure: the cumulative eigenvalue
/// count up to lambda_t, divided by t^(2n-1), converges to 2/(q(2n-1)!).
/// estimate(t) is computed exactly in rational arithmetic at t_max/2 and
/// t_max, together with the Richardson extrapolation 2 f(t) - f(t/2) that
/// removes the O(1/t) term.
struct HarmonicMass {
    Rational target;
    Rational at_half;      // f(t_max/2)
    Rational at_full;      // f(t_max)
    Rational richardson;   // 2 f(t_max) - f(t_max/2)
    long t_max = 0;
};

HarmonicMass harmonic_total_mass(const LensParams& L, long t_max);

}  // namespace lenspec
