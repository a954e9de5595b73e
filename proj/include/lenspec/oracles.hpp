#pragma once

#include <string>
#include <vector>

#include "lenspec/lens.hpp"
#include "lenspec/series.hpp"

namespace lenspec {

/// One cross-check: the generating-function pipeline against an independent
/// brute-force computation of the same quantity.
struct OracleReport {
    std::string quantity;
    Integer pipeline;
    Integer oracle;
    bool agree;
};

// Dimension of the invariant homogeneous polynomials of degree k in 2n
// complex variables, counted by walking every exponent vector: the group
// generator acts diagonally with eigenvalues xi_q^{+-s_j}, so a monomial
// z^a w^b is invariant exactly when sum (a_j - b_j) s_j = 0 mod q.
Integer monomial_poly_dim(const LensParams& L, long k);

// Multiplicity of the k-th Laplace eigenvalue on the quotient, computed as
// dim P_k^G - dim P_{k-2}^G from the monomial count above. Independent of
// the theta-function pipeline.
Integer monomial_invariant_dim(const LensParams& L, long k);

// As above but for every degree 0..K in a single sweep over monomials.
std::vector<Integer> monomial_invariant_dims(const LensParams& L, long K);

// dim of the SO(2n) representation with highest weight
// (k+1, 1, ..., 1, 0, ...) (p leading entries), by the product formula over
// the positive roots e_i +- e_j; p = 0 is the trivial representation and
// p = n returns the sum over the two half-spin-like signs.
Integer weyl_dim(int n, long k, int p);

// Runs the monomial oracle against function_gf for k <= K and, when q = 1,
// the root-system oracle against fp_gf for every p. Disagreements are data,
// not errors.
std::vector<OracleReport> cross_validate(const LensParams& L, long K);

}  // namespace lenspec
