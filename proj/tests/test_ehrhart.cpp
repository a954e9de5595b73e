#include <doctest.h>

#include "lenspec/ehrhart.hpp"
#include "lenspec/spectra.hpp"

using namespace lenspec;

TEST_SUITE("ehrhart") {

TEST_CASE("basis of L(11;1,2,3)") {
    LatticeBasis B = basis(validate(3, 11, {1, 2, 3}));
    CHECK(B.vectors[0] == std::vector<long>{11, 0, 0});
    CHECK(B.vectors[1] == std::vector<long>{-2, 1, 0});
    CHECK(B.vectors[2] == std::vector<long>{-3, 0, 1});
    CHECK(B.qT[0] == std::vector<long>{1, 2, 3});
}

TEST_CASE("basis at q=1 is the identity lattice") {
    LatticeBasis B = basis(validate(2, 1, {0, 0}));
    CHECK(B.vectors[0] == std::vector<long>{1, 0});
    CHECK(B.vectors[1] == std::vector<long>{0, 1});
}

TEST_CASE("basis normalizes a unit into the first slot") {
    LatticeBasis B = basis(validate(3, 4, {0, 2, 1}));
    CHECK(B.normalized.s[0] == 1);
    CHECK(B.vectors[0] == std::vector<long>{4, 0, 0});
}

TEST_CASE("basis requires some coprime coordinate") {
    CHECK_THROWS_AS(basis(validate(2, 6, {2, 3})), NoUnitCoordinate);
}

TEST_CASE("Ehrhart coefficients of the cross-polytope at q=1") {
    FormalSeries e = ehrhart_series(validate(2, 1, {0, 0}), 10);
    CHECK(e.at(1) == 5);
    for (long k = 0; k <= 10; ++k) CHECK(e.at(k) == Integer(2 * k * k + 2 * k + 1));
}

TEST_CASE("(1-z) Ehr equals theta") {
    LensParams L = validate(3, 11, {1, 2, 3});
    ShellTable t = shell_counts(L, 30);
    FormalSeries lhs = mul_poly(ehrhart_series(t), Poly{1, -1});
    CHECK(equal_up_to(lhs, t.theta(), lhs.order()));
}

TEST_CASE("g polynomial of the round sphere S^3") {
    Poly g = g_polynomial(validate(2, 1, {0, 0}));
    CHECK(g == Poly{1, 2, 1});  // (1+z)^2, degree 2 < q(n+1) = 3
}

TEST_CASE("g(0) = 1 and the degree bound holds") {
    for (const LensParams& L : {validate(3, 11, {1, 2, 3}), validate(2, 4, {1, 2}),
                                validate(2, 5, {1, 2}), validate(4, 3, {1, 1, 2, 2})}) {
        Poly g = g_polynomial(L);
        CHECK(g[0] == 1);
        CHECK(poly_degree(g) < L.q * (L.n + 1));
    }
}

TEST_CASE("the 0-isospectral pair shares its g polynomial") {
    CHECK(g_polynomial(validate(3, 11, {1, 2, 3})) ==
          g_polynomial(validate(3, 11, {1, 2, 4})));
}

TEST_CASE("g round-trips to the spectral generating function") {
    LensParams L = validate(2, 5, {1, 3});
    ShellTable t = shell_counts(L, L.certified_truncation());
    Poly g = g_polynomial(t);
    FormalSeries back = FormalSeries::from_poly(poly_mul(Poly{1, -1}, g), t.truncation());
    back.div_one_minus_pow(2, L.n - 1);
    back.div_one_minus_pow(L.q, L.n + 1);
    FormalSeries F = function_gf(t);
    CHECK(equal_up_to(back, F, F.order()));
}

TEST_CASE("harmonic mass targets") {
    HarmonicMass s3 = harmonic_total_mass(validate(2, 1, {0, 0}), 64);
    Rational third(1, 3);
    CHECK(s3.target == third);
    // 2/(q (2n-1)!) at n = 3, q = 11: 2/(11 * 120)
    HarmonicMass lens = harmonic_total_mass(validate(3, 11, {1, 2, 3}), 32);
    Rational expected(1, 660);
    CHECK(lens.target == expected);
}

TEST_CASE("harmonic mass extrapolation converges at desk scale") {
    for (long q : {1L, 5L}) {
        std::vector<long> s = q == 1 ? std::vector<long>{0, 0} : std::vector<long>{1, 3};
        HarmonicMass hm = harmonic_total_mass(validate(2, q, s), 400);
        Rational err = hm.richardson - hm.target;
        if (err < 0) err = -err;
        CHECK(err < hm.target * Rational(1, 50));
        // the raw ratio is worse than the extrapolated one
        Rational raw_err = hm.at_full - hm.target;
        if (raw_err < 0) raw_err = -raw_err;
        CHECK(err < raw_err);
    }
}

}  // TEST_SUITE
