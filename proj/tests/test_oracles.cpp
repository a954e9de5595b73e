#include <doctest.h>

#include <random>

#include "lenspec/oracles.hpp"

using namespace lenspec;

TEST_SUITE("oracles") {

TEST_CASE("monomial counts for the antipodal quotient") {
    LensParams L = validate(2, 2, {1, 1});
    CHECK(monomial_poly_dim(L, 2) == 10);  // all 10 quadratic monomials survive
    CHECK(monomial_poly_dim(L, 0) == 1);
    CHECK(monomial_invariant_dim(L, 2) == 9);
}

TEST_CASE("monomial counts on the sphere") {
    LensParams L = validate(2, 1, {0, 0});
    CHECK(monomial_invariant_dim(L, 1) == 4);
    for (const long q : {1L, 3L, 8L}) {
        LensParams M = validate(2, q, {1, mod_norm(3, q)});
        CHECK(monomial_invariant_dim(M, 0) == 1);
    }
}

TEST_CASE("weyl_dim named values") {
    CHECK(weyl_dim(3, 0, 1) == 6);   // standard representation of SO(6)
    CHECK(weyl_dim(3, 1, 1) == 20);
    for (int n = 2; n <= 5; ++n) CHECK(weyl_dim(n, 0, 0) == 1);
    // n = 2, p = n: both signs together give 2(k+1)(k+3)
    for (long k = 0; k <= 3; ++k)
        CHECK(weyl_dim(2, k, 2) == 2 * Integer(k + 1) * (k + 3));
}

TEST_CASE("weyl_dim grows strictly in k for p >= 1") {
    for (int n = 2; n <= 4; ++n)
        for (int p = 1; p <= n; ++p)
            for (long k = 0; k <= 7; ++k)
                CHECK(weyl_dim(n, k + 1, p) > weyl_dim(n, k, p));
}

TEST_CASE("harmonic layers are genuine subspace differences") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<long> pick_q(1, 10);
    for (int trial = 0; trial < 8; ++trial) {
        long q = pick_q(rng);
        std::uniform_int_distribution<long> pick_s(0, q - 1);
        std::vector<long> s(2);
        long g = q;
        for (auto& x : s) {
            x = pick_s(rng);
            g = gcd_long(g, x);
        }
        if (g != 1) {
            --trial;
            continue;
        }
        LensParams L = validate(2, q, s);
        for (const Integer& h : monomial_invariant_dims(L, 14)) CHECK(h >= 0);
    }
}

TEST_CASE("cross_validate agrees on L(11;1,2,3) to k=20") {
    auto reports = cross_validate(validate(3, 11, {1, 2, 3}), 20);
    for (const auto& r : reports) CHECK(r.agree);
}

TEST_CASE("cross_validate agrees on spheres including all p") {
    for (int n = 2; n <= 4; ++n) {
        auto reports =
            cross_validate(validate(n, 1, std::vector<long>(static_cast<size_t>(n), 0)), 8);
        size_t weyl_rows = 0;
        for (const auto& r : reports) {
            CHECK(r.agree);
            if (r.quantity.find("dim V") == 0) ++weyl_rows;
        }
        CHECK(weyl_rows > 0);
    }
}

TEST_CASE("cross_validate on the antipodal quotient has zero odd multiplicities") {
    auto reports = cross_validate(validate(2, 2, {1, 1}), 10);
    for (size_t k = 0; k < reports.size(); ++k) {
        CHECK(reports[k].agree);
        if (k % 2 == 1) CHECK(reports[k].oracle == 0);
    }
}

}  // TEST_SUITE
