#include <doctest.h>

#include <random>

#include "lenspec/lattice.hpp"
#include "lenspec/series.hpp"

using namespace lenspec;

namespace {

FormalSeries geometric(long a, long K) {  // 1/(1-z^a)
    return expand(RationalGF{Poly{1}, {{a, 1}}, false}, K);
}

RationalGF random_gf(std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(0, 6), coef(-5, 5), fa(1, 4), fb(1, 3),
        nfac(0, 2);
    RationalGF g;
    g.numerator.resize(static_cast<size_t>(deg(rng)) + 1);
    for (auto& c : g.numerator) c = coef(rng);
    if (poly_is_zero(g.numerator)) g.numerator[0] = 1;
    int k = nfac(rng);
    for (int i = 0; i < k; ++i) g.factors.emplace_back(fa(rng), fb(rng));
    return g;
}

}  // namespace

TEST_SUITE("series") {

TEST_CASE("geometric expansion of 1/(1-z^2)") {
    FormalSeries s = geometric(2, 4);
    CHECK(s.coefficients(0, 4) == std::vector<Integer>{1, 0, 1, 0, 1});
}

TEST_CASE("(1-z^2)^-(n-1) expands to binomials along even exponents") {
    for (int n : {2, 3, 4}) {
        FormalSeries s = expand(RationalGF{Poly{1}, {{2, n - 1}}, false}, 12);
        for (long e = 0; e <= 12; ++e) {
            Integer expected = e % 2 == 0 ? binomial(e / 2 + n - 2, n - 2) : Integer(0);
            CHECK(s.at(e) == expected);
        }
    }
}

TEST_CASE("(1+z)/(1-z)^3 gives the squares") {
    FormalSeries s = expand(RationalGF{Poly{1, 1}, {{1, 3}}, false}, 3);
    CHECK(s.coefficients(0, 3) == std::vector<Integer>{1, 4, 9, 16});
}

TEST_CASE("combine add/sub/mul") {
    FormalSeries a = FormalSeries::from_poly(Poly{1, 1}, 5);   // 1 + z
    FormalSeries b = FormalSeries::from_poly(Poly{1, -1}, 5);  // 1 - z
    FormalSeries prod = combine(a, b, SeriesOp::mul);
    CHECK(prod.coefficients(0, 5) == std::vector<Integer>{1, 0, -1, 0, 0, 0});
    FormalSeries diff = combine(a, combine(a, FormalSeries::zero(5), SeriesOp::add),
                                SeriesOp::sub);
    CHECK(diff.is_zero());
}

TEST_CASE("theta times (1-z^2)^-(n-1) is the spectral generating function") {
    LensParams L = validate(3, 11, {1, 2, 3});
    ShellTable tab = shell_counts(L, 20);
    FormalSeries theta = tab.theta();
    FormalSeries f = combine(theta, expand(RationalGF{Poly{1}, {{2, 2}}, false}, 20),
                             SeriesOp::mul);
    // k = 0 and 1: only the origin and nothing of odd norm 1 in this lattice
    CHECK(f.at(0) == 1);
    FormalSeries direct = theta;
    direct.div_one_minus_pow(2, 2);
    CHECK(equal_up_to(f, direct, f.order()));
}

TEST_CASE("divide_exact recovers the numerator over S^3") {
    FormalSeries f = expand(RationalGF{Poly{1, 1}, {{1, 3}}, false}, 12);
    f.div_one_minus_pow(1, 1);  // F/(1-z)
    RationalGF g = divide_exact(f, {{2, 1}, {1, 3}}, 2);
    CHECK(g.certified);
    CHECK(g.numerator == Poly{1, 2, 1});  // (1+z)^2
}

TEST_CASE("divide_exact of the constant series with no factors") {
    FormalSeries one = FormalSeries::from_poly(Poly{1}, 5);
    RationalGF g = divide_exact(one, {}, 0);
    CHECK(g.certified);
    CHECK(g.numerator == Poly{1});
}

TEST_CASE("divide_exact rejects a wrong denominator") {
    FormalSeries s = expand(RationalGF{Poly{1}, {{1, 2}}, false}, 10);
    CHECK_THROWS_AS(divide_exact(s, {{2, 1}}, 3), NotRational);
}

TEST_CASE("expand/divide_exact round-trips random rational forms") {
    std::mt19937 rng(7771);
    for (int trial = 0; trial < 60; ++trial) {
        RationalGF g = random_gf(rng);
        long deg = poly_degree(g.numerator);
        long K = deg + g.denominator_weight() + 6;
        FormalSeries s = expand(g, K);
        RationalGF back = divide_exact(s, g.factors, deg);
        Poly trimmed = g.numerator;
        poly_trim(trimmed);
        CHECK(back.numerator == trimmed);
        CHECK(back.certified);
        CHECK(equal_up_to(expand(back, K), s, K));
    }
}

TEST_CASE("Cauchy product is commutative and associative up to truncation") {
    std::mt19937 rng(991);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (int trial = 0; trial < 40; ++trial) {
        auto rand_series = [&](long K) {
            Poly p(static_cast<size_t>(K) + 1);
            for (auto& c : p) c = coef(rng);
            return FormalSeries::from_poly(p, K);
        };
        FormalSeries a = rand_series(12), b = rand_series(12), c = rand_series(12);
        FormalSeries ab_c = mul(mul(a, b), c);
        FormalSeries a_bc = mul(a, mul(b, c));
        CHECK(equal_up_to(ab_c, a_bc, std::min(ab_c.order(), a_bc.order())));
        FormalSeries ba = mul(b, a);
        CHECK(equal_up_to(mul(a, b), ba, ba.order()));
    }
}

TEST_CASE("dropping the Laurent tail requires it to vanish") {
    FormalSeries s = FormalSeries::monomial(1, -2, 5);
    CHECK_THROWS_AS(s.with_low(0), NegativeExponentResidue);
    FormalSeries z = FormalSeries::zero(5, -3);
    CHECK_NOTHROW(z.with_low(0));
}

TEST_CASE("rational_equal cross-multiplies certified forms") {
    // 1/(1-z) and (1+z)/(1-z^2) are the same series
    FormalSeries a = geometric(1, 10);
    FormalSeries b = expand(RationalGF{Poly{1, 1}, {{2, 1}}, false}, 10);
    RationalGF ga = divide_exact(a, {{1, 1}}, 0);
    RationalGF gb = divide_exact(b, {{2, 1}}, 1);
    CHECK(rational_equal(ga, gb));
    RationalGF gc = divide_exact(geometric(2, 10), {{2, 1}}, 0);
    CHECK_FALSE(rational_equal(ga, gc));
    RationalGF raw{Poly{1}, {{1, 1}}, false};
    CHECK_THROWS_AS(rational_equal(ga, raw), UncertifiedInput);
}

}  // TEST_SUITE
