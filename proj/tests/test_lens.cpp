#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "lenspec/lattice.hpp"
#include "lenspec/lens.hpp"

using namespace lenspec;

namespace {

LensParams random_valid(std::mt19937& rng, long max_q = 15, int max_n = 4) {
    std::uniform_int_distribution<long> pick_q(1, max_q);
    std::uniform_int_distribution<int> pick_n(2, max_n);
    for (;;) {
        long q = pick_q(rng);
        int n = pick_n(rng);
        std::uniform_int_distribution<long> pick_s(0, q - 1);
        std::vector<long> s(static_cast<size_t>(n));
        long g = q;
        for (auto& x : s) {
            x = pick_s(rng);
            g = gcd_long(g, x);
        }
        if (g == 1) return validate(n, q, s);
    }
}

// Applies a random legal transformation: permutation, signs, unit scaling.
LensParams random_transform(const LensParams& L, std::mt19937& rng) {
    auto units = unit_residues(L.q);
    std::uniform_int_distribution<size_t> pick(0, units.size() - 1);
    long t = units[pick(rng)];
    std::vector<long> s = L.s;
    std::shuffle(s.begin(), s.end(), rng);
    std::uniform_int_distribution<int> coin(0, 1);
    for (auto& x : s) {
        x = mod_norm(t * x, L.q);
        if (coin(rng)) x = mod_norm(-x, L.q);
    }
    return validate(L.n, L.q, s);
}

}  // namespace

TEST_SUITE("lens") {

TEST_CASE("validate classifies manifolds and orbifolds") {
    LensParams a = validate(3, 11, {1, 2, 3});
    CHECK(a.is_manifold());
    CHECK(a.s == std::vector<long>{1, 2, 3});
    LensParams b = validate(2, 4, {0, 1});
    CHECK_FALSE(b.is_manifold());
    CHECK_THROWS_AS(validate(2, 4, {0, 2}), GcdViolation);
    CHECK_THROWS_AS(validate(3, 5, {1, 2}), ArityMismatch);
    LensParams c = validate(2, 7, {-1, 9});
    CHECK(c.s == std::vector<long>{6, 2});
}

TEST_CASE("canonical form is invariant under unit scaling") {
    CHECK(canonical_form(validate(3, 11, {1, 2, 3})) ==
          canonical_form(validate(3, 11, {2, 4, 6})));
    CHECK_FALSE(canonical_form(validate(3, 11, {1, 2, 3})) ==
                canonical_form(validate(3, 11, {1, 2, 4})));
}

TEST_CASE("canonical form is invariant under sign flips") {
    std::mt19937 rng(404);
    for (int trial = 0; trial < 30; ++trial) {
        LensParams L = random_valid(rng);
        std::vector<long> flipped = L.s;
        flipped[0] = mod_norm(L.q - flipped[0], L.q);
        CHECK(canonical_form(L) == canonical_form(validate(L.n, L.q, flipped)));
    }
}

TEST_CASE("is_isometric on the named pairs") {
    CHECK(is_isometric(validate(3, 11, {1, 2, 3}), validate(3, 11, {2, 4, 6})));
    CHECK_FALSE(is_isometric(validate(3, 11, {1, 2, 3}), validate(3, 11, {1, 2, 4})));
    CHECK_FALSE(is_isometric(validate(3, 49, {1, 6, 15}), validate(3, 49, {1, 6, 20})));
}

TEST_CASE("isometry is an equivalence relation on random triples") {
    std::mt19937 rng(2718);
    for (int trial = 0; trial < 40; ++trial) {
        LensParams a = random_valid(rng);
        LensParams b = random_transform(a, rng);
        LensParams c = random_transform(b, rng);
        CHECK(is_isometric(a, a));
        CHECK(is_isometric(a, b));
        CHECK(is_isometric(b, a));
        CHECK(is_isometric(a, c));  // transitivity along the chain
        LensParams other = random_valid(rng);
        CHECK(is_isometric(a, other) == is_isometric(other, a));
    }
}

TEST_CASE("canonical form is idempotent on its own representative") {
    std::mt19937 rng(1618);
    for (int trial = 0; trial < 30; ++trial) {
        LensParams L = random_valid(rng);
        CanonicalForm f = canonical_form(L);
        LensParams rep = validate(L.n, L.q, f.values);
        CHECK(canonical_form(rep) == f);
    }
}

TEST_CASE("isometric manifolds share their shell tables") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 10; ++trial) {
        LensParams a = random_valid(rng, 12, 3);
        LensParams b = random_transform(a, rng);
        ShellTable ta = shell_counts(a, 10), tb = shell_counts(b, 10);
        for (long k = 0; k <= 10; ++k)
            for (int l = 0; l <= a.n; ++l) CHECK(ta.count(k, l) == tb.count(k, l));
    }
}

}  // TEST_SUITE
