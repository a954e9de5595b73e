#include <doctest.h>

#include <functional>
#include <random>

#include "lenspec/lattice.hpp"
#include "lenspec/parallel.hpp"

using namespace lenspec;

namespace {

// Naive reference: walk the whole box [-K, K]^n.
std::vector<std::vector<Integer>> box_counts(const LensParams& L, long K, long twist = 0) {
    std::vector<std::vector<Integer>> N(static_cast<size_t>(K + 1),
                                        std::vector<Integer>(static_cast<size_t>(L.n + 1),
                                                             Integer(0)));
    std::vector<long> a(static_cast<size_t>(L.n), 0);
    std::function<void(int)> walk = [&](int pos) {
        if (pos == L.n) {
            long norm = 0, dot = 0;
            int zeros = 0;
            for (int j = 0; j < L.n; ++j) {
                norm += std::abs(a[static_cast<size_t>(j)]);
                dot += a[static_cast<size_t>(j)] * L.s[static_cast<size_t>(j)];
                if (a[static_cast<size_t>(j)] == 0) ++zeros;
            }
            if (norm <= K && mod_norm(dot - twist, L.q) == 0)
                N[static_cast<size_t>(norm)][static_cast<size_t>(zeros)] += 1;
            return;
        }
        for (long v = -K; v <= K; ++v) {
            a[static_cast<size_t>(pos)] = v;
            walk(pos + 1);
        }
    };
    walk(0);
    return N;
}

}  // namespace

TEST_SUITE("lattice") {

TEST_CASE("Ikeda pair shell values") {
    ShellTable ta = shell_counts(validate(3, 11, {1, 2, 3}), 6);
    ShellTable tb = shell_counts(validate(3, 11, {1, 2, 4}), 6);
    CHECK(ta.count(3, 0) == 2);
    CHECK(ta.count(3, 1) == 2);
    CHECK(tb.count(3, 0) == 0);
    CHECK(tb.count(3, 1) == 4);
    CHECK(ta.count(3) == tb.count(3));  // the pair is one-norm isospectral
}

TEST_CASE("antipodal lattice of L(2;1,1)") {
    ShellTable t = shell_counts(validate(2, 2, {1, 1}), 4);
    CHECK(t.count(1) == 0);
    CHECK(t.count(2) == 8);
    CHECK(t.count(0) == 1);
}

TEST_CASE("DP counts match the naive box enumeration") {
    std::mt19937 rng(555);
    std::uniform_int_distribution<long> pick_q(1, 7);
    std::uniform_int_distribution<int> pick_n(2, 4);
    for (int trial = 0; trial < 12; ++trial) {
        long q = pick_q(rng);
        int n = pick_n(rng);
        std::uniform_int_distribution<long> pick_s(0, q - 1);
        std::vector<long> s(static_cast<size_t>(n));
        long g = q;
        for (auto& x : s) {
            x = pick_s(rng);
            g = gcd_long(g, x);
        }
        if (g != 1) {
            --trial;
            continue;
        }
        LensParams L = validate(n, q, s);
        long K = n == 4 ? 8 : 12;
        std::uniform_int_distribution<long> pick_c(0, q - 1);
        long c = pick_c(rng);
        auto reference = box_counts(L, K, c);
        ShellTable t = shell_counts(L, K, c);
        for (long k = 0; k <= K; ++k)
            for (int l = 0; l <= n; ++l)
                CHECK(t.count(k, l) ==
                      reference[static_cast<size_t>(k)][static_cast<size_t>(l)]);
    }
}

TEST_CASE("theta of the full lattice Z^2") {
    ShellTable t = shell_counts(validate(2, 1, {0, 0}), 6);
    FormalSeries theta = t.theta();
    CHECK(theta.coefficients(0, 4) == std::vector<Integer>{1, 4, 8, 12, 16});
    CHECK(t.theta(2).coefficients(0, 6) ==
          std::vector<Integer>{1, 0, 0, 0, 0, 0, 0});  // theta^(n) = 1
}

TEST_CASE("theta agrees on the 0-isospectral pair up to the certified bound") {
    LensParams a = validate(3, 11, {1, 2, 3}), b = validate(3, 11, {1, 2, 4});
    long K = a.certified_truncation();
    FormalSeries ta = shell_counts(a, K).theta(), tb = shell_counts(b, K).theta();
    CHECK(equal_up_to(ta, tb, K));
}

TEST_CASE("certification of L(11;1,2,3)") {
    LensParams L = validate(3, 11, {1, 2, 3});
    ShellTable t = shell_counts(L, L.certified_truncation());
    auto forms = certify_theta(t);
    REQUIRE(forms.size() == 4);
    for (int l = 0; l <= 3; ++l) {
        CHECK(forms[static_cast<size_t>(l)].certified);
        CHECK(poly_degree(forms[static_cast<size_t>(l)].numerator) <= 11 * (3 - l));
    }
}

TEST_CASE("certified slices of Z^n have binomial numerators") {
    for (int n : {2, 3, 4}) {
        LensParams L = validate(n, 1, std::vector<long>(static_cast<size_t>(n), 0));
        ShellTable t = shell_counts(L, L.certified_truncation());
        auto forms = certify_theta(t);
        for (int l = 0; l <= n; ++l) {
            // theta^(l) = C(n,l) 2^(n-l) z^(n-l) / (1-z)^(n-l)
            Poly expected(static_cast<size_t>(n - l + 1), Integer(0));
            expected[static_cast<size_t>(n - l)] = binomial(n, l) * (Integer(1) << (n - l));
            CHECK(forms[static_cast<size_t>(l)].numerator == expected);
        }
    }
}

TEST_CASE("twisted tables certify and have zero constant term") {
    LensParams L = validate(2, 5, {1, 2});
    ShellTable t = shell_counts(L, L.certified_truncation(), 3);
    CHECK(t.count(0) == 0);
    auto forms = certify_theta(t);
    CHECK(forms[0].certified);
    CHECK(t.theta(2).is_zero());  // no point with all coordinates zero
}

TEST_CASE("negation symmetry and twist pairing") {
    std::mt19937 rng(808);
    LensParams L = validate(3, 9, {1, 2, 4});
    ShellTable plain = shell_counts(L, 15);
    CHECK(plain.count(0, 3) == 1);
    for (long k = 1; k <= 15; ++k) {
        CHECK(plain.count(k, 3) == 0);
        CHECK(plain.count(k) % 2 == 0);
    }
    for (long c = 1; c < 9; ++c) {
        ShellTable tc = shell_counts(L, 10, c);
        ShellTable tq = shell_counts(L, 10, 9 - c);
        for (long k = 0; k <= 10; ++k) CHECK(tc.count(k) == tq.count(k));
    }
}

TEST_CASE("twists partition the full integer lattice") {
    LensParams L = validate(3, 7, {1, 2, 3});
    LensParams full = validate(3, 1, {0, 0, 0});
    ShellTable whole = shell_counts(full, 12);
    std::vector<ShellTable> parts;
    for (long c = 0; c < 7; ++c) parts.push_back(shell_counts(L, 12, c));
    for (long k = 0; k <= 12; ++k) {
        Integer sum = 0;
        for (const auto& part : parts) sum += part.count(k);
        CHECK(sum == whole.count(k));
    }
}

TEST_CASE("certify rejects an undersized table") {
    LensParams L = validate(2, 5, {1, 2});
    ShellTable t = shell_counts(L, 10);
    CHECK_THROWS(certify_theta(t));
}

TEST_CASE("twisted Laplacians can match across distinct orbifolds") {
    // The untwisted 3-dimensional spectra are rigid, but suitable character
    // twists of L(4;1,2) and L(4;0,1) coincide, and every nontrivial twist of
    // L(5;1,2) matches some nontrivial twist of L(5;0,1).
    auto twisted_form = [](const LensParams& L, long c) {
        ShellTable t = shell_counts(L, L.certified_truncation(), c);
        return divide_exact(t.theta(), {{L.q, L.n}}, L.q * L.n);
    };
    {
        LensParams a = validate(2, 4, {1, 2}), b = validate(2, 4, {0, 1});
        CHECK_FALSE(rational_equal(twisted_form(a, 0), twisted_form(b, 0)));
        bool some_twist_matches = false;
        for (long c = 1; c < 4; ++c)
            for (long c2 = 1; c2 < 4; ++c2)
                if (rational_equal(twisted_form(a, c), twisted_form(b, c2)))
                    some_twist_matches = true;
        CHECK(some_twist_matches);
    }
    {
        LensParams a = validate(2, 5, {1, 2}), b = validate(2, 5, {0, 1});
        for (long c = 1; c < 5; ++c) {
            bool matched = false;
            for (long c2 = 1; c2 < 5; ++c2)
                if (rational_equal(twisted_form(a, c), twisted_form(b, c2)))
                    matched = true;
            CHECK(matched);
        }
    }
}

TEST_CASE("tables computed concurrently agree with serial ones") {
    std::vector<LensParams> inputs;
    for (long q = 2; q <= 9; ++q)
        if (gcd_long(q, 3) == 1) inputs.push_back(validate(2, q, {1, mod_norm(3, q)}));
    std::vector<ShellTable> tables;
    for (const auto& L : inputs) tables.push_back(shell_counts(L, 15));
    std::vector<Integer> sums(inputs.size());
    parallel_for(
        static_cast<long>(inputs.size()),
        [&](long i) {
            ShellTable t = shell_counts(inputs[static_cast<size_t>(i)], 15);
            Integer total = 0;
            for (long k = 0; k <= 15; ++k) total += t.count(k);
            sums[static_cast<size_t>(i)] = total;
        },
        4);
    for (size_t i = 0; i < inputs.size(); ++i) {
        Integer expected = 0;
        for (long k = 0; k <= 15; ++k) expected += tables[i].count(k);
        CHECK(sums[i] == expected);
    }
}

}  // TEST_SUITE
