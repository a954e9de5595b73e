#include "lenspec/ehrhart.hpp"

#include <algorithm>
#include <random>

#include "lenspec/spectra.hpp"

namespace lenspec {

LatticeBasis basis(const LensParams& L) {
    const long q = L.q;
    const int n = L.n;
    int unit = -1;
    for (int j = 0; j < n; ++j)
        if (gcd_long(q, L.s[static_cast<size_t>(j)]) == 1) {
            unit = j;
            break;
        }
    if (unit < 0)
        throw NoUnitCoordinate("no rotation parameter of " + L.name() +
                               " is coprime to q; no basis of this form exists");
    // Scale by the inverse unit and move it to the front: an isometry.
    std::vector<long> s = L.s;
    long inv = q == 1 ? 1 : mod_inverse(s[static_cast<size_t>(unit)], q);
    for (auto& x : s) x = mod_norm(x * inv, q);
    std::swap(s[0], s[static_cast<size_t>(unit)]);

    LatticeBasis B;
    B.q = q;
    B.normalized = validate(n, q, s);
    B.vectors.assign(static_cast<size_t>(n), std::vector<long>(static_cast<size_t>(n), 0));
    B.vectors[0][0] = q;
    for (int j = 1; j < n; ++j) {
        B.vectors[static_cast<size_t>(j)][0] = -s[static_cast<size_t>(j)];
        B.vectors[static_cast<size_t>(j)][static_cast<size_t>(j)] = 1;
    }
    B.qT.assign(static_cast<size_t>(n), std::vector<long>(static_cast<size_t>(n), 0));
    B.qT[0][0] = 1;
    for (int j = 1; j < n; ++j) {
        B.qT[0][static_cast<size_t>(j)] = s[static_cast<size_t>(j)];
        B.qT[static_cast<size_t>(j)][static_cast<size_t>(j)] = q;
    }

    // T v_j = e_j, checked in integer arithmetic as qT v_j = q e_j.
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            long acc = 0;
            for (int t = 0; t < n; ++t)
                acc += B.qT[static_cast<size_t>(i)][static_cast<size_t>(t)] *
                       B.vectors[static_cast<size_t>(j)][static_cast<size_t>(t)];
            if (acc != (i == j ? q : 0))
                throw std::logic_error("basis: qT * v_j != q e_j");
        }
    // T maps lattice points into Z^n: spot-check random basis combinations.
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long> coef(-4, 4);
    for (int trial = 0; trial < 32; ++trial) {
        std::vector<long> mu(static_cast<size_t>(n), 0);
        for (int j = 0; j < n; ++j) {
            long c = coef(rng);
            for (int i = 0; i < n; ++i)
                mu[static_cast<size_t>(i)] +=
                    c * B.vectors[static_cast<size_t>(j)][static_cast<size_t>(i)];
        }
        long dot = 0;
        for (int i = 0; i < n; ++i)
            dot = mod_norm(dot + mu[static_cast<size_t>(i)] * s[static_cast<size_t>(i)], q);
        if (dot != 0) throw std::logic_error("basis: v_j span leaves the lattice");
        for (int i = 0; i < n; ++i) {
            long acc = 0;
            for (int t = 0; t < n; ++t)
                acc += B.qT[static_cast<size_t>(i)][static_cast<size_t>(t)] *
                       mu[static_cast<size_t>(t)];
            if (acc % q != 0) throw std::logic_error("basis: T mu is not integral");
        }
    }
    return B;
}

FormalSeries ehrhart_series(const ShellTable& t) {
    FormalSeries e = t.theta();
    e.div_one_minus_pow(1, 1);  // cumulative sums
    return e;
}

FormalSeries ehrhart_series(const LensParams& L, long K) {
    return ehrhart_series(shell_counts(L, K));
}

Poly g_polynomial(const ShellTable& t) {
    const long q = t.lens().q;
    const int n = t.lens().n;
    // g = Ehr * (1 - z^q)^(n+1); the table's certified truncation leaves a
    // vanishing window of width 2n + 1 above the degree bound.
    if (t.truncation() < t.lens().certified_truncation())
        throw UncertifiedInput("g_polynomial: table truncated below q(n+1) + 2n");
    try {
        RationalGF g = divide_exact(ehrhart_series(t), {{q, n + 1}}, q * (n + 1) - 1);
        return g.numerator;
    } catch (const NotRational& e) {
        throw DegreeBoundViolated(std::string("g_polynomial: ") + e.what());
    }
}

Poly g_polynomial(const LensParams& L) {
    return g_polynomial(shell_counts(L, L.certified_truncation()));
}

namespace {

HarmonicMass harmonic_mass_from_counts(const LensParams& L, const FormalSeries& f,
                                       long t_max) {
    auto cumulative = [&](long t) {
        Integer total = 0;
        for (long k = 0; k <= t; ++k) total += f.at(k);
        return total;
    };
    auto ratio = [&](long t) {
        Integer denom = 1;
        for (int i = 0; i < 2 * L.n - 1; ++i) denom *= t;
        Rational r(cumulative(t));
        r /= Rational(denom);
        r.canonicalize();
        return r;
    };
    HarmonicMass hm;
    hm.t_max = t_max;
    hm.target = Rational(Integer(2), Integer(L.q) * factorial(2 * L.n - 1));
    hm.target.canonicalize();
    hm.at_half = ratio(t_max / 2);
    hm.at_full = ratio(t_max);
    hm.richardson = 2 * hm.at_full - hm.at_half;
    return hm;
}

}  // namespace

HarmonicMass harmonic_total_mass(const LensParams& L, long t_max) {
    if (t_max < 2) throw std::invalid_argument("harmonic_total_mass: t_max must be >= 2");
    ShellTable table = shell_counts(L, t_max);
    return harmonic_mass_from_counts(L, function_gf(table), t_max);
}

}  // namespace lenspec
