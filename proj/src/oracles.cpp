#include "lenspec/oracles.hpp"

#include <functional>

#include "lenspec/spectra.hpp"

namespace lenspec {

namespace {

// Walks every exponent vector (e_1,...,e_{2n}) with sum <= K and buckets the
// invariant ones by degree. Slot 2j carries weight +s_j, slot 2j+1 carries
// -s_j. Cost is binom(K + 2n, 2n) visits; oracles validate, they don't scale.
std::vector<Integer> invariant_monomials_by_degree(const LensParams& L, long K) {
    const long q = L.q;
    const int slots = 2 * L.n;
    std::vector<Integer> dims(static_cast<size_t>(K + 1), Integer(0));
    std::vector<long> weight(static_cast<size_t>(slots));
    for (int j = 0; j < L.n; ++j) {
        weight[static_cast<size_t>(2 * j)] = mod_norm(L.s[static_cast<size_t>(j)], q);
        weight[static_cast<size_t>(2 * j + 1)] =
            mod_norm(-L.s[static_cast<size_t>(j)], q);
    }
    std::function<void(int, long, long)> walk = [&](int slot, long degree, long residue) {
        if (slot == slots) {
            if (residue == 0) dims[static_cast<size_t>(degree)] += 1;
            return;
        }
        long r = residue;
        for (long e = 0; degree + e <= K; ++e) {
            walk(slot + 1, degree + e, r);
            r = (r + weight[static_cast<size_t>(slot)]) % q;
        }
    };
    walk(0, 0, 0);
    return dims;
}

}  // namespace

Integer monomial_poly_dim(const LensParams& L, long k) {
    if (k < 0) return 0;
    return invariant_monomials_by_degree(L, k)[static_cast<size_t>(k)];
}

Integer monomial_invariant_dim(const LensParams& L, long k) {
    if (k < 0) return 0;
    auto dims = invariant_monomials_by_degree(L, k);
    Integer below = k >= 2 ? dims[static_cast<size_t>(k - 2)] : Integer(0);
    return dims[static_cast<size_t>(k)] - below;
}

std::vector<Integer> monomial_invariant_dims(const LensParams& L, long K) {
    auto dims = invariant_monomials_by_degree(L, K);
    std::vector<Integer> h(static_cast<size_t>(K + 1));
    for (long k = 0; k <= K; ++k)
        h[static_cast<size_t>(k)] =
            dims[static_cast<size_t>(k)] -
            (k >= 2 ? dims[static_cast<size_t>(k - 2)] : Integer(0));
    return h;
}

Integer weyl_dim(int n, long k, int p) {
    if (n < 2 || k < 0 || p < 0 || p > n)
        throw std::invalid_argument("weyl_dim: need n >= 2, k >= 0, 0 <= p <= n");
    if (p == 0) return 1;

    auto dim_for = [&](int sign_last) {
        // lambda + rho in coordinates: m_i = a_i + (n - i), 1-based i.
        std::vector<long> m(static_cast<size_t>(n));
        for (int i = 1; i <= n; ++i) {
            long a = 0;
            if (i == 1) a = k + 1;
            else if (i <= p) a = 1;
            if (p == n && i == n) a = sign_last;
            m[static_cast<size_t>(i - 1)] = a + (n - i);
        }
        Integer num = 1, den = 1;
        for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                long mi = m[static_cast<size_t>(i - 1)], mj = m[static_cast<size_t>(j - 1)];
                long ri = n - i, rj = n - j;
                num *= Integer(mi * mi - mj * mj);
                den *= Integer(ri * ri - rj * rj);
            }
        }
        Integer d;
        if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
            throw NonIntegral("weyl_dim: root product is not integral");
        mpz_divexact(d.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        return d;
    };

    if (p < n) return dim_for(+1);
    Integer plus = dim_for(+1), minus = dim_for(-1);
    return plus + minus;
}

std::vector<OracleReport> cross_validate(const LensParams& L, long K) {
    std::vector<OracleReport> reports;
    ShellTable table = shell_counts(L, K + 2 * L.n);
    FormalSeries f = function_gf(table);
    std::vector<Integer> oracle = monomial_invariant_dims(L, K);
    for (long k = 0; k <= K; ++k) {
        OracleReport r;
        r.quantity = "multiplicity(lambda_" + std::to_string(k) + ") on " + L.name();
        r.pipeline = f.at(k);
        r.oracle = oracle[static_cast<size_t>(k)];
        r.agree = r.pipeline == r.oracle;
        reports.push_back(std::move(r));
    }
    if (L.q == 1) {
        for (int p = 0; p <= L.n - 1; ++p) {
            FormalSeries fp = fp_gf(table, p);
            long kmax = std::min(K, fp.order());
            for (long k = 0; k <= kmax; ++k) {
                OracleReport r;
                r.quantity = "dim V(k=" + std::to_string(k) + ", p=" + std::to_string(p + 1) +
                             ") on the sphere, n=" + std::to_string(L.n);
                r.pipeline = fp.at(k);
                r.oracle = weyl_dim(L.n, k, p + 1);
                r.agree = r.pipeline == r.oracle;
                reports.push_back(std::move(r));
            }
        }
    }
    return reports;
}

}  // namespace lenspec
