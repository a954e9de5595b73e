#include "lenspec/spectra.hpp"

#include <algorithm>

namespace lenspec {

void LaurentPolynomial::trim() {
    size_t lead = 0;
    while (lead < coeff.size() && coeff[lead] == 0) ++lead;
    coeff.erase(coeff.begin(), coeff.begin() + static_cast<long>(lead));
    low += static_cast<long>(lead);
    while (!coeff.empty() && coeff.back() == 0) coeff.pop_back();
    if (coeff.empty()) low = 0;
}

bool LaurentPolynomial::operator==(const LaurentPolynomial& o) const {
    LaurentPolynomial a = *this, b = o;
    a.trim();
    b.trim();
    return a.low == b.low && a.coeff == b.coeff;
}

long lambda_kp(long k, int p, int n) { return (k + p) * (k + 2 * n - p); }

long lambda_function(long k, int n) { return k * (k + 2 * n - 2); }

long lambda_even(long k, int n) { return k * (k + 2 * n - 1); }

FormalSeries function_gf(const ShellTable& t, Geometry geom) {
    const int n = t.lens().n;
    FormalSeries f = t.theta();
    if (geom == Geometry::odd_sphere) {
        f.div_one_minus_pow(2, n - 1);
    } else {
        f = mul_poly(f, Poly{1, 1});  // (1 + z)
        f.div_one_minus_pow(2, n);
    }
    return f;
}

SpectrumReport function_spectrum(const ShellTable& t, long K, Geometry geom) {
    const int n = t.lens().n;
    FormalSeries f = function_gf(t, geom);
    if (K > f.order())
        throw std::invalid_argument("function_spectrum: K beyond table range");
    SpectrumReport rep;
    for (long k = 0; k <= K; ++k) {
        const Integer& m = f.at(k);
        if (m == 0) continue;
        long lambda =
            geom == Geometry::odd_sphere ? lambda_function(k, n) : lambda_even(k, n);
        rep.entries.push_back({lambda, m, k, 0});
    }
    return rep;
}

LaurentPolynomial a_poly(int n, int p, int l) {
    if (p < 1 || p > n || l < 0 || l > n)
        throw std::invalid_argument("a_poly: need 1 <= p <= n and 0 <= l <= n");
    // One nested sum; every index runs exactly over its stated range and
    // binomials vanish outside 0 <= k <= n.
    LaurentPolynomial A;
    A.low = -p;  // exponents p - 2(j + t + alpha - i) lie in [-p, p]
    A.coeff.assign(static_cast<size_t>(2 * p + 1), Integer(0));
    for (int j = 1; j <= p; ++j) {
        const int sign = (j % 2 == 1) ? 1 : -1;
        for (int t = 0; 2 * t <= p - j; ++t) {
            const Integer c_t = binomial(n - p + j + 2 * t, t);
            if (c_t == 0) continue;
            for (int beta = 0; beta <= p - j - 2 * t; ++beta) {
                const int rem = p - j - 2 * t - beta;
                Integer c_b = binomial(n - l, beta) * binomial(l, rem);
                if (c_b == 0) continue;
                c_b *= Integer(1) << rem;  // 2^(p-j-2t-beta)
                for (int alpha = 0; alpha <= beta; ++alpha) {
                    const Integer c_a = c_t * c_b * binomial(beta, alpha);
                    for (int i = 0; i <= j - 1; ++i) {
                        const long e = p - 2L * (j + t + alpha - i);
                        A.coeff[static_cast<size_t>(e - A.low)] +=
                            sign > 0 ? c_a : -c_a;
                    }
                }
            }
        }
    }
    return A;
}

namespace {

FormalSeries mul_laurent(const FormalSeries& s, const LaurentPolynomial& lp) {
    // Coefficient d draws on s up to exponent d - lp.low, so the product is
    // only trustworthy through s.order() + lp.low; mul_poly already carries
    // that order when told the polynomial starts at lp.low.
    Poly p(lp.coeff.begin(), lp.coeff.end());
    return mul_poly(s, p, lp.low);
}

}  // namespace

FormalSeries fp_gf(const ShellTable& t, int p) {
    const int n = t.lens().n;
    if (p < 0 || p > n - 1)
        throw std::invalid_argument("fp_gf: need 0 <= p <= n-1");
    if (t.twist() != 0)
        throw std::invalid_argument("fp_gf: p-form spectra are defined for untwisted tables");
    const long K = t.truncation();
    const int m = p + 1;  // the weight index: F^p uses A_{p+1}
    FormalSeries acc = FormalSeries::zero(K - m, -m);
    for (int l = 0; l <= n; ++l) {
        LaurentPolynomial A = a_poly(n, m, l);
        acc = add(acc, mul_laurent(t.theta(l), A));
    }
    acc.div_one_minus_pow(2, n - 1);
    Integer sign = (m % 2 == 0) ? 1 : -1;
    acc = add(acc, FormalSeries::monomial(sign, -m, acc.order()));
    // Everything below z^0 must cancel; with_low throws NegativeExponentResidue
    // if the transcription were wrong.
    FormalSeries f = acc.with_low(0);
    for (long k = 0; k <= f.order(); ++k)
        if (f.at(k) < 0)
            throw NegativeCoefficient("fp_gf: negative multiplicity at z^" + std::to_string(k));
    return f;
}

SpectrumReport p_spectrum(const ShellTable& t, int p, long K) {
    const int n = t.lens().n;
    if (p < 0 || p > 2 * n - 1)
        throw std::invalid_argument("p_spectrum: need 0 <= p <= 2n-1");
    if (p > n - 1) p = 2 * n - 1 - p;  // Hodge duality on the orientable quotient
    std::vector<SpectrumReport::Entry> entries;
    if (p == 0) {
        entries.push_back({0, Integer(1), 0, 0});
    } else {
        FormalSeries f = fp_gf(t, p - 1);
        if (K > f.order())
            throw std::invalid_argument("p_spectrum: K beyond table range");
        for (long k = 0; k <= K; ++k)
            if (f.at(k) != 0) entries.push_back({lambda_kp(k, p, n), f.at(k), k, p});
    }
    FormalSeries g = fp_gf(t, p);
    if (K > g.order())
        throw std::invalid_argument("p_spectrum: K beyond table range");
    for (long k = 0; k <= K; ++k)
        if (g.at(k) != 0) entries.push_back({lambda_kp(k, p + 1, n), g.at(k), k, p + 1});

    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.eigenvalue < b.eigenvalue; });
    for (size_t i = 1; i < entries.size(); ++i)
        if (entries[i].eigenvalue == entries[i - 1].eigenvalue)
            throw EigenvalueCollision("lambda_{" + std::to_string(entries[i - 1].k) + "," +
                                      std::to_string(entries[i - 1].p) + "} meets lambda_{" +
                                      std::to_string(entries[i].k) + "," +
                                      std::to_string(entries[i].p) + "}");
    SpectrumReport rep;
    rep.entries = std::move(entries);
    return rep;
}

}  // namespace lenspec
