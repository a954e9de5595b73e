#include "lenspec/series.hpp"

#include <algorithm>
#include <sstream>

namespace lenspec {

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] -= b[i];
    }
    return r;
}

bool poly_is_zero(const Poly& a) {
    for (const auto& c : a)
        if (c != 0) return false;
    return true;
}

long poly_low_degree(const Poly& a) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) return static_cast<long>(i);
    return -1;
}

long poly_degree(const Poly& a) {
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != 0) return static_cast<long>(i);
    return -1;
}

Poly one_minus_pow(long a, long b) {
    Poly r(static_cast<size_t>(a * b) + 1);
    for (long i = 0; i <= b; ++i) {
        Integer c = binomial(b, i);
        if (i % 2 == 1) c = -c;
        r[static_cast<size_t>(a * i)] = c;
    }
    return r;
}

void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

FormalSeries FormalSeries::zero(long order, long low) {
    FormalSeries s;
    s.low_ = low;
    s.order_ = order;
    if (order >= low) s.c_.assign(static_cast<size_t>(order - low + 1), Integer(0));
    return s;
}

FormalSeries FormalSeries::monomial(Integer c, long exp, long order) {
    FormalSeries s = zero(order, std::min(exp, 0L));
    if (exp <= order) s.slot(exp) = std::move(c);
    return s;
}

FormalSeries FormalSeries::from_poly(const Poly& coeffs, long order, long low) {
    FormalSeries s = zero(order, low);
    for (size_t i = 0; i < coeffs.size(); ++i) {
        long e = low + static_cast<long>(i);
        if (e > order) {
            if (coeffs[i] != 0)
                throw std::invalid_argument("from_poly: coefficient beyond requested order");
            continue;
        }
        s.slot(e) = coeffs[i];
    }
    return s;
}

const Integer& FormalSeries::at(long e) const {
    static const Integer kZero(0);
    if (e > order_)
        throw std::out_of_range("FormalSeries: coefficient of z^" + std::to_string(e) +
                                " requested beyond truncation order " + std::to_string(order_));
    if (e < low_) return kZero;
    return c_[static_cast<size_t>(e - low_)];
}

FormalSeries FormalSeries::truncated(long new_order) const {
    if (new_order >= order_) {
        if (new_order > order_)
            throw std::invalid_argument("truncated: cannot extend a series");
        return *this;
    }
    FormalSeries s = zero(new_order, std::min(low_, new_order));
    for (long e = s.low_; e <= new_order; ++e) s.slot(e) = at(e);
    return s;
}

FormalSeries FormalSeries::with_low(long new_low) const {
    for (long e = low_; e < new_low && e <= order_; ++e)
        if (at(e) != 0)
            throw NegativeExponentResidue("with_low: nonzero coefficient at z^" +
                                          std::to_string(e));
    FormalSeries s = zero(order_, new_low);
    for (long e = new_low; e <= order_; ++e) s.slot(e) = at(e);
    return s;
}

void FormalSeries::mul_one_minus_pow(long a, long e) {
    for (long rep = 0; rep < e; ++rep)
        for (long d = order_; d >= low_ + a; --d)
            slot(d) -= c_[static_cast<size_t>(d - a - low_)];
}

void FormalSeries::div_one_minus_pow(long a, long e) {
    for (long rep = 0; rep < e; ++rep)
        for (long d = low_ + a; d <= order_; ++d)
            slot(d) += c_[static_cast<size_t>(d - a - low_)];
}

FormalSeries FormalSeries::shifted(long m) const {
    FormalSeries s = *this;
    s.low_ += m;
    s.order_ += m;
    return s;
}

bool FormalSeries::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

std::optional<long> FormalSeries::lowest_nonzero() const {
    for (long e = low_; e <= order_; ++e)
        if (at(e) != 0) return e;
    return std::nullopt;
}

std::vector<Integer> FormalSeries::coefficients(long from, long to) const {
    std::vector<Integer> out;
    out.reserve(static_cast<size_t>(to - from + 1));
    for (long e = from; e <= to; ++e) out.push_back(at(e));
    return out;
}

FormalSeries add(const FormalSeries& a, const FormalSeries& b) {
    long order = std::min(a.order_, b.order_);
    FormalSeries s = FormalSeries::zero(order, std::min(a.low_, b.low_));
    for (long e = s.low_; e <= order; ++e) s.slot(e) = a.at(e) + b.at(e);
    return s;
}

FormalSeries sub(const FormalSeries& a, const FormalSeries& b) {
    long order = std::min(a.order_, b.order_);
    FormalSeries s = FormalSeries::zero(order, std::min(a.low_, b.low_));
    for (long e = s.low_; e <= order; ++e) s.slot(e) = a.at(e) - b.at(e);
    return s;
}

FormalSeries mul(const FormalSeries& a, const FormalSeries& b) {
    // The Cauchy coefficient at d is complete only while both operands still
    // cover the exponents it draws from.
    long order = std::min(a.order_ + b.low_, b.order_ + a.low_);
    long low = a.low_ + b.low_;
    FormalSeries s = FormalSeries::zero(order, std::min(low, order));
    for (long e1 = a.low_; e1 <= a.order_; ++e1) {
        const Integer& ca = a.at(e1);
        if (ca == 0) continue;
        long e2_hi = std::min(b.order_, order - e1);
        for (long e2 = b.low_; e2 <= e2_hi; ++e2) {
            const Integer& cb = b.at(e2);
            if (cb == 0) continue;
            s.slot(e1 + e2) += ca * cb;
        }
    }
    return s;
}

FormalSeries combine(const FormalSeries& a, const FormalSeries& b, SeriesOp op) {
    switch (op) {
        case SeriesOp::add: return add(a, b);
        case SeriesOp::sub: return sub(a, b);
        case SeriesOp::mul: return mul(a, b);
    }
    throw std::logic_error("combine: bad op");
}

FormalSeries mul_poly(const FormalSeries& s, const Poly& p, long poly_low) {
    long order = s.order() + poly_low;
    FormalSeries r = FormalSeries::zero(order, std::min(s.low() + poly_low, order));
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        long e2 = poly_low + static_cast<long>(i);
        for (long e1 = s.low(); e1 <= s.order() && e1 + e2 <= order; ++e1) {
            const Integer& c = s.at(e1);
            if (c == 0) continue;
            r.slot(e1 + e2) += c * p[i];
        }
    }
    return r;
}

bool equal_up_to(const FormalSeries& a, const FormalSeries& b, long order) {
    for (long e = std::min(a.low(), b.low()); e <= order; ++e)
        if (a.at(e) != b.at(e)) return false;
    return true;
}

std::optional<long> first_difference(const FormalSeries& a, const FormalSeries& b,
                                     long from) {
    long order = std::min(a.order(), b.order());
    for (long e = std::min(std::min(a.low(), b.low()), from); e <= order; ++e)
        if (a.at(e) != b.at(e)) return e;
    return std::nullopt;
}

FormalSeries expand(const RationalGF& g, long K) {
    if (K < 0) throw std::invalid_argument("expand: K must be >= 0");
    FormalSeries s = FormalSeries::from_poly(g.numerator, K);
    for (auto [a, b] : g.factors) s.div_one_minus_pow(a, b);
    return s;
}

RationalGF divide_exact(const FormalSeries& s,
                        const std::vector<std::pair<long, long>>& denom_factors,
                        long degree_bound) {
    if (degree_bound < 0 || degree_bound > s.order())
        throw std::invalid_argument("divide_exact: degree bound outside truncation order");
    FormalSeries t = s;
    for (auto [a, b] : denom_factors) t.mul_one_minus_pow(a, b);
    for (long e = t.low(); e < 0; ++e)
        if (t.at(e) != 0)
            throw NotRational("product has a nonzero coefficient at negative exponent " +
                              std::to_string(e));
    for (long e = degree_bound + 1; e <= t.order(); ++e)
        if (t.at(e) != 0)
            throw NotRational("nonzero coefficient at z^" + std::to_string(e) +
                              " above degree bound " + std::to_string(degree_bound) +
                              " (truncation too small or wrong denominator)");
    RationalGF g;
    g.numerator = t.coefficients(0, std::min(degree_bound, t.order()));
    poly_trim(g.numerator);
    g.factors = denom_factors;
    g.certified = true;
    return g;
}

bool rational_equal(const RationalGF& a, const RationalGF& b) {
    if (!a.certified || !b.certified)
        throw UncertifiedInput("rational_equal requires certified operands");
    Poly lhs = a.numerator;
    for (auto [fa, fb] : b.factors) lhs = poly_mul(lhs, one_minus_pow(fa, fb));
    Poly rhs = b.numerator;
    for (auto [fa, fb] : a.factors) rhs = poly_mul(rhs, one_minus_pow(fa, fb));
    return poly_is_zero(poly_sub(lhs, rhs));
}

}  // namespace lenspec
