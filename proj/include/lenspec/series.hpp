#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lenspec/errors.hpp"
#include "lenspec/integers.hpp"

namespace lenspec {

// Dense integer polynomial, coefficient of z^i at index i.
using Poly = std::vector<Integer>;

Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
bool poly_is_zero(const Poly& a);
// Index of the lowest nonzero coefficient, or -1 for the zero polynomial.
long poly_low_degree(const Poly& a);
long poly_degree(const Poly& a);
// Expansion of (1 - z^a)^b.
Poly one_minus_pow(long a, long b);
void poly_trim(Poly& a);

/// Truncated Laurent series with exact big-integer coefficients.
///
/// Coefficients are stored densely for exponents in [low(), order()] and the
/// series is declared valid through exponent order(): arithmetic never reads
/// beyond an operand's order, and every result carries the largest order its
/// inputs can justify.
class FormalSeries {
public:
    FormalSeries() : low_(0), order_(-1) {}

    // Zero series valid through z^order.
    static FormalSeries zero(long order, long low = 0);
    // c * z^exp, valid through z^order.
    static FormalSeries monomial(Integer c, long exp, long order);
    // Polynomial coefficients starting at z^low, valid through z^order.
    static FormalSeries from_poly(const Poly& coeffs, long order, long low = 0);

    long low() const noexcept { return low_; }
    long order() const noexcept { return order_; }

    // Coefficient of z^e; zero below low(), error beyond order().
    const Integer& at(long e) const;

    FormalSeries truncated(long new_order) const;
    // Drops exponents below new_low; they must all be zero.
    FormalSeries with_low(long new_low) const;

    // In-place multiplication by (1 - z^a)^e. Exact, order unchanged.
    void mul_one_minus_pow(long a, long e);
    // In-place division by (1 - z^a)^e. Exact, order unchanged.
    void div_one_minus_pow(long a, long e);

    FormalSeries shifted(long m) const;  // multiply by z^m

    bool is_zero() const;
    // Exponent of the lowest nonzero coefficient, if any.
    std::optional<long> lowest_nonzero() const;

    std::vector<Integer> coefficients(long from, long to) const;

    friend FormalSeries add(const FormalSeries& a, const FormalSeries& b);
    friend FormalSeries sub(const FormalSeries& a, const FormalSeries& b);
    friend FormalSeries mul(const FormalSeries& a, const FormalSeries& b);
    friend FormalSeries mul_poly(const FormalSeries& s, const Poly& p, long poly_low);

private:
    long low_;
    long order_;
    std::vector<Integer> c_;  // c_[i] is the coefficient of z^(low_ + i)

    Integer& slot(long e) { return c_[static_cast<size_t>(e - low_)]; }
};

enum class SeriesOp { add, sub, mul };
FormalSeries combine(const FormalSeries& a, const FormalSeries& b, SeriesOp op);

// Series multiplied by an exact polynomial (no truncation on that side).
FormalSeries mul_poly(const FormalSeries& s, const Poly& p, long poly_low = 0);

bool equal_up_to(const FormalSeries& a, const FormalSeries& b, long order);
// First exponent (>= from) where the two series differ, if any, scanning
// through the smaller of the two orders.
std::optional<long> first_difference(const FormalSeries& a, const FormalSeries& b,
                                     long from = 0);

/// A generating function N(z) / prod_i (1 - z^{a_i})^{b_i}.
///
/// `certified` is set only by divide_exact, which proves the numerator degree
/// bound from a truncated expansion; equality of certified forms is equality
/// of the full series.
struct RationalGF {
    Poly numerator;
    std::vector<std::pair<long, long>> factors;  // (a, b) meaning (1 - z^a)^b
    bool certified = false;

    long denominator_weight() const {  // sum of a*b over the factors
        long w = 0;
        for (auto [a, b] : factors) w += a * b;
        return w;
    }
};

// Coefficients of z^0..z^K of g, exact.
FormalSeries expand(const RationalGF& g, long K);

// Multiplies s by prod (1 - z^a)^b and demands that everything above
// degree_bound (and below z^0) vanishes up to s.order(); the surviving
// polynomial is the certified numerator. Throws NotRational otherwise.
RationalGF divide_exact(const FormalSeries& s,
                        const std::vector<std::pair<long, long>>& denom_factors,
                        long degree_bound);

// Exact equality of two rational forms by cross-multiplying numerators with
// the opposite denominators. Requires certified inputs.
bool rational_equal(const RationalGF& a, const RationalGF& b);

}  // namespace lenspec
