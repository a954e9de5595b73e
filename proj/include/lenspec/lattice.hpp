#pragma once

#include <optional>
#include <vector>

#include "lenspec/lens.hpp"
#include "lenspec/series.hpp"

namespace lenspec {

/// Shell-resolved point counts of the congruence lattice
///   { (a_1,...,a_n) in Z^n : a_1 s_1 + ... + a_n s_n = c  (mod q) },
/// refined by the number of zero coordinates: count(k, l) is the number of
/// lattice points with one-norm k and exactly l coordinates equal to zero.
/// offset c = 0 is the lattice itself; c != 0 gives the shifted lattice of a
/// character-twisted Laplacian.
class ShellTable {
public:
    ShellTable(LensParams lens, long K, long twist = 0);

    const LensParams& lens() const noexcept { return lens_; }
    long truncation() const noexcept { return K_; }
    long twist() const noexcept { return twist_; }

    const Integer& count(long k, int zeros) const;  // N(k, l)
    Integer count(long k) const;                    // N(k)

    // theta(z) = sum_k N(k) z^k, or the zero-count slice sum_k N(k, l) z^k.
    FormalSeries theta(std::optional<int> zeros = std::nullopt) const;

    // One certified rational form per zero-count l = 0..n, with denominator
    // (1 - z^q)^(n-l) and numerator degree at most q(n-l). Requires
    // K >= q(n+1) + 2n so the vanishing window is at least q + 2n wide.
    std::vector<RationalGF> certify() const;

private:
    LensParams lens_;
    long K_;
    long twist_;
    std::vector<Integer> counts_;  // (k, l) -> counts_[k * (n + 1) + l]
};

ShellTable shell_counts(const LensParams& L, long K, long c = 0);

FormalSeries theta_series(const ShellTable& t, std::optional<int> zeros = std::nullopt);

std::vector<RationalGF> certify_theta(const ShellTable& t);

}  // namespace lenspec
