#include "lenspec/lattice.hpp"

#include <utility>

namespace lenspec {

// Counts are built coordinate by coordinate. The running state is indexed by
// (zeros z, residue r, norm m); appending coordinate j with parameter s maps
// a state either to (z+1, r, m) when a_j = 0 or to (z, r + v*s mod q, m + v)
// when a_j = +-v, v >= 1. The sums over v >= 1 telescope:
//   P[r][m] = sum_{v>=1} old[(r - v s) % q][m - v]
//           = old[(r - s) % q][m - 1] + P[(r - s) % q][m - 1],
// and likewise M with the opposite sign, so each coordinate costs
// O(q * K * n) big-integer additions instead of a walk over the shells.
ShellTable::ShellTable(LensParams lens, long K, long twist)
    : lens_(std::move(lens)), K_(K), twist_(mod_norm(twist, lens_.q)) {
    if (K < 0) throw std::invalid_argument("shell_counts: K must be >= 0");
    const long q = lens_.q;
    const int n = lens_.n;
    const size_t nm = static_cast<size_t>(K + 1);
    const size_t nr = static_cast<size_t>(q);
    const size_t slice = nr * nm;  // one zeros-level: [r][m]

    auto idx = [&](int z, long r, long m) -> size_t {
        return static_cast<size_t>(z) * slice + static_cast<size_t>(r) * nm +
               static_cast<size_t>(m);
    };

    std::vector<Integer> state(static_cast<size_t>(n + 1) * slice, Integer(0));
    std::vector<Integer> next(state.size(), Integer(0));
    std::vector<Integer> plus(slice), minus(slice);
    state[idx(0, 0, 0)] = 1;

    for (int j = 0; j < n; ++j) {
        const long s = mod_norm(lens_.s[static_cast<size_t>(j)], q);
        const long back = (q - s) % q;  // residue step for a_j = +1 seen backwards
        for (auto& x : next) x = 0;
        for (int z = 0; z <= j + 1; ++z) {
            if (z <= j) {
                // nonzero coordinate: telescoped sums over v >= 1
                for (auto& x : plus) x = 0;
                for (auto& x : minus) x = 0;
                for (long m = 1; m <= K; ++m) {
                    for (long r = 0; r < q; ++r) {
                        const long rp = (r + back) % q;  // (r - s) mod q
                        const long rm = (r + s) % q;     // (r + s) mod q
                        plus[static_cast<size_t>(r) * nm + static_cast<size_t>(m)] =
                            state[idx(z, rp, m - 1)] +
                            plus[static_cast<size_t>(rp) * nm + static_cast<size_t>(m - 1)];
                        minus[static_cast<size_t>(r) * nm + static_cast<size_t>(m)] =
                            state[idx(z, rm, m - 1)] +
                            minus[static_cast<size_t>(rm) * nm + static_cast<size_t>(m - 1)];
                    }
                }
                for (long r = 0; r < q; ++r)
                    for (long m = 0; m <= K; ++m)
                        next[idx(z, r, m)] +=
                            plus[static_cast<size_t>(r) * nm + static_cast<size_t>(m)] +
                            minus[static_cast<size_t>(r) * nm + static_cast<size_t>(m)];
            }
            if (z >= 1) {
                // zero coordinate
                for (long r = 0; r < q; ++r)
                    for (long m = 0; m <= K; ++m)
                        next[idx(z, r, m)] += state[idx(z - 1, r, m)];
            }
        }
        state.swap(next);
    }

    counts_.assign(static_cast<size_t>(K + 1) * static_cast<size_t>(n + 1), Integer(0));
    for (long k = 0; k <= K; ++k)
        for (int z = 0; z <= n; ++z)
            counts_[static_cast<size_t>(k) * static_cast<size_t>(n + 1) +
                    static_cast<size_t>(z)] = state[idx(z, twist_, k)];
}

const Integer& ShellTable::count(long k, int zeros) const {
    if (k < 0 || k > K_ || zeros < 0 || zeros > lens_.n)
        throw std::out_of_range("ShellTable::count(" + std::to_string(k) + ", " +
                                std::to_string(zeros) + ") outside table");
    return counts_[static_cast<size_t>(k) * static_cast<size_t>(lens_.n + 1) +
                   static_cast<size_t>(zeros)];
}

Integer ShellTable::count(long k) const {
    Integer total = 0;
    for (int z = 0; z <= lens_.n; ++z) total += count(k, z);
    return total;
}

FormalSeries ShellTable::theta(std::optional<int> zeros) const {
    FormalSeries s = FormalSeries::zero(K_);
    Poly coeffs(static_cast<size_t>(K_ + 1));
    for (long k = 0; k <= K_; ++k)
        coeffs[static_cast<size_t>(k)] = zeros ? count(k, *zeros) : count(k);
    return FormalSeries::from_poly(coeffs, K_);
}

std::vector<RationalGF> ShellTable::certify() const {
    const long q = lens_.q;
    const int n = lens_.n;
    if (K_ < q * (n + 1) + 2 * n)
        throw std::invalid_argument("certify: table truncated below q(n+1) + 2n");
    std::vector<RationalGF> out;
    out.reserve(static_cast<size_t>(n + 1));
    for (int l = 0; l <= n; ++l) {
        std::vector<std::pair<long, long>> factors;
        if (n - l > 0) factors.emplace_back(q, n - l);
        out.push_back(divide_exact(theta(l), factors, q * (n - l)));
    }
    return out;
}

ShellTable shell_counts(const LensParams& L, long K, long c) { return ShellTable(L, K, c); }

FormalSeries theta_series(const ShellTable& t, std::optional<int> zeros) {
    return t.theta(zeros);
}

std::vector<RationalGF> certify_theta(const ShellTable& t) { return t.certify(); }

}  // namespace lenspec
