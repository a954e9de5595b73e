#pragma once

#include <string>
#include <vector>

#include "lenspec/errors.hpp"
#include "lenspec/integers.hpp"

namespace lenspec {

enum class Kind { manifold, orbifold };

/// Parameters (n, q, s_1..s_n) of a lens space or lens orbifold
/// L(q; s_1,...,s_n), the quotient of S^{2n-1} by the cyclic rotation group
/// of order q with rotation parameters s_j.
///
/// Invariants (enforced by validate):
///   - gcd(q, s_1, ..., s_n) = 1, so the generator really has order q;
///   - every s_j reduced into [0, q-1];
///   - kind == manifold exactly when every gcd(q, s_j) = 1.
struct LensParams {
    int n = 0;
    long q = 0;
    std::vector<long> s;
    Kind kind = Kind::manifold;

    bool is_manifold() const noexcept { return kind == Kind::manifold; }
    // Default truncation q(n+1) + 2n used for every certified comparison.
    long certified_truncation() const noexcept { return q * (n + 1) + 2 * n; }
    std::string name() const;

    bool operator==(const LensParams& o) const {
        return n == o.n && q == o.q && s == o.s;
    }
};

/// Isometry-class key of a lens space: the lexicographically least, over all
/// unit multipliers t mod q, of the sorted folded residues
/// { min(t*s_j mod q, q - t*s_j mod q) }. Folding absorbs the sign choices,
/// sorting the permutation, and the minimum over t the unit scaling, so two
/// spaces have equal keys exactly when the classical isometry condition holds.
struct CanonicalForm {
    int n = 0;
    long q = 0;
    std::vector<long> values;  // sorted, each in [0, q/2]

    bool operator==(const CanonicalForm& o) const {
        return n == o.n && q == o.q && values == o.values;
    }
    bool operator<(const CanonicalForm& o) const {
        if (q != o.q) return q < o.q;
        if (n != o.n) return n < o.n;
        return values < o.values;
    }
};

LensParams validate(int n, long q, const std::vector<long>& s);

CanonicalForm canonical_form(const LensParams& L);

bool is_isometric(const LensParams& a, const LensParams& b);

}  // namespace lenspec
