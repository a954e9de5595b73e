#include "lenspec/lens.hpp"

#include <algorithm>
#include <sstream>

namespace lenspec {

std::string LensParams::name() const {
    std::ostringstream os;
    os << "L(" << q << ";";
    for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << ")";
    return os.str();
}

LensParams validate(int n, long q, const std::vector<long>& s) {
    if (n < 2) throw std::invalid_argument("validate: n must be >= 2");
    if (q < 1) throw std::invalid_argument("validate: q must be >= 1");
    if (static_cast<int>(s.size()) != n)
        throw ArityMismatch("expected " + std::to_string(n) + " rotation parameters, got " +
                            std::to_string(s.size()));
    LensParams L;
    L.n = n;
    L.q = q;
    L.s.reserve(s.size());
    long g = q;
    bool free_action = true;
    for (long v : s) {
        long r = mod_norm(v, q);
        L.s.push_back(r);
        g = gcd_long(g, r);
        if (gcd_long(q, r) != 1) free_action = false;
    }
    if (g != 1)
        throw GcdViolation("gcd(q, s_1, ..., s_n) = " + std::to_string(g) + " for " + L.name());
    L.kind = free_action ? Kind::manifold : Kind::orbifold;
    return L;
}

namespace {

// Sorted multiset {min(t*s_j mod q, q - t*s_j mod q)}.
std::vector<long> folded(const std::vector<long>& s, long t, long q) {
    std::vector<long> v;
    v.reserve(s.size());
    for (long x : s) {
        long r = mod_norm(t * x, q);
        v.push_back(std::min(r, q - r));
    }
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

CanonicalForm canonical_form(const LensParams& L) {
    CanonicalForm best;
    best.n = L.n;
    best.q = L.q;
    bool first = true;
    for (long t : unit_residues(L.q)) {
        std::vector<long> v = folded(L.s, L.q == 1 ? 1 : t, L.q);
        if (first || v < best.values) {
            best.values = std::move(v);
            first = false;
        }
    }
    return best;
}

bool is_isometric(const LensParams& a, const LensParams& b) {
    if (a.n != b.n || a.q != b.q) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace lenspec
