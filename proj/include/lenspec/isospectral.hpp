#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lenspec/lattice.hpp"
#include "lenspec/lens.hpp"

namespace lenspec {

enum class IsoMode { zero, single_p, up_to_p0, all_p };

std::string to_string(IsoMode m);

/// Outcome of a certified isospectrality decision. Because every compared
/// series is a proven rational form, the boolean is exact: equality of the
/// truncations used implies equality of the full spectra.
struct IsoVerdict {
    IsoMode mode = IsoMode::zero;
    bool result = false;

    // Present exactly when result is false: the first differing coefficient.
    // k indexes the series; `index` is the zero-count l (all-p), the moment
    // order h (up-to-p0), or the series tag p-1 / p (single-p).
    struct Witness {
        long k = 0;
        int index = 0;
        std::string role;  // "ell", "moment", or "p"
    };
    std::optional<Witness> witness;

    long truncation_left = 0;
    long truncation_right = 0;
};

/// Thread-safe memoization of shell tables keyed by (q, s, twist, K).
/// Identical keys may occasionally be computed twice; the values agree.
class ShellTableCache {
public:
    std::shared_ptr<const ShellTable> get(const LensParams& L, long K, long twist = 0);

private:
    using Key = std::tuple<long, std::vector<long>, long, long>;
    std::mutex mu_;
    std::map<Key, std::shared_ptr<const ShellTable>> cache_;
};

struct DecideOptions {
    int p = 0;    // single_p mode
    int p0 = 0;   // up_to_p0 mode
    ShellTableCache* cache = nullptr;
};

// Exact decision for the requested flavor of isospectrality, via certified
// rational forms of the zero-count theta slices. The two spaces may have
// different q (each is certified at its own q(n+1) + 2n truncation and the
// forms are compared by cross-multiplication); n must agree.
IsoVerdict decide(const LensParams& a, const LensParams& b, IsoMode mode,
                  const DecideOptions& opts = {});

// The sufficient condition for the pair
//   L(r^2 t; 1 + d_1 r t, ...) / L(r^2 t; 1 - d_1 r t, ...)
// to be p-isospectral for all p: for every positive divisor u of r, either
// d_1..d_n are pairwise distinct mod u, or the level-u pair is isometric.
bool deford_doyle_check(long r, long t, const std::vector<long>& d);

// The two members of the pair above, reduced mod r^2 t.
std::pair<LensParams, LensParams> deford_doyle_pair(long r, long t,
                                                    const std::vector<long>& d);

// Whether {a, b} arises, up to isometry and in either order, as the pair of
// some (r >= 2, t, d) with r^2 t = q AND that form passes the check above.
// Exhaustive over the finitely many candidate forms.
bool deford_doyle_applicable(const LensParams& a, const LensParams& b);

/// Catalog of maximal families, mutually p-isospectral for every p in the
/// target set, each family holding >= 2 pairwise non-isometric members
/// (canonical-form classes; for orbifolds the same canonicalization is used
/// and families are classes of that relation).
struct FamilyCatalog {
    long q = 0;
    int n = 0;
    std::vector<int> iso_set;
    bool orbifolds_included = false;
    std::vector<std::vector<LensParams>> families;
    long classes_enumerated = 0;
    long tuples_scanned = 0;
    double seconds = 0.0;
};

struct SearchOptions {
    long budget = 50'000'000;  // cap on raw tuples scanned
    int threads = 0;           // 0: decide from LENSPEC_THREADS / hardware
};

FamilyCatalog search(long q, int n, const std::vector<int>& iso_set,
                     bool include_orbifolds, const SearchOptions& opts = {});

// Whether the degree-d covers L(q/d; s), L(q/d; s') of a 0-isospectral pair
// are again 0-isospectral. A theorem for manifolds; for orbifolds the result
// is conjecture evidence.
bool covering_test(const LensParams& a, const LensParams& b, long d,
                   ShellTableCache* cache = nullptr);

}  // namespace lenspec
