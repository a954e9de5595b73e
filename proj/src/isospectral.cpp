#include "lenspec/isospectral.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "lenspec/parallel.hpp"
#include "lenspec/spectra.hpp"

namespace lenspec {

std::string to_string(IsoMode m) {
    switch (m) {
        case IsoMode::zero: return "zero";
        case IsoMode::single_p: return "single-p";
        case IsoMode::up_to_p0: return "up-to-p0";
        case IsoMode::all_p: return "all-p";
    }
    return "?";
}

std::shared_ptr<const ShellTable> ShellTableCache::get(const LensParams& L, long K,
                                                       long twist) {
    Key key{L.q, L.s, twist, K};
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }
    // Computed outside the lock; a concurrent duplicate yields the same value.
    auto table = std::make_shared<const ShellTable>(L, K, twist);
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = cache_.emplace(std::move(key), std::move(table));
    (void)inserted;
    return it->second;
}

namespace {

struct CertifiedTheta {
    LensParams L;
    long K = 0;
    std::vector<RationalGF> slices;  // certified theta^(l), l = 0..n
};

CertifiedTheta certified_theta(const LensParams& L, ShellTableCache* cache) {
    CertifiedTheta c;
    c.L = L;
    c.K = L.certified_truncation();
    std::shared_ptr<const ShellTable> t;
    if (cache) {
        t = cache->get(L, c.K);
    } else {
        t = std::make_shared<const ShellTable>(L, c.K);
    }
    c.slices = t->certify();
    return c;
}

void poly_accumulate(Poly& acc, const Poly& term) {
    if (term.size() > acc.size()) acc.resize(term.size());
    for (size_t i = 0; i < term.size(); ++i) acc[i] += term[i];
}

// Numerator of sum_l weight_l(z) * theta^(l)(z) over (1 - z^q)^n.
Poly combine_slices(const CertifiedTheta& ct, const std::function<Poly(int)>& weight) {
    const int n = ct.L.n;
    Poly acc;
    for (int l = 0; l <= n; ++l) {
        Poly w = weight(l);
        if (poly_is_zero(w) || poly_is_zero(ct.slices[static_cast<size_t>(l)].numerator))
            continue;
        Poly term = poly_mul(ct.slices[static_cast<size_t>(l)].numerator,
                             one_minus_pow(ct.L.q, l));
        term = poly_mul(term, w);
        poly_accumulate(acc, term);
    }
    return acc;
}

Integer ipow(long base, int e) {
    Integer r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

// z^m A_m^(l)(z), a genuine polynomial since A_m has exponents >= -m.
Poly shifted_a_poly(int n, int m, int l) {
    LaurentPolynomial A = a_poly(n, m, l);
    Poly p(static_cast<size_t>(A.high() + m + 1), Integer(0));
    for (long e = A.low; e <= A.high(); ++e) p[static_cast<size_t>(e + m)] = A.at(e);
    return p;
}

// Lowest exponent at which the two rational forms pa/(1-z^qa)^e and
// pb/(1-z^qb)^e differ as full series (after undoing a z^shift), or nullopt
// when they are identical.
std::optional<long> cross_difference_low(const Poly& pa, long qa, const Poly& pb,
                                         long qb, long e, long shift) {
    Poly diff;
    if (qa == qb) {
        diff = poly_sub(pa, pb);
    } else {
        diff = poly_sub(poly_mul(pa, one_minus_pow(qb, e)),
                        poly_mul(pb, one_minus_pow(qa, e)));
    }
    long ld = poly_low_degree(diff);
    if (ld < 0) return std::nullopt;
    return ld - shift;
}

}  // namespace

IsoVerdict decide(const LensParams& a, const LensParams& b, IsoMode mode,
                  const DecideOptions& opts) {
    if (a.n != b.n)
        throw std::invalid_argument("decide: spaces have different dimensions");
    const int n = a.n;
    if (mode == IsoMode::single_p && (opts.p < 0 || opts.p > n - 1))
        throw std::invalid_argument("decide: need 0 <= p <= n-1");
    if (mode == IsoMode::up_to_p0 && (opts.p0 < 0 || opts.p0 > n - 1))
        throw std::invalid_argument("decide: need 0 <= p0 <= n-1");

    CertifiedTheta A = certified_theta(a, opts.cache);
    CertifiedTheta B = certified_theta(b, opts.cache);

    IsoVerdict v;
    v.mode = mode;
    v.result = true;
    v.truncation_left = A.K;
    v.truncation_right = B.K;

    auto consider = [&](std::optional<long> k, int index, const char* role) {
        if (!k) return;
        v.result = false;
        if (!v.witness || *k < v.witness->k ||
            (*k == v.witness->k && index < v.witness->index))
            v.witness = IsoVerdict::Witness{*k, index, role};
    };

    switch (mode) {
        case IsoMode::zero: {
            auto unit = [](int) { return Poly{1}; };
            consider(cross_difference_low(combine_slices(A, unit), a.q,
                                          combine_slices(B, unit), b.q, n, 0),
                     0, "theta");
            break;
        }
        case IsoMode::all_p: {
            for (int l = 0; l <= n; ++l)
                consider(cross_difference_low(A.slices[static_cast<size_t>(l)].numerator,
                                              a.q,
                                              B.slices[static_cast<size_t>(l)].numerator,
                                              b.q, n - l, 0),
                         l, "ell");
            break;
        }
        case IsoMode::up_to_p0: {
            for (int h = 0; h <= opts.p0; ++h) {
                auto weight = [&](int l) { return Poly{ipow(l, h)}; };
                consider(cross_difference_low(combine_slices(A, weight), a.q,
                                              combine_slices(B, weight), b.q, n, 0),
                         h, "moment");
            }
            break;
        }
        case IsoMode::single_p: {
            for (int m : {opts.p, opts.p + 1}) {
                if (m == 0) continue;  // F^{-1} vanishes identically
                auto weight = [&](int l) { return shifted_a_poly(n, m, l); };
                consider(cross_difference_low(combine_slices(A, weight), a.q,
                                              combine_slices(B, weight), b.q, n, m),
                         m - 1, "p");
            }
            break;
        }
    }
    return v;
}

std::pair<LensParams, LensParams> deford_doyle_pair(long r, long t,
                                                    const std::vector<long>& d) {
    if (r < 1 || t < 1) throw std::invalid_argument("deford_doyle_pair: need r, t >= 1");
    const long q = r * r * t;
    std::vector<long> sp, sm;
    sp.reserve(d.size());
    sm.reserve(d.size());
    for (long dj : d) {
        sp.push_back(mod_norm(1 + dj * r * t, q));
        sm.push_back(mod_norm(1 - dj * r * t, q));
    }
    const int n = static_cast<int>(d.size());
    return {validate(n, q, sp), validate(n, q, sm)};
}

bool deford_doyle_check(long r, long t, const std::vector<long>& d) {
    if (r < 1 || t < 1) throw std::invalid_argument("deford_doyle_check: need r, t >= 1");
    const int n = static_cast<int>(d.size());
    for (long u : divisors(r)) {
        std::vector<long> residues;
        residues.reserve(d.size());
        for (long dj : d) residues.push_back(mod_norm(dj, u));
        std::sort(residues.begin(), residues.end());
        bool distinct = std::adjacent_find(residues.begin(), residues.end()) ==
                        residues.end();
        if (distinct) continue;
        const long qu = u * u * t;
        std::vector<long> sp, sm;
        for (long dj : d) {
            sp.push_back(mod_norm(1 + dj * u * t, qu));
            sm.push_back(mod_norm(1 - dj * u * t, qu));
        }
        if (!is_isometric(validate(n, qu, sp), validate(n, qu, sm))) return false;
    }
    return true;
}

bool deford_doyle_applicable(const LensParams& a, const LensParams& b) {
    if (a.q != b.q || a.n != b.n) return false;
    const long q = a.q;
    const int n = a.n;
    const CanonicalForm fa = canonical_form(a), fb = canonical_form(b);
    for (long r = 2; r * r <= q; ++r) {
        if (q % (r * r) != 0) continue;
        const long t = q / (r * r);
        // d only matters mod r
        std::vector<long> d(static_cast<size_t>(n), 0);
        std::function<bool(int)> scan = [&](int pos) -> bool {
            if (pos == n) {
                auto [P, M] = deford_doyle_pair(r, t, d);
                CanonicalForm fp = canonical_form(P), fm = canonical_form(M);
                bool matches = (fp == fa && fm == fb) || (fp == fb && fm == fa);
                return matches && deford_doyle_check(r, t, d);
            }
            for (long v = 0; v < r; ++v) {
                d[static_cast<size_t>(pos)] = v;
                if (scan(pos + 1)) return true;
            }
            return false;
        };
        if (scan(0)) return true;
    }
    return false;
}

namespace {

std::string fingerprint_key(const ShellTable& tab, const std::vector<int>& iso_set,
                            long kmax) {
    std::string key;
    auto append_series = [&](const FormalSeries& f, long upto) {
        for (long k = 0; k <= std::min(upto, f.order()); ++k) {
            key += f.at(k).get_str();
            key += ',';
        }
        key += '|';
    };
    for (int p : iso_set) {
        if (p == 0) {
            append_series(tab.theta(), kmax);
        } else {
            append_series(fp_gf(tab, p - 1), kmax);
            append_series(fp_gf(tab, p), kmax);
        }
    }
    return key;
}

std::string poly_key(const Poly& p) {
    std::string key;
    long deg = poly_degree(p);
    for (long i = 0; i <= deg; ++i) {
        key += p[static_cast<size_t>(i)].get_str();
        key += ',';
    }
    return key;
}

// Exact bucket key: certified numerators of the series that characterize
// p-isospectrality for every p in iso_set. All candidates share (q, n), so
// equal keys mean equal full spectra.
std::string exact_key(const CertifiedTheta& ct, const std::vector<int>& iso_set) {
    const int n = ct.L.n;
    std::vector<int> ms;
    for (int p : iso_set) {
        if (p == 0) ms.push_back(0);
        if (p >= 1) {
            ms.push_back(p);
            ms.push_back(p + 1);
        }
    }
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    std::string key;
    for (int m : ms) {
        Poly s = m == 0
                     ? combine_slices(ct, [](int) { return Poly{1}; })
                     : combine_slices(ct, [&](int l) { return shifted_a_poly(n, m, l); });
        key += poly_key(s);
        key += '|';
    }
    return key;
}

}  // namespace

FamilyCatalog search(long q, int n, const std::vector<int>& iso_set,
                     bool include_orbifolds, const SearchOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    if (q < 1 || n < 2) throw std::invalid_argument("search: need q >= 1, n >= 2");
    std::vector<int> I = iso_set;
    std::sort(I.begin(), I.end());
    I.erase(std::unique(I.begin(), I.end()), I.end());
    if (I.empty() || I.front() < 0 || I.back() > n - 1)
        throw std::invalid_argument("search: iso-set must be a nonempty subset of 0..n-1");

    FamilyCatalog cat;
    cat.q = q;
    cat.n = n;
    cat.iso_set = I;
    cat.orbifolds_included = include_orbifolds;

    // Every isometry class has a representative with sorted entries in
    // [0, q/2] (fold signs, sort); scanning those and deduplicating by
    // canonical form covers all classes without the full q^n sweep.
    const long half = q / 2;
    std::set<CanonicalForm> seen;
    std::vector<LensParams> reps;
    std::vector<long> tuple(static_cast<size_t>(n), 0);
    std::function<void(int, long)> enumerate = [&](int pos, long minval) {
        if (pos == n) {
            if (++cat.tuples_scanned > opts.budget)
                throw BudgetExceeded("search: more than " + std::to_string(opts.budget) +
                                     " tuples at q=" + std::to_string(q) +
                                     ", n=" + std::to_string(n));
            long g = q;
            bool free_action = true;
            for (long v : tuple) {
                g = gcd_long(g, v);
                if (gcd_long(q, v) != 1) free_action = false;
            }
            if (g != 1) return;
            if (!include_orbifolds && !free_action) return;
            LensParams L = validate(n, q, tuple);
            CanonicalForm form = canonical_form(L);
            if (seen.insert(form).second)
                reps.push_back(validate(n, q, form.values));
            return;
        }
        for (long v = minval; v <= half; ++v) {
            tuple[static_cast<size_t>(pos)] = v;
            enumerate(pos + 1, v);
        }
    };
    enumerate(0, 0);
    std::sort(reps.begin(), reps.end(),
              [](const LensParams& x, const LensParams& y) { return x.s < y.s; });
    cat.classes_enumerated = static_cast<long>(reps.size());

    // Staged sieve: cheap truncated fingerprints first, certified numerators
    // only inside buckets that survive with two or more members.
    const long kmax = std::min(2 * q, 32L + n);
    std::vector<std::string> fingerprints(reps.size());
    parallel_for(
        static_cast<long>(reps.size()),
        [&](long i) {
            ShellTable tab(reps[static_cast<size_t>(i)], kmax + n + 1);
            fingerprints[static_cast<size_t>(i)] = fingerprint_key(tab, I, kmax);
        },
        opts.threads);

    std::map<std::string, std::vector<size_t>> coarse;
    for (size_t i = 0; i < reps.size(); ++i) coarse[fingerprints[i]].push_back(i);

    std::vector<size_t> survivors;
    for (const auto& [key, members] : coarse)
        if (members.size() >= 2)
            survivors.insert(survivors.end(), members.begin(), members.end());

    std::vector<std::string> exact(reps.size());
    parallel_for(
        static_cast<long>(survivors.size()),
        [&](long i) {
            size_t idx = survivors[static_cast<size_t>(i)];
            CertifiedTheta ct = certified_theta(reps[idx], nullptr);
            exact[idx] = exact_key(ct, I);
        },
        opts.threads);

    std::map<std::string, std::vector<size_t>> fine;
    for (size_t idx : survivors) fine[exact[idx]].push_back(idx);
    for (const auto& [key, members] : fine) {
        if (members.size() < 2) continue;
        std::vector<LensParams> family;
        family.reserve(members.size());
        for (size_t idx : members) family.push_back(reps[idx]);
        std::sort(family.begin(), family.end(),
                  [](const LensParams& x, const LensParams& y) { return x.s < y.s; });
        cat.families.push_back(std::move(family));
    }
    std::sort(cat.families.begin(), cat.families.end(),
              [](const auto& x, const auto& y) { return x.front().s < y.front().s; });

    cat.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return cat;
}

bool covering_test(const LensParams& a, const LensParams& b, long d,
                   ShellTableCache* cache) {
    if (a.q != b.q || d < 1 || a.q % d != 0)
        throw NotADivisor("covering_test: d must divide the common group order");
    const long qd = a.q / d;
    std::vector<long> sa = a.s, sb = b.s;
    for (auto& x : sa) x = mod_norm(x, qd);
    for (auto& x : sb) x = mod_norm(x, qd);
    DecideOptions opts;
    opts.cache = cache;
    return decide(validate(a.n, qd, sa), validate(b.n, qd, sb), IsoMode::zero, opts).result;
}

}  // namespace lenspec
