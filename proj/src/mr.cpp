#include "lrcmr/mr.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>

#include "lrcmr/comb.hpp"
#include "lrcmr/parallel.hpp"

namespace lrcmr {

std::uint64_t MrParams::n() const {
    std::uint64_t v = 1;
    for (std::uint32_t i = 0; i < b; ++i) v *= q;
    return v - 1;
}

std::uint32_t MrParams::validate(bool cyclic_family) const {
    if (r < 2 || delta < 2) fail("ParamViolation", "r and delta must be >= 2");
    if (q < 2) fail("ParamViolation", "q must be a prime power >= 2");
    std::uint64_t nn = n();
    std::size_t aa = a();
    if (nn % aa != 0) fail("ParamViolation", "a = r+delta-1 must divide n = q^b-1");
    std::uint32_t b1 = 0;
    std::uint64_t qpow = 1;
    for (std::uint32_t i = 1; i <= b; ++i) {
        qpow *= q;
        if (b % i == 0 && (qpow - 1) % aa == 0) {
            b1 = i;
            break;
        }
    }
    if (b1 == 0) fail("ParamViolation", "a divides no subfield group order q^b1 - 1");
    std::uint64_t mm = m();
    if (cyclic_family) {
        if (gcd_u64(delta, mm) != 1) fail("ParamViolation", "gcd(delta, m) must be 1");
    } else {
        if (gcd_u64(s, mm) != 1) fail("ParamViolation", "gcd(s, m) must be 1");
    }
    if (m() * r < 2) fail("ParamViolation", "k = mr-2 must be >= 0");
    return b1;
}

FieldPtr MrParams::make_field() const {
    // factor q as p^e
    std::uint64_t base = q;
    std::uint32_t p = 0;
    for (std::uint64_t d = 2; d * d <= base; ++d) {
        if (base % d == 0) {
            p = static_cast<std::uint32_t>(d);
            break;
        }
    }
    std::uint32_t e = 0;
    if (p == 0) {
        p = static_cast<std::uint32_t>(base);
        e = 1;
    } else {
        std::uint64_t t = base;
        while (t > 1) {
            if (t % p != 0) fail("ParamViolation", "q is not a prime power");
            t /= p;
            ++e;
        }
    }
    return Field::make(p, e * b);
}

LinearCode build_cyclic_mr(const MrParams& params) {
    params.validate(true);
    std::uint64_t n = params.n(), m = params.m();
    std::size_t a = params.a(), delta = params.delta;
    FieldPtr f = params.make_field();

    std::vector<std::size_t> roots;
    for (std::uint64_t j = 1; j <= m; ++j)
        for (std::size_t t = 1; t + 1 <= delta; ++t)
            roots.push_back(static_cast<std::size_t>((j * a + t) % n));
    roots.push_back(0);
    roots.push_back(delta % n);

    LinearCode c = code_from_roots(f, static_cast<std::size_t>(n), roots);
    if (c.k != params.k()) fail("ParamViolation", "root set does not give k = mr-2");
    if (!is_cyclic(c)) fail("ParamViolation", "constructed code is not cyclic");
    return c;
}

Matrix cyclic_mr_parity(const MrParams& params) {
    params.validate(true);
    std::uint64_t n = params.n(), m = params.m();
    std::size_t delta = params.delta;
    FieldPtr f = params.make_field();
    gf_t beta = f->alpha_pow(m);          // order a
    gf_t gamma = f->alpha_pow(delta);

    std::size_t rows = static_cast<std::size_t>(m) * (delta - 1) + 2;
    Matrix h(f, rows, static_cast<std::size_t>(n));
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t coset = c % m;
        std::size_t slab = c / m;
        for (std::size_t t = 1; t + 1 <= delta; ++t)
            h.set(coset * (delta - 1) + (t - 1), c,
                  f->pow(beta, static_cast<long long>(t * slab)));
        h.set(rows - 2, c, 1);
        h.set(rows - 1, c, f->pow(gamma, static_cast<long long>(c)));
    }
    return h;
}

LinearCode build_known_mr(const MrParams& params) {
    params.validate(false);
    std::uint64_t n = params.n(), m = params.m();
    std::size_t delta = params.delta;
    FieldPtr f = params.make_field();
    gf_t beta = f->alpha_pow(m);
    // lambda is a primitive m-th root of unity, (alpha^a)^s with gcd(s,m)=1;
    // the lambda row then has period m, matching its per-slab repetition
    gf_t lambda = f->alpha_pow(static_cast<std::uint64_t>(params.a()) * params.s);

    std::size_t rows = static_cast<std::size_t>(m) * (delta - 1) + 2;
    Matrix h(f, rows, static_cast<std::size_t>(n));
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t coset = c % m;
        std::size_t slab = c / m;
        for (std::size_t t = 1; t + 1 <= delta; ++t)
            h.set(coset * (delta - 1) + (t - 1), c,
                  f->pow(beta, static_cast<long long>(t * slab)));
        h.set(rows - 2, c, f->pow(lambda, static_cast<long long>(coset)));
        h.set(rows - 1, c, f->pow(beta, static_cast<long long>(delta * slab)));
    }
    LinearCode code = code_from_parity(h);
    if (code.k != params.k()) fail("ParamViolation", "parity matrix does not give k = mr-2");
    code.H = std::move(h);  // full row rank by the dimension check
    return code;
}

bool mr_erasure_correctable(const LinearCode& c, const LocalityProfile& profile,
                            const std::vector<std::size_t>& pattern) {
    if (!profile.verified) fail("UnverifiedProfile", "profile must be verified");
    if (pattern.empty()) return true;
    return c.H.columns(pattern).rank() == pattern.size();
}

namespace {

struct SearchState {
    bool failed = false;
    std::uint64_t checked = 0;
    std::optional<std::vector<std::size_t>> witness;
};

void merge_state(SearchState& acc, const SearchState& x) {
    acc.checked += x.checked;
    if (!acc.failed && x.failed) {  // chunk order = lexicographic order: first witness wins
        acc.failed = true;
        acc.witness = x.witness;
    }
}

// Keep-selection with global index `idx`: per-set combination indices in
// mixed radix, lexicographic overall.
std::vector<std::size_t> selection_pattern(const std::vector<std::vector<std::size_t>>& sets,
                                           std::size_t drop, std::uint64_t idx) {
    std::vector<std::size_t> dropped;
    // most significant digit = first set
    std::vector<std::uint64_t> radices(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) radices[i] = binom(sets[i].size(), drop);
    std::vector<std::uint64_t> digits(sets.size());
    for (std::size_t i = sets.size(); i-- > 0;) {
        digits[i] = idx % radices[i];
        idx /= radices[i];
    }
    for (std::size_t i = 0; i < sets.size(); ++i) {
        auto combo = combination_unrank(sets[i].size(), drop, digits[i]);
        for (auto pos : combo) dropped.push_back(sets[i][pos]);
    }
    std::sort(dropped.begin(), dropped.end());
    return dropped;
}

MrVerdict run_definition(const LinearCode& c, const LocalityProfile& profile, unsigned jobs) {
    std::size_t drop = profile.delta - 1;
    std::uint64_t total = 1;
    for (const auto& s : profile.partition) {
        total *= binom(s.size(), drop);
        if (total > 1000000ull) fail("TooLarge", "definition-mode enumeration above 10^6");
    }

    SearchState st = chunked_reduce<SearchState>(
        static_cast<std::size_t>(total), jobs, SearchState{},
        [&](std::size_t lo, std::size_t hi, SearchState& out) {
            std::vector<std::size_t> all = all_coordinates(c.n);
            for (std::uint64_t idx = lo; idx < hi && !out.failed; ++idx) {
                std::vector<std::size_t> dropped = selection_pattern(profile.partition, drop, idx);
                std::vector<std::size_t> kept;
                std::set_difference(all.begin(), all.end(), dropped.begin(), dropped.end(),
                                    std::back_inserter(kept));
                LinearCode punct = puncture(c, kept);
                ++out.checked;
                auto viol = mds_violation(punct);
                if (viol) {
                    // translate back to original coordinates and join with the
                    // dropped positions: a full uncorrectable pattern
                    std::vector<std::size_t> pattern = dropped;
                    for (auto local : *viol) pattern.push_back(kept[local]);
                    std::sort(pattern.begin(), pattern.end());
                    out.failed = true;
                    out.witness = std::move(pattern);
                }
            }
        },
        merge_state);

    MrVerdict v;
    v.mr = !st.failed;
    v.mode = "definition";
    v.checked = st.checked;
    v.witness = st.witness;
    return v;
}

// All fastpath core patterns, lexicographic: first the single-set patterns
// (delta+1 erasures inside one set), then the two-set patterns (delta each).
std::vector<std::vector<std::size_t>> fastpath_family(const LocalityProfile& profile,
                                                      std::size_t n) {
    (void)n;
    std::vector<std::vector<std::size_t>> fam;
    std::size_t delta = profile.delta;
    for (const auto& s : profile.partition) {
        if (s.size() < delta + 1) continue;
        for_each_combination(s.size(), delta + 1, [&](const std::vector<std::size_t>& pick) {
            std::vector<std::size_t> pat;
            for (auto i : pick) pat.push_back(s[i]);
            std::sort(pat.begin(), pat.end());
            fam.push_back(std::move(pat));
            return true;
        });
    }
    for (std::size_t i = 0; i < profile.partition.size(); ++i)
        for (std::size_t j = i + 1; j < profile.partition.size(); ++j) {
            const auto& si = profile.partition[i];
            const auto& sj = profile.partition[j];
            for_each_combination(si.size(), delta, [&](const std::vector<std::size_t>& pi) {
                for_each_combination(sj.size(), delta, [&](const std::vector<std::size_t>& pj) {
                    std::vector<std::size_t> pat;
                    for (auto x : pi) pat.push_back(si[x]);
                    for (auto x : pj) pat.push_back(sj[x]);
                    std::sort(pat.begin(), pat.end());
                    fam.push_back(std::move(pat));
                    return true;
                });
                return true;
            });
        }
    return fam;
}

MrVerdict run_fastpath(const LinearCode& c, const LocalityProfile& profile, unsigned jobs) {
    auto fam = fastpath_family(profile, c.n);
    SearchState st = chunked_reduce<SearchState>(
        fam.size(), jobs, SearchState{},
        [&](std::size_t lo, std::size_t hi, SearchState& out) {
            for (std::size_t i = lo; i < hi && !out.failed; ++i) {
                ++out.checked;
                if (c.H.columns(fam[i]).rank() != fam[i].size()) {
                    out.failed = true;
                    out.witness = fam[i];
                }
            }
        },
        merge_state);

    MrVerdict v;
    v.mr = !st.failed;
    v.mode = "fastpath";
    v.checked = st.checked;
    v.witness = st.witness;
    return v;
}

MrVerdict run_sampled(const LinearCode& c, const LocalityProfile& profile, unsigned jobs,
                      std::uint64_t samples, std::uint64_t seed) {
    // single-set patterns exhaustively (they are few), then deterministic
    // fixed-seed two-set samples up to the requested count
    std::size_t delta = profile.delta;
    std::vector<std::vector<std::size_t>> pats;
    for (const auto& s : profile.partition) {
        if (s.size() < delta + 1) continue;
        for_each_combination(s.size(), delta + 1, [&](const std::vector<std::size_t>& pick) {
            std::vector<std::size_t> pat;
            for (auto i : pick) pat.push_back(s[i]);
            pats.push_back(std::move(pat));
            return pats.size() < samples;
        });
        if (pats.size() >= samples) break;
    }
    std::mt19937_64 rng(seed);
    std::size_t msets = profile.partition.size();
    while (pats.size() < samples && msets >= 2) {
        std::size_t i = rng() % msets, j = rng() % msets;
        if (i == j) continue;
        const auto& si = profile.partition[i];
        const auto& sj = profile.partition[j];
        std::vector<std::size_t> pat;
        auto pick_from = [&](const std::vector<std::size_t>& s) {
            std::vector<std::size_t> idx(s.size());
            std::iota(idx.begin(), idx.end(), 0);
            for (std::size_t t = 0; t < delta; ++t) {
                std::size_t swap_with = t + rng() % (idx.size() - t);
                std::swap(idx[t], idx[swap_with]);
                pat.push_back(s[idx[t]]);
            }
        };
        pick_from(si);
        pick_from(sj);
        std::sort(pat.begin(), pat.end());
        pats.push_back(std::move(pat));
    }

    SearchState st = chunked_reduce<SearchState>(
        pats.size(), jobs, SearchState{},
        [&](std::size_t lo, std::size_t hi, SearchState& out) {
            for (std::size_t i = lo; i < hi && !out.failed; ++i) {
                ++out.checked;
                if (c.H.columns(pats[i]).rank() != pats[i].size()) {
                    out.failed = true;
                    out.witness = pats[i];
                }
            }
        },
        merge_state);

    MrVerdict v;
    v.mr = !st.failed;
    v.mode = "sampled";
    v.checked = st.checked;
    v.witness = st.witness;
    return v;
}

}  // namespace

bool fastpath_calibrated() {
    // calls run_* directly: going through verify_mr here would recurse into
    // this function's own static initialization
    static const bool ok = [] {
        MrParams ref{4, 2, 2, 2, 1};
        LinearCode c = build_cyclic_mr(ref);
        auto profile = discover_repair_partition(c, ref.r, ref.delta);
        if (!profile) return false;
        MrVerdict d = run_definition(c, *profile, 1);
        MrVerdict f = run_fastpath(c, *profile, 1);
        return d.mr == f.mr && d.mr;
    }();
    return ok;
}

MrVerdict verify_mr(const LinearCode& c, const LocalityProfile& profile, std::size_t h,
                    MrMode mode, unsigned jobs, std::uint64_t samples, std::uint64_t seed) {
    if (!profile.verified) fail("UnverifiedProfile", "profile must be verified");
    std::size_t cover = 0;
    for (const auto& s : profile.partition) cover += s.size();
    if (cover != c.n) fail("UnverifiedProfile", "partition does not cover all coordinates");
    std::size_t implied_h = c.n - (profile.delta - 1) * profile.partition.size() - c.k;
    if (implied_h != h) fail("ParamViolation", "h does not match n - (delta-1)m - k");
    if ((mode == MrMode::FastPath || mode == MrMode::Both || mode == MrMode::Sampled) && h != 2)
        fail("ModeUnsupported", "fastpath peeling argument requires h = 2");

    auto t0 = std::chrono::steady_clock::now();
    MrVerdict v;
    switch (mode) {
        case MrMode::Definition:
            v = run_definition(c, profile, jobs);
            break;
        case MrMode::FastPath:
            v = run_fastpath(c, profile, jobs);
            v.calibrated = fastpath_calibrated();
            break;
        case MrMode::Sampled:
            v = run_sampled(c, profile, jobs, samples, seed);
            v.calibrated = fastpath_calibrated();
            break;
        case MrMode::Both: {
            MrVerdict d = run_definition(c, profile, jobs);
            MrVerdict f = run_fastpath(c, profile, jobs);
            if (d.mr != f.mr) fail("OracleDisagreement", "definition and fastpath verdicts differ");
            v = d;
            v.mode = "both";
            v.checked = d.checked + f.checked;
            if (!v.witness) v.witness = f.witness;
            break;
        }
    }
    v.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    return v;
}

bool full_rank_cert(const MrParams& params, const std::vector<std::size_t>& t1,
                    const std::vector<std::size_t>& t2, std::size_t i1, std::size_t i2) {
    params.validate(true);
    std::uint64_t m = params.m();
    std::size_t a = params.a(), delta = params.delta;
    if (i1 == i2 || i1 >= m || i2 >= m) fail("BadIndex", "need distinct coset indices in [m]");
    if (t1.size() != delta || t2.size() != delta) fail("BadIndex", "T1, T2 must be delta-subsets");
    for (auto t : t1)
        if (t >= a) fail("BadIndex", "T1 entry out of [a]");
    for (auto t : t2)
        if (t >= a) fail("BadIndex", "T2 entry out of [a]");

    FieldPtr f = params.make_field();
    gf_t beta = f->alpha_pow(m);
    gf_t gamma = f->alpha_pow(delta);

    std::size_t dim = 2 * delta;
    Matrix mtx(f, dim, dim);
    for (std::size_t col = 0; col < delta; ++col) {
        for (std::size_t j = 1; j + 1 <= delta; ++j) {
            mtx.set(j - 1, col, f->pow(beta, static_cast<long long>(j * t1[col])));
            mtx.set((delta - 1) + (j - 1), col + delta,
                    f->pow(beta, static_cast<long long>(j * t2[col])));
        }
        mtx.set(dim - 2, col, 1);
        mtx.set(dim - 2, col + delta, 1);
        mtx.set(dim - 1, col, f->pow(gamma, static_cast<long long>(t1[col] * m + i1)));
        mtx.set(dim - 1, col + delta, f->pow(gamma, static_cast<long long>(t2[col] * m + i2)));
    }
    return mtx.rank() == dim;
}

}  // namespace lrcmr
