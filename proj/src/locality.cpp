#include "lrcmr/locality.hpp"

#include <algorithm>
#include <set>

#include "lrcmr/comb.hpp"

namespace lrcmr {

std::pair<std::size_t, std::size_t> normalize_uv(std::size_t k, std::size_t r) {
    std::size_t v = k % r;
    std::size_t u = k / r;
    if (v == 0) {
        v = r;
        u = (u == 0) ? 0 : u - 1;
    }
    return {u, v};
}

bool verify_repair_set(const LinearCode& c, const std::vector<std::size_t>& s, std::size_t r,
                       std::size_t delta) {
    if (s.empty()) fail("EmptySet", "repair set");
    if (s.size() > r + delta - 1) return false;
    LinearCode local = puncture(c, s);
    if (local.k == 0) return true;  // no nonzero local codewords, vacuous
    auto d = min_distance(local, local.n);  // cap at n: exact distance
    return d.has_value() && *d >= delta;
}

namespace {

bool verify_partition(const LinearCode& c, const std::vector<std::vector<std::size_t>>& parts,
                      std::size_t r, std::size_t delta) {
    std::vector<bool> covered(c.n, false);
    for (const auto& s : parts) {
        if (!verify_repair_set(c, s, r, delta)) return false;
        for (auto j : s) {
            if (j >= c.n || covered[j]) return false;
            covered[j] = true;
        }
    }
    return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

// Backtracking over verified a-subsets, always extending from the smallest
// uncovered coordinate; the first full cover found is lexicographically
// least.
bool exhaustive_partition(const LinearCode& c, std::size_t a, std::size_t r, std::size_t delta,
                          std::vector<bool>& covered, std::vector<std::vector<std::size_t>>& acc) {
    std::size_t first = c.n;
    for (std::size_t j = 0; j < c.n; ++j)
        if (!covered[j]) {
            first = j;
            break;
        }
    if (first == c.n) return true;

    std::vector<std::size_t> rest;
    for (std::size_t j = first + 1; j < c.n; ++j)
        if (!covered[j]) rest.push_back(j);
    if (rest.size() + 1 < a) return false;

    bool found = false;
    for_each_combination(rest.size(), a - 1, [&](const std::vector<std::size_t>& pick) {
        std::vector<std::size_t> s{first};
        for (auto i : pick) s.push_back(rest[i]);
        if (!verify_repair_set(c, s, r, delta)) return true;  // keep searching
        for (auto j : s) covered[j] = true;
        acc.push_back(s);
        if (exhaustive_partition(c, a, r, delta, covered, acc)) {
            found = true;
            return false;
        }
        acc.pop_back();
        for (auto j : s) covered[j] = false;
        return true;
    });
    return found;
}

}  // namespace

std::optional<LocalityProfile> discover_repair_partition(const LinearCode& c, std::size_t r,
                                                         std::size_t delta) {
    std::size_t a = r + delta - 1;
    if (a == 0 || c.n == 0) return std::nullopt;

    if (c.n % a == 0) {
        std::size_t m = c.n / a;
        std::vector<std::vector<std::size_t>> cosets;
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<std::size_t> s;
            for (std::size_t x = 0; x < a; ++x) s.push_back(x * m + i);
            cosets.push_back(std::move(s));
        }
        if (verify_partition(c, cosets, r, delta))
            return LocalityProfile{r, delta, std::move(cosets), true};
    }

    if (c.n % a != 0 || c.n > 24) return std::nullopt;
    std::vector<bool> covered(c.n, false);
    std::vector<std::vector<std::size_t>> acc;
    if (exhaustive_partition(c, a, r, delta, covered, acc))
        return LocalityProfile{r, delta, std::move(acc), true};
    return std::nullopt;
}

long long lrc_singleton_bound(std::size_t n, std::size_t k, std::size_t r, std::size_t delta) {
    if (k < 1 || k > n || r < 1 || delta < 2) fail("OutOfRange", "bound parameters");
    long long ceil_kr = static_cast<long long>((k + r - 1) / r);
    return static_cast<long long>(n) - static_cast<long long>(k) + 1 -
           (ceil_kr - 1) * static_cast<long long>(delta - 1);
}

bool is_optimal_lrc(const LinearCode& c, const LocalityProfile& profile) {
    if (!profile.verified) fail("UnverifiedProfile", "profile must be verified");
    auto d = min_distance(c, c.n);
    return d.has_value() &&
           static_cast<long long>(*d) == lrc_singleton_bound(c.n, c.k, profile.r, profile.delta);
}

StructureReport check_coset_structure(const LinearCode& c, std::size_t r, std::size_t delta) {
    if (!is_cyclic(c)) fail("NotCyclic", "coset structure requires a cyclic code");
    if (c.n > 20) fail("TooLarge", "exhaustive Gamma scan capped at n <= 20");

    StructureReport rep;
    auto [u, v] = normalize_uv(c.k, r);
    rep.u = u;
    rep.v = v;
    rep.hypothesis_met = u >= 2 * (r - v + 1);

    std::size_t a = r + delta - 1;
    std::vector<std::vector<std::size_t>> gamma;
    for (std::size_t size = 1; size <= a && size <= c.n; ++size) {
        for_each_combination(c.n, size, [&](const std::vector<std::size_t>& s) {
            if (verify_repair_set(c, s, r, delta)) gamma.push_back(s);
            return true;
        });
    }
    rep.gamma_size = gamma.size();

    rep.all_dichotomy = true;
    std::set<std::vector<std::size_t>> gamma_set(gamma.begin(), gamma.end());
    for (const auto& s : gamma) {
        for (std::size_t j = 1; j < c.n; ++j) {
            std::vector<std::size_t> shifted;
            shifted.reserve(s.size());
            for (auto x : s) shifted.push_back((x + j) % c.n);
            std::sort(shifted.begin(), shifted.end());
            bool equal = shifted == s;
            bool disjoint = true;
            for (auto x : shifted)
                if (std::binary_search(s.begin(), s.end(), x)) {
                    disjoint = false;
                    break;
                }
            if (!equal && !disjoint) {
                rep.all_dichotomy = false;
                rep.counterexamples.push_back({s, j, "dichotomy"});
            }
        }
    }

    // maximal members of Gamma vs the cosets of <m>
    std::set<std::vector<std::size_t>> cosets;
    if (c.n % a == 0) {
        std::size_t m = c.n / a;
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<std::size_t> s;
            for (std::size_t x = 0; x < a; ++x) s.push_back(x * m + i);
            std::sort(s.begin(), s.end());
            cosets.insert(std::move(s));
        }
    }
    rep.all_cosets = true;
    for (const auto& s : gamma) {
        bool maximal = true;
        for (const auto& t : gamma) {
            if (t.size() <= s.size()) continue;
            if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
                maximal = false;
                break;
            }
        }
        if (!maximal) continue;
        ++rep.maximal_count;
        if (cosets.find(s) == cosets.end()) {
            rep.all_cosets = false;
            rep.counterexamples.push_back({s, 0, "not_coset"});
        }
    }
    return rep;
}

LocalRepairResult local_repair(const LinearCode& c, const LocalityProfile& profile,
                               const std::vector<std::optional<gf_t>>& word) {
    if (!profile.verified) fail("UnverifiedProfile", "profile must be verified");
    if (word.size() != c.n) fail("ShapeMismatch", "word length");

    LocalRepairResult out;
    out.word = word;
    for (std::size_t i = 0; i < profile.partition.size(); ++i) {
        const auto& s = profile.partition[i];
        std::size_t erased = 0;
        for (auto j : s)
            if (!word[j]) ++erased;
        if (erased == 0) continue;
        if (erased > profile.delta - 1) {
            out.escalate.push_back(i);
            continue;
        }
        LinearCode local = puncture(c, s);
        std::vector<std::optional<gf_t>> lw;
        lw.reserve(s.size());
        for (auto j : s) lw.push_back(word[j]);
        DecodeResult dr = erasure_decode(local, lw);
        if (dr.status != DecodeResult::Status::Ok) {
            out.escalate.push_back(i);
            continue;
        }
        for (std::size_t t = 0; t < s.size(); ++t) out.word[s[t]] = dr.word[t];
    }
    out.fully_repaired = out.escalate.empty();
    return out;
}

}  // namespace lrcmr
