#ifndef LRCMR_LOCALITY_HPP
#define LRCMR_LOCALITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "lrcmr/code.hpp"

namespace lrcmr {

/// A verified family of repair sets. When `partition` is nonempty the sets
/// are disjoint, cover [0, n), and each one passed verify_repair_set.
struct LocalityProfile {
    std::size_t r = 0;
    std::size_t delta = 0;
    std::vector<std::vector<std::size_t>> partition;
    bool verified = false;
};

/// |S| <= r+delta-1 and the punctured code on S has minimum distance >= delta.
/// A zero-dimensional punctured code satisfies the distance condition
/// vacuously.
bool verify_repair_set(const LinearCode& c, const std::vector<std::size_t>& s, std::size_t r,
                       std::size_t delta);

/// Tries the coset family {<m>+i : i in [m]} (m = n/(r+delta-1)) first; on
/// failure falls back to exhaustive search over (r+delta-1)-subsets for
/// n <= 24 (a search bound, not a mathematical claim). The fallback returns
/// the lexicographically least valid partition.
std::optional<LocalityProfile> discover_repair_partition(const LinearCode& c, std::size_t r,
                                                         std::size_t delta);

/// n-k+1-(ceil(k/r)-1)(delta-1).
long long lrc_singleton_bound(std::size_t n, std::size_t k, std::size_t r, std::size_t delta);

/// Minimum distance attains lrc_singleton_bound with equality.
/// UnverifiedProfile unless the profile was verified.
bool is_optimal_lrc(const LinearCode& c, const LocalityProfile& profile);

struct StructureCounterexample {
    std::vector<std::size_t> set;
    std::size_t shift = 0;      // offending shift for dichotomy failures
    std::string what;           // "dichotomy" or "not_coset"
};

/**
 * Exhaustively enumerates Gamma = {S : |S| <= r+delta-1, d(C|_S) >= delta}
 * for n <= 20 and reports whether every member satisfies the shift dichotomy
 * (S+j = S or (S+j) and S disjoint) and whether every maximal member is a
 * coset <m>+i. Also records the k = ur+v normalization (0 < v <= r) and
 * whether the hypothesis u >= 2(r-v+1) holds. NotCyclic / TooLarge.
 */
struct StructureReport {
    bool hypothesis_met = false;
    std::size_t u = 0, v = 0;
    bool all_dichotomy = false;
    bool all_cosets = false;
    std::size_t gamma_size = 0;
    std::size_t maximal_count = 0;
    std::vector<StructureCounterexample> counterexamples;
};

StructureReport check_coset_structure(const LinearCode& c, std::size_t r, std::size_t delta);

/// Per-repair-set local erasure repair. Sets with <= delta-1 erasures are
/// repaired reading only their own coordinates; sets needing more are listed
/// in `escalate` (indices into profile.partition) for MR-level decoding.
struct LocalRepairResult {
    std::vector<std::optional<gf_t>> word;       // erasures fixed where possible
    std::vector<std::size_t> escalate;           // unrepairable set indices
    bool fully_repaired = false;
};

LocalRepairResult local_repair(const LinearCode& c, const LocalityProfile& profile,
                               const std::vector<std::optional<gf_t>>& word);

/// k = ur+v with 0 < v <= r (v = r when r | k).
std::pair<std::size_t, std::size_t> normalize_uv(std::size_t k, std::size_t r);

}  // namespace lrcmr

#endif
