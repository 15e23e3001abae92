#ifndef LRCMR_MR_HPP
#define LRCMR_MR_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lrcmr/locality.hpp"

namespace lrcmr {

/**
 * Parameters of the h=2 MR families: base prime power q = p^e, extension b,
 * locality r, delta, and (for the known non-cyclic family) the lambda
 * exponent s with gcd(s, m) = 1. Derived: n = q^b-1, a = r+delta-1, m = n/a,
 * k = mr-2.
 *
 * Validation requires m integral and records the smallest b1 | b with
 * a | q^b1 - 1 (b1 = 1 is the plain a | q-1 case; larger b1 places the
 * order-a subgroup in an intermediate subfield, which is how the (80,6,2,3)
 * instance over GF(81) parses). The cyclic construction additionally needs
 * gcd(delta, m) = 1.
 */
struct MrParams {
    std::uint64_t q = 0;  // base prime power
    std::uint32_t b = 1;
    std::size_t r = 0;
    std::size_t delta = 0;
    std::size_t s = 1;

    std::uint64_t n() const;
    std::size_t a() const { return r + delta - 1; }
    std::uint64_t m() const { return n() / a(); }
    std::uint64_t k() const { return m() * r - 2; }
    static constexpr std::size_t h = 2;

    /// Throws ParamViolation unless the profile is well formed; returns the
    /// subfield witness b1.
    std::uint32_t validate(bool cyclic_family) const;

    /// GF(q^b) as GF(p^(e*b)) with the deterministic default modulus.
    FieldPtr make_field() const;
};

/// Cyclic h=2 MR code: the cyclic code with root set
/// {alpha^(ja+t) : 1<=j<=m, 1<=t<=delta-1} + {1, alpha^delta}.
/// Asserts k = mr-2 and cyclicity.
LinearCode build_cyclic_mr(const MrParams& params);

/// The explicit m(delta-1)+2 row parity-check matrix of the cyclic family:
/// per-coset Vandermonde blocks in beta = alpha^m, the all-ones row, and the
/// row (1, gamma, gamma^2, ...) with gamma = alpha^delta. Coordinate c sits
/// in coset c mod m, slab c div m.
Matrix cyclic_mr_parity(const MrParams& params);

/// The known non-cyclic (quasi-cyclic) h=2 MR code: identity-patterned local
/// blocks v(beta^x), the lambda row (lambda = alpha^s repeating
/// lambda^0..lambda^(m-1) per slab), and the beta^(delta x) row constant per
/// slab. Asserts k = mr-2.
LinearCode build_known_mr(const MrParams& params);

enum class MrMode { Definition, FastPath, Both, Sampled };

struct MrVerdict {
    bool mr = false;
    std::string mode;
    std::uint64_t checked = 0;
    std::optional<std::vector<std::size_t>> witness;  // uncorrectable pattern
    long long runtime_ms = 0;
    /// FastPath / Sampled only: both-mode agreement has been demonstrated on
    /// a full reference instance this process.
    std::optional<bool> calibrated;
};

/**
 * Maximal-recoverability verdict.
 *  - Definition: every keep-selection (drop delta-1 coordinates per repair
 *    set), punctured code must be MDS; guarded at 10^6 selections.
 *  - FastPath (h = 2 only): peeling reduces any admissible pattern to either
 *    delta+1 erasures inside one set or delta erasures in each of two sets;
 *    checks exactly those via rank(H|_E) = |E|.
 *  - Both: runs both and asserts agreement.
 *  - Sampled: deterministic fixed-seed sample of the FastPath family, for
 *    instances whose full enumeration is infeasible; never a full MR proof.
 * Any witness returned is a concrete erasure pattern with
 * rank(H|_E) < |E|.
 */
MrVerdict verify_mr(const LinearCode& c, const LocalityProfile& profile, std::size_t h,
                    MrMode mode, unsigned jobs = 1, std::uint64_t samples = 10000,
                    std::uint64_t seed = 0x5eed);

/// The 2delta x 2delta certificate matrix on column sets T1, T2 (delta-subsets
/// of [a]) and distinct coset indices i1, i2: beta-Vandermonde blocks, the
/// all-ones row, and the gamma^(t*m+i) row; returns rank == 2delta.
bool full_rank_cert(const MrParams& params, const std::vector<std::size_t>& t1,
                    const std::vector<std::size_t>& t2, std::size_t i1, std::size_t i2);

/// rank(H restricted to the pattern) equals the pattern size.
bool mr_erasure_correctable(const LinearCode& c, const LocalityProfile& profile,
                            const std::vector<std::size_t>& pattern);

/// Memoized both-mode agreement run on the (q=4,b=2,r=2,delta=2) reference
/// instance; fastpath-only verdicts carry this flag.
bool fastpath_calibrated();

}  // namespace lrcmr

#endif
