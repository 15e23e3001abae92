#ifndef LRCMR_EQUIV_HPP
#define LRCMR_EQUIV_HPP

#include <optional>
#include <string>
#include <vector>

#include "lrcmr/mr.hpp"

namespace lrcmr {

/**
 * A coordinate permutation of Z_n, either a multiplier x -> xt mod n with
 * gcd(t, n) = 1, or a block map psi: xm+i -> (xm*t_i + z_i) mod n with each
 * gcd(t_i, a) = 1 and (z mod m) a permutation of Z_m. Coset G_i maps onto
 * G_(z_i mod m).
 */
struct PermSpec {
    enum class Kind { Multiplier, Psi } kind = Kind::Multiplier;
    std::size_t n = 0;
    // multiplier
    std::size_t t = 1;
    // psi
    std::size_t a = 0, m = 0;
    std::vector<std::size_t> t_vec;
    std::vector<std::size_t> z_vec;

    std::size_t apply(std::size_t x) const;
    std::vector<std::size_t> as_table() const;   // image of 0..n-1
    bool is_bijection() const;
};

PermSpec make_multiplier(std::size_t n, std::size_t t);              // NotUnit
PermSpec make_psi(std::size_t n, std::size_t a, std::vector<std::size_t> t_vec,
                  std::vector<std::size_t> z_vec);  // NotUnit / NotResiduePermutation

/// Column permutation per the indexing convention: coordinate j of the new
/// code reads position perm(j) of the old codeword.
LinearCode apply_perm(const LinearCode& c, const PermSpec& perm);

/**
 * The explicit cyclifying permutation for the known non-cyclic family:
 * exists iff gcd(m, a/gcd(a, delta)) = 1, in which case the smallest tau
 * with delta*m*tau = delta (mod a) gives the psi map with t = (1,...,1) and
 * z_i = i + m*tau*i. Requires r >= 3 (HypothesisViolation otherwise);
 * nullopt when no such psi permutation exists.
 */
std::optional<PermSpec> cyclifying_perm(const MrParams& params);

/**
 * Necessary-condition verdict for permuting the known family to a cyclic
 * code. Checks every stated hypothesis (k = ur+v normalization with
 * u >= 2(r-v+1); a = 4 or gcd(a, phi(a)) = 1; a = q^b'-1 dividing n; the
 * (delta, r) case split) and then the divisibility gcd(m, a) | delta.
 * Never claims "permutable" - the condition is necessary only.
 */
struct NecessaryVerdict {
    enum class Status { PermutableMaybe, NotPermutable, HypothesesUnmet } status;
    std::uint64_t gcd_m_a = 0;
    std::size_t delta = 0;
    bool gcd_divides_delta = false;
    std::vector<std::string> failed_hypotheses;
    std::string report;  // human-readable; always states the gcd facts
};

NecessaryVerdict necessary_verdict(const MrParams& params);

/**
 * Direct check of one instance of the tau-uniqueness statement: whether
 * {i*tau mod a : 1<=i<=delta-1} contained in {i*tau' mod a : 1<=i<=delta}
 * forces tau = tau'. Preconditions: tau, tau' units mod a and one of the
 * three (delta, r) cases holds (CaseViolation otherwise).
 */
bool tau_uniqueness_oracle(std::size_t a, std::size_t r, std::size_t delta, std::size_t tau,
                     std::size_t tau_prime);

/// True when (delta, r) is one of the three admissible cases.
bool tau_uniqueness_case_holds(std::size_t r, std::size_t delta);

/// Enumerates all of Psi(n, a) in lexicographic (t_vec, z_vec) order and
/// returns the first permutation making the code cyclic, or nullopt.
/// TooLarge when |Psi(n,a)| = phi(a)^m * m! * a^m exceeds `limit`.
std::optional<PermSpec> brute_force_psi_search(const LinearCode& c, std::size_t a,
                                               std::uint64_t limit = 1000000, unsigned jobs = 1);

/// |Psi(n, a)|, saturating.
std::uint64_t psi_family_size(std::size_t n, std::size_t a);

}  // namespace lrcmr

#endif
