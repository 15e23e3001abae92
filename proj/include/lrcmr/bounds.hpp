#ifndef LRCMR_BOUNDS_HPP
#define LRCMR_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lrcmr/bigint.hpp"
#include "lrcmr/error.hpp"

namespace lrcmr {

struct PrimePowerResult {
    std::uint64_t value = 0;
    std::optional<std::uint64_t> base;       // prime
    std::optional<std::uint32_t> exponent;
    bool is_prime_power() const { return base.has_value(); }
};

/// Trial factorization; OutOfRange below 2.
PrimePowerResult is_prime_power(std::uint64_t x);

/// Smallest prime power Q with Q^root_exponent >= B, by exact integer
/// comparison (this is psi(B^(1/root_exponent)) without fractional powers).
std::uint64_t psi(std::uint64_t B, std::uint32_t root_exponent);

/// The field-size lower bound for optimal all-symbol (r,delta)-LRCs with
/// n = m(r+delta-1) and k = ur, u >= 2:
///   even r (m >= u+1):  smallest prime power Q with
///                       Q^(r/2) >= (k/r+1)*floor((2r+2delta-2)/r) - 1
///   odd r  (m >= u+2):  smallest prime power Q with Q^(r+1) >= u^2
struct FieldBound {
    std::optional<std::uint64_t> value;
    std::string reason;  // set when not applicable
};

FieldBound field_bound_new(std::uint64_t n, std::uint64_t k, std::uint64_t r, std::uint64_t delta);

/// (u+1) * floor((2r+2delta-2)/r) <= q^(r/2) + 1, exact. OddR when r is odd.
bool field_feasible_even_r(std::uint64_t q, std::uint64_t r, std::uint64_t delta, std::uint64_t u);

/// u <= q^((r+1)/2), exact. EvenR when r is even.
bool field_feasible_odd_r(std::uint64_t q, std::uint64_t r, std::uint64_t u);

/// Distance-reduction step for optimal LRC parameters:
/// (n, k, d) -> (n - eps*(r+delta-1), k, d - eps*(r+delta-1)) with
/// 0 <= eps <= ceil((d-1)/(r+delta-1)) - 1 and d > r+delta.
/// When the input lies on the Singleton-type bound with equality, the output
/// does too (checked).
struct ReducedParams {
    std::uint64_t n, k, d;
};

ReducedParams reduce_parameters(std::uint64_t n, std::uint64_t k, std::uint64_t d, std::uint64_t r,
                                std::uint64_t delta, std::uint64_t eps);

/// q >= n-1 for (n, r=2, h=2, delta, q)-MR profiles.
std::uint64_t mr_field_floor_r2(std::uint64_t n);

struct LengthBound {
    std::uint64_t value = 0;
    bool order_estimate = false;  // constant-1 evaluation of an Omega/O bound
    std::string note;
};

/// Prior length bounds: the delta > 2 branch evaluates the exact displayed
/// value (t = floor((d-1)/delta) >= 2 required); the delta = 2 branch is a
/// constant-1 order estimate, flagged and never used for optimality
/// verdicts. HypothesisViolation on unmet preconditions.
LengthBound length_bound_prior(std::uint64_t q, std::uint64_t d, std::uint64_t r,
                               std::uint64_t delta, std::uint64_t k);

/// Constant-1 evaluation of the general MR field-size lower bound cases,
/// always flagged order_estimate. HypothesisViolation when h < 2 or m < 2.
LengthBound gm_field_estimate(std::uint64_t n, std::uint64_t r, std::uint64_t h,
                              std::uint64_t delta, std::uint64_t m);

struct OptimalityVerdict {
    enum class Status { Optimal, Gap, NotApplicable } status = Status::NotApplicable;
    std::uint64_t bound = 0;                  // max of applicable lower bounds
    std::optional<std::uint64_t> bound_new;   // field_bound_new component
    std::optional<std::uint64_t> floor_r2;    // only with assume_mr and r = 2
    std::vector<std::uint64_t> gap_prime_powers;  // prime powers in [bound, q)
    std::string notes;
};

/// Combines the new field bound (and the q >= n-1 floor when assume_mr and
/// r = 2) and scans for prime powers between the bound and q: none means q
/// is the least admissible field size.
OptimalityVerdict optimal_field_size_verdict(std::uint64_t n, std::uint64_t k, std::uint64_t r,
                                             std::uint64_t delta, std::uint64_t q,
                                             bool assume_mr = false);

}  // namespace lrcmr

#endif
