#ifndef LRCMR_ACCEPTANCE_HPP
#define LRCMR_ACCEPTANCE_HPP

#include <string>
#include <vector>

namespace lrcmr {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    long long runtime_ms = 0;
};

/// Runs the full verification suite (construction properties, explicit-H
/// cross-checks, certificate exhaustion, bound reproductions, permutation
/// pipeline, oracle equivalences, structure scan, and the sampled large
/// instance). Every check is exact; expected values are pinned in code.
std::vector<CriterionResult> run_acceptance(unsigned jobs = 1);

}  // namespace lrcmr

#endif
