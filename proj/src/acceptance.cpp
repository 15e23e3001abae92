#include "lrcmr/acceptance.hpp"

#include <chrono>
#include <sstream>

#include "lrcmr/bounds.hpp"
#include "lrcmr/comb.hpp"
#include "lrcmr/equiv.hpp"
#include "lrcmr/io.hpp"
#include "lrcmr/mr.hpp"

namespace lrcmr {

namespace {

struct Check {
    bool pass = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            pass = false;
            detail << "FAILED: " << what << "; ";
        }
    }
};

template <typename Fn>
CriterionResult run_criterion(int id, const std::string& name, Fn body) {
    CriterionResult r;
    r.id = id;
    r.name = name;
    auto t0 = std::chrono::steady_clock::now();
    Check ck;
    try {
        body(ck);
        r.pass = ck.pass;
        r.detail = ck.detail.str();
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    return r;
}

struct Instance {
    MrParams params;
    LinearCode code;
    LocalityProfile profile;
};

Instance build_instance(const MrParams& p) {
    Instance inst{p, build_cyclic_mr(p), {}};
    auto prof = discover_repair_partition(inst.code, p.r, p.delta);
    if (!prof) fail("ParamViolation", "no repair partition found");
    inst.profile = *prof;
    return inst;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(unsigned jobs) {
    std::vector<CriterionResult> out;

    const MrParams p1{4, 2, 2, 2, 1};    // [15,8,5]_16
    const MrParams p2{13, 1, 3, 2, 1};   // [12,7,4]_13
    const MrParams p80{3, 4, 6, 3, 1};   // [80,58]_81

    Instance i1 = build_instance(p1);
    Instance i2 = build_instance(p2);

    out.push_back(run_criterion(1, "cyclic MR instance (q=4,b=2,r=2,delta=2) -> [15,8,5]_16",
                                [&](Check& ck) {
        ck.expect(i1.code.n == 15 && i1.code.k == 8, "n=15, k=8");
        auto d = min_distance(i1.code, std::nullopt, DistanceMethod::ColumnSubsets, jobs);
        ck.expect(d && *d == 5, "d = 5");
        ck.expect(is_cyclic(i1.code), "cyclic");
        ck.expect(lrc_singleton_bound(15, 8, 2, 2) == 5, "Singleton-type bound value 5");
        ck.expect(is_optimal_lrc(i1.code, i1.profile), "optimal LRC");
        MrVerdict v = verify_mr(i1.code, i1.profile, 2, MrMode::Definition, jobs);
        ck.expect(v.mr, "MR by definition mode");
        ck.expect(v.checked == 243, "243 keep-selections, got " + std::to_string(v.checked));
    }));

    out.push_back(run_criterion(2, "cyclic MR instance (q=13,b=1,r=3,delta=2) -> [12,7,4]_13",
                                [&](Check& ck) {
        ck.expect(i2.code.n == 12 && i2.code.k == 7, "n=12, k=7");
        auto d = min_distance(i2.code, std::nullopt, DistanceMethod::ColumnSubsets, jobs);
        ck.expect(d && *d == 4, "d = 4 = delta+2");
        ck.expect(is_cyclic(i2.code), "cyclic");
        MrVerdict v = verify_mr(i2.code, i2.profile, 2, MrMode::Definition, jobs);
        ck.expect(v.mr, "MR by definition mode");
        ck.expect(v.checked == 64, "64 keep-selections, got " + std::to_string(v.checked));
    }));

    out.push_back(run_criterion(3, "explicit parity matrix spans the same row space as the root-set H",
                                [&](Check& ck) {
        ck.expect(row_space_equal(cyclic_mr_parity(p1), i1.code.H), "instance 1");
        ck.expect(row_space_equal(cyclic_mr_parity(p2), i2.code.H), "instance 2");
    }));

    out.push_back(run_criterion(4, "full-rank certificates discharged exhaustively",
                                [&](Check& ck) {
        auto count_all = [&](const MrParams& p, const Instance&) {
            std::size_t a = p.a(), delta = p.delta;
            std::uint64_t m = p.m();
            std::uint64_t total = 0, good = 0;
            std::vector<std::vector<std::size_t>> subsets;
            for_each_combination(a, delta, [&](const std::vector<std::size_t>& s) {
                subsets.push_back(s);
                return true;
            });
            for (const auto& t1 : subsets)
                for (const auto& t2 : subsets)
                    for (std::size_t x = 0; x < m; ++x)
                        for (std::size_t y = 0; y < m; ++y) {
                            if (x == y) continue;
                            ++total;
                            if (full_rank_cert(p, t1, t2, x, y)) ++good;
                        }
            return std::pair<std::uint64_t, std::uint64_t>(total, good);
        };
        auto [t1, g1] = count_all(p1, i1);
        ck.expect(t1 == 180 && g1 == 180,
                  "instance 1: 180/180, got " + std::to_string(g1) + "/" + std::to_string(t1));
        auto [t2, g2] = count_all(p2, i2);
        ck.expect(t2 == 216 && g2 == 216,
                  "instance 2: 216/216, got " + std::to_string(g2) + "/" + std::to_string(t2));
    }));

    out.push_back(run_criterion(5, "field-size bound reproductions", [&](Check& ck) {
        auto b1 = field_bound_new(16, 6, 2, 3);
        ck.expect(b1.value && *b1.value == 16, "(16,6,2,3) -> 16");
        auto b2 = field_bound_new(63, 40, 2, 2);
        ck.expect(b2.value && *b2.value == 64, "(63,40,2,2) -> 64");
        auto b3 = field_bound_new(9, 4, 2, 2);
        ck.expect(b3.value && *b3.value == 8, "(9,4,2,2) -> 8");
        ck.expect(!is_prime_power(15).is_prime_power(), "15 is not a prime power");
        ck.expect(!is_prime_power(62).is_prime_power(), "62 is not a prime power");
        ck.expect(!is_prime_power(63).is_prime_power(), "63 is not a prime power");
        ck.expect(optimal_field_size_verdict(16, 6, 2, 3, 16).status ==
                      OptimalityVerdict::Status::Optimal,
                  "[16,6,7]_16 optimal field size");
        ck.expect(optimal_field_size_verdict(63, 40, 2, 2, 64).status ==
                      OptimalityVerdict::Status::Optimal,
                  "[63,40,5]_64 optimal field size");
        ck.expect(optimal_field_size_verdict(9, 4, 2, 2, 8).status ==
                      OptimalityVerdict::Status::Optimal,
                  "[9,4,5]_8 optimal field size");
    }));

    out.push_back(run_criterion(6, "q >= n-1 floor at r=2", [&](Check& ck) {
        ck.expect(mr_field_floor_r2(15) == 14, "floor(15) = 14");
        ck.expect(14 <= 16, "14 <= q = 16 on instance 1");
        ck.expect(mr_field_floor_r2(9) == 8, "floor(9) = 8");
        ck.expect(8 >= 8, "equality for the [9,4,5]_8 parameters");
    }));

    out.push_back(run_criterion(7, "permutation pipeline on (12,3,2,2,13)", [&](Check& ck) {
        LinearCode c2 = build_known_mr(p2);
        ck.expect(!is_cyclic(c2), "known construction is not cyclic");
        auto perm = cyclifying_perm(p2);
        ck.expect(perm.has_value(), "cyclifying permutation exists");
        if (perm) {
            ck.expect(perm->z_vec == std::vector<std::size_t>({0, 4, 8}),
                      "z = (0,4,8) from tau = 1");
            ck.expect(perm->t_vec == std::vector<std::size_t>({1, 1, 1}), "t = (1,1,1)");
            ck.expect(is_cyclic(apply_perm(c2, *perm)), "permuted code is cyclic");
        }
        ck.expect(psi_family_size(12, 4) == 3072, "|Psi(12,4)| = 3072");
        auto found = brute_force_psi_search(c2, 4, 1000000, jobs);
        ck.expect(found.has_value(), "exhaustive Psi search finds a cyclifying permutation");
        if (found) ck.expect(is_cyclic(apply_perm(c2, *found)), "search result cyclifies");
    }));

    out.push_back(run_criterion(8, "necessary-condition report on (80,6,2,3,81)", [&](Check& ck) {
        NecessaryVerdict v = necessary_verdict(p80);
        ck.expect(v.status == NecessaryVerdict::Status::HypothesesUnmet, "hypotheses unmet");
        ck.expect(v.report.find("gcd(m,a)=gcd(10,8)=2 does not divide delta=3") != std::string::npos,
                  "report states gcd(m,a)=2 does not divide delta=3");
        ck.expect(v.report.find("gcd(8,phi(8))=gcd(8,4)=4") != std::string::npos,
                  "report flags gcd(8,phi(8))=4 != 1");
    }));

    out.push_back(run_criterion(9, "oracle equivalences", [&](Check& ck) {
        MrVerdict d = verify_mr(i1.code, i1.profile, 2, MrMode::Definition, jobs);
        MrVerdict f = verify_mr(i1.code, i1.profile, 2, MrMode::FastPath, jobs);
        ck.expect(d.mr == f.mr && d.mr, "fastpath verdict equals definition verdict on instance 1");
        MrVerdict both = verify_mr(i1.code, i1.profile, 2, MrMode::Both, jobs);
        ck.expect(both.mr, "both-mode agreement");

        // distance oracle equivalence on every suite code with q^k <= 2^20
        std::vector<std::pair<std::string, LinearCode>> small;
        small.emplace_back("[3,2]_16 local", puncture(i1.code, {0, 5, 10}));
        small.emplace_back("[4,1]_5", build_cyclic_mr(MrParams{5, 1, 3, 2, 1}));
        small.emplace_back("[7,4]_8", build_cyclic_mr(MrParams{8, 1, 6, 2, 1}));
        small.emplace_back("[6,2]_7", build_cyclic_mr(MrParams{7, 1, 4, 3, 1}));
        small.emplace_back("[12,7]_13 shortened",
                           shorten(i2.code, {0, 1, 3, 4, 6, 7, 9, 10}));
        {
            FieldPtr f2 = Field::make(2, 1);
            Matrix ones(f2, 1, 10);
            for (std::size_t c = 0; c < 10; ++c) ones.set(0, c, 1);
            small.emplace_back("[10,9]_2 parity", code_from_parity(ones));
        }
        for (auto& [name, code] : small) {
            long double words = 1;
            for (std::size_t i = 0; i < code.k; ++i) words *= static_cast<long double>(code.field->q());
            ck.expect(words <= 1048576.0L, name + " stays within q^k <= 2^20");
            auto ds = min_distance(code, code.n, DistanceMethod::ColumnSubsets, jobs);
            auto de = min_distance(code, code.n, DistanceMethod::Enumeration, jobs);
            ck.expect(ds && de && *ds == *de,
                      name + ": subset oracle " + std::to_string(ds ? *ds : 0) +
                          " == enumeration oracle " + std::to_string(de ? *de : 0));
        }
    }));

    out.push_back(run_criterion(10, "repair-set structure scan on instance 1", [&](Check& ck) {
        StructureReport rep = check_coset_structure(i1.code, 2, 2);
        ck.expect(rep.hypothesis_met, "k = 3*2+2 normalization meets u >= 2(r-v+1)");
        ck.expect(rep.all_dichotomy, "every repair set satisfies the shift dichotomy");
        ck.expect(rep.all_cosets, "every maximal repair set is a coset of <5>");
        ck.expect(rep.maximal_count == 5, "exactly the 5 cosets, got " +
                                              std::to_string(rep.maximal_count));
    }));

    out.push_back(run_criterion(11, "sampled evidence on (80,6,2,3,81)", [&](Check& ck) {
        Instance i80 = build_instance(p80);
        ck.expect(i80.code.n == 80 && i80.code.k == 58, "n=80, k=58");
        ck.expect(is_cyclic(i80.code), "cyclic");
        MrVerdict v = verify_mr(i80.code, i80.profile, 2, MrMode::Sampled, jobs, 10000);
        ck.expect(v.mr, "all sampled fastpath-family patterns correctable");
        ck.expect(v.checked == 10000, "10^4 samples, got " + std::to_string(v.checked));
        ck.expect(v.mode == "sampled", "labeled as sampled evidence");
        ck.expect(v.calibrated.value_or(false), "fastpath calibration flag set");
        ck.expect(gcd_u64(10, 8) == 2 && 3 % 2 != 0, "gcd(m,a)=2 does not divide delta=3");
        ck.expect(gcd_u64(8, euler_phi(8)) == 4, "gcd(8,phi(8))=4");
    }));

    return out;
}

}  // namespace lrcmr
