// lrcmr: construct h=2 MR codes (cyclic and known non-cyclic families),
// verify their claimed properties with exact brute-force oracles, evaluate
// field-size and length bounds in exact integer arithmetic, and reproduce
// the full verification suite.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lrcmr/acceptance.hpp"
#include "lrcmr/bounds.hpp"
#include "lrcmr/equiv.hpp"
#include "lrcmr/io.hpp"
#include "lrcmr/mr.hpp"

using namespace lrcmr;

namespace {

enum ExitCode { kOk = 0, kPropertyFailed = 1, kBadInput = 2 };

struct Options {
    std::string format = "json";
    bool timings = false;
    unsigned jobs = 1;
};

Options g_opt;

void emit(const ojson& report, long long ms) {
    ojson r = report;
    if (g_opt.timings) r["runtime_ms"] = ms;
    if (g_opt.format == "human") {
        std::ostringstream out;
        std::function<void(const ojson&, int)> walk = [&](const ojson& j, int depth) {
            for (auto it = j.begin(); it != j.end(); ++it) {
                out << std::string(2 * static_cast<std::size_t>(depth), ' ') << it.key() << ": ";
                if (it.value().is_object()) {
                    out << "\n";
                    walk(it.value(), depth + 1);
                } else {
                    out << it.value().dump() << "\n";
                }
            }
        };
        walk(r, 0);
        std::cout << out.str();
    } else {
        std::cout << r.dump(2) << "\n";
    }
}

ojson checks_json(const std::vector<std::tuple<std::string, bool, std::string>>& checks) {
    ojson arr = ojson::array();
    for (const auto& [name, pass, witness] : checks) {
        ojson c;
        c["name"] = name;
        c["pass"] = pass;
        c["witness"] = witness.empty() ? ojson(nullptr) : ojson(witness);
        arr.push_back(c);
    }
    return arr;
}

unsigned jobs_from_env() {
    if (const char* env = std::getenv("LRCMR_JOBS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 0) return static_cast<unsigned>(v);
    }
    return 0;  // all cores
}

std::vector<std::optional<gf_t>> parse_word(const std::string& text, std::size_t n) {
    std::vector<std::optional<gf_t>> word;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok == "?" || tok == "e" || tok == "_")
            word.push_back(std::nullopt);
        else
            word.push_back(static_cast<gf_t>(std::stoul(tok)));
    }
    if (word.size() != n) fail("SchemaError", "word length differs from code length");
    return word;
}

ojson verdict_json(const MrVerdict& v) {
    ojson j;
    j["mr"] = v.mr;
    j["mode"] = v.mode;
    j["checked"] = v.checked;
    if (v.witness)
        j["witness"] = *v.witness;
    else
        j["witness"] = nullptr;
    if (v.calibrated) j["calibrated"] = *v.calibrated;
    if (g_opt.timings) j["runtime_ms"] = v.runtime_ms;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclic / known h=2 MR codes: construction, exact verification, bounds"};
    app.require_subcommand(1);
    app.fallthrough();
    g_opt.jobs = jobs_from_env();
    app.add_option("--format", g_opt.format, "json|human")->envname("LRCMR_FORMAT");
    app.add_flag("--timings", g_opt.timings, "include runtime_ms in JSON reports");
    app.add_option("--jobs", g_opt.jobs, "worker threads for enumerations (0 = all cores)");

    int exit_code = kOk;
    auto t_start = std::chrono::steady_clock::now();
    auto elapsed = [&]() {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t_start)
            .count();
    };

    // ---- construct ----
    auto* construct = app.add_subcommand("construct", "build a code and write it to a JSON file");
    std::string family = "cyclic-mr";
    std::uint64_t c_q = 0;
    std::uint32_t c_b = 1;
    std::size_t c_r = 0, c_delta = 0, c_s = 1;
    std::string c_out;
    construct->add_option("--family", family, "cyclic-mr | known-mr")->required();
    construct->add_option("--q", c_q, "base prime power")->required();
    construct->add_option("--b", c_b, "extension exponent (n = q^b - 1)")->required();
    construct->add_option("--r", c_r, "locality")->required();
    construct->add_option("--delta", c_delta, "local distance")->required();
    construct->add_option("--s", c_s, "lambda exponent for known-mr (gcd(s,m)=1)");
    construct->add_option("--out", c_out, "output code file")->required();
    construct->callback([&]() {
        MrParams p{c_q, c_b, c_r, c_delta, c_s};
        LinearCode code = family == "known-mr" ? build_known_mr(p) : build_cyclic_mr(p);
        ojson meta;
        meta["family"] = family;
        meta["q"] = p.q;
        meta["b"] = p.b;
        meta["r"] = p.r;
        meta["delta"] = p.delta;
        meta["s"] = p.s;
        save_code(code, c_out, meta);
        ojson rep;
        rep["command"] = "construct";
        rep["inputs"] = meta;
        ojson res;
        res["n"] = code.n;
        res["k"] = code.k;
        res["q"] = code.field->q();
        res["file"] = c_out;
        rep["results"] = res;
        rep["checks"] = checks_json({{"built", true, ""}});
        emit(rep, elapsed());
    });

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "verify code properties");
    verify->require_subcommand(1);
    std::string v_code;
    std::size_t v_r = 0, v_delta = 0;
    std::string v_mode = "both";
    std::uint64_t v_samples = 10000;

    auto load_with_profile = [&](std::size_t& r, std::size_t& delta, ojson& meta) {
        LinearCode code = load_code(v_code, &meta);
        if (r == 0 && meta.is_object() && meta.contains("r")) {
            r = meta.at("r").get<std::size_t>();
            delta = meta.at("delta").get<std::size_t>();
        }
        if (r == 0) fail("SchemaError", "no --r/--delta given and none stored in the file");
        return code;
    };

    auto* v_loc = verify->add_subcommand("locality", "repair partition discovery + verification");
    bool v_structure = false;
    v_loc->add_option("--code", v_code)->required();
    v_loc->add_option("--r", v_r);
    v_loc->add_option("--delta", v_delta);
    v_loc->add_flag("--structure", v_structure,
                    "also run the exhaustive repair-set structure scan (cyclic codes, n <= 20)");
    v_loc->callback([&]() {
        ojson meta;
        LinearCode code = load_with_profile(v_r, v_delta, meta);
        auto prof = discover_repair_partition(code, v_r, v_delta);
        ojson rep;
        rep["command"] = "verify locality";
        rep["inputs"] = {{"code", v_code}, {"r", v_r}, {"delta", v_delta}};
        ojson res;
        res["found"] = prof.has_value();
        if (prof) {
            ojson parts = ojson::array();
            for (const auto& s : prof->partition) parts.push_back(s);
            res["partition"] = parts;
        }
        std::vector<std::tuple<std::string, bool, std::string>> checks{
            {"repair_partition", prof.has_value(), ""}};
        bool pass = prof.has_value();
        if (v_structure) {
            StructureReport sr = check_coset_structure(code, v_r, v_delta);
            res["structure"] = structure_report_to_json(sr);
            bool ok = sr.all_dichotomy && sr.all_cosets;
            checks.emplace_back("coset_structure", ok, "");
            pass = pass && ok;
        }
        rep["results"] = res;
        rep["checks"] = checks_json(checks);
        emit(rep, elapsed());
        if (!pass) exit_code = kPropertyFailed;
    });

    auto* v_mr = verify->add_subcommand("mr", "maximal recoverability");
    v_mr->add_option("--code", v_code)->required();
    v_mr->add_option("--mode", v_mode, "definition|fastpath|both|sampled");
    v_mr->add_option("--samples", v_samples, "sample count for sampled mode");
    v_mr->add_option("--r", v_r);
    v_mr->add_option("--delta", v_delta);
    v_mr->callback([&]() {
        ojson meta;
        LinearCode code = load_with_profile(v_r, v_delta, meta);
        auto prof = discover_repair_partition(code, v_r, v_delta);
        if (!prof) fail("UnverifiedProfile", "no repair partition found");
        MrMode mode = MrMode::Both;
        if (v_mode == "definition") mode = MrMode::Definition;
        else if (v_mode == "fastpath") mode = MrMode::FastPath;
        else if (v_mode == "sampled") mode = MrMode::Sampled;
        else if (v_mode != "both") fail("ModeUnsupported", v_mode);
        std::size_t h = code.n - (v_delta - 1) * prof->partition.size() - code.k;
        MrVerdict verdict = verify_mr(code, *prof, h, mode, g_opt.jobs, v_samples);
        ojson rep;
        rep["command"] = "verify mr";
        rep["inputs"] = {{"code", v_code}, {"mode", v_mode}, {"r", v_r}, {"delta", v_delta}};
        rep["results"] = verdict_json(verdict);
        rep["checks"] = checks_json({{"mr", verdict.mr,
                                      verdict.witness ? ojson(*verdict.witness).dump() : ""}});
        emit(rep, elapsed());
        if (!verdict.mr) exit_code = kPropertyFailed;
    });

    auto* v_cyc = verify->add_subcommand("cyclic", "shift closure");
    v_cyc->add_option("--code", v_code)->required();
    v_cyc->callback([&]() {
        LinearCode code = load_code(v_code);
        bool cyc = is_cyclic(code);
        ojson rep;
        rep["command"] = "verify cyclic";
        rep["inputs"] = {{"code", v_code}};
        rep["results"] = {{"cyclic", cyc}};
        rep["checks"] = checks_json({{"cyclic", cyc, ""}});
        emit(rep, elapsed());
        if (!cyc) exit_code = kPropertyFailed;
    });

    auto* v_opt = verify->add_subcommand("optimal", "distance meets the Singleton-type bound");
    v_opt->add_option("--code", v_code)->required();
    v_opt->add_option("--r", v_r);
    v_opt->add_option("--delta", v_delta);
    v_opt->callback([&]() {
        ojson meta;
        LinearCode code = load_with_profile(v_r, v_delta, meta);
        auto prof = discover_repair_partition(code, v_r, v_delta);
        if (!prof) fail("UnverifiedProfile", "no repair partition found");
        auto d = min_distance(code, std::nullopt, DistanceMethod::Auto, g_opt.jobs);
        long long bound = lrc_singleton_bound(code.n, code.k, v_r, v_delta);
        bool optimal = d && static_cast<long long>(*d) == bound;
        ojson rep;
        rep["command"] = "verify optimal";
        rep["inputs"] = {{"code", v_code}, {"r", v_r}, {"delta", v_delta}};
        rep["results"] = {{"d", d ? ojson(*d) : ojson(nullptr)}, {"bound", bound}};
        rep["checks"] = checks_json({{"optimal_lrc", optimal, ""}});
        emit(rep, elapsed());
        if (!optimal) exit_code = kPropertyFailed;
    });

    // ---- mindist ----
    auto* mindist = app.add_subcommand("mindist", "exact minimum distance");
    std::string md_method = "auto";
    std::size_t md_cap = 0;
    mindist->add_option("--code", v_code)->required();
    mindist->add_option("--method", md_method, "auto|subsets|enumerate");
    mindist->add_option("--cap", md_cap, "stop after this weight (default n-k+1)");
    mindist->callback([&]() {
        LinearCode code = load_code(v_code);
        DistanceMethod m = DistanceMethod::Auto;
        if (md_method == "subsets") m = DistanceMethod::ColumnSubsets;
        else if (md_method == "enumerate") m = DistanceMethod::Enumeration;
        else if (md_method != "auto") fail("ModeUnsupported", md_method);
        auto d = min_distance(code, md_cap ? std::optional<std::size_t>(md_cap) : std::nullopt, m,
                              g_opt.jobs);
        ojson rep;
        rep["command"] = "mindist";
        rep["inputs"] = {{"code", v_code}, {"method", md_method}};
        rep["results"] = {{"d", d ? ojson(*d) : ojson(nullptr)},
                          {"above_cap", !d.has_value()}};
        rep["checks"] = checks_json({{"computed", true, ""}});
        emit(rep, elapsed());
    });

    // ---- bounds ----
    auto* bounds = app.add_subcommand("bounds", "exact bound evaluators");
    bounds->require_subcommand(1);
    std::uint64_t b_n = 0, b_k = 0, b_r = 0, b_delta = 0, b_q = 0, b_d = 0, b_h = 0, b_m = 0;
    bool b_mr = false;

    auto* b_field = bounds->add_subcommand("field", "field-size lower bound + optimality verdict");
    b_field->add_option("--n", b_n)->required();
    b_field->add_option("--k", b_k)->required();
    b_field->add_option("--r", b_r)->required();
    b_field->add_option("--delta", b_delta)->required();
    b_field->add_option("--q", b_q)->required();
    b_field->add_flag("--mr", b_mr, "include the q >= n-1 floor (r=2 MR profiles)");
    b_field->add_option("--gm-h", b_h, "also report the general order estimate for this h");
    b_field->add_option("--gm-m", b_m, "stripe count for the order estimate");
    b_field->callback([&]() {
        OptimalityVerdict v = optimal_field_size_verdict(b_n, b_k, b_r, b_delta, b_q, b_mr);
        ojson rep;
        rep["command"] = "bounds field";
        rep["inputs"] = {{"n", b_n}, {"k", b_k}, {"r", b_r}, {"delta", b_delta}, {"q", b_q}};
        ojson res;
        res["bound_new"] = v.bound_new ? ojson(*v.bound_new) : ojson(nullptr);
        res["floor_r2"] = v.floor_r2 ? ojson(*v.floor_r2) : ojson(nullptr);
        res["bound"] = v.bound;
        res["verdict"] = v.status == OptimalityVerdict::Status::Optimal      ? "optimal"
                         : v.status == OptimalityVerdict::Status::Gap        ? "gap"
                                                                             : "notApplicable";
        res["gap_prime_powers"] = v.gap_prime_powers;
        res["notes"] = v.notes;
        if (b_h >= 2 && b_m >= 2) {
            LengthBound gm = gm_field_estimate(b_n, b_r, b_h, b_delta, b_m);
            res["gm_order_estimate"] = {{"value", gm.value},
                                        {"order_estimate", gm.order_estimate},
                                        {"note", gm.note}};
        }
        rep["results"] = res;
        rep["checks"] = checks_json(
            {{"optimal_field_size", v.status == OptimalityVerdict::Status::Optimal, v.notes}});
        emit(rep, elapsed());
        if (v.status == OptimalityVerdict::Status::NotApplicable) exit_code = kBadInput;
        else if (v.status != OptimalityVerdict::Status::Optimal) exit_code = kPropertyFailed;
    });

    auto* b_len = bounds->add_subcommand("length", "prior length bounds");
    b_len->add_option("--q", b_q)->required();
    b_len->add_option("--d", b_d)->required();
    b_len->add_option("--r", b_r)->required();
    b_len->add_option("--delta", b_delta)->required();
    b_len->add_option("--k", b_k)->required();
    b_len->callback([&]() {
        LengthBound lb = length_bound_prior(b_q, b_d, b_r, b_delta, b_k);
        ojson rep;
        rep["command"] = "bounds length";
        rep["inputs"] = {{"q", b_q}, {"d", b_d}, {"r", b_r}, {"delta", b_delta}, {"k", b_k}};
        rep["results"] = {{"value", lb.value},
                          {"order_estimate", lb.order_estimate},
                          {"note", lb.note}};
        rep["checks"] = checks_json({{"evaluated", true, ""}});
        emit(rep, elapsed());
    });

    auto* b_sweep = bounds->add_subcommand("sweep", "CSV sweep of the field bound");
    std::uint64_t s_n_from = 0, s_n_to = 0;
    b_sweep->add_option("--r", b_r)->required();
    b_sweep->add_option("--delta", b_delta)->required();
    b_sweep->add_option("--n-from", s_n_from)->required();
    b_sweep->add_option("--n-to", s_n_to)->required();
    b_sweep->callback([&]() {
        std::cout << "n,k,r,delta,q,bound_new,floor_r2,verdict,notes\n";
        std::uint64_t a = b_r + b_delta - 1;
        for (std::uint64_t n = s_n_from; n <= s_n_to; ++n) {
            if (n % a != 0) continue;
            std::uint64_t m = n / a;
            if (m * b_r < 2) continue;
            std::uint64_t k = m * b_r - 2;  // the h=2 MR profile
            if (k == 0 || k % b_r != 0) {
                // fall back to the largest multiple of r below mr
                k = (m * b_r - 2) / b_r * b_r;
                if (k < 2 * b_r) continue;
            }
            FieldBound fb = field_bound_new(n, k, b_r, b_delta);
            std::uint64_t q = fb.value ? *fb.value : 0;
            OptimalityVerdict v = optimal_field_size_verdict(n, k, b_r, b_delta, q ? q : 2);
            std::cout << n << "," << k << "," << b_r << "," << b_delta << "," << q << ","
                      << (fb.value ? std::to_string(*fb.value) : "") << ","
                      << (b_r == 2 ? std::to_string(n - 1) : "") << ","
                      << (v.status == OptimalityVerdict::Status::Optimal ? "optimal"
                          : v.status == OptimalityVerdict::Status::Gap   ? "gap"
                                                                         : "notApplicable")
                      << "," << (fb.value ? "" : fb.reason) << "\n";
        }
    });

    // ---- equiv ----
    auto* equiv = app.add_subcommand("equiv", "permutation machinery");
    equiv->require_subcommand(1);
    std::uint64_t e_q = 0;
    std::uint32_t e_b = 1;
    std::size_t e_r = 0, e_delta = 0, e_s = 1, e_a = 0;
    std::uint64_t e_limit = 1000000;
    std::string e_out, e_apply;

    auto add_param_opts = [&](CLI::App* cmd) {
        cmd->add_option("--q", e_q)->required();
        cmd->add_option("--b", e_b)->required();
        cmd->add_option("--r", e_r)->required();
        cmd->add_option("--delta", e_delta)->required();
        cmd->add_option("--s", e_s);
    };

    auto* e_suff = equiv->add_subcommand("sufficient", "explicit cyclifying permutation");
    add_param_opts(e_suff);
    e_suff->callback([&]() {
        MrParams p{e_q, e_b, e_r, e_delta, e_s};
        auto perm = cyclifying_perm(p);
        ojson rep;
        rep["command"] = "equiv sufficient";
        rep["inputs"] = {{"q", e_q}, {"b", e_b}, {"r", e_r}, {"delta", e_delta}, {"s", e_s}};
        ojson res;
        res["exists"] = perm.has_value();
        if (perm) res["perm"] = perm_to_json(*perm);
        rep["results"] = res;
        rep["checks"] = checks_json({{"cyclifying_perm_exists", perm.has_value(), ""}});
        emit(rep, elapsed());
        if (!perm) exit_code = kPropertyFailed;
    });

    auto* e_nec = equiv->add_subcommand("necessary", "necessary-condition verdict");
    add_param_opts(e_nec);
    e_nec->callback([&]() {
        MrParams p{e_q, e_b, e_r, e_delta, e_s};
        NecessaryVerdict v = necessary_verdict(p);
        ojson rep;
        rep["command"] = "equiv necessary";
        rep["inputs"] = {{"q", e_q}, {"b", e_b}, {"r", e_r}, {"delta", e_delta}};
        ojson res;
        res["status"] = v.status == NecessaryVerdict::Status::PermutableMaybe ? "permutable_maybe"
                        : v.status == NecessaryVerdict::Status::NotPermutable ? "not_permutable"
                                                                              : "hypotheses_unmet";
        res["gcd_m_a"] = v.gcd_m_a;
        res["delta"] = v.delta;
        res["gcd_divides_delta"] = v.gcd_divides_delta;
        res["failed_hypotheses"] = v.failed_hypotheses;
        res["report"] = v.report;
        rep["results"] = res;
        rep["checks"] = checks_json(
            {{"hypotheses_met", v.status != NecessaryVerdict::Status::HypothesesUnmet, ""}});
        emit(rep, elapsed());
        if (v.status == NecessaryVerdict::Status::HypothesesUnmet) exit_code = kBadInput;
    });

    auto* e_build = equiv->add_subcommand("build-perm", "write the cyclifying permutation (and optionally the permuted code)");
    add_param_opts(e_build);
    e_build->add_option("--out", e_out, "permutation JSON file")->required();
    e_build->add_option("--apply", e_apply, "also write the permuted known-mr code here");
    e_build->callback([&]() {
        MrParams p{e_q, e_b, e_r, e_delta, e_s};
        auto perm = cyclifying_perm(p);
        if (!perm) {
            emit({{"command", "equiv build-perm"}, {"results", {{"exists", false}}}}, elapsed());
            exit_code = kPropertyFailed;
            return;
        }
        std::ofstream out(e_out);
        out << perm_to_json(*perm).dump(2) << "\n";
        ojson res;
        res["exists"] = true;
        res["perm_file"] = e_out;
        if (!e_apply.empty()) {
            LinearCode permuted = apply_perm(build_known_mr(p), *perm);
            ojson meta;
            meta["family"] = "known-mr-permuted";
            meta["q"] = p.q;
            meta["b"] = p.b;
            meta["r"] = p.r;
            meta["delta"] = p.delta;
            meta["s"] = p.s;
            save_code(permuted, e_apply, meta);
            res["code_file"] = e_apply;
            res["cyclic"] = is_cyclic(permuted);
        }
        ojson rep;
        rep["command"] = "equiv build-perm";
        rep["inputs"] = {{"q", e_q}, {"b", e_b}, {"r", e_r}, {"delta", e_delta}, {"s", e_s}};
        rep["results"] = res;
        rep["checks"] = checks_json({{"cyclifying_perm_exists", true, ""}});
        emit(rep, elapsed());
    });

    auto* e_search = equiv->add_subcommand("search", "exhaustive Psi(n,a) search");
    e_search->add_option("--code", v_code)->required();
    e_search->add_option("--a", e_a, "repair-set size r+delta-1")->required();
    e_search->add_option("--limit", e_limit);
    e_search->callback([&]() {
        LinearCode code = load_code(v_code);
        auto perm = brute_force_psi_search(code, e_a, e_limit, g_opt.jobs);
        ojson rep;
        rep["command"] = "equiv search";
        rep["inputs"] = {{"code", v_code}, {"a", e_a}, {"limit", e_limit}};
        ojson res;
        res["family_size"] = psi_family_size(code.n, e_a);
        res["found"] = perm.has_value();
        if (perm) res["perm"] = perm_to_json(*perm);
        rep["results"] = res;
        rep["checks"] = checks_json({{"cyclifying_perm_found", perm.has_value(), ""}});
        emit(rep, elapsed());
        if (!perm) exit_code = kPropertyFailed;
    });

    // ---- repair ----
    auto* repair = app.add_subcommand("repair", "local repair, escalating to MR-level decoding");
    std::string r_word;
    repair->add_option("--code", v_code)->required();
    repair->add_option("--word", r_word, "comma-separated symbols, ? for erasure")->required();
    repair->add_option("--r", v_r);
    repair->add_option("--delta", v_delta);
    repair->callback([&]() {
        ojson meta;
        LinearCode code = load_with_profile(v_r, v_delta, meta);
        auto prof = discover_repair_partition(code, v_r, v_delta);
        if (!prof) fail("UnverifiedProfile", "no repair partition found");
        auto word = parse_word(r_word, code.n);
        LocalRepairResult lr = local_repair(code, *prof, word);
        ojson res;
        res["locally_repaired"] = lr.fully_repaired;
        res["escalated_sets"] = lr.escalate;
        bool ok = lr.fully_repaired;
        std::vector<gf_t> final_word;
        if (lr.fully_repaired) {
            final_word.reserve(code.n);
            for (auto& s : lr.word) final_word.push_back(*s);
        } else {
            DecodeResult dr = erasure_decode(code, lr.word);
            ok = dr.status == DecodeResult::Status::Ok;
            res["mr_level_status"] = dr.status == DecodeResult::Status::Ok            ? "ok"
                                     : dr.status == DecodeResult::Status::Unrecoverable
                                         ? "unrecoverable"
                                         : "not_a_codeword";
            if (ok) final_word = dr.word;
        }
        if (ok) res["word"] = final_word;
        ojson rep;
        rep["command"] = "repair";
        rep["inputs"] = {{"code", v_code}, {"word", r_word}};
        rep["results"] = res;
        rep["checks"] = checks_json({{"recovered", ok, ""}});
        emit(rep, elapsed());
        if (!ok) exit_code = kPropertyFailed;
    });

    // ---- repro ----
    auto* repro = app.add_subcommand("repro", "run the verification suite");
    std::string repro_what = "all";
    repro->add_option("what", repro_what, "all");
    repro->callback([&]() {
        if (repro_what != "all") fail("ModeUnsupported", repro_what);
        auto results = run_acceptance(g_opt.jobs);
        bool all = true;
        if (g_opt.format == "human") {
            for (const auto& r : results) {
                std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << "criterion " << r.id << ": "
                          << r.name;
                if (g_opt.timings) std::cout << " (" << r.runtime_ms << " ms)";
                if (!r.pass) std::cout << "  -- " << r.detail;
                std::cout << "\n";
                all = all && r.pass;
            }
            std::cout << (all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAILED") << "\n";
        } else {
            ojson arr = ojson::array();
            for (const auto& r : results) {
                ojson c;
                c["id"] = r.id;
                c["name"] = r.name;
                c["pass"] = r.pass;
                c["detail"] = r.detail;
                if (g_opt.timings) c["runtime_ms"] = r.runtime_ms;
                arr.push_back(c);
                all = all && r.pass;
            }
            ojson rep;
            rep["command"] = "repro all";
            rep["results"] = arr;
            rep["all_pass"] = all;
            emit(rep, elapsed());
        }
        if (!all) exit_code = kPropertyFailed;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kBadInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    }
    return exit_code;
}
