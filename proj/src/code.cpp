#include "lrcmr/code.hpp"

#include <algorithm>
#include <numeric>

#include "lrcmr/comb.hpp"
#include "lrcmr/parallel.hpp"

namespace lrcmr {

std::vector<std::size_t> all_coordinates(std::size_t n) {
    std::vector<std::size_t> s(n);
    std::iota(s.begin(), s.end(), 0);
    return s;
}

bool LinearCode::contains(const std::vector<gf_t>& word) const {
    auto syn = H.mul_vec(word);
    return std::all_of(syn.begin(), syn.end(), [](gf_t v) { return v == 0; });
}

namespace {

Matrix drop_zero_rows(const Matrix& m) {
    std::vector<std::size_t> keep;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        bool zero = true;
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.at(r, c) != 0) {
                zero = false;
                break;
            }
        if (!zero) keep.push_back(r);
    }
    Matrix out(m.field_ptr(), keep.size(), m.cols());
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t c = 0; c < m.cols(); ++c) out.set(i, c, m.at(keep[i], c));
    return out;
}

}  // namespace

LinearCode code_from_parity(const Matrix& h) {
    Matrix hn = drop_zero_rows(h.rref().first);
    Matrix g = hn.null_space();
    LinearCode c{h.field_ptr(), h.cols(), g.rows(), std::move(hn), std::move(g), std::nullopt};
    return c;
}

LinearCode code_from_generator(const Matrix& g) {
    Matrix gn = drop_zero_rows(g.rref().first);
    Matrix h = gn.null_space();
    LinearCode c{g.field_ptr(), g.cols(), gn.rows(), std::move(h), std::move(gn), std::nullopt};
    return c;
}

LinearCode code_from_roots(const FieldPtr& field, std::size_t n,
                           std::vector<std::size_t> root_exponents) {
    std::uint64_t group = field->q() - 1;
    if (n == 0 || group % n != 0) fail("OrderMismatch", "n must divide q-1");
    std::uint64_t step = group / n;
    gf_t alpha_n = field->alpha_pow(step);  // order exactly n

    std::sort(root_exponents.begin(), root_exponents.end());
    root_exponents.erase(std::unique(root_exponents.begin(), root_exponents.end()),
                         root_exponents.end());
    for (auto e : root_exponents)
        if (e >= n) fail("OutOfRange", "root exponent must be in [0, n)");

    Matrix h(field, root_exponents.size(), n);
    for (std::size_t r = 0; r < root_exponents.size(); ++r) {
        gf_t point = field->pow(alpha_n, static_cast<long long>(root_exponents[r]));
        gf_t v = 1;
        for (std::size_t j = 0; j < n; ++j) {
            h.set(r, j, v);
            v = field->mul(v, point);
        }
    }
    // distinct exponents give distinct evaluation points, so rows are a
    // Vandermonde and independent; keep the assert anyway
    if (h.rank() != root_exponents.size()) fail("OrderMismatch", "dependent root rows");
    LinearCode c = code_from_parity(h);
    c.H = std::move(h);  // keep the evaluation-row form, it is already full rank
    c.roots = std::move(root_exponents);
    return c;
}

LinearCode puncture(const LinearCode& c, const std::vector<std::size_t>& s) {
    if (s.empty()) fail("EmptySet", "puncture set");
    return code_from_generator(c.G.columns(s));
}

LinearCode shorten(const LinearCode& c, const std::vector<std::size_t>& s) {
    if (s.empty()) fail("EmptySet", "shorten set");
    return code_from_parity(c.H.columns(s));
}

namespace {

std::size_t min_distance_subsets(const LinearCode& c, std::size_t cap) {
    for (std::size_t w = 1; w <= cap; ++w) {
        bool dependent_found = !for_each_combination(c.n, w, [&](const std::vector<std::size_t>& cols) {
            return c.H.columns(cols).rank() == w;  // keep scanning while independent
        });
        if (dependent_found) return w;
    }
    return 0;  // above cap
}

std::size_t min_distance_enumerate(const LinearCode& c, unsigned jobs) {
    const Field& f = *c.field;
    std::uint64_t q = f.q();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < c.k; ++i) total *= q;

    auto weight_for_range = [&](std::size_t lo, std::size_t hi, std::size_t& best) {
        std::vector<gf_t> msg(c.k, 0);
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            if (idx == 0) continue;  // zero message
            std::uint64_t t = idx;
            for (std::size_t i = 0; i < c.k; ++i) {
                msg[i] = static_cast<gf_t>(t % q);
                t /= q;
            }
            std::size_t w = 0;
            for (std::size_t j = 0; j < c.n && w < best; ++j) {
                gf_t acc = 0;
                for (std::size_t i = 0; i < c.k; ++i)
                    if (msg[i] != 0 && c.G.at(i, j) != 0) acc = f.add(acc, f.mul(msg[i], c.G.at(i, j)));
                if (acc != 0) ++w;
            }
            if (w < best && w > 0) best = w;
        }
    };
    std::size_t init = c.n + 1;
    return chunked_reduce<std::size_t>(
        static_cast<std::size_t>(total), jobs, init,
        [&](std::size_t lo, std::size_t hi, std::size_t& best) { weight_for_range(lo, hi, best); },
        [](std::size_t& acc, const std::size_t& x) { acc = std::min(acc, x); });
}

}  // namespace

std::optional<std::size_t> min_distance(const LinearCode& c, std::optional<std::size_t> cap_opt,
                                        DistanceMethod method, unsigned jobs) {
    if (c.k == 0) fail("ZeroDimensional", "minimum distance of the zero code");
    std::size_t cap = cap_opt.value_or(c.n - c.k + 1);

    if (method == DistanceMethod::Auto) {
        long double subset_cost = 0;
        for (std::size_t w = 1; w <= cap; ++w)
            subset_cost += static_cast<long double>(binom(c.n, w)) * static_cast<long double>(w * w);
        long double enum_cost = 1;
        for (std::size_t i = 0; i < c.k && enum_cost < 1e18L; ++i)
            enum_cost *= static_cast<long double>(c.field->q());
        enum_cost *= static_cast<long double>(c.n);
        if (subset_cost > 1e12L && enum_cost > 1e12L)
            fail("TooLarge", "exact minimum distance infeasible at this size (both oracles)");
        method = subset_cost <= enum_cost ? DistanceMethod::ColumnSubsets : DistanceMethod::Enumeration;
    }

    std::size_t d = 0;
    if (method == DistanceMethod::ColumnSubsets) {
        d = min_distance_subsets(c, cap);
    } else {
        if (c.k >= 63) fail("TooLarge", "codeword enumeration infeasible");
        long double total = 1;
        for (std::size_t i = 0; i < c.k; ++i) total *= static_cast<long double>(c.field->q());
        if (total > static_cast<long double>(1ull << 26)) fail("TooLarge", "codeword enumeration infeasible");
        d = min_distance_enumerate(c, jobs);
        if (d > cap) d = 0;
    }
    if (d == 0) return std::nullopt;  // above cap
    return d;
}

bool is_cyclic(const LinearCode& c) {
    for (std::size_t r = 0; r < c.G.rows(); ++r) {
        std::vector<gf_t> g = c.G.row(r);
        std::vector<gf_t> shifted(c.n);
        if (c.n > 0) {
            shifted[0] = g[c.n - 1];
            for (std::size_t j = 1; j < c.n; ++j) shifted[j] = g[j - 1];
        }
        auto syn = c.H.mul_vec(shifted);
        for (gf_t v : syn)
            if (v != 0) return false;
    }
    return true;
}

std::optional<std::vector<std::size_t>> mds_violation(const LinearCode& c) {
    std::size_t redundancy = c.n - c.k;
    if (redundancy == 0) return std::nullopt;  // full space, d = 1 = n-k+1
    std::optional<std::vector<std::size_t>> witness;
    for_each_combination(c.n, redundancy, [&](const std::vector<std::size_t>& cols) {
        if (c.H.columns(cols).rank() != redundancy) {
            witness = cols;
            return false;
        }
        return true;
    });
    return witness;
}

bool is_mds(const LinearCode& c) { return !mds_violation(c).has_value(); }

DecodeResult erasure_decode(const LinearCode& c, const std::vector<std::optional<gf_t>>& word) {
    if (word.size() != c.n) fail("ShapeMismatch", "word length");
    std::vector<std::size_t> erased, known;
    for (std::size_t j = 0; j < c.n; ++j)
        (word[j] ? known : erased).push_back(j);

    const Field& f = *c.field;
    // rhs = -H|_known * c_known
    std::vector<gf_t> rhs(c.H.rows(), 0);
    for (std::size_t r = 0; r < c.H.rows(); ++r) {
        gf_t acc = 0;
        for (std::size_t j : known)
            if (c.H.at(r, j) != 0 && *word[j] != 0) acc = f.add(acc, f.mul(c.H.at(r, j), *word[j]));
        rhs[r] = f.neg(acc);
    }

    if (erased.empty()) {
        for (gf_t v : rhs)
            if (v != 0) return {DecodeResult::Status::NotACodeword, {}};
        std::vector<gf_t> out(c.n);
        for (std::size_t j = 0; j < c.n; ++j) out[j] = *word[j];
        return {DecodeResult::Status::Ok, std::move(out)};
    }

    Matrix he = c.H.columns(erased);
    auto sol = he.solve(rhs);
    if (!sol) return {DecodeResult::Status::NotACodeword, {}};
    if (he.rank() != erased.size()) return {DecodeResult::Status::Unrecoverable, {}};

    std::vector<gf_t> out(c.n, 0);
    for (std::size_t j : known) out[j] = *word[j];
    for (std::size_t i = 0; i < erased.size(); ++i) out[erased[i]] = (*sol)[i];
    return {DecodeResult::Status::Ok, std::move(out)};
}

LinearCode dual(const LinearCode& c) { return code_from_parity(c.G); }

bool same_code(const LinearCode& a, const LinearCode& b) {
    if (a.n != b.n || a.k != b.k) return false;
    return row_space_equal(a.G, b.G);
}

}  // namespace lrcmr
