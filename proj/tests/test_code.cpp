#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lrcmr/code.hpp"
#include "lrcmr/comb.hpp"
#include "lrcmr/mr.hpp"

using namespace lrcmr;

namespace {

LinearCode parity_code_gf2(std::size_t n) {
    auto f = Field::make(2, 1);
    Matrix ones(f, 1, n);
    for (std::size_t c = 0; c < n; ++c) ones.set(0, c, 1);
    return code_from_parity(ones);
}

LinearCode repetition_code(const FieldPtr& f, std::size_t n) {
    Matrix g(f, 1, n);
    for (std::size_t c = 0; c < n; ++c) g.set(0, c, 1);
    return code_from_generator(g);
}

// enumerate all codewords (tiny codes only)
std::vector<std::vector<gf_t>> all_codewords(const LinearCode& c) {
    std::vector<std::vector<gf_t>> words;
    std::uint64_t q = c.field->q(), total = 1;
    for (std::size_t i = 0; i < c.k; ++i) total *= q;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t t = idx;
        std::vector<gf_t> w(c.n, 0);
        for (std::size_t i = 0; i < c.k; ++i) {
            gf_t m = static_cast<gf_t>(t % q);
            t /= q;
            if (m == 0) continue;
            for (std::size_t j = 0; j < c.n; ++j)
                w[j] = c.field->add(w[j], c.field->mul(m, c.G.at(i, j)));
        }
        words.push_back(std::move(w));
    }
    return words;
}

}  // namespace

TEST_CASE("code_from_parity basics") {
    LinearCode par = parity_code_gf2(6);
    CHECK(par.n == 6);
    CHECK(par.k == 5);

    auto f = Field::make(2, 2);
    LinearCode trivial = code_from_parity(Matrix::identity(f, 4));
    CHECK(trivial.k == 0);

    // duplicate rows describe the same code
    Matrix h(f, 1, 5);
    for (std::size_t c = 0; c < 5; ++c) h.set(0, c, static_cast<gf_t>(c % 3 + 1));
    LinearCode a = code_from_parity(h);
    LinearCode b = code_from_parity(h.stack(h));
    CHECK(same_code(a, b));
}

TEST_CASE("code_from_roots") {
    auto f = Field::make(2, 4);
    LinearCode full = code_from_roots(f, 15, {});
    CHECK(full.k == 15);

    LinearCode even_sum = code_from_roots(f, 15, {0});
    CHECK(even_sum.k == 14);
    // c(1) = 0 for every generator row
    for (std::size_t r = 0; r < even_sum.G.rows(); ++r) {
        gf_t acc = 0;
        for (std::size_t j = 0; j < 15; ++j) acc = f->add(acc, even_sum.G.at(r, j));
        CHECK(acc == 0);
    }

    // n must divide q-1
    CHECK_THROWS_WITH_AS(code_from_roots(f, 7, {0}), doctest::Contains("OrderMismatch"), Error);

    // the (q=4,b=2,r=2,delta=2) root set expands to 7 exponents and k = 8
    LinearCode c1 = build_cyclic_mr(MrParams{4, 2, 2, 2, 1});
    REQUIRE(c1.roots.has_value());
    CHECK(*c1.roots == std::vector<std::size_t>({0, 1, 2, 4, 7, 10, 13}));
    CHECK(c1.k == 8);
    CHECK(c1.H.rank() == 7);
    CHECK(is_cyclic(c1));
}

TEST_CASE("puncture") {
    auto f = Field::make(2, 4);
    LinearCode c1 = build_cyclic_mr(MrParams{4, 2, 2, 2, 1});
    LinearCode same = puncture(c1, all_coordinates(15));
    CHECK(same_code(same, c1));

    LinearCode rep = repetition_code(f, 5);
    LinearCode rep2 = puncture(rep, {1, 3});
    CHECK(rep2.n == 2);
    CHECK(rep2.k == 1);
    auto d = min_distance(rep2);
    CHECK(d.value() == 2);

    // local repair set of the cyclic instance: [3,2,2] MDS
    LinearCode local = puncture(c1, {0, 5, 10});
    CHECK(local.n == 3);
    CHECK(local.k == 2);
    CHECK(min_distance(local).value() == 2);
    CHECK(is_mds(local));

    CHECK_THROWS_WITH_AS(puncture(c1, {}), doctest::Contains("EmptySet"), Error);
}

TEST_CASE("shorten follows the parity-restriction convention") {
    auto f = Field::make(2, 4);
    LinearCode c1 = build_cyclic_mr(MrParams{4, 2, 2, 2, 1});
    CHECK(same_code(shorten(c1, all_coordinates(15)), c1));

    LinearCode zero = code_from_parity(Matrix::identity(f, 5));
    LinearCode sz = shorten(zero, {0, 2});
    CHECK(sz.n == 2);
    CHECK(sz.k == 0);

    // known-family instance: H restricted to a repair set is 5x4 with the
    // (delta+1) x a live structure
    LinearCode c2 = build_known_mr(MrParams{13, 1, 3, 2, 1});
    Matrix hs = c2.H.columns({0, 3, 6, 9});
    CHECK(hs.rows() == 5);
    CHECK(hs.cols() == 4);
    CHECK(hs.rank() == 3);  // delta+1 = 3 live rows, rest restrict to zero
    LinearCode sc = shorten(c2, {0, 3, 6, 9});
    CHECK(sc.n == 4);
    CHECK(sc.k == 1);
}

TEST_CASE("min distance oracles") {
    auto f13 = Field::make(13, 1);
    LinearCode rep = repetition_code(f13, 7);
    CHECK(min_distance(rep).value() == 7);

    LinearCode c1 = build_cyclic_mr(MrParams{4, 2, 2, 2, 1});
    CHECK(min_distance(c1, std::nullopt, DistanceMethod::ColumnSubsets).value() == 5);

    LinearCode c2 = build_cyclic_mr(MrParams{13, 1, 3, 2, 1});
    CHECK(min_distance(c2, std::nullopt, DistanceMethod::ColumnSubsets).value() == 4);

    // the two oracles agree wherever enumeration is feasible
    LinearCode small = build_cyclic_mr(MrParams{8, 1, 6, 2, 1});  // [7,4]_8
    auto ds = min_distance(small, small.n, DistanceMethod::ColumnSubsets);
    auto de = min_distance(small, small.n, DistanceMethod::Enumeration);
    CHECK(ds.value() == de.value());
    CHECK(ds.value() == 4);

    // cap semantics
    CHECK(!min_distance(c1, 4, DistanceMethod::ColumnSubsets).has_value());

    LinearCode zero = code_from_parity(Matrix::identity(f13, 3));
    CHECK_THROWS_WITH_AS(min_distance(zero), doctest::Contains("ZeroDimensional"), Error);
}

TEST_CASE("parallel enumeration is deterministic") {
    LinearCode small = build_cyclic_mr(MrParams{8, 1, 6, 2, 1});
    auto d1 = min_distance(small, small.n, DistanceMethod::Enumeration, 1);
    auto d4 = min_distance(small, small.n, DistanceMethod::Enumeration, 4);
    CHECK(d1.value() == d4.value());
}

TEST_CASE("is_cyclic") {
    auto f = Field::make(2, 4);
    CHECK(is_cyclic(repetition_code(f, 6)));
    CHECK(is_cyclic(build_cyclic_mr(MrParams{4, 2, 2, 2, 1})));
    CHECK(!is_cyclic(build_known_mr(MrParams{13, 1, 3, 2, 1})));
}

TEST_CASE("is_mds") {
    auto f = Field::make(2, 4);
    CHECK(is_mds(repetition_code(f, 4)));
    LinearCode full = code_from_roots(f, 15, {});
    CHECK(is_mds(full));  // d = 1 = n-n+1

    // even-weight binary code of length 4 is [4,3,2] MDS
    auto f2 = Field::make(2, 1);
    Matrix ones(f2, 1, 4);
    for (std::size_t c = 0; c < 4; ++c) ones.set(0, c, 1);
    CHECK(is_mds(code_from_parity(ones)));

    // [5,3] binary code with d = 2 < 3 is not MDS; witness is a dependent pair
    Matrix h(f2, 2, 5);
    h.set(0, 0, 1);
    h.set(0, 1, 1);
    h.set(1, 2, 1);
    h.set(1, 3, 1);
    LinearCode not_mds = code_from_parity(h);
    auto w = mds_violation(not_mds);
    REQUIRE(w.has_value());
    CHECK(not_mds.H.columns(*w).rank() < w->size());
}

TEST_CASE("erasure decode") {
    LinearCode c1 = build_cyclic_mr(MrParams{4, 2, 2, 2, 1});
    const auto& f = *c1.field;

    // a codeword: random message through G
    std::mt19937_64 rng(7);
    std::vector<gf_t> msg(c1.k);
    for (auto& m : msg) m = static_cast<gf_t>(rng() % f.q());
    std::vector<gf_t> word(c1.n, 0);
    for (std::size_t i = 0; i < c1.k; ++i)
        for (std::size_t j = 0; j < c1.n; ++j)
            word[j] = f.add(word[j], f.mul(msg[i], c1.G.at(i, j)));
    REQUIRE(c1.contains(word));

    SUBCASE("no erasures round-trips") {
        std::vector<std::optional<gf_t>> w(word.begin(), word.end());
        auto res = erasure_decode(c1, w);
        CHECK(res.status == DecodeResult::Status::Ok);
        CHECK(res.word == word);
    }

    SUBCASE("single local erasure matches exhaustive completion") {
        LinearCode local = puncture(c1, {0, 5, 10});
        std::vector<gf_t> lw{word[0], word[5], word[10]};
        std::vector<std::optional<gf_t>> erased{std::nullopt, lw[1], lw[2]};
        auto res = erasure_decode(local, erased);
        REQUIRE(res.status == DecodeResult::Status::Ok);
        // unique codeword agreeing on the known positions
        std::size_t matches = 0;
        for (const auto& cw : all_codewords(local))
            if (cw[1] == lw[1] && cw[2] == lw[2]) {
                ++matches;
                CHECK(cw == res.word);
            }
        CHECK(matches == 1);
    }

    SUBCASE("five erasures in MR shape recover") {
        // delta-1 = 1 erasure per repair set
        std::vector<std::optional<gf_t>> w(word.begin(), word.end());
        for (std::size_t i = 0; i < 5; ++i) w[i] = std::nullopt;  // one per coset {i,5+i,10+i}
        auto res = erasure_decode(c1, w);
        REQUIRE(res.status == DecodeResult::Status::Ok);
        CHECK(res.word == word);
    }

    SUBCASE("too many erasures is unrecoverable") {
        std::vector<std::optional<gf_t>> w(word.begin(), word.end());
        for (std::size_t j = 0; j < 8; ++j) w[j] = std::nullopt;  // > n-k = 7
        auto res = erasure_decode(c1, w);
        CHECK(res.status == DecodeResult::Status::Unrecoverable);
    }

    SUBCASE("corrupted known symbol is reported") {
        std::vector<std::optional<gf_t>> w(word.begin(), word.end());
        w[3] = f.add(*w[3], 1);
        auto res = erasure_decode(c1, w);
        CHECK(res.status == DecodeResult::Status::NotACodeword);
    }
}

TEST_CASE("combination enumeration and unranking agree") {
    for (auto [n, k] : std::vector<std::pair<std::size_t, std::size_t>>{
             {5, 0}, {5, 2}, {6, 3}, {7, 7}, {8, 1}}) {
        std::vector<std::vector<std::size_t>> in_order;
        for_each_combination(n, k, [&](const std::vector<std::size_t>& c) {
            in_order.push_back(c);
            return true;
        });
        CHECK(in_order.size() == binom(n, k));
        for (std::uint64_t i = 0; i < in_order.size(); ++i)
            CHECK(combination_unrank(n, k, i) == in_order[i]);
    }
}

TEST_CASE("duality round trip") {
    LinearCode c1 = build_cyclic_mr(MrParams{13, 1, 3, 2, 1});
    LinearCode dd = dual(dual(c1));
    CHECK(same_code(dd, c1));
    CHECK(dual(c1).k == c1.n - c1.k);
}

TEST_CASE("puncture dimension bound") {
    LinearCode c1 = build_cyclic_mr(MrParams{4, 2, 2, 2, 1});
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        std::size_t size = 1 + rng() % 6;
        std::vector<std::size_t> s;
        while (s.size() < size) {
            std::size_t x = rng() % 15;
            if (std::find(s.begin(), s.end(), x) == s.end()) s.push_back(x);
        }
        std::sort(s.begin(), s.end());
        LinearCode p = puncture(c1, s);
        CHECK(p.k <= std::min(s.size(), c1.k));
    }
    // equality to r on repair sets
    CHECK(puncture(c1, {0, 5, 10}).k == 2);
}
