#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lrcmr/matrix.hpp"

using namespace lrcmr;

namespace {

Matrix random_matrix(const FieldPtr& f, std::size_t rows, std::size_t cols, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m.set(r, c, static_cast<gf_t>(rng() % f->q()));
    return m;
}

}  // namespace

TEST_CASE("rank basics") {
    auto f = Field::make(2, 4);
    Matrix zero(f, 3, 5);
    CHECK(zero.rank() == 0);
    CHECK(Matrix::identity(f, 4).rank() == 4);

    // 3x5 generalized Vandermonde has rank min(3,5) = 3
    std::vector<gf_t> pts;
    for (std::uint64_t i = 0; i < 5; ++i) pts.push_back(f->alpha_pow(i));
    CHECK(Matrix::vandermonde(f, pts, 3).rank() == 3);
    // 4x3 on 3 distinct points -> 3
    pts.resize(3);
    CHECK(Matrix::vandermonde(f, pts, 4).rank() == 3);
}

TEST_CASE("vandermonde validation and start powers") {
    auto f = Field::make(2, 4);
    CHECK_THROWS_WITH_AS(Matrix::vandermonde(f, {1, 1}, 2), doctest::Contains("DuplicatePoint"),
                         Error);
    Matrix ones = Matrix::vandermonde(f, {1, 2, 3}, 1, 0);
    for (std::size_t j = 0; j < 3; ++j) CHECK(ones.at(0, j) == 1);

    // beta of order 3 on points {1, beta, beta^2}, height delta-1, start 1:
    // the local parity block shape
    gf_t beta = f->alpha_pow(5);
    Matrix local = Matrix::vandermonde(f, {1, beta, f->mul(beta, beta)}, 1, 1);
    CHECK(local.at(0, 0) == 1);
    CHECK(local.at(0, 1) == beta);
    CHECK(local.at(0, 2) == f->mul(beta, beta));
}

TEST_CASE("rref is idempotent on identity and preserves rank") {
    auto f = Field::make(13, 1);
    Matrix id = Matrix::identity(f, 4);
    auto [r, piv] = id.rref();
    CHECK(r == id);
    CHECK(piv == std::vector<std::size_t>({0, 1, 2, 3}));

    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        Matrix m = random_matrix(f, 4, 7, seed);
        CHECK(m.rref().first.rank() == m.rank());
    }
}

TEST_CASE("rank-1 outer product has one pivot") {
    auto f = Field::make(13, 1);
    std::vector<gf_t> a{1, 3, 5}, b{2, 7, 11, 1};
    Matrix m(f, 3, 4);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 4; ++j) m.set(i, j, f->mul(a[i], b[j]));
    CHECK(m.rank() == 1);
    CHECK(m.rref().second.size() == 1);
}

TEST_CASE("null space") {
    auto f2 = Field::make(2, 1);
    CHECK(Matrix::identity(f2, 4).null_space().rows() == 0);

    // all-ones row over GF(2): kernel is the even-weight space
    for (std::size_t n = 2; n <= 6; ++n) {
        Matrix ones(f2, 1, n);
        for (std::size_t c = 0; c < n; ++c) ones.set(0, c, 1);
        Matrix ns = ones.null_space();
        CHECK(ns.rows() == n - 1);
        // enumerate: every kernel combination has even weight
        for (std::uint64_t mask = 0; mask < (1ull << ns.rows()); ++mask) {
            std::vector<gf_t> v(n, 0);
            for (std::size_t r = 0; r < ns.rows(); ++r)
                if (mask & (1ull << r))
                    for (std::size_t c = 0; c < n; ++c) v[c] ^= ns.at(r, c);
            std::size_t weight = 0;
            for (auto x : v) weight += x;
            CHECK(weight % 2 == 0);
        }
    }

    auto f = Field::make(2, 4);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        Matrix m = random_matrix(f, 3, 7, seed);
        Matrix ns = m.null_space();
        CHECK(ns.rows() + m.rank() == m.cols());  // rank-nullity
        // M * basis^T = 0
        Matrix prod = m.mul(ns.transpose());
        for (auto v : prod.data()) CHECK(v == 0);
    }
}

TEST_CASE("solve") {
    auto f = Field::make(13, 1);
    Matrix id = Matrix::identity(f, 3);
    auto x = id.solve({3, 7, 11});
    REQUIRE(x.has_value());
    CHECK(*x == std::vector<gf_t>({3, 7, 11}));

    Matrix m = random_matrix(f, 3, 5, 99);
    auto zero = m.solve({0, 0, 0});
    REQUIRE(zero.has_value());
    CHECK(*zero == std::vector<gf_t>(5, 0));

    // stack an inconsistent row (0 ... 0 | 1)
    Matrix bad(f, 1, 5);
    Matrix stacked = m.stack(bad);
    auto none = stacked.solve({1, 2, 3, 1});
    // rhs for the zero row is 1 -> no solution
    CHECK(!none.has_value());
}

TEST_CASE("solve returns a solution when one exists") {
    auto f = Field::make(2, 4);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Matrix m = random_matrix(f, 4, 6, seed);
        std::mt19937_64 rng(seed * 17);
        std::vector<gf_t> x0(6);
        for (auto& v : x0) v = static_cast<gf_t>(rng() % f->q());
        auto b = m.mul_vec(x0);
        auto x = m.solve(b);
        REQUIRE(x.has_value());
        CHECK(m.mul_vec(*x) == b);
    }
}

TEST_CASE("row space equality") {
    auto f = Field::make(2, 4);
    Matrix m = random_matrix(f, 3, 6, 5);
    // row permutation
    Matrix perm(f, 3, 6);
    for (std::size_t c = 0; c < 6; ++c) {
        perm.set(0, c, m.at(2, c));
        perm.set(1, c, m.at(0, c));
        perm.set(2, c, m.at(1, c));
    }
    CHECK(row_space_equal(m, perm));
    // scaling a row by a nonzero constant
    Matrix scaled = m;
    for (std::size_t c = 0; c < 6; ++c) scaled.set(1, c, f->mul(7, m.at(1, c)));
    CHECK(row_space_equal(m, scaled));

    Matrix e1(f, 1, 2), e2(f, 1, 2);
    e1.set(0, 0, 1);
    e2.set(0, 1, 1);
    CHECK(!row_space_equal(e1, e2));
}

TEST_CASE("rank invariances") {
    auto f = Field::make(3, 2);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        Matrix m = random_matrix(f, 4, 6, seed);
        CHECK(m.rank() == m.transpose().rank());
        // column permutation: reverse
        std::vector<std::size_t> rev{5, 4, 3, 2, 1, 0};
        CHECK(m.columns(rev).rank() == m.rank());
    }
}
