#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "lrcmr/gf.hpp"

using namespace lrcmr;

namespace {

// independent reduction oracle: multiply coefficient polynomials and reduce
// mod (p, modulus) the long way
gf_t slow_mul(const Field& f, gf_t a, gf_t b) {
    std::vector<std::uint32_t> pa = f.unpack(a), pb = f.unpack(b);
    std::vector<std::uint32_t> prod(2 * f.e(), 0);
    for (std::size_t i = 0; i < pa.size(); ++i)
        for (std::size_t j = 0; j < pb.size(); ++j)
            prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % f.p();
    const auto& m = f.modulus();
    for (std::size_t d = prod.size(); d-- > f.e();) {
        std::uint32_t c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (std::size_t i = 0; i < f.e(); ++i) {
            std::uint32_t sub = static_cast<std::uint32_t>(
                (static_cast<std::uint64_t>(c) * m[i]) % f.p());
            prod[d - f.e() + i] = (prod[d - f.e() + i] + f.p() - sub) % f.p();
        }
    }
    prod.resize(f.e());
    return f.pack(prod);
}

}  // namespace

TEST_CASE("prime fields get the smallest generator") {
    auto gf2 = Field::make(2, 1);
    CHECK(gf2->q() == 2);
    CHECK(gf2->alpha() == 1);

    auto gf13 = Field::make(13, 1);
    CHECK(gf13->alpha() == 2);
    // verify by computing the orders of 2..12 directly
    for (gf_t g = 2; g < 13; ++g) {
        if (gf13->element_order(g) == 12) {
            CHECK(g == gf13->alpha());
            break;
        }
    }
}

TEST_CASE("GF(4) default modulus is x^2+x+1") {
    auto f = Field::make(2, 2);
    CHECK(f->modulus() == std::vector<std::uint32_t>({1, 1, 1}));
    CHECK(f->alpha() == 2);  // the residue class of x

    gf_t x = 2;
    CHECK(f->add(x, x) == 0);            // characteristic 2
    CHECK(f->mul(x, x) == 3);            // x^2 = x+1
    CHECK(f->mul(x, x) == slow_mul(*f, x, x));
    for (gf_t a = 1; a < 4; ++a) CHECK(f->div(a, a) == 1);
}

TEST_CASE("table multiplication agrees with polynomial reduction") {
    for (auto [p, e] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
             {2, 4}, {3, 2}, {5, 1}, {13, 1}, {3, 4}}) {
        auto f = Field::make(p, e);
        for (gf_t a = 0; a < f->q(); ++a)
            for (gf_t b = 0; b < f->q(); ++b) CHECK(f->mul(a, b) == slow_mul(*f, a, b));
    }
}

TEST_CASE("field axioms hold exhaustively for q <= 16") {
    for (auto [p, e] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
             {2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {5, 1}, {7, 1}, {11, 1}, {13, 1}}) {
        auto f = Field::make(p, e);
        std::uint64_t q = f->q();
        for (gf_t a = 0; a < q; ++a) {
            CHECK(f->add(a, 0) == a);
            CHECK(f->mul(a, 1) == a);
            CHECK(f->add(a, f->neg(a)) == 0);
            if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
            for (gf_t b = 0; b < q; ++b) {
                CHECK(f->add(a, b) == f->add(b, a));
                CHECK(f->mul(a, b) == f->mul(b, a));
                for (gf_t c = 0; c < q; ++c) {
                    CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
                    CHECK(f->add(a, f->add(b, c)) == f->add(f->add(a, b), c));
                    CHECK(f->mul(a, f->mul(b, c)) == f->mul(f->mul(a, b), c));
                }
            }
        }
    }
}

TEST_CASE("powers of alpha enumerate all nonzero elements") {
    auto f = Field::make(2, 4);
    std::set<gf_t> seen;
    for (std::uint64_t i = 0; i < f->q() - 1; ++i) seen.insert(f->alpha_pow(i));
    CHECK(seen.size() == f->q() - 1);
    CHECK(seen.count(0) == 0);
}

TEST_CASE("power semantics") {
    auto f = Field::make(2, 4);
    CHECK(f->pow(f->alpha(), 15) == 1);
    CHECK(f->pow(f->alpha(), 0) == 1);
    CHECK(f->pow(0, 0) == 1);
    CHECK(f->pow(0, 5) == 0);
    CHECK_THROWS_WITH_AS(f->pow(0, -1), doctest::Contains("DivisionByZero"), Error);
    // negative exponents go through the inverse
    gf_t a = f->alpha_pow(7);
    CHECK(f->mul(f->pow(a, -3), f->pow(a, 3)) == 1);
}

TEST_CASE("element orders divide q-1") {
    auto f = Field::make(2, 4);
    CHECK(f->element_order(1) == 1);
    CHECK(f->element_order(f->alpha()) == 15);
    // beta = alpha^5 has order 3: brute-force confirmation
    gf_t beta = f->alpha_pow(5);
    gf_t acc = beta;
    std::size_t ord = 1;
    while (acc != 1) {
        acc = f->mul(acc, beta);
        ++ord;
    }
    CHECK(ord == 3);
    CHECK(f->element_order(beta) == 3);
    for (gf_t a = 1; a < f->q(); ++a) CHECK((f->q() - 1) % f->element_order(a) == 0);
    CHECK_THROWS_WITH_AS(f->element_order(0), doctest::Contains("ZeroElement"), Error);
}

TEST_CASE("factory rejects bad input") {
    CHECK_THROWS_WITH_AS(Field::make(4, 1), doctest::Contains("NotPrime"), Error);
    CHECK_THROWS_WITH_AS(Field::make(2, 2, std::vector<std::uint32_t>{0, 0, 1}),
                         doctest::Contains("ReducibleModulus"), Error);  // x^2
    CHECK_THROWS_WITH_AS(Field::make(2, 2, std::vector<std::uint32_t>{1, 1}),
                         doctest::Contains("ReducibleModulus"), Error);  // wrong degree
}

TEST_CASE("Fe operators and field mismatch") {
    auto f4 = Field::make(2, 2);
    auto f16 = Field::make(2, 4);
    Fe x(2, f4), y(3, f4);
    CHECK((x * y).value() == f4->mul(2, 3));
    CHECK((x + x).value() == 0);
    CHECK((y / y).value() == 1);
    Fe z(2, f16);
    CHECK_THROWS_WITH_AS(x + z, doctest::Contains("FieldMismatch"), Error);
}

TEST_CASE("explicit alpha is validated") {
    // 3 = x+1 generates GF(4)* as well
    auto f = Field::make(2, 2, std::vector<std::uint32_t>{1, 1, 1}, 3);
    CHECK(f->alpha() == 3);
    CHECK_THROWS_WITH_AS(Field::make(2, 2, std::vector<std::uint32_t>{1, 1, 1}, 1),
                         doctest::Contains("NonPrimitiveAlpha"), Error);
}
