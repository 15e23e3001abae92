#include "lrcmr/gf.hpp"

#include <algorithm>

namespace lrcmr {

bool is_prime_u64(std::uint64_t x) {
    if (x < 2) return false;
    for (std::uint64_t d = 2; d * d <= x; ++d)
        if (x % d == 0) return false;
    return true;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t x) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= x; ++d) {
        if (x % d == 0) {
            out.push_back(d);
            while (x % d == 0) x /= d;
        }
    }
    if (x > 1) out.push_back(x);
    return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t result = n;
    for (std::uint64_t p : prime_factors(n)) result -= result / p;
    return result;
}

namespace {

// Polynomial helpers over GF(p), coefficients low-to-high.
using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
    // m monic
    trim(a);
    while (a.size() >= m.size()) {
        std::uint32_t c = a.back();
        std::size_t shift = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i) {
            std::uint64_t t = static_cast<std::uint64_t>(c) * m[i] % p;
            std::uint32_t& slot = a[shift + i];
            slot = static_cast<std::uint32_t>((slot + p - t) % p);
        }
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = static_cast<std::uint32_t>(
                (prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
    return poly_mod(std::move(prod), m, p);
}

// Irreducibility by trial division with every monic polynomial of degree
// 1..deg/2. Fine at desk scale (e is small).
bool poly_irreducible(const Poly& f, std::uint32_t p) {
    std::size_t deg = f.size() - 1;
    if (deg == 1) return true;
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Poly g(d + 1, 0);
            std::uint64_t t = idx;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(t % p);
                t /= p;
            }
            g[d] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

std::vector<std::uint32_t> Field::unpack(gf_t a) const {
    std::vector<std::uint32_t> c(e_);
    for (std::uint32_t i = 0; i < e_; ++i) {
        c[i] = a % p_;
        a /= p_;
    }
    return c;
}

gf_t Field::pack(const std::vector<std::uint32_t>& coeffs) const {
    gf_t v = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) v = static_cast<gf_t>(v * p_ + coeffs[i] % p_);
    return v;
}

gf_t Field::add(gf_t a, gf_t b) const {
    if (p_ == 2) return a ^ b;
    gf_t out = 0, mul = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        out += (a % p_ + b % p_) % p_ * mul;
        a /= p_;
        b /= p_;
        mul *= p_;
    }
    return out;
}

gf_t Field::neg(gf_t a) const {
    if (p_ == 2) return a;
    gf_t out = 0, mul = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        out += (p_ - a % p_) % p_ * mul;
        a /= p_;
        mul *= p_;
    }
    return out;
}

gf_t Field::sub(gf_t a, gf_t b) const { return add(a, neg(b)); }

gf_t Field::mul_nocache(gf_t a, gf_t b) const {
    if (a == 0 || b == 0) return 0;
    Poly pa = unpack(a), pb = unpack(b);
    trim(pa);
    trim(pb);
    Poly r = poly_mulmod(pa, pb, mod_, p_);
    r.resize(e_, 0);
    return pack(r);
}

gf_t Field::mul(gf_t a, gf_t b) const {
    if (a == 0 || b == 0) return 0;
    if (tables_) return exp_[log_[a] + log_[b]];
    return mul_nocache(a, b);
}

gf_t Field::inv(gf_t a) const {
    if (a == 0) fail("DivisionByZero", "inverse of zero");
    if (tables_) return exp_[(q_ - 1) - log_[a]];
    // a^(q-2) by square-and-multiply
    gf_t result = 1, base = a;
    std::uint64_t n = q_ - 2;
    while (n) {
        if (n & 1) result = mul(result, base);
        base = mul(base, base);
        n >>= 1;
    }
    return result;
}

gf_t Field::div(gf_t a, gf_t b) const {
    if (b == 0) fail("DivisionByZero", "division by zero");
    return mul(a, inv(b));
}

gf_t Field::pow(gf_t a, long long n) const {
    if (a == 0) {
        if (n == 0) return 1;
        if (n < 0) fail("DivisionByZero", "negative power of zero");
        return 0;
    }
    std::uint64_t ord = element_order(a);
    long long r = n % static_cast<long long>(ord);
    if (r < 0) r += static_cast<long long>(ord);
    gf_t result = 1, base = a;
    std::uint64_t m = static_cast<std::uint64_t>(r);
    while (m) {
        if (m & 1) result = mul(result, base);
        base = mul(base, base);
        m >>= 1;
    }
    return result;
}

std::uint64_t Field::element_order(gf_t a) const {
    if (a == 0) fail("ZeroElement", "order of zero is undefined");
    if (tables_ && a != 1) {
        // order of alpha^i is (q-1)/gcd(i, q-1)
        return (q_ - 1) / gcd_u64(log_[a], q_ - 1);
    }
    std::uint64_t ord = q_ - 1;
    for (std::uint64_t f : prime_factors(q_ - 1)) {
        while (ord % f == 0) {
            // test a^(ord/f) == 1 without the order-reducing pow()
            gf_t r = 1, base = a;
            std::uint64_t n = ord / f;
            while (n) {
                if (n & 1) r = mul(r, base);
                base = mul(base, base);
                n >>= 1;
            }
            if (r == 1)
                ord /= f;
            else
                break;
        }
    }
    return ord;
}

gf_t Field::alpha_pow(std::uint64_t i) const {
    if (tables_) return exp_[i % (q_ - 1)];
    gf_t r = 1, base = alpha_;
    std::uint64_t n = i % (q_ - 1);
    while (n) {
        if (n & 1) r = mul(r, base);
        base = mul(base, base);
        n >>= 1;
    }
    return r;
}

void Field::build_tables() {
    if (q_ > (1u << 16)) return;
    exp_.assign(2 * (q_ - 1), 0);
    log_.assign(q_, 0);
    gf_t cur = 1;
    for (std::uint64_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = cur;
        exp_[i + (q_ - 1)] = cur;
        log_[cur] = static_cast<std::uint32_t>(i);
        cur = mul_nocache(cur, alpha_);
    }
    if (cur != 1) fail("NonPrimitiveDefault", "designated alpha does not generate the group");
    tables_ = true;
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t e,
                     std::optional<std::vector<std::uint32_t>> modulus,
                     std::optional<gf_t> alpha) {
    if (!is_prime_u64(p)) fail("NotPrime", "p = " + std::to_string(p));
    if (e < 1) fail("OutOfRange", "e must be >= 1");

    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        q *= p;
        if (q > (1ull << 20)) fail("OutOfRange", "q exceeds desk-scale limit 2^20");
    }

    auto fld = std::shared_ptr<Field>(new Field());
    fld->p_ = p;
    fld->e_ = e;
    fld->q_ = q;

    auto validate = [&](const Poly& m) {
        if (m.size() != e + 1 || m.back() != 1)
            fail("ReducibleModulus", "modulus must be monic of degree e");
        for (auto c : m)
            if (c >= p) fail("ReducibleModulus", "modulus coefficient out of range");
        if (!poly_irreducible(m, p)) fail("ReducibleModulus", "modulus is reducible");
    };

    auto set_alpha = [&]() {
        if (alpha) {
            if (*alpha == 0 || *alpha >= q || fld->element_order(*alpha) != q - 1)
                fail("NonPrimitiveAlpha", "designated alpha must have order q-1");
            fld->alpha_ = *alpha;
            return;
        }
        if (e > 1) {
            gf_t x = fld->pack({0, 1});
            if (fld->element_order(x) == q - 1) {
                fld->alpha_ = x;
                return;
            }
        }
        for (gf_t g = 1; g < q; ++g) {  // smallest primitive residue
            if (fld->element_order(g) == q - 1) {
                fld->alpha_ = g;
                return;
            }
        }
        fail("NonPrimitiveDefault", "no primitive element found");
    };

    if (e == 1) {
        if (modulus) {
            validate(*modulus);
            fld->mod_ = *modulus;
        } else {
            fld->mod_ = {0, 1};  // x
        }
        set_alpha();
        fld->build_tables();
        return fld;
    }

    if (modulus) {
        validate(*modulus);
        fld->mod_ = *modulus;
        set_alpha();
        fld->build_tables();
        return fld;
    }

    // Default modulus search: tuples (c0, ..., c_{e-1}) ascending with the
    // constant term most significant, then x^e added; keep the first
    // irreducible one whose root x is primitive.
    std::uint64_t count = q;  // p^e tuples
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Poly m(e + 1, 0);
        std::uint64_t t = idx;
        for (std::uint32_t i = e; i-- > 0;) {  // c_{e-1} varies fastest
            m[i] = static_cast<std::uint32_t>(t % p);
            t /= p;
        }
        m[e] = 1;
        if (m[0] == 0) continue;  // divisible by x
        if (!poly_irreducible(m, p)) continue;
        fld->mod_ = m;
        fld->alpha_ = fld->pack({0, 1});
        if (fld->element_order(fld->alpha_) == q - 1) {
            if (alpha) set_alpha();
            fld->build_tables();
            return fld;
        }
        // NonPrimitiveDefault: try the next candidate
    }
    fail("NonPrimitiveDefault", "no primitive default modulus found");
}

}  // namespace lrcmr
