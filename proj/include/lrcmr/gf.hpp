#ifndef LRCMR_GF_HPP
#define LRCMR_GF_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "lrcmr/error.hpp"

namespace lrcmr {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// An element of a finite field, packed as an integer in [0, q) by base-p
/// packing of its polynomial coefficients (constant term least significant).
/// This packed value is also the wire representation of the element.
using gf_t = std::uint32_t;

/**
 * GF(p^e) with a fixed monic irreducible modulus and a designated primitive
 * element. Immutable after construction; all operations are pure, so a Field
 * may be shared freely across threads.
 *
 * Elements are packed integers (see gf_t). For q <= 2^16 exp/log tables are
 * built once and used for mul/div/inv; larger fields fall back to polynomial
 * arithmetic.
 */
class Field {
public:
    /// Builds GF(p^e). When no modulus is given, picks the deterministic
    /// default: the first monic irreducible polynomial, enumerating the
    /// coefficient tuple (c0, c1, ..., c_{e-1}) in lexicographic order with
    /// the constant term compared first, whose residue class of x is
    /// primitive. For e = 1 the modulus is x and alpha is the smallest
    /// generator of the multiplicative group. An explicit alpha (e.g. from a
    /// serialized code file) must have order q-1.
    static FieldPtr make(std::uint32_t p, std::uint32_t e,
                         std::optional<std::vector<std::uint32_t>> modulus = std::nullopt,
                         std::optional<gf_t> alpha = std::nullopt);

    std::uint32_t p() const { return p_; }
    std::uint32_t e() const { return e_; }
    std::uint64_t q() const { return q_; }
    /// Modulus coefficients, low-to-high, length e+1, monic.
    const std::vector<std::uint32_t>& modulus() const { return mod_; }
    gf_t alpha() const { return alpha_; }

    gf_t add(gf_t a, gf_t b) const;
    gf_t sub(gf_t a, gf_t b) const;
    gf_t neg(gf_t a) const;
    gf_t mul(gf_t a, gf_t b) const;
    gf_t inv(gf_t a) const;     // DivisionByZero on 0
    gf_t div(gf_t a, gf_t b) const;

    /// a^n with the exponent reduced modulo the element order; pow(a,0) = 1.
    /// Negative exponents of zero raise DivisionByZero.
    gf_t pow(gf_t a, long long n) const;

    /// Least t >= 1 with a^t = 1; divides q-1. ZeroElement on 0.
    std::uint64_t element_order(gf_t a) const;

    /// alpha^i for i >= 0 (i taken mod q-1).
    gf_t alpha_pow(std::uint64_t i) const;

    std::vector<std::uint32_t> unpack(gf_t a) const;   // e coefficients in [0,p)
    gf_t pack(const std::vector<std::uint32_t>& coeffs) const;

    bool same(const Field& other) const {
        return p_ == other.p_ && e_ == other.e_ && mod_ == other.mod_ && alpha_ == other.alpha_;
    }

private:
    Field() = default;

    gf_t mul_nocache(gf_t a, gf_t b) const;
    void build_tables();

    std::uint32_t p_ = 0;
    std::uint32_t e_ = 0;
    std::uint64_t q_ = 0;
    std::vector<std::uint32_t> mod_;
    gf_t alpha_ = 0;

    // exp_[i] = alpha^i for i in [0, 2(q-1)); log_[a] defined for a != 0.
    std::vector<gf_t> exp_;
    std::vector<std::uint32_t> log_;
    bool tables_ = false;
};

/// Field element with its owner, for call sites that want operator syntax.
/// Mixing elements of different fields raises FieldMismatch.
class Fe {
public:
    Fe() = default;
    Fe(gf_t v, FieldPtr f) : v_(v), f_(std::move(f)) {}

    gf_t value() const { return v_; }
    const FieldPtr& field() const { return f_; }

    Fe operator+(const Fe& o) const { return Fe(fld(o).add(v_, o.v_), f_); }
    Fe operator-(const Fe& o) const { return Fe(fld(o).sub(v_, o.v_), f_); }
    Fe operator*(const Fe& o) const { return Fe(fld(o).mul(v_, o.v_), f_); }
    Fe operator/(const Fe& o) const { return Fe(fld(o).div(v_, o.v_), f_); }
    bool operator==(const Fe& o) const { return v_ == o.v_ && f_->same(*o.f_); }
    bool operator!=(const Fe& o) const { return !(*this == o); }

    Fe pow(long long n) const { return Fe(f_->pow(v_, n), f_); }
    std::uint64_t order() const { return f_->element_order(v_); }
    bool is_zero() const { return v_ == 0; }

private:
    const Field& fld(const Fe& o) const {
        if (!f_ || !o.f_ || !f_->same(*o.f_)) fail("FieldMismatch", "elements of different fields");
        return *f_;
    }
    gf_t v_ = 0;
    FieldPtr f_;
};

bool is_prime_u64(std::uint64_t x);
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::vector<std::uint64_t> prime_factors(std::uint64_t x);   // distinct primes
std::uint64_t euler_phi(std::uint64_t n);

}  // namespace lrcmr

#endif
