#ifndef LRCMR_BIGINT_HPP
#define LRCMR_BIGINT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace lrcmr {

/// Minimal unsigned big integer: just enough (mul, pow, compare, decimal
/// printing) to evaluate every bound inequality exactly, with no floating
/// point anywhere.
class BigUint {
public:
    BigUint() : limbs_{0} {}
    explicit BigUint(std::uint64_t v) : limbs_{v} { trim(); }

    static BigUint pow(std::uint64_t base, std::uint64_t exp) {
        BigUint r(1), b(base);
        while (exp) {
            if (exp & 1) r = r * b;
            b = b * b;
            exp >>= 1;
        }
        return r;
    }

    BigUint operator+(const BigUint& o) const {
        BigUint r;
        std::size_t sz = std::max(limbs_.size(), o.limbs_.size());
        r.limbs_.assign(sz + 1, 0);
        unsigned __int128 carry = 0;
        for (std::size_t i = 0; i < sz; ++i) {
            unsigned __int128 cur = carry;
            if (i < limbs_.size()) cur += limbs_[i];
            if (i < o.limbs_.size()) cur += o.limbs_[i];
            r.limbs_[i] = static_cast<std::uint64_t>(cur);
            carry = cur >> 64;
        }
        r.limbs_[sz] = static_cast<std::uint64_t>(carry);
        r.trim();
        return r;
    }

    BigUint operator*(const BigUint& o) const {
        std::vector<std::uint64_t> out(limbs_.size() + o.limbs_.size(), 0);
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            if (limbs_[i] == 0) continue;
            unsigned __int128 carry = 0;
            for (std::size_t j = 0; j < o.limbs_.size(); ++j) {
                unsigned __int128 cur = static_cast<unsigned __int128>(limbs_[i]) * o.limbs_[j] +
                                        out[i + j] + carry;
                out[i + j] = static_cast<std::uint64_t>(cur);
                carry = cur >> 64;
            }
            std::size_t k = i + o.limbs_.size();
            while (carry) {
                unsigned __int128 cur = static_cast<unsigned __int128>(out[k]) + carry;
                out[k] = static_cast<std::uint64_t>(cur);
                carry = cur >> 64;
                ++k;
            }
        }
        BigUint r;
        r.limbs_ = std::move(out);
        r.trim();
        return r;
    }

    int compare(const BigUint& o) const {
        if (limbs_.size() != o.limbs_.size()) return limbs_.size() < o.limbs_.size() ? -1 : 1;
        for (std::size_t i = limbs_.size(); i-- > 0;) {
            if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i] ? -1 : 1;
        }
        return 0;
    }
    bool operator<(const BigUint& o) const { return compare(o) < 0; }
    bool operator<=(const BigUint& o) const { return compare(o) <= 0; }
    bool operator==(const BigUint& o) const { return compare(o) == 0; }

    bool fits_u64() const { return limbs_.size() == 1; }
    std::uint64_t as_u64() const { return limbs_[0]; }

    std::string to_string() const {
        std::vector<std::uint64_t> tmp = limbs_;
        std::string out;
        while (tmp.size() > 1 || tmp[0] != 0) {
            unsigned __int128 rem = 0;
            for (std::size_t i = tmp.size(); i-- > 0;) {
                unsigned __int128 cur = (rem << 64) | tmp[i];
                tmp[i] = static_cast<std::uint64_t>(cur / 10);
                rem = cur % 10;
            }
            out.push_back(static_cast<char>('0' + static_cast<int>(rem)));
            while (tmp.size() > 1 && tmp.back() == 0) tmp.pop_back();
        }
        if (out.empty()) out = "0";
        return std::string(out.rbegin(), out.rend());
    }

private:
    void trim() {
        while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
    }
    std::vector<std::uint64_t> limbs_;  // little-endian base 2^64
};

}  // namespace lrcmr

#endif
