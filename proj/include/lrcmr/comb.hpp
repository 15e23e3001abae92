#ifndef LRCMR_COMB_HPP
#define LRCMR_COMB_HPP

#include <cstdint>
#include <limits>
#include <vector>

namespace lrcmr {

/// C(n, k), saturating at uint64 max.
inline std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        std::uint64_t m = n - k + i;
        if (r > std::numeric_limits<std::uint64_t>::max() / m)
            return std::numeric_limits<std::uint64_t>::max();
        r = r * m / i;
    }
    return r;
}

/// Calls fn(const std::vector<std::size_t>&) for every k-subset of [0, n),
/// in lexicographic order. Returns false early if fn returns false.
template <typename Fn>
bool for_each_combination(std::size_t n, std::size_t k, Fn fn) {
    if (k > n) return true;
    if (k == 0) return fn(std::vector<std::size_t>{});
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = i;
    while (true) {
        if (!fn(static_cast<const std::vector<std::size_t>&>(c))) return false;
        // next combination
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (c[i] != i + n - k) break;
            if (i == 0) return true;
        }
        if (c[i] == i + n - k) return true;
        ++c[i];
        for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
}

/// The `index`-th k-subset of [0, n) in lexicographic order.
inline std::vector<std::size_t> combination_unrank(std::size_t n, std::size_t k,
                                                   std::uint64_t index) {
    std::vector<std::size_t> c;
    c.reserve(k);
    std::size_t x = 0;
    for (std::size_t i = 0; i < k; ++i) {
        while (true) {
            std::uint64_t block = binom(n - x - 1, k - i - 1);
            if (index < block) break;
            index -= block;
            ++x;
        }
        c.push_back(x);
        ++x;
    }
    return c;
}

}  // namespace lrcmr

#endif
