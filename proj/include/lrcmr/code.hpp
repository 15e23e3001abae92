#ifndef LRCMR_CODE_HPP
#define LRCMR_CODE_HPP

#include <optional>
#include <vector>

#include "lrcmr/matrix.hpp"

namespace lrcmr {

/**
 * An [n, k] linear code over a Field, kept as a normalized parity-check
 * matrix H (full row rank, (n-k) x n) together with a generator matrix
 * G = null_space(H). Coordinates are indexed by Z_n. Codes built from a root
 * set additionally remember the root exponents i (alpha_n^i a root of the
 * generator polynomial). Immutable by convention.
 */
struct LinearCode {
    FieldPtr field;
    std::size_t n = 0;
    std::size_t k = 0;
    Matrix H;
    Matrix G;
    std::optional<std::vector<std::size_t>> roots;  // sorted exponents mod n

    bool contains(const std::vector<gf_t>& word) const;
};

/// Normalizes H to full row rank (dependent rows dropped via rref).
LinearCode code_from_parity(const Matrix& H);

/// The row space of G as a code.
LinearCode code_from_generator(const Matrix& G);

/// Cyclic code of length n | q-1 with parity rows (alpha_n^(0*i), ...,
/// alpha_n^((n-1)*i)) for each root exponent i, where alpha_n is the power of
/// the field's alpha with order exactly n. OrderMismatch when n does not
/// divide q-1.
LinearCode code_from_roots(const FieldPtr& field, std::size_t n,
                           std::vector<std::size_t> root_exponents);

/// Code generated by G restricted to the columns S (positions outside S are
/// deleted). EmptySet when S is empty.
LinearCode puncture(const LinearCode& c, const std::vector<std::size_t>& s);

/// The code whose parity-check matrix is H restricted to the columns S.
/// Note this is the dual-side convention: it shortens the dual rather than
/// keeping codewords that vanish off S, and it is the object the cyclic
/// repair-set machinery manipulates.
LinearCode shorten(const LinearCode& c, const std::vector<std::size_t>& s);

enum class DistanceMethod { Auto, ColumnSubsets, Enumeration };

/**
 * Exact minimum Hamming weight of a nonzero codeword. Two independent
 * strategies, cross-checkable:
 *  - ColumnSubsets: smallest w such that some w columns of H are dependent;
 *  - Enumeration: scan all q^k codewords.
 * Auto picks the cheaper by estimated cost. Returns nullopt when no
 * dependency is found up to `cap` (cap defaults to n-k+1, which always
 * terminates). ZeroDimensional when k = 0.
 */
std::optional<std::size_t> min_distance(const LinearCode& c,
                                        std::optional<std::size_t> cap = std::nullopt,
                                        DistanceMethod method = DistanceMethod::Auto,
                                        unsigned jobs = 1);

/// Shift-closure of the code: H * sigma(g)^T = 0 for every generator row g,
/// where sigma(c) = (c_{n-1}, c_0, ..., c_{n-2}).
bool is_cyclic(const LinearCode& c);

/// d = n-k+1, checked as: every (n-k)-subset of H's columns has full rank.
bool is_mds(const LinearCode& c);
/// A dependent (n-k)-subset of H's columns, or nullopt when the code is MDS.
std::optional<std::vector<std::size_t>> mds_violation(const LinearCode& c);

struct DecodeResult {
    enum class Status { Ok, Unrecoverable, NotACodeword } status;
    std::vector<gf_t> word;  // filled on Ok
};

/// Fills erased positions (nullopt entries) by solving
/// H|_E x = -H|_rest c_rest; succeeds iff rank(H|_E) = |E| and the unerased
/// part is consistent with the code.
DecodeResult erasure_decode(const LinearCode& c,
                            const std::vector<std::optional<gf_t>>& word);

/// The dual code (parity rows = G).
LinearCode dual(const LinearCode& c);

/// Codes are equal as sets of codewords.
bool same_code(const LinearCode& a, const LinearCode& b);

std::vector<std::size_t> all_coordinates(std::size_t n);

}  // namespace lrcmr

#endif
