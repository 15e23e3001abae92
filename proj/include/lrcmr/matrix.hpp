#ifndef LRCMR_MATRIX_HPP
#define LRCMR_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "lrcmr/gf.hpp"

namespace lrcmr {

/**
 * Dense matrix over a Field, row-major packed elements. Operations return new
 * values; elimination uses deterministic pivoting (leftmost column, lowest
 * row index), so rref/solve outputs are reproducible.
 */
class Matrix {
public:
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
        : f_(std::move(field)), rows_(rows), cols_(cols), d_(rows * cols, 0) {}

    static Matrix identity(FieldPtr field, std::size_t n);
    /// Entry (i, j) = points[j]^(start_power + i). Points must be pairwise
    /// distinct (and nonzero when start_power != 0); rank is then
    /// min(height, #points).
    static Matrix vandermonde(const FieldPtr& field, const std::vector<gf_t>& points,
                              std::size_t height, long long start_power = 0);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return *f_; }
    const FieldPtr& field_ptr() const { return f_; }

    gf_t at(std::size_t r, std::size_t c) const { return d_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, gf_t v) { d_[r * cols_ + c] = v; }
    const std::vector<gf_t>& data() const { return d_; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && d_ == o.d_ && f_->same(*o.f_);
    }

    Matrix transpose() const;
    Matrix mul(const Matrix& o) const;
    std::vector<gf_t> mul_vec(const std::vector<gf_t>& v) const;  // M * v
    Matrix stack(const Matrix& below) const;
    Matrix columns(const std::vector<std::size_t>& idx) const;
    std::vector<gf_t> row(std::size_t r) const;

    std::size_t rank() const;
    /// Reduced row echelon form and its pivot column indices.
    std::pair<Matrix, std::vector<std::size_t>> rref() const;
    /// Rows form a basis of the right kernel {x : Mx = 0}; cols - rank rows.
    Matrix null_space() const;
    /// Any x with Mx = b (free variables zero), or nullopt when inconsistent.
    std::optional<std::vector<gf_t>> solve(const std::vector<gf_t>& b) const;

    /// Columns indexed by idx are linearly independent.
    bool columns_independent(const std::vector<std::size_t>& idx) const;

private:
    void check_same_field(const Matrix& o) const {
        if (!f_->same(*o.f_)) fail("FieldMismatch", "matrices over different fields");
    }

    FieldPtr f_;
    std::size_t rows_, cols_;
    std::vector<gf_t> d_;
};

/// rank(A) == rank(B) == rank(A stacked on B); same column count required.
bool row_space_equal(const Matrix& a, const Matrix& b);

}  // namespace lrcmr

#endif
