#include "lrcmr/matrix.hpp"

#include <algorithm>

namespace lrcmr {

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Matrix Matrix::vandermonde(const FieldPtr& field, const std::vector<gf_t>& points,
                           std::size_t height, long long start_power) {
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j]) fail("DuplicatePoint", "vandermonde points must be distinct");
        if (points[i] == 0 && start_power != 0)
            fail("DuplicatePoint", "zero point with nonzero start power");
    }
    Matrix m(field, height, points.size());
    for (std::size_t j = 0; j < points.size(); ++j) {
        gf_t v = field->pow(points[j], start_power);
        for (std::size_t i = 0; i < height; ++i) {
            m.set(i, j, v);
            v = field->mul(v, points[j]);
        }
    }
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(f_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
    return t;
}

Matrix Matrix::mul(const Matrix& o) const {
    check_same_field(o);
    if (cols_ != o.rows_) fail("ShapeMismatch", "inner dimensions differ");
    Matrix out(f_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            gf_t a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                gf_t b = o.at(k, j);
                if (b == 0) continue;
                out.set(i, j, f_->add(out.at(i, j), f_->mul(a, b)));
            }
        }
    return out;
}

std::vector<gf_t> Matrix::mul_vec(const std::vector<gf_t>& v) const {
    if (v.size() != cols_) fail("ShapeMismatch", "vector length differs from cols");
    std::vector<gf_t> out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        gf_t acc = 0;
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0 && v[j] != 0) acc = f_->add(acc, f_->mul(at(i, j), v[j]));
        out[i] = acc;
    }
    return out;
}

Matrix Matrix::stack(const Matrix& below) const {
    check_same_field(below);
    if (cols_ != below.cols_) fail("ShapeMismatch", "column counts differ");
    Matrix out(f_, rows_ + below.rows_, cols_);
    std::copy(d_.begin(), d_.end(), out.d_.begin());
    std::copy(below.d_.begin(), below.d_.end(), out.d_.begin() + static_cast<long>(d_.size()));
    return out;
}

Matrix Matrix::columns(const std::vector<std::size_t>& idx) const {
    Matrix out(f_, rows_, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j) {
        if (idx[j] >= cols_) fail("OutOfRange", "column index");
        for (std::size_t r = 0; r < rows_; ++r) out.set(r, j, at(r, idx[j]));
    }
    return out;
}

std::vector<gf_t> Matrix::row(std::size_t r) const {
    return std::vector<gf_t>(d_.begin() + static_cast<long>(r * cols_),
                             d_.begin() + static_cast<long>((r + 1) * cols_));
}

std::pair<Matrix, std::vector<std::size_t>> Matrix::rref() const {
    Matrix m = *this;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t sel = rows_;
        for (std::size_t r = row; r < rows_; ++r)
            if (m.at(r, col) != 0) {
                sel = r;
                break;
            }
        if (sel == rows_) continue;
        if (sel != row)
            for (std::size_t c = 0; c < cols_; ++c) std::swap(m.d_[sel * cols_ + c], m.d_[row * cols_ + c]);
        gf_t piv_inv = f_->inv(m.at(row, col));
        for (std::size_t c = col; c < cols_; ++c) m.set(row, c, f_->mul(m.at(row, c), piv_inv));
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == row) continue;
            gf_t factor = m.at(r, col);
            if (factor == 0) continue;
            for (std::size_t c = col; c < cols_; ++c)
                m.set(r, c, f_->sub(m.at(r, c), f_->mul(factor, m.at(row, c))));
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t Matrix::rank() const {
    // forward elimination only
    Matrix m = *this;
    std::size_t rk = 0;
    for (std::size_t col = 0; col < cols_ && rk < rows_; ++col) {
        std::size_t sel = rows_;
        for (std::size_t r = rk; r < rows_; ++r)
            if (m.at(r, col) != 0) {
                sel = r;
                break;
            }
        if (sel == rows_) continue;
        if (sel != rk)
            for (std::size_t c = col; c < cols_; ++c) std::swap(m.d_[sel * cols_ + c], m.d_[rk * cols_ + c]);
        gf_t piv_inv = f_->inv(m.at(rk, col));
        for (std::size_t r = rk + 1; r < rows_; ++r) {
            gf_t factor = m.at(r, col);
            if (factor == 0) continue;
            gf_t scale = f_->mul(factor, piv_inv);
            for (std::size_t c = col; c < cols_; ++c)
                m.set(r, c, f_->sub(m.at(r, c), f_->mul(scale, m.at(rk, c))));
        }
        ++rk;
    }
    return rk;
}

Matrix Matrix::null_space() const {
    auto [r, pivots] = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    Matrix basis(f_, free_cols.size(), cols_);
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        std::size_t fc = free_cols[i];
        basis.set(i, fc, 1);
        for (std::size_t pr = 0; pr < pivots.size(); ++pr)
            basis.set(i, pivots[pr], f_->neg(r.at(pr, fc)));
    }
    return basis;
}

std::optional<std::vector<gf_t>> Matrix::solve(const std::vector<gf_t>& b) const {
    if (b.size() != rows_) fail("ShapeMismatch", "rhs length differs from rows");
    Matrix aug(f_, rows_, cols_ + 1);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) aug.set(r, c, at(r, c));
        aug.set(r, cols_, b[r]);
    }
    auto [r, pivots] = aug.rref();
    // inconsistent iff a pivot lands in the rhs column
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    std::vector<gf_t> x(cols_, 0);
    for (std::size_t pr = 0; pr < pivots.size(); ++pr) x[pivots[pr]] = r.at(pr, cols_);
    return x;
}

bool Matrix::columns_independent(const std::vector<std::size_t>& idx) const {
    return columns(idx).rank() == idx.size();
}

bool row_space_equal(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) fail("ShapeMismatch", "column counts differ");
    if (!a.field().same(b.field())) fail("FieldMismatch", "matrices over different fields");
    std::size_t ra = a.rank(), rb = b.rank();
    if (ra != rb) return false;
    return a.stack(b).rank() == ra;
}

}  // namespace lrcmr
