#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "braidforge/cyclotomic.hpp"
#include "braidforge/errors.hpp"

namespace braidforge {

/// Dense row-major matrix over Q(w). Zero-by-k and k-by-zero shapes are
/// legal; they show up as arrow maps into empty eigenspaces.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Cyclotomic(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Cyclotomic& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Cyclotomic& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    bool is_identity() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != Cyclotomic(i == j ? 1 : 0)) return false;
        return true;
    }

    /// The scalar c with *this = c * I, when there is one.
    std::optional<Cyclotomic> as_scalar() const {
        if (rows_ != cols_ || rows_ == 0) return std::nullopt;
        const Cyclotomic c = (*this)(0, 0);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != (i == j ? c : Cyclotomic(0))) return std::nullopt;
        return c;
    }

    Cyclotomic trace() const {
        if (rows_ != cols_) throw DimensionMismatchError("trace of non-square matrix");
        Cyclotomic t;
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    const std::vector<Cyclotomic>& entries() const { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Cyclotomic> data_;
};

inline Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatchError("matrix addition shape mismatch");
    Matrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
    return r;
}

inline Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatchError("matrix subtraction shape mismatch");
    Matrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
    return r;
}

inline Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatchError("matrix product shape mismatch");
    Matrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Cyclotomic& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

inline Matrix operator*(const Cyclotomic& c, const Matrix& m) {
    Matrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = c * m(i, j);
    return r;
}

inline std::vector<Cyclotomic> apply(const Matrix& m, const std::vector<Cyclotomic>& v) {
    if (v.size() != m.cols()) throw DimensionMismatchError("matrix-vector shape mismatch");
    std::vector<Cyclotomic> r(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r[i] += m(i, j) * v[j];
    return r;
}

struct RowReduction {
    Matrix rref;
    std::vector<std::size_t> pivot_cols;
};

/// Exact Gauss-Jordan elimination. Pivot rule: leftmost column, topmost
/// unused row with a nonzero entry.
inline RowReduction row_reduce(Matrix m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(p, j));
        const Cyclotomic scale = inv(m(row, col));
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = scale * m(row, j);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            const Cyclotomic f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return row_reduce(m).pivot_cols.size(); }

/// Basis of the right kernel: vectors v with m * v = 0, one per free column.
inline std::vector<std::vector<Cyclotomic>> kernel_basis(const Matrix& m) {
    const RowReduction rr = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Cyclotomic>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Cyclotomic> v(m.cols());
        v[free] = Cyclotomic(1);
        for (std::size_t r = 0; r < rr.pivot_cols.size(); ++r)
            v[rr.pivot_cols[r]] = -rr.rref(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

inline Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatchError("inverse of non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Cyclotomic(1);
    }
    const RowReduction rr = row_reduce(std::move(aug));
    if (rr.pivot_cols.size() != n || (n > 0 && rr.pivot_cols.back() >= n))
        throw SingularMatrixError("matrix is singular");
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = rr.rref(i, n + j);
    return out;
}

inline bool is_invertible(const Matrix& m) {
    return m.rows() == m.cols() && rank(m) == m.rows();
}

/// Incrementally built row-echelon basis of a subspace of coordinate
/// vectors. Rows keep a strictly increasing pivot order with leading
/// entry 1, so the pivot set equals the canonical RREF pivot set of the
/// spanned space regardless of insertion order.
class EchelonSpan {
public:
    explicit EchelonSpan(std::size_t width) : width_(width) {}

    /// Reduces v against the basis; keeps it when independent.
    bool insert(std::vector<Cyclotomic> v) {
        if (v.size() != width_) throw DimensionMismatchError("span vector width mismatch");
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const std::size_t p = pivots_[r];
            if (v[p].is_zero()) continue;
            const Cyclotomic f = v[p];
            for (std::size_t j = p; j < width_; ++j) v[j] -= f * rows_[r][j];
        }
        std::size_t lead = 0;
        while (lead < width_ && v[lead].is_zero()) ++lead;
        if (lead == width_) return false;
        const Cyclotomic scale = inv(v[lead]);
        for (std::size_t j = lead; j < width_; ++j) v[j] = scale * v[j];
        auto pos = pivots_.begin();
        while (pos != pivots_.end() && *pos < lead) ++pos;
        const auto idx = static_cast<std::size_t>(pos - pivots_.begin());
        pivots_.insert(pos, lead);
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
        return true;
    }

    std::size_t dimension() const { return rows_.size(); }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    const std::vector<Cyclotomic>& row(std::size_t i) const { return rows_[i]; }

private:
    std::size_t width_;
    std::vector<std::vector<Cyclotomic>> rows_;
    std::vector<std::size_t> pivots_;
};

inline std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    }
    return os << "]";
}

}  // namespace braidforge
