#include "symcurve/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace symcurve {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw std::invalid_argument("Matrix::from_rows: ragged rows");
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
    Matrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows)
            throw std::invalid_argument("Matrix::from_columns: ragged columns");
        for (std::size_t i = 0; i < rows; ++i)
            m(i, j) = columns[j][i];
    }
    return m;
}

Vector Matrix::row(std::size_t i) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = (*this)(i, j);
    return v;
}

std::vector<Vector> Matrix::row_vectors() const {
    std::vector<Vector> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        out.push_back(row(i));
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

Vector Matrix::apply(std::span<const Rational> x) const {
    if (x.size() != cols_)
        throw std::invalid_argument("Matrix::apply: dimension mismatch");
    Vector y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!x[j].is_zero() && !(*this)(i, j).is_zero())
                y[i] += (*this)(i, j) * x[j];
    return y;
}

bool Matrix::is_zero() const {
    for (const auto& q : data_)
        if (!q.is_zero())
            return false;
    return true;
}

Matrix Matrix::rref(std::vector<std::size_t>* pivots) const {
    Matrix a = *this;
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t p = r;
        while (p < rows_ && a(p, c).is_zero())
            ++p;
        if (p == rows_)
            continue;
        if (p != r)
            for (std::size_t j = 0; j < cols_; ++j)
                std::swap(a(p, j), a(r, j));
        Rational inv = Rational(1) / a(r, c);
        for (std::size_t j = c; j < cols_; ++j)
            a(r, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || a(i, c).is_zero())
                continue;
            Rational f = a(i, c);
            for (std::size_t j = c; j < cols_; ++j)
                if (!a(r, j).is_zero())
                    a(i, j) -= f * a(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    Matrix out(r, cols_);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out(i, j) = std::move(a(i, j));
    if (pivots)
        *pivots = std::move(piv);
    return out;
}

std::size_t Matrix::rank() const { return rref().rows(); }

Matrix Matrix::nullspace() const {
    std::vector<std::size_t> piv;
    Matrix r = rref(&piv);
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : piv)
        is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free])
            continue;
        Vector v(cols_);
        v[free] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i)
            v[piv[i]] = -r(i, free);
        basis.push_back(std::move(v));
    }
    return from_rows(basis, cols_);
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_)
        throw std::domain_error("Matrix::inverse: non-square matrix");
    const std::size_t n = rows_;
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = (*this)(i, j);
        aug(i, n + i) = 1;
    }
    std::vector<std::size_t> piv;
    Matrix r = aug.rref(&piv);
    if (r.rows() < n || (n > 0 && piv[n - 1] != n - 1))
        throw std::domain_error("Matrix::inverse: singular matrix");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = r(i, n + j);
    return inv;
}

Matrix& Matrix::operator*=(const Rational& s) {
    for (auto& q : data_)
        q *= s;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("Matrix product: dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero())
                    c(i, j) += aik * b(k, j);
        }
    return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("Matrix sum: dimension mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i)
        c.data_[i] += b.data_[i];
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("Matrix difference: dimension mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i)
        c.data_[i] -= b.data_[i];
    return c;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.rows() == 0)
        return b;
    if (b.rows() == 0)
        return a;
    if (a.cols() != b.cols())
        throw std::invalid_argument("vstack: column mismatch");
    Matrix c(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            c(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            c(a.rows() + i, j) = b(i, j);
    return c;
}

}  // namespace symcurve
