#pragma once

#include "symcurve/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace symcurve {

using Vector = std::vector<Rational>;

/// Dense row-major matrix over the rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    /// Matrix whose rows are the given vectors (all of length `cols`).
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
    static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool empty() const { return rows_ == 0 || cols_ == 0; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    [[nodiscard]] Vector row(std::size_t i) const;
    [[nodiscard]] Vector column(std::size_t j) const;
    [[nodiscard]] std::vector<Vector> row_vectors() const;

    [[nodiscard]] Matrix transpose() const;
    [[nodiscard]] Vector apply(std::span<const Rational> x) const;
    [[nodiscard]] bool is_zero() const;

    /// Reduced row-echelon form with zero rows dropped; `pivots` receives the
    /// pivot column of each remaining row.
    [[nodiscard]] Matrix rref(std::vector<std::size_t>* pivots = nullptr) const;
    [[nodiscard]] std::size_t rank() const;
    /// Rows form a basis of {x : A x = 0}.
    [[nodiscard]] Matrix nullspace() const;
    /// Throws std::domain_error when singular or non-square.
    [[nodiscard]] Matrix inverse() const;

    Matrix& operator*=(const Rational& s);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(Rational s, Matrix m) { return m *= s; }
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Stacks `b` below `a`; both must have the same column count.
Matrix vstack(const Matrix& a, const Matrix& b);

}  // namespace symcurve
