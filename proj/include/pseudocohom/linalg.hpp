#pragma once

#include <optional>
#include <vector>

#include "pseudocohom/scalar.hpp"

namespace pseudocohom {

/// Dense matrix over Q or F_p with exact Gaussian elimination.
class Matrix {
public:
    Matrix() = default;
    Matrix(Field f, std::size_t rows, std::size_t cols);

    static Matrix identity(Field f, std::size_t n);

    Field field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Matrix operator*(const Matrix& o) const;
    bool operator==(const Matrix& o) const;

    /// Reduced row echelon form in place; returns the pivot columns.
    std::vector<std::size_t> row_reduce();
    std::size_t rank() const;
    /// Some x with A x = b, or nothing when the system is inconsistent.
    std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& b) const;
    /// Basis of {x : A x = 0}.
    std::vector<std::vector<Scalar>> kernel() const;
    std::optional<Matrix> inverse() const;

private:
    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// Rank of the span of the given vectors (all of equal length).
std::size_t rank_of(Field f, const std::vector<std::vector<Scalar>>& vectors);

} // namespace pseudocohom
