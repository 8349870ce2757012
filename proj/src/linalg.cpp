#include "pseudocohom/linalg.hpp"

#include "pseudocohom/error.hpp"

namespace pseudocohom {

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, f.zero())
{
}

Matrix Matrix::identity(Field f, std::size_t n)
{
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = f.one();
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const
{
    if (cols_ != o.rows_)
        throw Error("matrix shape mismatch in product");
    Matrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero())
                continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (!o.at(k, j).is_zero())
                    r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

bool Matrix::operator==(const Matrix& o) const
{
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::vector<std::size_t> Matrix::row_reduce()
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t p = row;
        while (p < rows_ && at(p, col).is_zero())
            ++p;
        if (p == rows_)
            continue;
        if (p != row)
            for (std::size_t j = 0; j < cols_; ++j)
                std::swap(at(p, j), at(row, j));
        const Scalar inv = at(row, col).inverse();
        for (std::size_t j = col; j < cols_; ++j)
            at(row, j) *= inv;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == row || at(r, col).is_zero())
                continue;
            const Scalar f = at(r, col);
            for (std::size_t j = col; j < cols_; ++j)
                if (!at(row, j).is_zero())
                    at(r, j) -= f * at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t Matrix::rank() const
{
    Matrix m = *this;
    return m.row_reduce().size();
}

std::optional<std::vector<Scalar>> Matrix::solve(const std::vector<Scalar>& b) const
{
    if (b.size() != rows_)
        throw Error("right-hand side has wrong length");
    Matrix aug(field_, rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j)
            aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    const auto pivots = aug.row_reduce();
    if (!pivots.empty() && pivots.back() == cols_)
        return std::nullopt;
    std::vector<Scalar> x(cols_, field_.zero());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = aug.at(r, cols_);
    return x;
}

std::vector<std::vector<Scalar>> Matrix::kernel() const
{
    Matrix m = *this;
    const auto pivots = m.row_reduce();
    std::vector<char> is_pivot(cols_, 0);
    for (auto p : pivots)
        is_pivot[p] = 1;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Scalar> v(cols_, field_.zero());
        v[free] = field_.one();
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m.at(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Matrix> Matrix::inverse() const
{
    if (rows_ != cols_)
        return std::nullopt;
    const std::size_t n = rows_;
    if (n == 0)
        return Matrix(field_, 0, 0);
    Matrix aug(field_, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug.at(i, j) = at(i, j);
        aug.at(i, n + i) = field_.one();
    }
    const auto pivots = aug.row_reduce();
    if (pivots.size() < n || pivots[n - 1] != n - 1)
        return std::nullopt;
    Matrix inv(field_, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

std::size_t rank_of(Field f, const std::vector<std::vector<Scalar>>& vectors)
{
    if (vectors.empty())
        return 0;
    Matrix m(f, vectors.size(), vectors.front().size());
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = 0; j < vectors[i].size(); ++j)
            m.at(i, j) = vectors[i][j];
    return m.rank();
}

} // namespace pseudocohom
