#include "muinv/int_matrix.hpp"

namespace muinv {

IntegerMatrix IntegerMatrix::identity(std::size_t n)
{
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Int IntegerMatrix::determinant() const
{
    if (rows_ != cols_)
        throw ValidationError("determinant: matrix must be square");
    const std::size_t n = rows_;
    if (n == 0)
        return 1;
    IntegerMatrix a = *this;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && a(pivot, k) == 0)
                ++pivot;
            if (pivot == n)
                return 0;
            for (std::size_t c = 0; c < n; ++c)
                std::swap(a(k, c), a(pivot, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

bool IntegerMatrix::is_unimodular() const
{
    if (rows_ != cols_)
        return false;
    Int d = determinant();
    return d == 1 || d == -1;
}

IntegerMatrix IntegerMatrix::inverse_unimodular() const
{
    if (rows_ != cols_)
        throw ValidationError("inverse_unimodular: matrix must be square");
    const std::size_t n = rows_;
    // Gauss-Jordan over exact rationals; entries of the result are integral
    // precisely because |det| = 1, which we verify at the end.
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = Rational((*this)(i, j));
        a[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0)
            ++pivot;
        if (pivot == n)
            throw ValidationError("inverse_unimodular: matrix is singular");
        std::swap(a[col], a[pivot]);
        Rational p = a[col][col];
        for (auto& v : a[col])
            v /= p;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0)
                continue;
            Rational f = a[i][col];
            for (std::size_t j = 0; j < 2 * n; ++j)
                a[i][j] -= f * a[col][j];
        }
    }
    IntegerMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& v = a[i][n + j];
            if (denominator(v) != 1)
                throw ValidationError("inverse_unimodular: matrix is not unimodular");
            inv(i, j) = numerator(v);
        }
    }
    return inv;
}

IntegerMatrix IntegerMatrix::transposed() const
{
    IntegerMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& other) const
{
    if (cols_ != other.rows_)
        throw ValidationError("matrix product: dimension mismatch");
    IntegerMatrix p(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& v = (*this)(i, k);
            if (v == 0)
                continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                p(i, j) += v * other(k, j);
        }
    return p;
}

std::vector<Int> IntegerMatrix::apply(const std::vector<Int>& v) const
{
    if (v.size() != cols_)
        throw ValidationError("matrix apply: dimension mismatch");
    std::vector<Int> r(rows_, Int(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r[i] += (*this)(i, j) * v[j];
    return r;
}

std::vector<GroupElement> IntegerMatrix::apply(const std::vector<GroupElement>& v,
                                               const AbelianGroup& g) const
{
    if (v.size() != cols_)
        throw ValidationError("matrix apply: dimension mismatch");
    std::vector<GroupElement> r(rows_, zero_element(g));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if ((*this)(i, j) == 0)
                continue;
            r[i] = add(r[i], scalar_mul((*this)(i, j), v[j], g), g);
        }
    return r;
}

}  // namespace muinv
