#ifndef MUINV_INT_MATRIX_HPP
#define MUINV_INT_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "muinv/abelian.hpp"
#include "muinv/integer.hpp"

namespace muinv {

// Dense integer matrix with exact arithmetic.  Determinants are computed by
// fraction-free (Bareiss) elimination; inverses only for unimodular matrices,
// where the inverse is again integral.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Int(0))
    {
    }

    static IntegerMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool operator==(const IntegerMatrix& other) const = default;

    Int determinant() const;
    bool is_unimodular() const;
    // Requires det = +-1; throws ValidationError otherwise.
    IntegerMatrix inverse_unimodular() const;
    IntegerMatrix transposed() const;
    IntegerMatrix operator*(const IntegerMatrix& other) const;

    std::vector<Int> apply(const std::vector<Int>& v) const;
    // Integer matrix acting on a vector of group elements (componentwise exact;
    // valid over any coefficient group since only Z-linear combinations occur).
    std::vector<GroupElement> apply(const std::vector<GroupElement>& v,
                                    const AbelianGroup& g) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
};

}  // namespace muinv

#endif
