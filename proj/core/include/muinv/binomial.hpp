#ifndef MUINV_BINOMIAL_HPP
#define MUINV_BINOMIAL_HPP

#include <vector>

#include "muinv/integer.hpp"

namespace muinv {
namespace transform {

// Multiplicity with which the level-g component is counted after s pinches:
// b(s,g) = binom(g+s-1, s), generalized binomial (negative g allowed, giving
// the signed counts of the downward levels).
inline Int b_coeff(int s, long long g)
{
    if (s < 0)
        throw ValidationError("b_coeff: s must be >= 0");
    return binomial(Int(g) + s - 1, s);
}

// Independent oracle for b_coeff: the table is filled purely by the recursion
// b(s,g) = b(s,g-1) + b(s-1,g) from the base row b(0,.) = 1 and the forced
// column b(s,0) = 0 (s >= 1), sweeping forward for g > 0 and backward for
// g < 0.  No closed form is used.
class PascalTable {
public:
    PascalTable(int max_s, long long lo, long long hi);

    int max_s() const { return max_s_; }
    long long lo() const { return lo_; }
    long long hi() const { return hi_; }
    const Int& at(int s, long long g) const;

private:
    int max_s_;
    long long lo_, hi_;
    std::vector<std::vector<Int>> rows_;
};

inline PascalTable pascal_oracle(int max_s, long long lo, long long hi)
{
    return PascalTable(max_s, lo, hi);
}

}  // namespace transform
}  // namespace muinv

#endif
