#ifndef MUINV_NORMALIZE_HPP
#define MUINV_NORMALIZE_HPP

#include "muinv/bracket.hpp"

namespace muinv {
namespace lie {

// Rewrites a homogeneous element into the right-comb basis indexed by
// arrangements: graded antisymmetry moves the factor containing the last
// meridian into the right slot, and the Jacobi identity
//
//   [[a,b],w] = (-1)^{p+1} [a,[b,w]] + (-1)^{p+(p-1)(q-1)} [b,[a,w]]
//
// (p = dim a, q = dim b, our Whitehead sign convention) peels left factors
// until every tree is a comb ending in the last meridian.  Terminates because
// the length of the left factor strictly decreases.
//
// Requires: x homogeneous, the last meridian family r-1 occurring exactly once
// per tree, and every family 1..r-2 occurring exactly once (multidegree
// (t; 1,...,1), the only case in which the comb basis is defined).
NormalForm normalize(const LieElement& x, const WedgeSignature& sig);

}  // namespace lie
}  // namespace muinv

#endif
