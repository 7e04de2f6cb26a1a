#ifndef MUINV_ENVELOPE_HPP
#define MUINV_ENVELOPE_HPP

#include <map>
#include <string>
#include <vector>

#include "muinv/bracket.hpp"

namespace muinv {
namespace lie {

using Word = std::vector<Generator>;

// Faithful expansion into the free associative ring, used as an independent
// equality oracle for the rewriting engine.  Degrees are shifted (dim - 1) and
// a bracket expands as a graded commutator with a translation sign:
//
//   E([a,b]) = (-1)^{dim a} * ( E(a)E(b) - (-1)^{(dim a - 1)(dim b - 1)} E(b)E(a) )
//
// The twist (-1)^{dim a} converts between the shifted-degree commutator
// convention and the Whitehead convention [x,y] = (-1)^{dim x * dim y}[y,x]
// used by the rewriting engine; with it, both sides satisfy the same
// identities, so equal elements have equal expansions.
std::map<Word, Int> envelope_expand(const LieElement& x);

std::string word_text(const Word& w);

}  // namespace lie
}  // namespace muinv

#endif
