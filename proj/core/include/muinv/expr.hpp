#ifndef MUINV_EXPR_HPP
#define MUINV_EXPR_HPP

#include <string>

#include "muinv/bracket.hpp"

namespace muinv {
namespace lie {

// Bracket-expression grammar:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := [integer '*'] factor
//   factor := generator | '[' expr ',' expr ']'
//   generator := 'i' digits ['@' ['-'] digits]
// Whitespace is insignificant.  Generator dimensions come from the signature;
// i0 is the core sphere, ij the j-th meridian, ij@g its covering copy.
LieElement parse_lie(const std::string& text, const WedgeSignature& sig);

// Inverse of the grammar (deterministic: terms in tree order).
std::string lie_text(const LieElement& x);
std::string normal_form_text(const NormalForm& nf);

}  // namespace lie
}  // namespace muinv

#endif
