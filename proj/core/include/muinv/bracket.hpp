#ifndef MUINV_BRACKET_HPP
#define MUINV_BRACKET_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "muinv/generator.hpp"
#include "muinv/integer.hpp"
#include "muinv/wedge.hpp"

namespace muinv {
namespace lie {

// Iterated Whitehead product as an ordered binary tree.  Immutable; children
// are shared.  Sphere dimension obeys dim [a,b] = dim a + dim b - 1.
class BracketTree {
public:
    explicit BracketTree(const Generator& leaf);
    BracketTree(const BracketTree& left, const BracketTree& right);

    bool is_leaf() const;
    const Generator& leaf() const;
    BracketTree left() const;
    BracketTree right() const;

    int sphere_dim() const;
    int leaf_count() const;
    // Multiset of leaf generators.
    const std::map<Generator, int>& multidegree() const;
    // Number of leaves whose meridian family equals `family` (0 = core).
    int family_count(int family) const;
    // Leaves in left-to-right order.
    std::vector<Generator> leaf_sequence() const;

    std::string text() const;  // e.g. "[i1,[i0,i2]]"

    friend std::strong_ordering operator<=>(const BracketTree& a, const BracketTree& b);
    friend bool operator==(const BracketTree& a, const BracketTree& b);

private:
    struct Node;
    static std::strong_ordering cmp_nodes(const Node* a, const Node* b);
    std::shared_ptr<const Node> node_;
};

// Z-linear combination of bracket trees.  The map never stores zero
// coefficients.
using LieElement = std::map<BracketTree, Int>;

LieElement lie_term(const BracketTree& t, Int coefficient = 1);
LieElement lie_add(const LieElement& a, const LieElement& b);
LieElement lie_scale(const Int& c, const LieElement& a);
// Whitehead product extended bilinearly.
LieElement lie_bracket(const LieElement& a, const LieElement& b);
bool lie_is_homogeneous(const LieElement& x);

// The index delta of a right-comb product: a sequence over {0} u {1..r-2} in
// which every value 1..r-2 occurs exactly once and 0 occurs t times.
struct Arrangement {
    std::vector<int> values;

    Arrangement() = default;
    Arrangement(std::vector<int> v, int r) : values(std::move(v)) { validate(r); }

    void validate(int r) const;
    int t() const;  // number of zeros

    friend std::strong_ordering operator<=>(const Arrangement& a, const Arrangement& b) = default;

    std::string text() const;  // "(1,0)"
};

// Coefficients on the right-comb basis, context given by the wedge signature.
// All arrangements in the support share one length (homogeneity).  Arrangement
// values are family indices; in covering-space mode the homogeneous
// multidegree fixes one graded generator per family, remembered in leaves so
// combs can be reproduced verbatim.
struct NormalForm {
    WedgeSignature sig;
    std::map<Arrangement, Int> coef;
    std::map<int, Generator> leaves;  // family index (0 = core) -> generator

    bool is_zero() const { return coef.empty(); }
    int t() const;  // zeros per arrangement; requires nonzero
    // The comb tree of one arrangement, with the remembered generators.
    BracketTree comb(const Arrangement& delta) const;
    LieElement to_lie() const;
};

// The right comb [i_{delta(1)}, [i_{delta(2)}, [..., [i_{delta(L)}, i_{r-1}]]]]:
// innermost rightmost leaf is the last meridian, outer leaves follow delta.
BracketTree comb_from_arrangement(const Arrangement& delta, const WedgeSignature& sig);

}  // namespace lie
}  // namespace muinv

#endif
