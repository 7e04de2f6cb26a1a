#ifndef MUINV_ABELIAN_HPP
#define MUINV_ABELIAN_HPP

#include <optional>
#include <string>
#include <vector>

#include "muinv/integer.hpp"

namespace muinv {

// A finitely generated abelian group Z^free_rank (+) Z_d1 (+) ... in canonical
// form: the torsion coefficients form a divisibility chain d1 | d2 | ... with
// each di >= 2.  The `unknown` marker stands for a group outside the shipped
// stable-stem table.
struct AbelianGroup {
    long long free_rank = 0;
    std::vector<long long> torsion;
    bool unknown = false;

    static AbelianGroup zero() { return AbelianGroup{}; }
    static AbelianGroup unknown_group()
    {
        AbelianGroup g;
        g.unknown = true;
        return g;
    }
    // m == 0 denotes the infinite cyclic group.
    static AbelianGroup cyclic(long long m);
    // Canonicalizes an arbitrary list of torsion coefficients.
    static AbelianGroup make(long long free_rank, std::vector<long long> torsion);

    bool is_zero() const { return !unknown && free_rank == 0 && torsion.empty(); }
    AbelianGroup direct_sum(const AbelianGroup& other) const;
    AbelianGroup power(long long copies) const;

    bool operator==(const AbelianGroup& other) const = default;

    std::string to_string() const;
};

// Element of a fixed ambient AbelianGroup: integer coordinates on the free
// part, residues on the torsion part (always reduced modulo the moduli).
struct GroupElement {
    std::vector<Int> free_part;
    std::vector<Int> torsion_part;

    bool operator==(const GroupElement& other) const = default;
};

GroupElement zero_element(const AbelianGroup& g);
GroupElement reduce_element(GroupElement e, const AbelianGroup& g);
GroupElement add(const GroupElement& a, const GroupElement& b, const AbelianGroup& g);
GroupElement sub(const GroupElement& a, const GroupElement& b, const AbelianGroup& g);
GroupElement scalar_mul(const Int& c, const GroupElement& a, const AbelianGroup& g);
bool is_zero(const GroupElement& e);

}  // namespace muinv

#endif
