#ifndef MUINV_HOPF_HPP
#define MUINV_HOPF_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "muinv/abelian.hpp"
#include "muinv/bracket.hpp"
#include "muinv/hilton.hpp"
#include "muinv/int_matrix.hpp"
#include "muinv/monotone.hpp"

namespace muinv {
namespace hopf {

// Value of one Hopf homomorphism on a normal form: an integer multiple of the
// stable suspension of the coefficient class sitting on one comb.  All global
// signs are fixed to +1 by convention (they are determined only up to sign);
// zero values are never stored.
struct HopfValue {
    Int coefficient;
    std::string source_class;  // "E^inf(alpha(delta))"
    int stem_shift = 0;        // degree shift -s*n - |q| + r + s - 2
};

// H_{s,gamma} on a comb i_delta is the suspension when delta is the
// contraction of gamma (s = t), zero otherwise; extended linearly.
std::vector<std::pair<MonotonePermutation, HopfValue>> evaluate_H(const lie::NormalForm& nf,
                                                                  int s);

struct BasisMatrix {
    IntegerMatrix matrix;  // row l = normalize(w_l) in the comb basis
    Int det;
    bool unimodular = false;
    std::vector<hilton::BasicProduct> row_products;
    std::vector<lie::Arrangement> col_arrangements;
};

// Change of basis between the Lyndon basic products of multidegree
// (s; 1,...,1) and the combs with t = s, both in their deterministic
// enumeration orders.  Requires n >= 2, or s = 0 (the per-level matrix used in
// covering-space mode, which does not involve the core).
BasisMatrix basis_matrix_D(const WedgeSignature& sig, int s);

// All arrangements with exactly t zeros, lexicographically sorted.
std::vector<lie::Arrangement> arrangements_with_t(int r, int t);

// prod_j binom(gbar_j - gbar_{j-1} + s_j - 1, s_j) with gbar_0 = 0; gbar is
// already permuted (gbar_j = g_{gamma_bar(j)} for j < r-1, gbar_{r-1} =
// g_{r-1}).
Int graded_coefficient(const std::vector<long long>& gbar, const std::vector<int>& s_decomp);

// Finitely supported family of group elements indexed by a level vector
// (g) in Z^{r-1} and a permutation gamma_bar of {1..r-2}; the covering-space
// shadow of a reduced homotopy class.
struct GradedHopfDataset {
    using Key = std::pair<std::vector<long long>, std::vector<int>>;

    int r = 2;
    AbelianGroup group;
    std::map<Key, GroupElement> entries;

    void insert(std::vector<long long> g, std::vector<int> gamma_bar, GroupElement v);
    void validate() const;
};

// H_{s,gamma} on a graded dataset: for gamma = gamma((s), gamma_bar), the sum
// over (g) of graded_coefficient(permuted g, (s)) times the dataset value.
// Returns one value per gamma in Sigma_{r,s} (zeros included).
std::vector<std::pair<MonotonePermutation, GroupElement>> evaluate_H_graded(
    const GradedHopfDataset& data, int s);

}  // namespace hopf
}  // namespace muinv

#endif
