#ifndef MUINV_MONOTONE_HPP
#define MUINV_MONOTONE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "muinv/bracket.hpp"

namespace muinv {
namespace hopf {

// An s-monotone permutation gamma of {1,...,r+s-2}: the positions of the
// values 1..s increase.  Every such gamma decomposes uniquely into a
// composition (s_1,...,s_{r-1}) of s and a permutation gamma_bar of {1..r-2}:
// blocks of s_i consecutive small values alternate with the shifted values
// gamma_bar(i)+s.
struct MonotonePermutation {
    int r = 2;
    int s = 0;
    std::vector<int> values;     // one-line image, 1-based, length r+s-2
    std::vector<int> s_decomp;   // s_1..s_{r-1}, sum = s
    std::vector<int> gamma_bar;  // one-line image on {1..r-2}

    std::string values_text() const;
};

bool is_monotone(const std::vector<int>& values, int s);

MonotonePermutation compose_monotone(int r, const std::vector<int>& s_decomp,
                                     const std::vector<int>& gamma_bar);

// Reads the block structure back off the one-line image; nullopt when the
// permutation is not s-monotone.
std::optional<MonotonePermutation> decompose_monotone(int r, int s,
                                                      const std::vector<int>& values);

// All of Sigma_{r,s}, sorted by one-line image; |result| = (r+s-2)!/s!.
std::vector<MonotonePermutation> enumerate_monotone(int r, int s);

// delta(i) = max(gamma(i) - t, 0); defined exactly when t = gamma.s (in all
// other cases the Hopf evaluation vanishes and absent is returned).
std::optional<lie::Arrangement> contraction(const MonotonePermutation& gamma, int t);

}  // namespace hopf
}  // namespace muinv

#endif
