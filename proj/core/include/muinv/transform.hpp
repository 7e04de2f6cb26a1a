#ifndef MUINV_TRANSFORM_HPP
#define MUINV_TRANSFORM_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "muinv/abelian.hpp"
#include "muinv/binomial.hpp"
#include "muinv/int_matrix.hpp"

namespace muinv {
namespace transform {

using Interval = std::pair<long long, long long>;  // inclusive [lo, hi]

struct Box {
    std::vector<Interval> axes;

    std::size_t arity() const { return axes.size(); }
    long long side(std::size_t axis) const
    {
        return axes[axis].second - axes[axis].first + 1;
    }
    void validate() const
    {
        if (axes.empty())
            throw ValidationError("Box: arity must be >= 1");
        for (const auto& [lo, hi] : axes)
            if (lo > hi)
                throw ValidationError("Box: empty interval");
    }
    bool contains(const std::vector<long long>& g) const
    {
        if (g.size() != axes.size())
            return false;
        for (std::size_t i = 0; i < axes.size(); ++i)
            if (g[i] < axes[i].first || g[i] > axes[i].second)
                return false;
        return true;
    }
};

// Finitely supported map Z^arity -> group elements; zero values are never
// stored.  When a window is declared the support must lie inside it.
struct SupportedSequence {
    int arity = 1;
    AbelianGroup group;
    std::map<std::vector<long long>, GroupElement> entries;
    std::optional<Box> window;

    void insert(std::vector<long long> g, GroupElement v);
    void validate() const;
};

// d_s(a) = sum_g binom(g+s-1, s) a_g for s = 0..max_s.
std::vector<GroupElement> forward_d(const SupportedSequence& a, int max_s);

// The unique sequence supported in the window whose forward transform matches
// the given values; values beyond the window size act as consistency checks
// and raise WindowInconsistency on mismatch (the window was too small).
SupportedSequence invert_d(const std::vector<GroupElement>& d, Interval window,
                           const AbelianGroup& group);

// The (n+1)x(n+1) matrix of b(s,g), 0 <= s <= n, n0-n <= g <= n0.
IntegerMatrix binomial_matrix(int n, long long n0);
// Its determinant; equals 1 for every n, n0 (column-telescoping), which is
// what makes the inversion above exact over any coefficient group.
Int det_M(int n, long long n0);

// Multi-index transform: value at (s) = sum_{(g)} prod_j b(s_j, g_j) a_{(g)},
// emitted for all (s) with |s_1| + ... <= max_s.
std::map<std::vector<int>, GroupElement> forward_Dprime(const SupportedSequence& a, int max_s);

// Axis-by-axis inversion, last axis first; requires values on the full grid
// 0 <= s_j <= side_j - 1 and consistency-checks any surplus values.
SupportedSequence invert_Dprime(const std::map<std::vector<int>, GroupElement>& values,
                                const Box& window, const AbelianGroup& group);

}  // namespace transform
}  // namespace muinv

#endif
