#ifndef MUINV_PROBLEM_HPP
#define MUINV_PROBLEM_HPP

#include <numeric>
#include <vector>

#include "muinv/integer.hpp"

namespace muinv {
namespace links {

// The classification problem: link maps of spheres S^{p_1} u ... u S^{p_r}
// into S^n x R^{m-n}.
struct LinkProblem {
    std::vector<int> p;
    int m = 3;
    int n = 1;

    LinkProblem() = default;
    LinkProblem(std::vector<int> dims, int ambient_m, int core_n)
        : p(std::move(dims)), m(ambient_m), n(core_n)
    {
        validate();
    }

    void validate() const
    {
        if (p.size() < 2)
            throw ValidationError("LinkProblem: need r >= 2 components");
        if (m < 3)
            throw ValidationError("LinkProblem: m must be >= 3");
        if (n < 1 || n > m - 1)
            throw ValidationError("LinkProblem: need 1 <= n <= m-1");
        for (int pi : p)
            if (pi < 1)
                throw ValidationError("LinkProblem: component dimensions must be >= 1");
    }

    int r() const { return static_cast<int>(p.size()); }
    long long p_total() const { return std::accumulate(p.begin(), p.end(), 0LL); }

    LinkProblem sublink(const std::vector<int>& indices) const
    {
        std::vector<int> dims;
        dims.reserve(indices.size());
        for (int i : indices)
            dims.push_back(p.at(static_cast<std::size_t>(i) - 1));
        return LinkProblem(std::move(dims), m, n);
    }
};

}  // namespace links
}  // namespace muinv

#endif
