#ifndef MUINV_WEDGE_HPP
#define MUINV_WEDGE_HPP

#include <numeric>
#include <vector>

#include "muinv/integer.hpp"

namespace muinv {

// The wedge S^n v S^{q_1} v ... v S^{q_{r-1}}: one core sphere and r-1
// meridian spheres.  q_j >= 2 throughout; the core dimension n may be 1,
// in which case enumeration switches to graded (covering-space) generators.
struct WedgeSignature {
    int n = 2;
    std::vector<int> q;

    WedgeSignature() = default;
    WedgeSignature(int core_dim, std::vector<int> meridian_dims)
        : n(core_dim), q(std::move(meridian_dims))
    {
        validate();
    }

    void validate() const
    {
        if (n < 1)
            throw ValidationError("WedgeSignature: core dimension n must be >= 1");
        if (q.empty())
            throw ValidationError("WedgeSignature: need r >= 2, i.e. at least one meridian sphere");
        for (int qj : q)
            if (qj < 2)
                throw ValidationError("WedgeSignature: meridian dimensions must be >= 2");
    }

    int r() const { return static_cast<int>(q.size()) + 1; }
    int q_total() const { return std::accumulate(q.begin(), q.end(), 0); }
    // Dimension of the meridian sphere S^{q_j}, 1-based family index.
    int meridian_dim(int j) const
    {
        if (j < 1 || j > r() - 1)
            throw ValidationError("WedgeSignature: meridian index out of range");
        return q[static_cast<std::size_t>(j) - 1];
    }

    bool operator==(const WedgeSignature&) const = default;
};

}  // namespace muinv

#endif
