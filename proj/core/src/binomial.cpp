#include "muinv/binomial.hpp"

namespace muinv {
namespace transform {

PascalTable::PascalTable(int max_s, long long lo, long long hi)
    : max_s_(max_s), lo_(lo), hi_(hi)
{
    if (max_s < 0)
        throw ValidationError("pascal_oracle: max_s must be >= 0");
    if (lo > 0 || hi < 0)
        throw ValidationError("pascal_oracle: window must contain 0");
    const std::size_t width = static_cast<std::size_t>(hi - lo + 1);
    rows_.assign(static_cast<std::size_t>(max_s) + 1, std::vector<Int>(width, Int(0)));
    auto idx = [lo](long long g) { return static_cast<std::size_t>(g - lo); };
    for (auto& v : rows_[0])
        v = 1;
    for (int s = 1; s <= max_s; ++s) {
        auto& row = rows_[static_cast<std::size_t>(s)];
        const auto& prev = rows_[static_cast<std::size_t>(s) - 1];
        row[idx(0)] = 0;
        for (long long g = 1; g <= hi; ++g)
            row[idx(g)] = row[idx(g - 1)] + prev[idx(g)];
        for (long long g = 0; g - 1 >= lo; --g)
            row[idx(g - 1)] = row[idx(g)] - prev[idx(g)];
    }
}

const Int& PascalTable::at(int s, long long g) const
{
    if (s < 0 || s > max_s_ || g < lo_ || g > hi_)
        throw ValidationError("PascalTable: index out of range");
    return rows_[static_cast<std::size_t>(s)][static_cast<std::size_t>(g - lo_)];
}

}  // namespace transform
}  // namespace muinv
