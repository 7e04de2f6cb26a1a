#include "muinv/monotone.hpp"

#include <algorithm>
#include <sstream>

namespace muinv {
namespace hopf {

std::string MonotonePermutation::values_text() const
{
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            out << ",";
        out << values[i];
    }
    out << ")";
    return out.str();
}

bool is_monotone(const std::vector<int>& values, int s)
{
    // positions of 1..s must increase, i.e. value v+1 appears after value v
    int last_pos = -1;
    for (int v = 1; v <= s; ++v) {
        auto it = std::find(values.begin(), values.end(), v);
        if (it == values.end())
            return false;
        int pos = static_cast<int>(it - values.begin());
        if (pos < last_pos)
            return false;
        last_pos = pos;
    }
    return true;
}

namespace {

bool is_permutation_of_1_to(const std::vector<int>& v, int n)
{
    if (v.size() != static_cast<std::size_t>(n))
        return false;
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int x : v) {
        if (x < 1 || x > n || seen[static_cast<std::size_t>(x)])
            return false;
        seen[static_cast<std::size_t>(x)] = true;
    }
    return true;
}

}  // namespace

MonotonePermutation compose_monotone(int r, const std::vector<int>& s_decomp,
                                     const std::vector<int>& gamma_bar)
{
    if (r < 2)
        throw ValidationError("compose_monotone: r must be >= 2");
    if (s_decomp.size() != static_cast<std::size_t>(r - 1))
        throw ValidationError("compose_monotone: composition must have r-1 parts");
    if (!is_permutation_of_1_to(gamma_bar, r - 2))
        throw ValidationError("compose_monotone: gamma_bar must be a permutation of {1..r-2}");
    int s = 0;
    for (int part : s_decomp) {
        if (part < 0)
            throw ValidationError("compose_monotone: negative part");
        s += part;
    }
    MonotonePermutation g;
    g.r = r;
    g.s = s;
    g.s_decomp = s_decomp;
    g.gamma_bar = gamma_bar;
    int next_small = 1;
    for (int i = 0; i < r - 1; ++i) {
        for (int b = 0; b < s_decomp[static_cast<std::size_t>(i)]; ++b)
            g.values.push_back(next_small++);
        if (i < r - 2)
            g.values.push_back(gamma_bar[static_cast<std::size_t>(i)] + s);
    }
    return g;
}

std::optional<MonotonePermutation> decompose_monotone(int r, int s,
                                                      const std::vector<int>& values)
{
    if (r < 2 || s < 0)
        return std::nullopt;
    if (!is_permutation_of_1_to(values, r + s - 2))
        return std::nullopt;
    if (!is_monotone(values, s))
        return std::nullopt;
    MonotonePermutation g;
    g.r = r;
    g.s = s;
    g.values = values;
    g.s_decomp.assign(static_cast<std::size_t>(r - 1), 0);
    std::size_t block = 0;
    int expected_small = 1;
    for (int v : values) {
        if (v <= s) {
            if (v != expected_small++)
                return std::nullopt;
            ++g.s_decomp[block];
        } else {
            g.gamma_bar.push_back(v - s);
            if (++block >= static_cast<std::size_t>(r - 1))
                return std::nullopt;
        }
    }
    if (g.gamma_bar.size() != static_cast<std::size_t>(r - 2))
        return std::nullopt;
    return g;
}

namespace {

void compositions(int total, int parts, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out)
{
    if (parts == 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int first = 0; first <= total; ++first) {
        cur.push_back(first);
        compositions(total - first, parts - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<MonotonePermutation> enumerate_monotone(int r, int s)
{
    if (r < 2 || s < 0)
        throw ValidationError("enumerate_monotone: need r >= 2, s >= 0");
    std::vector<std::vector<int>> comps;
    std::vector<int> cur;
    compositions(s, r - 1, cur, comps);
    std::vector<int> gbar(static_cast<std::size_t>(r - 2));
    for (std::size_t i = 0; i < gbar.size(); ++i)
        gbar[i] = static_cast<int>(i) + 1;
    std::vector<MonotonePermutation> out;
    do {
        for (const auto& comp : comps)
            out.push_back(compose_monotone(r, comp, gbar));
    } while (std::next_permutation(gbar.begin(), gbar.end()));
    std::sort(out.begin(), out.end(), [](const MonotonePermutation& a,
                                         const MonotonePermutation& b) {
        return a.values < b.values;
    });
    return out;
}

std::optional<lie::Arrangement> contraction(const MonotonePermutation& gamma, int t)
{
    if (t < 0)
        throw ValidationError("contraction: t must be >= 0");
    if (t != gamma.s)
        return std::nullopt;
    std::vector<int> delta;
    delta.reserve(gamma.values.size());
    for (int v : gamma.values)
        delta.push_back(std::max(v - t, 0));
    return lie::Arrangement(std::move(delta), gamma.r);
}

}  // namespace hopf
}  // namespace muinv
