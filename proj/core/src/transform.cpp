#include "muinv/transform.hpp"

namespace muinv {
namespace transform {

void SupportedSequence::insert(std::vector<long long> g, GroupElement v)
{
    if (g.size() != static_cast<std::size_t>(arity))
        throw ValidationError("SupportedSequence: index arity mismatch");
    if (window && !window->contains(g))
        throw ValidationError("SupportedSequence: index outside the declared window");
    v = reduce_element(std::move(v), group);
    if (is_zero(v))
        entries.erase(g);
    else
        entries[std::move(g)] = std::move(v);
}

void SupportedSequence::validate() const
{
    if (arity < 1)
        throw ValidationError("SupportedSequence: arity must be >= 1");
    for (const auto& [g, v] : entries) {
        if (g.size() != static_cast<std::size_t>(arity))
            throw ValidationError("SupportedSequence: index arity mismatch");
        if (window && !window->contains(g))
            throw ValidationError("SupportedSequence: support leaks out of the window");
        (void)v;
    }
}

std::vector<GroupElement> forward_d(const SupportedSequence& a, int max_s)
{
    a.validate();
    if (a.arity != 1)
        throw ValidationError("forward_d: sequence must have arity 1");
    if (max_s < 0)
        throw ValidationError("forward_d: max_s must be >= 0");
    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(max_s) + 1);
    for (int s = 0; s <= max_s; ++s) {
        GroupElement acc = zero_element(a.group);
        for (const auto& [g, v] : a.entries) {
            Int c = b_coeff(s, g[0]);
            if (c == 0)
                continue;
            acc = add(acc, scalar_mul(c, v, a.group), a.group);
        }
        out.push_back(std::move(acc));
    }
    return out;
}

IntegerMatrix binomial_matrix(int n, long long n0)
{
    if (n < 0)
        throw ValidationError("binomial_matrix: n must be >= 0");
    const std::size_t size = static_cast<std::size_t>(n) + 1;
    IntegerMatrix m(size, size);
    for (std::size_t s = 0; s < size; ++s)
        for (std::size_t c = 0; c < size; ++c)
            m(s, c) = b_coeff(static_cast<int>(s), n0 - n + static_cast<long long>(c));
    return m;
}

Int det_M(int n, long long n0) { return binomial_matrix(n, n0).determinant(); }

SupportedSequence invert_d(const std::vector<GroupElement>& d, Interval window,
                           const AbelianGroup& group)
{
    const auto [lo, hi] = window;
    if (lo > hi)
        throw ValidationError("invert_d: empty window");
    const std::size_t width = static_cast<std::size_t>(hi - lo + 1);
    if (d.size() < width)
        throw ValidationError("invert_d: need at least as many values as window points");
    // Unimodular solve over Z (det = 1); the integer inverse then acts on any
    // coefficient group componentwise.
    IntegerMatrix m = binomial_matrix(static_cast<int>(width) - 1, hi);
    IntegerMatrix inv = m.inverse_unimodular();
    std::vector<GroupElement> rhs(d.begin(), d.begin() + static_cast<long>(width));
    std::vector<GroupElement> a = inv.apply(rhs, group);

    SupportedSequence seq;
    seq.arity = 1;
    seq.group = group;
    seq.window = Box{{window}};
    for (std::size_t i = 0; i < width; ++i)
        seq.insert({lo + static_cast<long long>(i)}, a[i]);
    // surplus values signal whether the declared window really held the support
    for (std::size_t s = width; s < d.size(); ++s) {
        GroupElement acc = zero_element(group);
        for (const auto& [g, v] : seq.entries)
            acc = add(acc, scalar_mul(b_coeff(static_cast<int>(s), g[0]), v, group), group);
        if (!(acc == d[s]))
            throw WindowInconsistency(
                "invert_d: values are inconsistent with the declared window (enlarge it)");
    }
    return seq;
}

namespace {

void enumerate_grid(const std::vector<int>& limits, std::vector<int>& cur, std::size_t axis,
                    std::vector<std::vector<int>>& out)
{
    if (axis == limits.size()) {
        out.push_back(cur);
        return;
    }
    for (int v = 0; v <= limits[axis]; ++v) {
        cur.push_back(v);
        enumerate_grid(limits, cur, axis + 1, out);
        cur.pop_back();
    }
}

GroupElement forward_value(const SupportedSequence& a, const std::vector<int>& s_vec)
{
    GroupElement acc = zero_element(a.group);
    for (const auto& [g, v] : a.entries) {
        Int c = 1;
        for (std::size_t j = 0; j < g.size(); ++j) {
            c *= b_coeff(s_vec[j], g[j]);
            if (c == 0)
                break;
        }
        if (c == 0)
            continue;
        acc = add(acc, scalar_mul(c, v, a.group), a.group);
    }
    return acc;
}

SupportedSequence invert_box(const std::map<std::vector<int>, GroupElement>& values,
                             const Box& window, const AbelianGroup& group)
{
    const std::size_t arity = window.arity();
    if (arity == 1) {
        const long long width = window.side(0);
        std::vector<GroupElement> d;
        d.reserve(static_cast<std::size_t>(width));
        for (int s = 0; s < width; ++s) {
            auto it = values.find(std::vector<int>{s});
            if (it == values.end())
                throw ValidationError("invert_Dprime: values must cover the (s)-grid");
            d.push_back(it->second);
        }
        return invert_d(d, window.axes[0], group);
    }

    // Peel the last axis: for each fixed prefix (s_1..s_{k-1}), the run over
    // the last s recovers, per level g_k, the inner multi-sum; then recurse.
    const std::size_t last = arity - 1;
    const long long last_width = window.side(last);
    Box prefix_box{std::vector<Interval>(window.axes.begin(), window.axes.end() - 1)};
    std::vector<int> prefix_limits;
    for (std::size_t j = 0; j + 1 < arity; ++j)
        prefix_limits.push_back(static_cast<int>(window.side(j)) - 1);
    std::vector<std::vector<int>> prefix_grid;
    std::vector<int> cur;
    enumerate_grid(prefix_limits, cur, 0, prefix_grid);

    // per last-axis level g: map prefix (s) -> inner value
    std::map<long long, std::map<std::vector<int>, GroupElement>> inner;
    for (const auto& sp : prefix_grid) {
        std::vector<GroupElement> run;
        run.reserve(static_cast<std::size_t>(last_width));
        for (int s = 0; s < last_width; ++s) {
            std::vector<int> key = sp;
            key.push_back(s);
            auto it = values.find(key);
            if (it == values.end())
                throw ValidationError("invert_Dprime: values must cover the (s)-grid");
            run.push_back(it->second);
        }
        SupportedSequence line = invert_d(run, window.axes[last], group);
        for (long long g = window.axes[last].first; g <= window.axes[last].second; ++g) {
            auto it = line.entries.find(std::vector<long long>{g});
            inner[g][sp] = (it == line.entries.end()) ? zero_element(group) : it->second;
        }
    }

    SupportedSequence out;
    out.arity = static_cast<int>(arity);
    out.group = group;
    out.window = window;
    for (auto& [g_last, prefix_values] : inner) {
        SupportedSequence part = invert_box(prefix_values, prefix_box, group);
        for (auto& [g, v] : part.entries) {
            std::vector<long long> full = g;
            full.push_back(g_last);
            out.insert(std::move(full), v);
        }
    }
    return out;
}

}  // namespace

std::map<std::vector<int>, GroupElement> forward_Dprime(const SupportedSequence& a, int max_s)
{
    a.validate();
    if (max_s < 0)
        throw ValidationError("forward_Dprime: max_s must be >= 0");
    std::map<std::vector<int>, GroupElement> out;
    // all (s) with s_j >= 0 and sum <= max_s
    std::vector<std::vector<int>> grid;
    std::vector<int> limits(static_cast<std::size_t>(a.arity), max_s);
    std::vector<int> cur;
    enumerate_grid(limits, cur, 0, grid);
    for (const auto& s_vec : grid) {
        int total = 0;
        for (int s : s_vec)
            total += s;
        if (total > max_s)
            continue;
        out.emplace(s_vec, forward_value(a, s_vec));
    }
    return out;
}

SupportedSequence invert_Dprime(const std::map<std::vector<int>, GroupElement>& values,
                                const Box& window, const AbelianGroup& group)
{
    window.validate();
    for (const auto& [s_vec, v] : values) {
        if (s_vec.size() != window.arity())
            throw ValidationError("invert_Dprime: value index arity mismatch");
        for (int s : s_vec)
            if (s < 0)
                throw ValidationError("invert_Dprime: negative s index");
        (void)v;
    }
    SupportedSequence a = invert_box(values, window, group);
    // every supplied value (including surplus ones) must match the forward map
    for (const auto& [s_vec, v] : values) {
        if (!(forward_value(a, s_vec) == v))
            throw WindowInconsistency(
                "invert_Dprime: values are inconsistent with the declared window (enlarge it)");
    }
    return a;
}

}  // namespace transform
}  // namespace muinv
