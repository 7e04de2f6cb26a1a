#include "muinv/normalize.hpp"

namespace muinv {
namespace lie {

namespace {

// Combs are handled as plain leaf sequences (terminal leaf last).
using Comb = std::vector<Generator>;
using CombMap = std::map<Comb, Int>;

void accumulate(CombMap& acc, const Comb& w, const Int& c)
{
    auto it = acc.find(w);
    if (it == acc.end()) {
        if (c != 0)
            acc.emplace(w, c);
    } else {
        it->second += c;
        if (it->second == 0)
            acc.erase(it);
    }
}

int parity_sign(long long e) { return (e % 2 == 0) ? 1 : -1; }

// [L, comb] with the terminal inside comb: peel L via the Jacobi identity.
CombMap attach(const BracketTree& L, const Comb& comb)
{
    if (L.is_leaf()) {
        Comb w;
        w.reserve(comb.size() + 1);
        w.push_back(L.leaf());
        w.insert(w.end(), comb.begin(), comb.end());
        return CombMap{{std::move(w), Int(1)}};
    }
    BracketTree a = L.left();
    BracketTree b = L.right();
    const int pa = a.sphere_dim();
    const int pb = b.sphere_dim();
    const Int s1 = parity_sign(pa + 1);
    const Int s2 = parity_sign(pa + static_cast<long long>(pa - 1) * (pb - 1));
    CombMap r;
    for (const auto& [c1, v1] : attach(b, comb))
        for (const auto& [c2, v2] : attach(a, c1))
            accumulate(r, c2, s1 * v1 * v2);
    for (const auto& [c1, v1] : attach(a, comb))
        for (const auto& [c2, v2] : attach(b, c1))
            accumulate(r, c2, s2 * v1 * v2);
    return r;
}

bool contains_family(const BracketTree& t, int family) { return t.family_count(family) > 0; }

CombMap expand_pair(const BracketTree& l, const BracketTree& r, int terminal_family);

CombMap expand_tree(const BracketTree& t, int terminal_family)
{
    if (t.is_leaf())
        return CombMap{{Comb{t.leaf()}, Int(1)}};
    return expand_pair(t.left(), t.right(), terminal_family);
}

CombMap expand_pair(const BracketTree& l, const BracketTree& r, int terminal_family)
{
    if (contains_family(l, terminal_family)) {
        // antisymmetry: [l,r] = (-1)^{dim l * dim r} [r,l]
        Int sign = parity_sign(static_cast<long long>(l.sphere_dim()) * r.sphere_dim());
        CombMap m = expand_pair(r, l, terminal_family);
        for (auto& [w, c] : m)
            c *= sign;
        return m;
    }
    CombMap combs_r = expand_tree(r, terminal_family);
    CombMap acc;
    for (const auto& [comb, c] : combs_r)
        for (const auto& [w, v] : attach(l, comb))
            accumulate(acc, w, c * v);
    return acc;
}

}  // namespace

NormalForm normalize(const LieElement& x, const WedgeSignature& sig)
{
    sig.validate();
    const int r = sig.r();
    NormalForm nf;
    nf.sig = sig;
    if (x.empty())
        return nf;
    if (!lie_is_homogeneous(x))
        throw ValidationError("normalize: input is inhomogeneous");
    const BracketTree& probe = x.begin()->first;
    int terminal_count = probe.family_count(r - 1);
    if (terminal_count == 0)
        throw ValidationError("normalize: input does not contain the last meridian family " +
                              std::to_string(r - 1));
    if (terminal_count > 1)
        throw ValidationError("normalize: last meridian family " + std::to_string(r - 1) +
                              " occurs more than once");
    for (int j = 1; j <= r - 2; ++j)
        if (probe.family_count(j) != 1)
            throw ValidationError("normalize: meridian family " + std::to_string(j) +
                                  " must occur exactly once (multidegree (t;1,...,1))");
    // remember which generator realizes each family (grades matter when n = 1)
    for (const auto& [g, count] : probe.multidegree()) {
        (void)count;
        nf.leaves.emplace(g.is_core() ? 0 : g.family, g);
    }

    CombMap acc;
    for (const auto& [t, c] : x)
        for (const auto& [w, v] : expand_tree(t, r - 1))
            accumulate(acc, w, c * v);

    for (const auto& [w, c] : acc) {
        std::vector<int> delta;
        delta.reserve(w.size() - 1);
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            delta.push_back(w[i].is_core() ? 0 : w[i].family);
        nf.coef.emplace(Arrangement(std::move(delta), r), c);
    }
    return nf;
}

}  // namespace lie
}  // namespace muinv
