#include "muinv/hopf.hpp"

#include <algorithm>

#include "muinv/normalize.hpp"

namespace muinv {
namespace hopf {

std::vector<std::pair<MonotonePermutation, HopfValue>> evaluate_H(const lie::NormalForm& nf,
                                                                  int s)
{
    if (s < 0)
        throw ValidationError("evaluate_H: s must be >= 0");
    std::vector<std::pair<MonotonePermutation, HopfValue>> out;
    if (nf.is_zero())
        return out;
    const int r = nf.sig.r();
    const int t = nf.t();
    if (s != t)
        return out;  // vanishes on combs with t != s
    const int stem_shift = -s * nf.sig.n - nf.sig.q_total() + r + s - 2;
    for (const MonotonePermutation& gamma : enumerate_monotone(r, s)) {
        auto delta = contraction(gamma, t);
        auto it = nf.coef.find(*delta);
        if (it == nf.coef.end())
            continue;
        HopfValue v{it->second, "E^inf(alpha" + delta->text() + ")", stem_shift};
        out.emplace_back(gamma, std::move(v));
    }
    return out;
}

std::vector<lie::Arrangement> arrangements_with_t(int r, int t)
{
    if (r < 2 || t < 0)
        throw ValidationError("arrangements_with_t: need r >= 2, t >= 0");
    std::vector<int> seq;
    for (int i = 0; i < t; ++i)
        seq.push_back(0);
    for (int j = 1; j <= r - 2; ++j)
        seq.push_back(j);
    std::sort(seq.begin(), seq.end());
    std::vector<lie::Arrangement> out;
    do {
        out.emplace_back(seq, r);
    } while (std::next_permutation(seq.begin(), seq.end()));
    return out;
}

BasisMatrix basis_matrix_D(const WedgeSignature& sig, int s)
{
    sig.validate();
    if (s < 0)
        throw ValidationError("basis_matrix_D: s must be >= 0");
    if (sig.n == 1 && s > 0)
        throw ValidationError(
            "basis_matrix_D: with n = 1 only the per-level matrix s = 0 is defined");
    const int r = sig.r();
    const int weight = s + r - 1;

    // At s = 0 the core inclusion never occurs, so in covering-space mode the
    // per-level matrix is computed over an ungraded surrogate alphabet (the
    // meridian dimensions are what the signs depend on).
    WedgeSignature esig = sig;
    if (esig.n == 1)
        esig.n = 2;

    BasisMatrix bm;
    for (auto& w : hilton::enumerate_basic(esig, weight)) {
        if (w.t != s)
            continue;
        if (std::any_of(w.family_counts.begin(), w.family_counts.end(),
                        [](int c) { return c != 1; }))
            continue;
        bm.row_products.push_back(std::move(w));
    }
    bm.col_arrangements = arrangements_with_t(r, s);
    const std::size_t u = bm.col_arrangements.size();
    if (bm.row_products.size() != u)
        throw ValidationError("basis_matrix_D: basic product count does not match u_{r,s}");

    bm.matrix = IntegerMatrix(u, u);
    std::map<lie::Arrangement, std::size_t> col_of;
    for (std::size_t c = 0; c < u; ++c)
        col_of.emplace(bm.col_arrangements[c], c);
    for (std::size_t row = 0; row < u; ++row) {
        lie::NormalForm nf = lie::normalize(lie::lie_term(bm.row_products[row].tree), esig);
        for (const auto& [delta, coef] : nf.coef)
            bm.matrix(row, col_of.at(delta)) = coef;
    }
    bm.det = bm.matrix.determinant();
    bm.unimodular = (bm.det == 1 || bm.det == -1);
    return bm;
}

Int graded_coefficient(const std::vector<long long>& gbar, const std::vector<int>& s_decomp)
{
    if (gbar.size() != s_decomp.size())
        throw ValidationError("graded_coefficient: length mismatch");
    Int prod = 1;
    long long prev = 0;
    for (std::size_t j = 0; j < gbar.size(); ++j) {
        prod *= binomial(Int(gbar[j] - prev + s_decomp[j] - 1), s_decomp[j]);
        if (prod == 0)
            return 0;
        prev = gbar[j];
    }
    return prod;
}

void GradedHopfDataset::insert(std::vector<long long> g, std::vector<int> gamma_bar,
                               GroupElement v)
{
    if (g.size() != static_cast<std::size_t>(r - 1))
        throw ValidationError("GradedHopfDataset: level vector must have r-1 entries");
    if (gamma_bar.size() != static_cast<std::size_t>(r - 2))
        throw ValidationError("GradedHopfDataset: gamma_bar must act on r-2 letters");
    v = reduce_element(std::move(v), group);
    Key key{std::move(g), std::move(gamma_bar)};
    if (is_zero(v))
        entries.erase(key);
    else
        entries[std::move(key)] = std::move(v);
}

void GradedHopfDataset::validate() const
{
    if (r < 2)
        throw ValidationError("GradedHopfDataset: r must be >= 2");
    for (const auto& [key, v] : entries) {
        if (key.first.size() != static_cast<std::size_t>(r - 1) ||
            key.second.size() != static_cast<std::size_t>(r - 2))
            throw ValidationError("GradedHopfDataset: malformed key");
        (void)v;
    }
}

std::vector<std::pair<MonotonePermutation, GroupElement>> evaluate_H_graded(
    const GradedHopfDataset& data, int s)
{
    data.validate();
    if (s < 0)
        throw ValidationError("evaluate_H_graded: s must be >= 0");
    const int r = data.r;
    std::vector<std::pair<MonotonePermutation, GroupElement>> out;
    for (const MonotonePermutation& gamma : enumerate_monotone(r, s)) {
        GroupElement acc = zero_element(data.group);
        for (const auto& [key, value] : data.entries) {
            const auto& [g, gbar_perm] = key;
            if (gbar_perm != gamma.gamma_bar)
                continue;
            // gbar_j = g_{gamma_bar(j)} for j < r-1; the last entry is g_{r-1}
            std::vector<long long> gbar(static_cast<std::size_t>(r - 1));
            for (int j = 0; j < r - 2; ++j)
                gbar[static_cast<std::size_t>(j)] =
                    g[static_cast<std::size_t>(gamma.gamma_bar[static_cast<std::size_t>(j)] - 1)];
            gbar[static_cast<std::size_t>(r - 2)] = g[static_cast<std::size_t>(r - 2)];
            Int c = graded_coefficient(gbar, gamma.s_decomp);
            if (c == 0)
                continue;
            acc = add(acc, scalar_mul(c, value, data.group), data.group);
        }
        out.emplace_back(gamma, std::move(acc));
    }
    return out;
}

}  // namespace hopf
}  // namespace muinv
