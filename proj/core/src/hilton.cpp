#include "muinv/hilton.hpp"

#include <algorithm>
#include <sstream>

namespace muinv {
namespace hilton {

std::string summand_class_name(SummandClass c)
{
    switch (c) {
        case SummandClass::full: return "full";
        case SummandClass::reducedOnly: return "reducedOnly";
        case SummandClass::doublePrime: return "doublePrime";
        case SummandClass::outside: return "outside";
    }
    return "?";
}

std::vector<Generator> alphabet(const WedgeSignature& sig,
                                const std::optional<GradedWindow>& window)
{
    sig.validate();
    std::vector<Generator> a;
    if (sig.n == 1) {
        if (!window)
            throw ValidationError("enumerate_basic: a graded window is required when n = 1");
        if (window->first > window->second)
            throw ValidationError("enumerate_basic: empty graded window");
        for (int j = 1; j <= sig.r() - 1; ++j)
            for (int g = window->first; g <= window->second; ++g)
                a.push_back(Generator::graded_meridian(j, g, sig.meridian_dim(j)));
    } else {
        a.push_back(Generator::core_gen(sig.n));
        for (int j = 1; j <= sig.r() - 1; ++j)
            a.push_back(Generator::meridian(j, sig.meridian_dim(j)));
    }
    return a;
}

namespace {

using Word = std::vector<int>;  // indices into the alphabet

// w strictly smaller than all of its proper suffixes.
bool is_lyndon(const Word& w)
{
    for (std::size_t i = 1; i < w.size(); ++i) {
        if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + static_cast<long>(i),
                                          w.end()))
            return false;
    }
    return true;
}

// Duval's generation of all Lyndon words of length <= max_len over an
// alphabet of k letters, in lexicographic order.
std::vector<Word> lyndon_words(int k, int max_len)
{
    std::vector<Word> out;
    if (k <= 0 || max_len <= 0)
        return out;
    Word w{0};
    while (true) {
        out.push_back(w);
        // periodic extension to max_len
        Word u;
        u.reserve(static_cast<std::size_t>(max_len));
        for (int i = 0; i < max_len; ++i)
            u.push_back(w[static_cast<std::size_t>(i) % w.size()]);
        while (!u.empty() && u.back() == k - 1)
            u.pop_back();
        if (u.empty())
            break;
        ++u.back();
        w = std::move(u);
    }
    return out;
}

// Standard factorization: the right factor is the longest proper suffix that
// is itself a Lyndon word.
BracketTree standard_bracketing(const Word& w, const std::vector<Generator>& alpha)
{
    if (w.size() == 1)
        return BracketTree(alpha[static_cast<std::size_t>(w[0])]);
    for (std::size_t i = 1; i < w.size(); ++i) {
        Word suffix(w.begin() + static_cast<long>(i), w.end());
        if (is_lyndon(suffix)) {
            Word prefix(w.begin(), w.begin() + static_cast<long>(i));
            return BracketTree(standard_bracketing(prefix, alpha),
                               standard_bracketing(suffix, alpha));
        }
    }
    throw ValidationError("standard_bracketing: input is not a Lyndon word");
}

BasicProduct make_product(const Word& w, const std::vector<Generator>& alpha,
                          const WedgeSignature& sig)
{
    BasicProduct p{standard_bracketing(w, alpha), {}, 0,
                   std::vector<int>(static_cast<std::size_t>(sig.r() - 1), 0), 0};
    p.word.reserve(w.size());
    int dim_sum = 0;
    for (int idx : w) {
        const Generator& g = alpha[static_cast<std::size_t>(idx)];
        p.word.push_back(g);
        dim_sum += g.dim;
        if (g.is_core())
            ++p.t;
        else
            ++p.family_counts[static_cast<std::size_t>(g.family) - 1];
    }
    p.sphere_dim = dim_sum - static_cast<int>(w.size()) + 1;
    return p;
}

}  // namespace

std::vector<BasicProduct> enumerate_basic(const WedgeSignature& sig, int max_weight,
                                          const std::optional<GradedWindow>& window)
{
    if (max_weight < 1)
        throw ValidationError("enumerate_basic: max_weight must be >= 1");
    std::vector<Generator> alpha = alphabet(sig, window);
    std::vector<BasicProduct> out;
    std::vector<Word> words = lyndon_words(static_cast<int>(alpha.size()), max_weight);
    // (weight, lex) order
    std::stable_sort(words.begin(), words.end(), [](const Word& a, const Word& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    });
    out.reserve(words.size());
    for (const Word& w : words)
        out.push_back(make_product(w, alpha, sig));
    return out;
}

SummandClass classify_product(const BasicProduct& w, const WedgeSignature& sig, int k)
{
    if (w.sphere_dim > k)
        return SummandClass::outside;
    bool all_once = true;
    bool all_at_least_once = true;
    for (int c : w.family_counts) {
        if (c != 1)
            all_once = false;
        if (c < 1)
            all_at_least_once = false;
    }
    (void)sig;
    if (all_once)
        return SummandClass::doublePrime;
    if (all_at_least_once)
        return SummandClass::reducedOnly;
    return SummandClass::full;
}

SummandReport summand_report(const WedgeSignature& sig, int k,
                             const std::optional<GradedWindow>& window)
{
    if (k < 1)
        throw ValidationError("summand_report: k must be >= 1");
    SummandReport rep{sig, k, window, {}};
    std::vector<Generator> alpha = alphabet(sig, window);
    int min_shift = alpha.front().dim - 1;
    for (const Generator& g : alpha)
        min_shift = std::min(min_shift, g.dim - 1);
    // sphere_dim = sum (dim_i - 1) + 1 >= weight*min_shift + 1, and min_shift
    // >= 1 in every enumerable mode, so the weight below is exhaustive for
    // sphere_dim <= k.
    int max_weight = (k - 1) / std::max(1, min_shift);
    if (max_weight < 1)
        return rep;  // below all connectivities
    for (BasicProduct& w : enumerate_basic(sig, max_weight, window)) {
        if (w.sphere_dim > k)
            continue;
        std::ostringstream group;
        group << "pi_" << k << "(S^" << w.sphere_dim << ")";
        SummandClass cls = classify_product(w, sig, k);
        rep.entries.push_back(SummandEntry{std::move(w), group.str(), cls});
    }
    return rep;
}

RangePredicates range_predicates(const WedgeSignature& sig, long long k, std::optional<int> s)
{
    sig.validate();
    RangePredicates p;
    const long long qsum = sig.q_total();
    const long long r = sig.r();
    if (s) {
        if (*s < 0)
            throw ValidationError("range_predicates: s must be >= 0");
        p.hopf_bijective_at_s = k <= 2 * (qsum - r + 1 + static_cast<long long>(*s) * (sig.n - 1));
    }
    p.hopf_injective_total = k <= 2 * (qsum - r + 1);
    int q_min = *std::min_element(sig.q.begin(), sig.q.end());
    p.reduced_equals_double_prime = k <= qsum + q_min - r;
    return p;
}

long long count_lyndon_multilinear(int r, int s)
{
    if (r < 2 || s < 0)
        throw ValidationError("count_lyndon_multilinear: need r >= 2, s >= 0");
    // Multiset: s copies of letter 0 and one copy of each of 1..r-1.
    Word w;
    for (int i = 0; i < s; ++i)
        w.push_back(0);
    for (int j = 1; j <= r - 1; ++j)
        w.push_back(j);
    std::sort(w.begin(), w.end());
    long long count = 0;
    do {
        if (is_lyndon(w))
            ++count;
    } while (std::next_permutation(w.begin(), w.end()));
    return count;
}

}  // namespace hilton
}  // namespace muinv
