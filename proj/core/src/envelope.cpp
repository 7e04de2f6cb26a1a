#include "muinv/envelope.hpp"

namespace muinv {
namespace lie {

namespace {

using WordMap = std::map<Word, Int>;

void accumulate(WordMap& acc, const Word& w, const Int& c)
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

WordMap concat(const WordMap& a, const WordMap& b, const Int& scale)
{
    WordMap r;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            accumulate(r, w, scale * ca * cb);
        }
    return r;
}

int parity_sign(long long e) { return (e % 2 == 0) ? 1 : -1; }

WordMap expand_tree(const BracketTree& t)
{
    if (t.is_leaf())
        return WordMap{{Word{t.leaf()}, Int(1)}};
    BracketTree a = t.left();
    BracketTree b = t.right();
    WordMap ea = expand_tree(a);
    WordMap eb = expand_tree(b);
    const int pa = a.sphere_dim();
    const int pb = b.sphere_dim();
    Int twist = parity_sign(pa);
    Int comm = -twist * parity_sign(static_cast<long long>(pa - 1) * (pb - 1));
    WordMap r = concat(ea, eb, twist);
    for (auto& [w, c] : concat(eb, ea, comm))
        accumulate(r, w, c);
    return r;
}

}  // namespace

std::map<Word, Int> envelope_expand(const LieElement& x)
{
    if (!lie_is_homogeneous(x))
        throw ValidationError("envelope_expand: input must be homogeneous");
    WordMap acc;
    for (const auto& [t, c] : x)
        for (const auto& [w, v] : expand_tree(t))
            accumulate(acc, w, c * v);
    return acc;
}

std::string word_text(const Word& w)
{
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            s += ".";
        s += w[i].text();
    }
    return s;
}

}  // namespace lie
}  // namespace muinv
