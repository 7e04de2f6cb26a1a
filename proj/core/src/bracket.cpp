#include "muinv/bracket.hpp"

#include <algorithm>
#include <sstream>

namespace muinv {
namespace lie {

struct BracketTree::Node {
    // Leaf: gen engaged, children null.  Pair: children engaged.
    Generator gen;
    std::shared_ptr<const Node> l, r;
    bool leaf = true;
    int dim = 0;
    int nleaves = 0;
    std::map<Generator, int> multi;
};

BracketTree::BracketTree(const Generator& g)
{
    auto n = std::make_shared<Node>();
    n->gen = g;
    n->leaf = true;
    n->dim = g.dim;
    n->nleaves = 1;
    n->multi[g] = 1;
    node_ = std::move(n);
}

BracketTree::BracketTree(const BracketTree& left, const BracketTree& right)
{
    auto n = std::make_shared<Node>();
    n->leaf = false;
    n->l = left.node_;
    n->r = right.node_;
    n->dim = left.sphere_dim() + right.sphere_dim() - 1;
    n->nleaves = left.leaf_count() + right.leaf_count();
    n->multi = left.multidegree();
    for (const auto& [g, c] : right.multidegree())
        n->multi[g] += c;
    node_ = std::move(n);
}

bool BracketTree::is_leaf() const { return node_->leaf; }

const Generator& BracketTree::leaf() const
{
    if (!node_->leaf)
        throw ValidationError("BracketTree: not a leaf");
    return node_->gen;
}

BracketTree BracketTree::left() const
{
    if (node_->leaf)
        throw ValidationError("BracketTree: leaf has no children");
    BracketTree t{Generator::core_gen(1)};
    t.node_ = node_->l;
    return t;
}

BracketTree BracketTree::right() const
{
    if (node_->leaf)
        throw ValidationError("BracketTree: leaf has no children");
    BracketTree t{Generator::core_gen(1)};
    t.node_ = node_->r;
    return t;
}

int BracketTree::sphere_dim() const { return node_->dim; }
int BracketTree::leaf_count() const { return node_->nleaves; }
const std::map<Generator, int>& BracketTree::multidegree() const { return node_->multi; }

int BracketTree::family_count(int family) const
{
    int c = 0;
    for (const auto& [g, k] : node_->multi)
        if (g.family == family)
            c += k;
    return c;
}

std::vector<Generator> BracketTree::leaf_sequence() const
{
    std::vector<Generator> out;
    out.reserve(static_cast<std::size_t>(leaf_count()));
    // Iterative traversal to keep recursion shallow for deep combs.
    std::vector<const Node*> stack{node_.get()};
    while (!stack.empty()) {
        const Node* n = stack.back();
        stack.pop_back();
        if (n->leaf) {
            out.push_back(n->gen);
        } else {
            stack.push_back(n->r.get());
            stack.push_back(n->l.get());
        }
    }
    return out;
}

std::string BracketTree::text() const
{
    if (is_leaf())
        return leaf().text();
    return "[" + left().text() + "," + right().text() + "]";
}

std::strong_ordering BracketTree::cmp_nodes(const Node* a, const Node* b)
{
    if (a == b)
        return std::strong_ordering::equal;
    if (auto c = a->nleaves <=> b->nleaves; c != 0)
        return c;
    if (a->leaf && !b->leaf)
        return std::strong_ordering::less;
    if (!a->leaf && b->leaf)
        return std::strong_ordering::greater;
    if (a->leaf)
        return a->gen <=> b->gen;
    if (auto c = cmp_nodes(a->l.get(), b->l.get()); c != 0)
        return c;
    return cmp_nodes(a->r.get(), b->r.get());
}

std::strong_ordering operator<=>(const BracketTree& a, const BracketTree& b)
{
    return BracketTree::cmp_nodes(a.node_.get(), b.node_.get());
}

bool operator==(const BracketTree& a, const BracketTree& b)
{
    return (a <=> b) == std::strong_ordering::equal;
}

LieElement lie_term(const BracketTree& t, Int coefficient)
{
    LieElement x;
    if (coefficient != 0)
        x.emplace(t, std::move(coefficient));
    return x;
}

LieElement lie_add(const LieElement& a, const LieElement& b)
{
    LieElement r = a;
    for (const auto& [t, c] : b) {
        auto it = r.find(t);
        if (it == r.end()) {
            r.emplace(t, c);
        } else {
            it->second += c;
            if (it->second == 0)
                r.erase(it);
        }
    }
    return r;
}

LieElement lie_scale(const Int& c, const LieElement& a)
{
    LieElement r;
    if (c == 0)
        return r;
    for (const auto& [t, v] : a)
        r.emplace(t, c * v);
    return r;
}

LieElement lie_bracket(const LieElement& a, const LieElement& b)
{
    LieElement r;
    for (const auto& [ta, ca] : a)
        for (const auto& [tb, cb] : b) {
            BracketTree t(ta, tb);
            auto it = r.find(t);
            if (it == r.end()) {
                r.emplace(std::move(t), ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second == 0)
                    r.erase(it);
            }
        }
    return r;
}

bool lie_is_homogeneous(const LieElement& x)
{
    if (x.empty())
        return true;
    const auto& first = x.begin()->first.multidegree();
    for (const auto& [t, c] : x)
        if (t.multidegree() != first)
            return false;
    return true;
}

void Arrangement::validate(int r) const
{
    if (r < 2)
        throw ValidationError("Arrangement: r must be >= 2");
    std::vector<int> seen(static_cast<std::size_t>(r), 0);
    for (int v : values) {
        if (v < 0 || v > r - 2)
            throw ValidationError("Arrangement: values must lie in {0} u {1..r-2}");
        ++seen[static_cast<std::size_t>(v)];
    }
    for (int j = 1; j <= r - 2; ++j)
        if (seen[static_cast<std::size_t>(j)] != 1)
            throw ValidationError("Arrangement: each value 1..r-2 must occur exactly once");
}

int Arrangement::t() const
{
    return static_cast<int>(std::count(values.begin(), values.end(), 0));
}

std::string Arrangement::text() const
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

int NormalForm::t() const
{
    if (coef.empty())
        throw ValidationError("NormalForm: zero element has no defined t");
    return coef.begin()->first.t();
}

BracketTree NormalForm::comb(const Arrangement& delta) const
{
    if (leaves.empty())
        return comb_from_arrangement(delta, sig);
    const int r = sig.r();
    delta.validate(r);
    BracketTree tree{leaves.at(r - 1)};
    for (auto it = delta.values.rbegin(); it != delta.values.rend(); ++it)
        tree = BracketTree(BracketTree(leaves.at(*it)), tree);
    return tree;
}

LieElement NormalForm::to_lie() const
{
    LieElement x;
    for (const auto& [delta, c] : coef)
        x.emplace(comb(delta), c);
    return x;
}

BracketTree comb_from_arrangement(const Arrangement& delta, const WedgeSignature& sig)
{
    const int r = sig.r();
    delta.validate(r);
    BracketTree comb{Generator::meridian(r - 1, sig.meridian_dim(r - 1))};
    for (auto it = delta.values.rbegin(); it != delta.values.rend(); ++it) {
        Generator g = (*it == 0) ? Generator::core_gen(sig.n)
                                 : Generator::meridian(*it, sig.meridian_dim(*it));
        comb = BracketTree(BracketTree(g), comb);
    }
    return comb;
}

}  // namespace lie
}  // namespace muinv
