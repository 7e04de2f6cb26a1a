#include "muinv/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "muinv/envelope.hpp"
#include "muinv/expr.hpp"
#include "muinv/hilton.hpp"
#include "muinv/hopf.hpp"
#include "muinv/links.hpp"
#include "muinv/normalize.hpp"
#include "muinv/transform.hpp"

namespace muinv {
namespace suites {

namespace {

using lie::BracketTree;
using lie::Generator;
using lie::LieElement;

struct Check {
    bool ok = true;
    std::vector<std::string> notes;

    void expect(bool cond, const std::string& what)
    {
        if (!cond) {
            ok = false;
            if (notes.size() < 20)
                notes.push_back("FAIL: " + what);
        }
    }
    void note(const std::string& s) { notes.push_back(s); }
};

// ---- oracle helpers -------------------------------------------------------

// Definition-level filter over the full permutation group.
long long brute_force_monotone_count(int r, int s)
{
    const int n = r + s - 2;
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        perm[static_cast<std::size_t>(i)] = i + 1;
    long long count = 0;
    do {
        if (hopf::is_monotone(perm, s))
            ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

GroupElement random_element(const AbelianGroup& g, std::mt19937_64& rng)
{
    GroupElement e = zero_element(g);
    std::uniform_int_distribution<int> free_dist(-9, 9);
    for (auto& v : e.free_part)
        v = free_dist(rng);
    for (std::size_t i = 0; i < e.torsion_part.size(); ++i) {
        std::uniform_int_distribution<long long> dist(0, g.torsion[i] - 1);
        e.torsion_part[i] = dist(rng);
    }
    return e;
}

std::vector<AbelianGroup> coefficient_groups()
{
    return {AbelianGroup::make(1, {}),        // Z
            AbelianGroup::make(3, {}),        // Z^3
            AbelianGroup::make(0, {2, 24})};  // Z_2 + Z_24
}

// all binary trees over the exact label sequence seq[lo..hi]
void trees_over(const std::vector<Generator>& seq, std::size_t lo, std::size_t hi,
                std::vector<BracketTree>& out)
{
    if (lo == hi) {
        out.push_back(BracketTree(seq[lo]));
        return;
    }
    for (std::size_t mid = lo + 1; mid <= hi; ++mid) {
        std::vector<BracketTree> lefts, rights;
        trees_over(seq, lo, mid - 1, lefts);
        trees_over(seq, mid, hi, rights);
        for (const auto& l : lefts)
            for (const auto& r : rights)
                out.push_back(BracketTree(l, r));
    }
}

std::vector<Generator> label_multiset(const WedgeSignature& sig, int t)
{
    std::vector<Generator> labels;
    for (int i = 0; i < t; ++i)
        labels.push_back(Generator::core_gen(sig.n));
    for (int j = 1; j <= sig.r() - 1; ++j)
        labels.push_back(Generator::meridian(j, sig.meridian_dim(j)));
    std::sort(labels.begin(), labels.end());
    return labels;
}

BracketTree random_tree(const std::vector<Generator>& seq, std::size_t lo, std::size_t hi,
                        std::mt19937_64& rng)
{
    if (lo == hi)
        return BracketTree(seq[lo]);
    std::uniform_int_distribution<std::size_t> dist(lo + 1, hi);
    std::size_t mid = dist(rng);
    return BracketTree(random_tree(seq, lo, mid - 1, rng), random_tree(seq, mid, hi, rng));
}

bool oracle_equal(const LieElement& x, const WedgeSignature& sig)
{
    lie::NormalForm nf = lie::normalize(x, sig);
    return lie::envelope_expand(nf.to_lie()) == lie::envelope_expand(x);
}

transform::SupportedSequence random_sequence(int arity, const transform::Box& window,
                                             const AbelianGroup& g, std::mt19937_64& rng)
{
    transform::SupportedSequence seq;
    seq.arity = arity;
    seq.group = g;
    seq.window = window;
    std::function<void(std::vector<long long>&, std::size_t)> walk =
        [&](std::vector<long long>& cur, std::size_t axis) {
            if (axis == window.axes.size()) {
                if (std::uniform_int_distribution<int>(0, 2)(rng) != 0)
                    seq.insert(cur, random_element(g, rng));
                return;
            }
            for (long long v = window.axes[axis].first; v <= window.axes[axis].second; ++v) {
                cur.push_back(v);
                walk(cur, axis + 1);
                cur.pop_back();
            }
        };
    std::vector<long long> cur;
    walk(cur, 0);
    return seq;
}

bool sequences_equal(const transform::SupportedSequence& a,
                     const transform::SupportedSequence& b)
{
    return a.entries == b.entries;
}

// ---- suites ---------------------------------------------------------------

Check monotone_count()
{
    Check c;
    for (int r = 2; r <= 6; ++r)
        for (int s = 0; s <= 6; ++s) {
            Int expected = factorial(r + s - 2) / factorial(s);
            long long brute = brute_force_monotone_count(r, s);
            auto enumerated = hopf::enumerate_monotone(r, s);
            std::ostringstream at;
            at << "(r=" << r << ",s=" << s << ")";
            c.expect(Int(brute) == expected, "brute-force count vs formula " + at.str());
            c.expect(Int(enumerated.size()) == expected, "enumeration count " + at.str());
            // the enumerated set must be exactly the filtered set
            if (r + s - 2 <= 8) {
                std::vector<std::vector<int>> filtered;
                std::vector<int> perm(static_cast<std::size_t>(r + s - 2));
                for (int i = 0; i < r + s - 2; ++i)
                    perm[static_cast<std::size_t>(i)] = i + 1;
                do {
                    if (hopf::is_monotone(perm, s))
                        filtered.push_back(perm);
                } while (std::next_permutation(perm.begin(), perm.end()));
                std::vector<std::vector<int>> got;
                for (const auto& g : enumerated)
                    got.push_back(g.values);
                c.expect(filtered == got, "enumerated set equals filtered set " + at.str());
            }
        }
    c.note("counts match (r+s-2)!/s! for r <= 6, s <= 6");
    return c;
}

Check monotone_bijection()
{
    Check c;
    for (int r = 2; r <= 6; ++r)
        for (int s = 0; s <= 6; ++s)
            for (const auto& g : hopf::enumerate_monotone(r, s)) {
                auto d = hopf::decompose_monotone(r, s, g.values);
                c.expect(d.has_value(), "decompose accepts enumerated permutation");
                if (!d)
                    continue;
                c.expect(d->s_decomp == g.s_decomp && d->gamma_bar == g.gamma_bar,
                         "decompose returns the generating pair");
                auto back = hopf::compose_monotone(r, d->s_decomp, d->gamma_bar);
                c.expect(back.values == g.values, "compose inverts decompose");
            }
    c.note("compose/decompose are mutually inverse on Sigma_{r,s}, r <= 6, s <= 6");
    return c;
}

Check contraction_bijection()
{
    Check c;
    for (int r = 2; r <= 6; ++r)
        for (int s = 0; s <= 5; ++s) {
            std::vector<std::vector<int>> images;
            for (const auto& g : hopf::enumerate_monotone(r, s)) {
                auto delta = hopf::contraction(g, s);
                c.expect(delta.has_value(), "contraction defined at t = s");
                if (delta)
                    images.push_back(delta->values);
                c.expect(!hopf::contraction(g, s + 1).has_value(),
                         "contraction absent at t != s");
            }
            std::sort(images.begin(), images.end());
            c.expect(std::adjacent_find(images.begin(), images.end()) == images.end(),
                     "contraction is injective");
            c.expect(images.size() == hopf::arrangements_with_t(r, s).size(),
                     "contraction surjects onto arrangements with t = s");
        }
    c.note("gamma -> contraction(gamma, s) bijects onto arrangements, r <= 6, s <= 5");
    return c;
}

Check hilton_count()
{
    Check c;
    for (int r = 2; r <= 5; ++r)
        for (int s = 0; s <= 4; ++s) {
            WedgeSignature sig(2, std::vector<int>(static_cast<std::size_t>(r - 1), 2));
            Int expected = factorial(r + s - 2) / factorial(s);
            long long main_count = 0;
            for (const auto& w : hilton::enumerate_basic(sig, s + r - 1)) {
                if (w.t != s)
                    continue;
                if (std::all_of(w.family_counts.begin(), w.family_counts.end(),
                                [](int k) { return k == 1; }))
                    ++main_count;
            }
            long long oracle = hilton::count_lyndon_multilinear(r, s);
            std::ostringstream at;
            at << "(r=" << r << ",s=" << s << ")";
            c.expect(Int(main_count) == expected, "Duval multidegree count " + at.str());
            c.expect(Int(oracle) == expected, "independent Lyndon count " + at.str());
        }
    c.note("multidegree (s;1,...,1) counts match (r+s-2)!/s! for r <= 5, s <= 4");
    return c;
}

// number of Lyndon words of length exactly len over k letters:
// (1/len) sum_{d | len} mobius(d) k^{len/d}
long long witt_count(int k, int len)
{
    auto mobius = [](int n) {
        int result = 1;
        for (int p = 2; p * p <= n; ++p) {
            if (n % p)
                continue;
            n /= p;
            if (n % p == 0)
                return 0;
            result = -result;
        }
        if (n > 1)
            result = -result;
        return result;
    };
    long long total = 0;
    for (int d = 1; d <= len; ++d) {
        if (len % d)
            continue;
        long long power = 1;
        for (int i = 0; i < len / d; ++i)
            power *= k;
        total += mobius(d) * power;
    }
    return total / len;
}

Check hilton_closure()
{
    Check c;
    std::vector<WedgeSignature> sigs = {WedgeSignature(2, {2, 3}), WedgeSignature(3, {3, 3, 4}),
                                        WedgeSignature(2, {5, 5})};
    // Duval output sizes against the necklace-counting formula
    for (const auto& sig : sigs) {
        auto products = hilton::enumerate_basic(sig, 6);
        std::map<std::size_t, long long> by_weight;
        for (const auto& p : products)
            by_weight[p.word.size()] += 1;
        for (int len = 1; len <= 6; ++len)
            c.expect(by_weight[static_cast<std::size_t>(len)] == witt_count(sig.r(), len),
                     "Lyndon count at weight " + std::to_string(len) +
                         " matches the necklace formula");
    }
    for (const auto& sig : sigs) {
        auto products = hilton::enumerate_basic(sig, 6);
        std::vector<std::vector<Generator>> words;
        for (const auto& p : products)
            words.push_back(p.word);
        auto sorted = words;
        std::sort(sorted.begin(), sorted.end());
        c.expect(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
                 "no duplicate basic products");
        std::set<std::string> texts;
        for (const auto& p : products)
            texts.insert(p.tree.text());
        for (const auto& p : products) {
            if (p.tree.is_leaf())
                continue;
            // Hall closure: both standard factors appear in the enumeration
            c.expect(texts.count(p.tree.left().text()) == 1,
                     "left factor of " + p.tree.text() + " is basic");
            c.expect(texts.count(p.tree.right().text()) == 1,
                     "right factor of " + p.tree.text() + " is basic");
        }
        // dimension law
        for (const auto& p : products) {
            int expect_dim = p.t * sig.n;
            int weight = p.t;
            for (int j = 1; j <= sig.r() - 1; ++j) {
                expect_dim += p.family_counts[static_cast<std::size_t>(j) - 1] *
                              sig.meridian_dim(j);
                weight += p.family_counts[static_cast<std::size_t>(j) - 1];
            }
            expect_dim -= weight - 1;
            c.expect(p.sphere_dim == expect_dim, "sphere dimension law for " + p.tree.text());
        }
    }
    // in the low range, reduced and double-prime coincide: no reducedOnly
    // entry may survive below the bound
    for (const auto& sig : sigs) {
        long long bound = sig.q_total() + *std::min_element(sig.q.begin(), sig.q.end()) -
                          sig.r();
        for (int k = 1; k <= bound; ++k) {
            auto rep = hilton::summand_report(sig, k);
            for (const auto& e : rep.entries)
                c.expect(e.cls != hilton::SummandClass::reducedOnly,
                         "reducedOnly entry below the range bound");
        }
    }
    // covering-space mode: one product per level pair
    {
        auto rep = hilton::summand_report(WedgeSignature(1, {2, 2}), 3,
                                          hilton::GradedWindow{-1, 1});
        long long dp = 0;
        for (const auto& e : rep.entries)
            if (e.cls == hilton::SummandClass::doublePrime)
                ++dp;
        c.expect(dp == 9, "graded mode: (r-2)! products per level pair over a 3-window");
    }
    c.note("necklace-formula counts, Hall closure, dimension law, range lemma, graded counts");
    return c;
}

Check normalizer_oracle()
{
    Check c;
    std::vector<WedgeSignature> sigs = {WedgeSignature(2, {3}),       WedgeSignature(3, {2}),
                                        WedgeSignature(2, {2, 3}),    WedgeSignature(3, {3, 3}),
                                        WedgeSignature(2, {2, 3, 4}), WedgeSignature(3, {2, 2, 2})};
    long long tested = 0;
    for (const auto& sig : sigs) {
        const int r = sig.r();
        for (int t = 0; t + r - 1 <= 6; ++t) {
            std::vector<Generator> labels = label_multiset(sig, t);
            do {
                std::vector<BracketTree> trees;
                trees_over(labels, 0, labels.size() - 1, trees);
                for (const auto& tr : trees) {
                    ++tested;
                    c.expect(oracle_equal(lie::lie_term(tr), sig),
                             "envelope oracle on " + tr.text());
                    if (!c.ok)
                        return c;
                }
            } while (std::next_permutation(labels.begin(), labels.end()));
        }
    }
    // randomized larger inputs, fixed seed
    std::mt19937_64 rng(0x6d75696e76ULL);
    for (int trial = 0; trial < 500; ++trial) {
        const WedgeSignature& sig = sigs[trial % sigs.size()];
        const int r = sig.r();
        std::uniform_int_distribution<int> extra(7 - (r - 1), 9 - (r - 1));
        int t = std::max(0, extra(rng));
        std::vector<Generator> labels = label_multiset(sig, t);
        std::shuffle(labels.begin(), labels.end(), rng);
        LieElement x = lie::lie_term(random_tree(labels, 0, labels.size() - 1, rng),
                                     std::uniform_int_distribution<int>(1, 5)(rng));
        std::shuffle(labels.begin(), labels.end(), rng);
        x = lie::lie_add(x, lie::lie_term(random_tree(labels, 0, labels.size() - 1, rng),
                                          std::uniform_int_distribution<int>(-5, -1)(rng)));
        c.expect(oracle_equal(x, sig), "envelope oracle on randomized input");
        if (!c.ok)
            return c;
        ++tested;
    }
    c.note("envelope_expand(normalize(x)) = envelope_expand(x) on " + std::to_string(tested) +
           " inputs");
    return c;
}

Check normalizer_identities()
{
    Check c;
    WedgeSignature sig(2, {2, 3, 4});
    // idempotence on every arrangement comb
    for (int t = 0; t <= 2; ++t)
        for (const auto& delta : hopf::arrangements_with_t(sig.r(), t)) {
            lie::NormalForm nf = lie::normalize(
                lie::lie_term(lie::comb_from_arrangement(delta, sig)), sig);
            c.expect(nf.coef.size() == 1 && nf.coef.count(delta) == 1 &&
                         nf.coef.at(delta) == 1,
                     "combs are fixed points: " + delta.text());
            lie::NormalForm again = lie::normalize(nf.to_lie(), sig);
            c.expect(again.coef == nf.coef, "normalize is idempotent at " + delta.text());
        }
    // the antisymmetry relation normalizes to zero
    std::vector<WedgeSignature> sigs = {WedgeSignature(2, {2, 3}), WedgeSignature(3, {3, 2}),
                                        WedgeSignature(2, {5, 5})};
    for (const auto& s2 : sigs) {
        BracketTree a(Generator::meridian(1, s2.meridian_dim(1)));
        BracketTree bw(Generator::core_gen(s2.n));
        BracketTree w(Generator::meridian(2, s2.meridian_dim(2)));
        BracketTree left(BracketTree(a, bw), w);
        BracketTree ab(a, bw);
        long long pq = static_cast<long long>(ab.sphere_dim()) * w.sphere_dim();
        int sign = (pq % 2 == 0) ? 1 : -1;
        LieElement rel = lie::lie_add(
            lie::lie_term(left), lie::lie_scale(-sign, lie::lie_term(BracketTree(w, ab))));
        c.expect(lie::normalize(rel, s2).is_zero(),
                 "[x,y] - (-1)^{dim x dim y}[y,x] normalizes to zero");
        c.expect(lie::envelope_expand(rel).empty(), "antisymmetry relation dies in the envelope");
    }
    // multidegree preservation
    {
        BracketTree i0(Generator::core_gen(sig.n));
        BracketTree i1(Generator::meridian(1, sig.meridian_dim(1)));
        BracketTree i2(Generator::meridian(2, sig.meridian_dim(2)));
        BracketTree i3(Generator::meridian(3, sig.meridian_dim(3)));
        BracketTree x(BracketTree(BracketTree(i1, i0), i2), i3);
        lie::NormalForm nf = lie::normalize(lie::lie_term(x), sig);
        c.expect(!nf.is_zero() && nf.t() == 1, "t preserved");
        for (const auto& [delta, coef] : nf.coef)
            c.expect(static_cast<int>(delta.values.size()) == sig.r() + 1 - 2,
                     "arrangement length r+t-2");
    }
    c.note("idempotence, antisymmetry relation, multidegree preservation");
    return c;
}

Check unimodularity()
{
    Check c;
    std::vector<WedgeSignature> sigs = {WedgeSignature(2, {3}),       WedgeSignature(2, {2, 3}),
                                        WedgeSignature(3, {5, 5}),    WedgeSignature(2, {2, 3, 4}),
                                        WedgeSignature(3, {3, 3, 3})};
    for (const auto& sig : sigs)
        for (int s = 0; s <= 3; ++s) {
            hopf::BasisMatrix bm = hopf::basis_matrix_D(sig, s);
            std::ostringstream at;
            at << "(r=" << sig.r() << ",s=" << s << ")";
            c.expect(bm.unimodular, "det D_s = +-1 at " + at.str() + ", got " + bm.det.str());
            c.expect(Int(static_cast<long long>(bm.row_products.size())) ==
                         links::u_count(sig.r(), s),
                     "D_s dimension u_{r,s} at " + at.str());
        }
    for (int n = 0; n <= 12; ++n)
        for (long long n0 = -12; n0 <= 12; ++n0)
            c.expect(transform::det_M(n, n0) == 1,
                     "det M(" + std::to_string(n) + "," + std::to_string(n0) + ") = 1");
    c.note("det D_s = +-1 (r <= 4, s <= 3); det M(n,n0) = 1 (n <= 12, |n0| <= 12)");
    return c;
}

Check binomial_pascal()
{
    Check c;
    transform::PascalTable table = transform::pascal_oracle(8, -12, 12);
    for (int s = 0; s <= 8; ++s)
        for (long long g = -12; g <= 12; ++g)
            c.expect(transform::b_coeff(s, g) == table.at(s, g),
                     "b(" + std::to_string(s) + "," + std::to_string(g) + ") vs recursion table");
    for (long long g = -12; g <= 12; ++g) {
        c.expect(transform::b_coeff(0, g) == 1, "b(0,g) = 1");
        c.expect(transform::b_coeff(1, g) == g, "b(1,g) = g");
    }
    // product-form recursion through graded_coefficient, factor by factor
    std::mt19937_64 rng(0x42ULL);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<int> rdist(1, 3);
        int parts = rdist(rng);
        std::vector<long long> gbar(static_cast<std::size_t>(parts));
        std::vector<int> sdec(static_cast<std::size_t>(parts));
        for (auto& v : gbar)
            v = std::uniform_int_distribution<long long>(-6, 6)(rng);
        for (auto& v : sdec)
            v = std::uniform_int_distribution<int>(0, 4)(rng);
        Int via_table = 1;
        long long prev = 0;
        for (int j = 0; j < parts; ++j) {
            via_table *= table.at(sdec[static_cast<std::size_t>(j)],
                                  gbar[static_cast<std::size_t>(j)] - prev);
            prev = gbar[static_cast<std::size_t>(j)];
        }
        c.expect(hopf::graded_coefficient(gbar, sdec) == via_table,
                 "graded_coefficient equals the per-factor recursion table");
    }
    c.note("closed form = recursion table on s <= 8, |g| <= 12; b(0,.)=1, b(1,g)=g");
    return c;
}

Check transform_roundtrip()
{
    Check c;
    std::mt19937_64 rng(0x7472616eULL);
    auto groups = coefficient_groups();
    long long trials = 0;
    // arity 1: 400 round trips with surplus consistency values
    for (int trial = 0; trial < 400; ++trial) {
        const AbelianGroup& g = groups[static_cast<std::size_t>(trial) % groups.size()];
        long long lo = std::uniform_int_distribution<long long>(-4, 0)(rng);
        long long hi = lo + std::uniform_int_distribution<long long>(0, 4)(rng);
        transform::Box box{{{lo, hi}}};
        auto a = random_sequence(1, box, g, rng);
        int extra = std::uniform_int_distribution<int>(0, 3)(rng);
        auto d = transform::forward_d(a, static_cast<int>(hi - lo) + extra);
        auto back = transform::invert_d(d, {lo, hi}, g);
        c.expect(sequences_equal(a, back), "invert_d(forward_d(a)) = a");
        ++trials;
    }
    // arity 2 and 3: 600 multi-index round trips
    for (int trial = 0; trial < 600; ++trial) {
        const AbelianGroup& g = groups[static_cast<std::size_t>(trial) % groups.size()];
        int arity = (trial % 2 == 0) ? 2 : 3;
        transform::Box box;
        int total_span = 0;
        for (int axis = 0; axis < arity; ++axis) {
            long long lo = std::uniform_int_distribution<long long>(-2, 1)(rng);
            long long hi =
                lo + std::uniform_int_distribution<long long>(0, arity == 2 ? 3 : 2)(rng);
            box.axes.emplace_back(lo, hi);
            total_span += static_cast<int>(hi - lo);
        }
        auto a = random_sequence(arity, box, g, rng);
        auto values = transform::forward_Dprime(a, total_span);
        auto back = transform::invert_Dprime(values, box, g);
        c.expect(sequences_equal(a, back), "invert_Dprime(forward_Dprime(a)) = a");
        ++trials;
    }
    // injectivity witness: the zero map reconstructs to the zero sequence
    for (const auto& g : groups) {
        transform::Box box{{{-2, 2}}};
        transform::SupportedSequence zero_seq;
        zero_seq.arity = 1;
        zero_seq.group = g;
        zero_seq.window = box;
        auto d = transform::forward_d(zero_seq, 6);
        auto back = transform::invert_d(d, {-2, 2}, g);
        c.expect(back.entries.empty(), "zero transform values give the zero sequence");
    }
    // a wrong declared window must be flagged, not silently accepted
    {
        const AbelianGroup z = groups[0];
        transform::SupportedSequence a;
        a.arity = 1;
        a.group = z;
        a.insert({2}, GroupElement{{Int(1)}, {}});
        auto d = transform::forward_d(a, 4);
        bool threw = false;
        try {
            transform::invert_d(d, {0, 1}, z);
        } catch (const WindowInconsistency&) {
            threw = true;
        }
        c.expect(threw, "surplus values expose a wrong window");
    }
    c.note(std::to_string(trials) + " randomized round trips over Z, Z^3, Z_2+Z_24");
    return c;
}

Check reconstruction_roundtrip()
{
    Check c;
    std::mt19937_64 rng(0x726563ULL);
    struct Config {
        WedgeSignature sig;
        transform::Box window;
    };
    std::vector<Config> configs = {
        {WedgeSignature(1, {2}), transform::Box{{{-2, 2}}}},
        {WedgeSignature(1, {2, 2}), transform::Box{{{-1, 1}, {-1, 1}}}},
        {WedgeSignature(1, {3, 2}), transform::Box{{{0, 2}, {-1, 1}}}},
        {WedgeSignature(1, {2, 2, 2}), transform::Box{{{0, 1}, {-1, 0}, {0, 1}}}},
    };
    auto groups = coefficient_groups();
    for (const auto& cfg : configs) {
        const int r = cfg.sig.r();
        for (int rep = 0; rep < 6; ++rep) {
            const AbelianGroup& g = groups[static_cast<std::size_t>(rep) % groups.size()];
            hopf::GradedHopfDataset data;
            data.r = r;
            data.group = g;
            std::vector<int> gbar(static_cast<std::size_t>(r - 2));
            for (std::size_t i = 0; i < gbar.size(); ++i)
                gbar[i] = static_cast<int>(i) + 1;
            do {
                std::function<void(std::vector<long long>&, std::size_t)> walk =
                    [&](std::vector<long long>& cur, std::size_t axis) {
                        if (axis == cfg.window.axes.size()) {
                            if (std::uniform_int_distribution<int>(0, 1)(rng) == 0)
                                data.insert(cur, gbar, random_element(g, rng));
                            return;
                        }
                        for (long long v = cfg.window.axes[axis].first;
                             v <= cfg.window.axes[axis].second; ++v) {
                            cur.push_back(v);
                            walk(cur, axis + 1);
                            cur.pop_back();
                        }
                    };
                std::vector<long long> cur;
                walk(cur, 0);
            } while (std::next_permutation(gbar.begin(), gbar.end()));

            // evaluate on the full required grid, grouped by total s
            auto grid = links::required_s_grid(cfg.window, r);
            std::map<int, bool> totals;
            for (const auto& [s_vec, gb] : grid) {
                int total = 0;
                for (int s : s_vec)
                    total += s;
                totals[total] = true;
            }
            std::map<std::pair<std::vector<int>, std::vector<int>>, GroupElement> values;
            for (const auto& [total, used] : totals) {
                (void)used;
                for (auto& [gamma, value] : hopf::evaluate_H_graded(data, total))
                    values[{gamma.s_decomp, gamma.gamma_bar}] = value;
            }
            auto result = links::reconstruct_kappa(values, cfg.window, cfg.sig, g);
            c.expect(result.h_family.entries == data.entries,
                     "reconstruct_kappa inverts evaluate_H_graded (r=" + std::to_string(r) + ")");

            // hilton coordinates round back through the transposed basis matrix
            hopf::BasisMatrix d0 = hopf::basis_matrix_D(cfg.sig, 0);
            IntegerMatrix dt = d0.matrix.transposed();
            for (const auto& [key, v] : data.entries) {
                (void)v;
                std::vector<GroupElement> coords(d0.row_products.size(), zero_element(g));
                bool any = false;
                for (std::size_t row = 0; row < coords.size(); ++row) {
                    auto it = result.hilton_coords.find({key.first, row});
                    if (it != result.hilton_coords.end()) {
                        coords[row] = it->second;
                        any = true;
                    }
                }
                if (!any)
                    continue;
                std::vector<GroupElement> h_vec = dt.apply(coords, g);
                for (std::size_t col = 0; col < h_vec.size(); ++col) {
                    std::vector<int> gb(d0.col_arrangements[col].values.begin(),
                                        d0.col_arrangements[col].values.end());
                    auto it = data.entries.find({key.first, gb});
                    GroupElement expect =
                        (it == data.entries.end()) ? zero_element(g) : it->second;
                    c.expect(h_vec[col] == expect, "basis coordinates reproduce the h-family");
                }
            }
        }
    }
    // consistency square: (matrix route) = (normalize route) for classes given
    // in the basic-product basis
    {
        std::mt19937_64 rng2(0x5153ULL);
        for (const auto& sig : {WedgeSignature(2, {2, 3}), WedgeSignature(3, {3, 3}),
                                WedgeSignature(2, {2, 3, 4})})
            for (int s = 0; s <= 2; ++s) {
                hopf::BasisMatrix bm = hopf::basis_matrix_D(sig, s);
                std::vector<Int> a;
                for (std::size_t i = 0; i < bm.row_products.size(); ++i)
                    a.push_back(std::uniform_int_distribution<int>(-4, 4)(rng2));
                // route 1: comb coefficients through the matrix
                std::vector<Int> comb_coef = bm.matrix.transposed().apply(a);
                // route 2: normalize the linear combination
                LieElement x;
                for (std::size_t i = 0; i < a.size(); ++i)
                    x = lie::lie_add(x, lie::lie_term(bm.row_products[i].tree, a[i]));
                if (x.empty())
                    continue;
                lie::NormalForm nf = lie::normalize(x, sig);
                for (std::size_t colidx = 0; colidx < bm.col_arrangements.size(); ++colidx) {
                    auto it = nf.coef.find(bm.col_arrangements[colidx]);
                    Int got = (it == nf.coef.end()) ? Int(0) : it->second;
                    c.expect(got == comb_coef[colidx],
                             "matrix route equals normalize route entrywise");
                }
                // and through the Hopf evaluation itself
                for (const auto& [gamma, value] : hopf::evaluate_H(nf, s)) {
                    auto delta = hopf::contraction(gamma, s);
                    auto pos = std::find(bm.col_arrangements.begin(), bm.col_arrangements.end(),
                                         *delta);
                    c.expect(pos != bm.col_arrangements.end() &&
                                 comb_coef[static_cast<std::size_t>(
                                     pos - bm.col_arrangements.begin())] == value.coefficient,
                             "evaluate_H agrees with the matrix route");
                }
            }
    }
    c.note("evaluate/reconstruct round trips (r <= 4) and the basis consistency square");
    return c;
}

Check stem_consistency()
{
    Check c;
    long long checked = 0;
    for (int r = 2; r <= 4; ++r) {
        std::vector<int> p(static_cast<std::size_t>(r), 1);
        while (true) {
            for (int m = 3; m <= 9; ++m)
                for (int n = 1; n < m; ++n) {
                    links::LinkProblem prob(p, m, n);
                    for (int s = 0; s <= 4; ++s) {
                        auto chk = links::augmentation_stem_check(prob, s);
                        c.expect(chk.stems_equal, "stem identity");
                        c.expect(chk.multiplicity_identity, "u_{r,s} s! = (r+s-2)!");
                        ++checked;
                        if (!c.ok)
                            return c;
                    }
                }
            // next p tuple with entries in 1..6
            std::size_t axis = 0;
            while (axis < p.size()) {
                if (++p[axis] <= 6)
                    break;
                p[axis] = 1;
                ++axis;
            }
            if (axis == p.size())
                break;
        }
    }
    c.note(std::to_string(checked) + " grid points, exact equality everywhere");
    return c;
}

Check paper_numbers()
{
    Check c;
    auto table = links::StableStemTable::standard_default();
    // pairs of 3-spheres in dimension 6
    for (int n = 2; n <= 5; ++n) {
        links::LinkProblem pair({3, 3}, 6, n);
        auto t0 = links::mu_target(pair, 0, table);
        c.expect(t0.stem_degree == 1 && t0.group == AbelianGroup::cyclic(2),
                 "pair order-0 target Z_2 at n=" + std::to_string(n));
        auto t1 = links::mu_target(pair, 1, table);
        c.expect(t1.stem_degree == 2 - n, "pair order-1 stem 2-n");
        if (n == 2)
            c.expect(t1.group == AbelianGroup::cyclic(0), "pair order-1 target Z at n=2");
        else
            c.expect(t1.group.is_zero(), "pair order-1 target 0 at n>2");
    }
    // triples of 3-spheres in dimension 6
    for (int n = 2; n <= 4; ++n) {
        links::LinkProblem triple({3, 3, 3}, 6, n);
        auto t0 = links::mu_target(triple, 0, table);
        c.expect(t0.stem_degree == 0 && t0.group == AbelianGroup::cyclic(0),
                 "triple order-0 target Z");
        for (int s = 1; s <= 3; ++s)
            c.expect(links::mu_target(triple, s, table).group.is_zero(),
                     "triple higher targets vanish for n >= 2");
    }
    // linking-coefficient wedge for the pair case
    {
        auto rep = links::linking_pipeline(links::LinkProblem({3, 3}, 6, 2), table, 2);
        c.expect(rep.wedge == WedgeSignature(2, {2}), "wedge (2;2)");
        c.expect(rep.rows.at(0).k_s == 2, "k_0 = 2");
        c.expect(rep.rows.at(0).lambda_group == "pi_3(S^2)", "lambda component in pi_3(S^2)");
        c.expect(!rep.rows.at(0).stable_at_s, "not yet stable at s=0");
        c.expect(rep.rows.at(1).stable_at_s, "stable at s=1");
    }
    // n = 1 pairs: stem p_1 + p_2 - m + 1 at every order
    for (auto [p1, p2, m] : {std::tuple<int, int, int>{3, 3, 6}, {2, 4, 7}, {5, 3, 8}}) {
        links::LinkProblem pair({p1, p2}, m, 1);
        for (int s = 0; s <= 3; ++s)
            c.expect(links::mu_stem_degree(pair, s) == p1 + p2 - m + 1,
                     "n=1 stem p_1+p_2-m+1 independent of s");
    }
    c.note("pair/triple groups, k_0 = 2, and the n = 1 stem all match the published values");
    return c;
}

Check classification_assembly()
{
    Check c;
    auto table = links::StableStemTable::standard_default();
    {
        auto rep = links::classify_brunnian(links::LinkProblem({3, 3, 3}, 6, 2), table, 4);
        for (const auto& [name, ok] : rep.assumptions)
            c.expect(ok, "assumption " + name + " holds for (3,3,3|6,2)");
        c.expect(rep.assembled == AbelianGroup::cyclic(0), "assembled group is Z");
        c.expect(rep.caveats.empty(), "no caveats for the clean instance");
    }
    {
        // deliberately failing instance: the caveat flags are set, the
        // container is still assembled
        auto rep = links::classify_brunnian(links::LinkProblem({3, 3}, 6, 2), table, 4);
        bool some_failed = false;
        for (const auto& [name, ok] : rep.assumptions)
            if (!ok)
                some_failed = true;
        c.expect(some_failed, "failing instance flags an assumption");
        c.expect(!rep.caveats.empty(), "caveats set");
        c.expect(rep.assembled ==
                     AbelianGroup::cyclic(2).direct_sum(AbelianGroup::cyclic(0)),
                 "container still assembled (Z_2 + Z)");
    }
    {
        auto rep = links::classify_brunnian(links::LinkProblem({3, 3}, 6, 3), table, 4);
        c.expect(rep.assembled == AbelianGroup::cyclic(2), "(3,3|6,3) assembles to Z_2");
    }
    // canonicalization under the translation action
    {
        std::mt19937_64 rng(0x636132ULL);
        AbelianGroup z = AbelianGroup::make(1, {});
        for (int trial = 0; trial < 60; ++trial) {
            hopf::GradedHopfDataset data;
            data.r = 3;
            data.group = z;
            for (long long g1 = 0; g1 <= 2; ++g1)
                for (long long g2 = 0; g2 <= 2; ++g2)
                    if (std::uniform_int_distribution<int>(0, 1)(rng) == 0)
                        data.insert({g1, g2}, {1}, random_element(z, rng));
            if (data.entries.empty())
                continue;
            auto canon = links::canonicalize_translation(data);
            // translate and re-canonicalize
            hopf::GradedHopfDataset moved;
            moved.r = 3;
            moved.group = z;
            long long d1 = std::uniform_int_distribution<long long>(-5, 5)(rng);
            long long d2 = std::uniform_int_distribution<long long>(-5, 5)(rng);
            for (const auto& [key, v] : data.entries)
                moved.insert({key.first[0] + d1, key.first[1] + d2}, key.second, v);
            auto canon2 = links::canonicalize_translation(moved);
            c.expect(canon.entries == canon2.entries, "canonical form is orbit invariant");
        }
        // single support point lands at the origin
        hopf::GradedHopfDataset one;
        one.r = 3;
        one.group = z;
        one.insert({2, 3}, {1}, GroupElement{{Int(7)}, {}});
        auto canon = links::canonicalize_translation(one);
        c.expect(canon.entries.size() == 1 &&
                     canon.entries.begin()->first.first == std::vector<long long>{0, 0},
                 "single-point orbit canonicalizes to the origin");
        // distinct non-translate datasets stay distinct
        hopf::GradedHopfDataset a, b;
        a.r = b.r = 3;
        a.group = b.group = z;
        a.insert({0, 0}, {1}, GroupElement{{Int(1)}, {}});
        a.insert({1, 0}, {1}, GroupElement{{Int(2)}, {}});
        b.insert({0, 0}, {1}, GroupElement{{Int(2)}, {}});
        b.insert({1, 0}, {1}, GroupElement{{Int(1)}, {}});
        c.expect(!(links::canonicalize_translation(a).entries ==
                   links::canonicalize_translation(b).entries),
                 "non-translates have distinct canonical forms");
    }
    c.note("clean and failing assemblies, translation canonicalization");
    return c;
}

struct SuiteEntry {
    const char* name;
    Check (*fn)();
};

const SuiteEntry kSuites[] = {
    {"monotone-count", monotone_count},
    {"monotone-bijection", monotone_bijection},
    {"contraction-bijection", contraction_bijection},
    {"hilton-count", hilton_count},
    {"hilton-closure", hilton_closure},
    {"normalizer-oracle", normalizer_oracle},
    {"normalizer-identities", normalizer_identities},
    {"unimodularity", unimodularity},
    {"binomial-pascal", binomial_pascal},
    {"transform-roundtrip", transform_roundtrip},
    {"reconstruction-roundtrip", reconstruction_roundtrip},
    {"stem-consistency", stem_consistency},
    {"paper-numbers", paper_numbers},
    {"classification-assembly", classification_assembly},
};

}  // namespace

std::vector<std::string> suite_names()
{
    std::vector<std::string> names;
    for (const auto& s : kSuites)
        names.push_back(s.name);
    return names;
}

SuiteResult run_suite(const std::string& name)
{
    for (const auto& s : kSuites) {
        if (name != s.name)
            continue;
        auto start = std::chrono::steady_clock::now();
        Check c = s.fn();
        auto stop = std::chrono::steady_clock::now();
        SuiteResult r;
        r.name = name;
        r.passed = c.ok;
        r.notes = c.notes;
        r.seconds = std::chrono::duration<double>(stop - start).count();
        return r;
    }
    throw ValidationError("unknown suite: " + name);
}

std::vector<SuiteResult> run_all()
{
    std::vector<SuiteResult> out;
    for (const auto& s : kSuites)
        out.push_back(run_suite(s.name));
    return out;
}

}  // namespace suites
}  // namespace muinv
