#include "doctest.h"

#include <random>

#include "muinv/envelope.hpp"
#include "muinv/expr.hpp"
#include "muinv/normalize.hpp"

using namespace muinv;
using namespace muinv::lie;

TEST_CASE("generators validate and order")
{
    CHECK_THROWS_AS(Generator::meridian(0, 3), ValidationError);
    CHECK_THROWS_AS(Generator::meridian(1, 1), ValidationError);
    CHECK_THROWS_AS(Generator::core_gen(0), ValidationError);
    Generator core = Generator::core_gen(2);
    Generator m1 = Generator::meridian(1, 5);
    Generator g1 = Generator::graded_meridian(1, -2, 5);
    CHECK(core < m1);
    CHECK(g1 < m1);  // grade -2 before grade 0
    CHECK(g1.text() == "i1@-2");
}

TEST_CASE("bracket trees cache dimension and multidegree")
{
    WedgeSignature sig(2, {5, 5});
    BracketTree i1{Generator::meridian(1, 5)};
    BracketTree i2{Generator::meridian(2, 5)};
    BracketTree pair(i1, i2);
    CHECK(pair.sphere_dim() == 9);
    CHECK(pair.leaf_count() == 2);
    CHECK(pair.family_count(1) == 1);
    CHECK(pair.family_count(2) == 1);
    CHECK(pair.text() == "[i1,i2]");
}

TEST_CASE("comb_from_arrangement")
{
    WedgeSignature sig3(2, {5, 5});
    CHECK(comb_from_arrangement(Arrangement({1}, 3), sig3).text() == "[i1,i2]");
    CHECK(comb_from_arrangement(Arrangement({1, 0}, 3), sig3).text() == "[i1,[i0,i2]]");

    WedgeSignature sig2(2, {5});
    BracketTree comb = comb_from_arrangement(Arrangement({0, 0}, 2), sig2);
    CHECK(comb.text() == "[i0,[i0,i1]]");
    CHECK(comb.sphere_dim() == 2 * sig2.n + sig2.meridian_dim(1) - 2);

    CHECK_THROWS_AS(Arrangement({3}, 3), ValidationError);
    CHECK_THROWS_AS(Arrangement({1, 1}, 3), ValidationError);
}

TEST_CASE("dimension law matches the pinch exponent")
{
    // sphere dim of a comb with t zeros is t*n + |q| - r - t + 2
    for (const auto& sig : {WedgeSignature(2, {5, 5}), WedgeSignature(3, {2, 4}),
                            WedgeSignature(2, {2, 3, 4})}) {
        const int r = sig.r();
        for (int t = 0; t <= 3; ++t) {
            std::vector<int> vals;
            for (int i = 0; i < t; ++i)
                vals.push_back(0);
            for (int j = 1; j <= r - 2; ++j)
                vals.push_back(j);
            BracketTree comb = comb_from_arrangement(Arrangement(vals, r), sig);
            CHECK(comb.sphere_dim() == t * sig.n + sig.q_total() - r - t + 2);
        }
    }
}

TEST_CASE("expression grammar round trips")
{
    WedgeSignature sig(2, {5, 5});
    LieElement x = parse_lie("3*[i1,[i0,i2]] - [i0,[i1,i2]]", sig);
    CHECK(x.size() == 2);
    CHECK(lie_text(x) == "-[i0,[i1,i2]] + 3*[i1,[i0,i2]]");
    // whitespace insignificant
    CHECK(parse_lie(" 3 * [ i1 , [ i0 , i2 ] ] - [i0,[i1,i2]] ", sig) == x);
    // graded generators
    WedgeSignature sigg(1, {2, 2});
    LieElement g = parse_lie("[i1@-2,i2@1]", sigg);
    CHECK(g.begin()->first.text() == "[i1@-2,i2@1]");
    CHECK_THROWS_AS(parse_lie("[i1,i5]", sig), ValidationError);
    CHECK_THROWS_AS(parse_lie("[i1,", sig), ValidationError);
    CHECK_THROWS_AS(parse_lie("i0@3", sig), ValidationError);
}

TEST_CASE("envelope expansion of leaves and a single bracket")
{
    WedgeSignature sig(2, {2, 2});
    auto e1 = envelope_expand(parse_lie("i1", sig));
    CHECK(e1.size() == 1);
    CHECK(e1.begin()->second == 1);

    // q_1 = q_2 = 2: shifted degrees 1,1 and even left dimension, so the
    // bracket expands to the anticommutator
    auto e = envelope_expand(parse_lie("[i1,i2]", sig));
    Generator m1 = Generator::meridian(1, 2);
    Generator m2 = Generator::meridian(2, 2);
    REQUIRE(e.size() == 2);
    CHECK(e.at({m1, m2}) == 1);
    CHECK(e.at({m2, m1}) == 1);
}

TEST_CASE("normalize: combs are fixed points")
{
    WedgeSignature sig(2, {5, 5});
    LieElement comb = parse_lie("[i1,[i0,i2]]", sig);
    NormalForm nf = normalize(comb, sig);
    REQUIRE(nf.coef.size() == 1);
    CHECK(nf.coef.begin()->first.values == std::vector<int>{1, 0});
    CHECK(nf.coef.begin()->second == 1);
    CHECK(normalize(nf.to_lie(), sig).coef == nf.coef);
}

TEST_CASE("normalize: the Jacobi substitution example")
{
    WedgeSignature sig(2, {5, 5});
    NormalForm nf = normalize(parse_lie("[[i1,i0],i2]", sig), sig);
    REQUIRE(nf.coef.size() == 2);
    Int c10 = nf.coef.at(Arrangement({1, 0}, 3));
    Int c01 = nf.coef.at(Arrangement({0, 1}, 3));
    CHECK((c10 == 1 || c10 == -1));
    CHECK((c01 == 1 || c01 == -1));
}

TEST_CASE("normalize: rejections")
{
    WedgeSignature sig(2, {5, 5});
    // missing the last meridian
    CHECK_THROWS_AS(normalize(parse_lie("[i0,i1]", sig), sig), ValidationError);
    // last meridian twice
    CHECK_THROWS_AS(normalize(parse_lie("[i2,[i1,i2]]", sig), sig), ValidationError);
    // inhomogeneous
    LieElement mixed = lie_add(parse_lie("[i1,i2]", sig), parse_lie("[i0,[i1,i2]]", sig));
    CHECK_THROWS_AS(normalize(mixed, sig), ValidationError);
    // zero normalizes to zero
    CHECK(normalize(LieElement{}, sig).is_zero());
}

TEST_CASE("normalize agrees with the envelope oracle on a random 6-leaf tree")
{
    WedgeSignature sig(2, {2, 3, 4});
    LieElement x = parse_lie("[[[i1,i0],[i2,i0]],[i0,i3]]", sig);
    NormalForm nf = normalize(x, sig);
    CHECK(!nf.is_zero());
    CHECK(envelope_expand(nf.to_lie()) == envelope_expand(x));
    CHECK(nf.t() == 3);
    for (const auto& [delta, c] : nf.coef)
        CHECK(delta.values.size() == 5);  // r + t - 2
}

TEST_CASE("graded normal forms keep their level annotations")
{
    WedgeSignature sig(1, {2, 2});
    LieElement x = lie_add(parse_lie("[i2@1,i1@0]", sig), parse_lie("2*[i1@0,i2@1]", sig));
    NormalForm nf = normalize(x, sig);
    REQUIRE(nf.coef.size() == 1);
    CHECK(nf.coef.begin()->second == 3);
    CHECK(normal_form_text(nf) == "3*[i1@0,i2@1]");
    // to_lie reproduces graded trees, so the oracle and idempotence apply verbatim
    CHECK(envelope_expand(nf.to_lie()) == envelope_expand(x));
    CHECK(normalize(nf.to_lie(), sig).coef == nf.coef);
}

TEST_CASE("antisymmetry relation normalizes to zero")
{
    WedgeSignature sig(3, {2, 5});
    LieElement ab = parse_lie("[[i0,i1],i2]", sig);
    BracketTree a(BracketTree(Generator::core_gen(3)), BracketTree(Generator::meridian(1, 2)));
    BracketTree b(Generator::meridian(2, 5));
    long long pq = static_cast<long long>(a.sphere_dim()) * b.sphere_dim();
    Int sign = (pq % 2 == 0) ? 1 : -1;
    LieElement rel = lie_add(ab, lie_scale(-sign, lie_term(BracketTree(b, a))));
    CHECK(normalize(rel, sig).is_zero());
    CHECK(envelope_expand(rel).empty());
}
