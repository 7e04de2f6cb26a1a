#include "doctest.h"

#include <algorithm>

#include "muinv/hilton.hpp"

using namespace muinv;
using namespace muinv::hilton;

namespace {

long long count_multidegree(const std::vector<BasicProduct>& products, int t,
                            std::vector<int> counts)
{
    return std::count_if(products.begin(), products.end(), [&](const BasicProduct& w) {
        return w.t == t && w.family_counts == counts;
    });
}

}  // namespace

TEST_CASE("weight-2 products for r = 3")
{
    WedgeSignature sig(2, {5, 5});
    auto products = enumerate_basic(sig, 2);
    CHECK(count_multidegree(products, 0, {1, 1}) == 1);
    // and with one core factor at weight 3
    auto products3 = enumerate_basic(sig, 3);
    CHECK(count_multidegree(products3, 1, {1, 1}) == 2);  // u_{3,1} = 2
}

TEST_CASE("r = 2: a single product per core multiplicity")
{
    WedgeSignature sig(2, {5});
    auto products = enumerate_basic(sig, 6);
    for (int s = 0; s <= 5; ++s)
        CHECK(count_multidegree(products, s, {1}) == 1);
}

TEST_CASE("summand report for (n=2; q=(5,5)), k=9")
{
    auto rep = summand_report(WedgeSignature(2, {5, 5}), 9);
    int double_prime = 0;
    for (const auto& e : rep.entries) {
        CHECK(e.product.sphere_dim <= 9);
        if (e.cls == SummandClass::doublePrime) {
            ++double_prime;
            CHECK(e.product.tree.text() == "[i1,i2]");
            CHECK(e.product.sphere_dim == 9);
            CHECK(e.group == "pi_9(S^9)");
        }
    }
    CHECK(double_prime == 1);
}

TEST_CASE("below every connectivity the report is empty")
{
    auto rep = summand_report(WedgeSignature(3, {4, 5}), 2);
    CHECK(rep.entries.empty());
}

TEST_CASE("graded mode lists one product per level pair")
{
    auto rep = summand_report(WedgeSignature(1, {2, 2}), 3, GradedWindow{-1, 1});
    std::map<std::pair<int, int>, int> per_pair;
    for (const auto& e : rep.entries) {
        if (e.cls != SummandClass::doublePrime)
            continue;
        CHECK(e.product.sphere_dim == 3);
        REQUIRE(e.product.word.size() == 2);
        per_pair[{e.product.word[0].grade, e.product.word[1].grade}] += 1;
    }
    CHECK(per_pair.size() == 9);
    for (const auto& [levels, count] : per_pair)
        CHECK(count == 1);  // (r-2)! = 1
}

TEST_CASE("graded mode at r = 4: two products per level vector")
{
    // |q| - r + 2 = 4; per level vector (g) there are (r-2)! = 2 basic
    // products on the three chosen generators
    auto rep = summand_report(WedgeSignature(1, {2, 2, 2}), 4, GradedWindow{0, 1});
    std::map<std::vector<int>, int> per_level;
    for (const auto& e : rep.entries) {
        if (e.cls != SummandClass::doublePrime)
            continue;
        // word order permutes families; key by (level of family 1, 2, 3)
        std::vector<int> key(3, 0);
        for (const auto& g : e.product.word)
            key[static_cast<std::size_t>(g.family) - 1] = g.grade;
        per_level[key] += 1;
    }
    CHECK(per_level.size() == 8);  // window^3
    for (const auto& [levels, count] : per_level)
        CHECK(count == 2);
}

TEST_CASE("graded mode requires a window")
{
    CHECK_THROWS_AS(enumerate_basic(WedgeSignature(1, {2, 2}), 2), ValidationError);
}

TEST_CASE("range predicates")
{
    {
        auto p = range_predicates(WedgeSignature(2, {5, 5}), 9);
        CHECK(p.hopf_injective_total);          // 9 <= 2(10-3+1) = 16
        CHECK(p.reduced_equals_double_prime);   // 9 <= 10+5-3 = 12
    }
    {
        auto p = range_predicates(WedgeSignature(2, {2, 2}), 9);
        CHECK(!p.hopf_injective_total);  // 9 > 2(4-3+1) = 4
    }
    {
        auto p = range_predicates(WedgeSignature(2, {5, 5}), 1, 0);
        CHECK(p.hopf_injective_total);
        CHECK(p.reduced_equals_double_prime);
        REQUIRE(p.hopf_bijective_at_s.has_value());
        CHECK(*p.hopf_bijective_at_s);
    }
}

TEST_CASE("products above the degree are classified outside")
{
    WedgeSignature sig(2, {5, 5});
    auto products = enumerate_basic(sig, 2);
    for (const auto& w : products)
        if (w.sphere_dim > 6)
            CHECK(classify_product(w, sig, 6) == SummandClass::outside);
}

TEST_CASE("classification is monotone: doublePrime entries satisfy the reduced condition")
{
    auto rep = summand_report(WedgeSignature(2, {2, 3}), 8);
    for (const auto& e : rep.entries) {
        if (e.cls == SummandClass::doublePrime)
            for (int c : e.product.family_counts)
                CHECK(c == 1);
        if (e.cls == SummandClass::reducedOnly) {
            bool some_repeat = false;
            for (int c : e.product.family_counts) {
                CHECK(c >= 1);
                some_repeat = some_repeat || c > 1;
            }
            CHECK(some_repeat);
        }
    }
}
