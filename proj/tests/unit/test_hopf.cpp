#include "doctest.h"

#include "muinv/binomial.hpp"
#include "muinv/hopf.hpp"

using namespace muinv;
using namespace muinv::hopf;

TEST_CASE("monotone enumeration counts")
{
    for (int s = 0; s <= 4; ++s)
        CHECK(enumerate_monotone(2, s).size() == 1);
    auto two = enumerate_monotone(3, 1);
    REQUIRE(two.size() == 2);
    CHECK(two[0].values == std::vector<int>{1, 2});
    CHECK(two[0].s_decomp == std::vector<int>{1, 0});
    CHECK(two[1].values == std::vector<int>{2, 1});
    CHECK(two[1].s_decomp == std::vector<int>{0, 1});
    CHECK(enumerate_monotone(4, 2).size() == 12);  // 4!/2!
}

TEST_CASE("contraction")
{
    auto gammas = enumerate_monotone(3, 1);
    auto d0 = contraction(gammas[0], 1);  // values (1,2)
    REQUIRE(d0.has_value());
    CHECK(d0->values == std::vector<int>{0, 1});
    auto d1 = contraction(gammas[1], 1);  // values (2,1)
    REQUIRE(d1.has_value());
    CHECK(d1->values == std::vector<int>{1, 0});
    CHECK(!contraction(gammas[0], 0).has_value());
    CHECK(!contraction(gammas[0], 2).has_value());
}

TEST_CASE("evaluate_H implements the contraction rule linearly")
{
    WedgeSignature sig(2, {5, 5});
    lie::NormalForm nf;
    nf.sig = sig;
    nf.coef.emplace(lie::Arrangement({1, 0}, 3), Int(1));

    auto values = evaluate_H(nf, 1);
    REQUIRE(values.size() == 1);
    CHECK(values[0].first.values == std::vector<int>{2, 1});
    CHECK(values[0].second.coefficient == 1);
    CHECK(values[0].second.stem_shift == -1 * 2 - 10 + 3 + 1 - 2);

    // wrong order: everything vanishes
    CHECK(evaluate_H(nf, 0).empty());
    CHECK(evaluate_H(nf, 2).empty());

    nf.coef.clear();
    nf.coef.emplace(lie::Arrangement({0, 1}, 3), Int(2));
    nf.coef.emplace(lie::Arrangement({1, 0}, 3), Int(-3));
    auto both = evaluate_H(nf, 1);
    REQUIRE(both.size() == 2);
    CHECK(both[0].second.coefficient == 2);
    CHECK(both[1].second.coefficient == -3);
}

TEST_CASE("basis matrices")
{
    for (int s = 0; s <= 2; ++s) {
        auto bm = basis_matrix_D(WedgeSignature(2, {5}), s);
        CHECK(bm.matrix.rows() == 1);
        CHECK((bm.det == 1 || bm.det == -1));
    }
    auto bm0 = basis_matrix_D(WedgeSignature(2, {5, 5}), 0);
    CHECK(bm0.matrix.rows() == 1);
    CHECK(bm0.unimodular);
    auto bm1 = basis_matrix_D(WedgeSignature(2, {5, 5}), 1);
    CHECK(bm1.matrix.rows() == 2);
    CHECK(bm1.unimodular);
    // covering-space mode admits only the per-level matrix
    CHECK_THROWS_AS(basis_matrix_D(WedgeSignature(1, {2, 2}), 1), ValidationError);
    CHECK(basis_matrix_D(WedgeSignature(1, {2, 2}), 0).unimodular);
}

TEST_CASE("graded coefficient formula")
{
    // r = 2: a single factor binom(g+s-1, s)
    for (long long g = -3; g <= 3; ++g)
        for (int s = 0; s <= 4; ++s)
            CHECK(graded_coefficient({g}, {s}) == transform::b_coeff(s, g));
    // empty pinches: coefficient 1
    CHECK(graded_coefficient({5, -7, 2}, {0, 0, 0}) == 1);
    // worked example
    CHECK(graded_coefficient({2, 5}, {1, 2}) == 12);
}

TEST_CASE("graded evaluation at r = 2")
{
    AbelianGroup z = AbelianGroup::make(1, {});
    GradedHopfDataset data;
    data.r = 2;
    data.group = z;
    data.insert({1}, {}, GroupElement{{Int(7)}, {}});
    for (int s = 0; s <= 4; ++s) {
        auto vals = evaluate_H_graded(data, s);
        REQUIRE(vals.size() == 1);
        CHECK(vals[0].second.free_part[0] == 7);  // binom(s,s) = 1
    }
    GradedHopfDataset origin;
    origin.r = 2;
    origin.group = z;
    origin.insert({0}, {}, GroupElement{{Int(5)}, {}});
    CHECK(evaluate_H_graded(origin, 0)[0].second.free_part[0] == 5);
    for (int s = 1; s <= 3; ++s)
        CHECK(is_zero(evaluate_H_graded(origin, s)[0].second));
}

TEST_CASE("graded evaluation at r = 2: order 0 sums, order 1 weights by level")
{
    AbelianGroup z = AbelianGroup::make(1, {});
    GradedHopfDataset data;
    data.r = 2;
    data.group = z;
    data.insert({-2}, {}, GroupElement{{Int(3)}, {}});
    data.insert({0}, {}, GroupElement{{Int(5)}, {}});
    data.insert({1}, {}, GroupElement{{Int(-1)}, {}});
    data.insert({4}, {}, GroupElement{{Int(2)}, {}});
    // H_0 is the plain sum of the components
    CHECK(evaluate_H_graded(data, 0)[0].second.free_part[0] == 3 + 5 - 1 + 2);
    // H_1 counts the level-g component exactly g times
    CHECK(evaluate_H_graded(data, 1)[0].second.free_part[0] ==
          (-2) * 3 + 0 * 5 + 1 * (-1) + 4 * 2);
}

TEST_CASE("graded evaluation at r = 3")
{
    AbelianGroup z = AbelianGroup::make(1, {});
    GradedHopfDataset data;
    data.r = 3;
    data.group = z;
    data.insert({1, 1}, {1}, GroupElement{{Int(4)}, {}});
    auto vals = evaluate_H_graded(data, 1);
    REQUIRE(vals.size() == 2);
    for (const auto& [gamma, v] : vals) {
        if (gamma.s_decomp == std::vector<int>{1, 0})
            CHECK(v.free_part[0] == 4);  // binom(1,1) binom(-1,0) = 1
    }
}
