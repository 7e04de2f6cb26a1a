#include "doctest.h"

#include "muinv/links.hpp"

using namespace muinv;
using namespace muinv::links;

namespace {
const StableStemTable kTable = StableStemTable::standard_default();
}

TEST_CASE("abelian groups canonicalize")
{
    CHECK(AbelianGroup::make(0, {4, 6}).torsion == std::vector<long long>{2, 12});
    CHECK(AbelianGroup::make(0, {2, 2, 4}).torsion == std::vector<long long>{2, 2, 4});
    CHECK(AbelianGroup::make(1, {6, 4}) == AbelianGroup::make(1, {12, 2}));
    CHECK(AbelianGroup::make(0, {1}).is_zero());
    CHECK(AbelianGroup::cyclic(0).to_string() == "Z");
    CHECK(AbelianGroup::make(2, {2, 24}).to_string() == "Z^2 + Z_2 + Z_24");
    CHECK(AbelianGroup::cyclic(2).power(3).to_string() == "Z_2 + Z_2 + Z_2");
    CHECK(AbelianGroup::unknown_group().direct_sum(AbelianGroup::cyclic(0)).unknown);
}

TEST_CASE("stable stem table")
{
    CHECK(kTable.stem(0) == AbelianGroup::cyclic(0));
    CHECK(kTable.stem(1) == AbelianGroup::cyclic(2));
    CHECK(kTable.stem(3) == AbelianGroup::cyclic(24));
    CHECK(kTable.stem(-2).is_zero());
    CHECK(kTable.stem(8).unknown);
    auto custom = StableStemTable::from_json(
        R"({"0": {"free": 1, "torsion": []}, "1": {"free": 0, "torsion": ["2"]}})", "test");
    CHECK(custom.stem(1) == AbelianGroup::cyclic(2));
    CHECK(custom.stem(2).unknown);

    // the shipped data file is byte-for-byte the built-in default
    auto shipped = StableStemTable::from_json(R"({
      "0": {"free": "1", "torsion": []},
      "1": {"free": "0", "torsion": ["2"]},
      "2": {"free": "0", "torsion": ["2"]},
      "3": {"free": "0", "torsion": ["24"]},
      "4": {"free": "0", "torsion": []},
      "5": {"free": "0", "torsion": []},
      "6": {"free": "0", "torsion": ["2"]},
      "7": {"free": "0", "torsion": ["240"]}
    })", "data/stems.default.json");
    CHECK(shipped.entries() == StableStemTable::standard_default().entries());
}

TEST_CASE("mu targets")
{
    LinkProblem pair({3, 3}, 6, 2);
    auto t0 = mu_target(pair, 0, kTable);
    CHECK(t0.stem_degree == 1);
    CHECK(t0.multiplicity == 1);
    CHECK(t0.group == AbelianGroup::cyclic(2));
    CHECK(mu_target(pair, 2, kTable).group.is_zero());  // stem -1

    LinkProblem triple({3, 3, 3}, 6, 2);
    auto t = mu_target(triple, 0, kTable);
    CHECK(t.stem_degree == 0);
    CHECK(t.group == AbelianGroup::cyclic(0));
}

TEST_CASE("kappa domain bookkeeping")
{
    auto rep = kappa_domain(LinkProblem({3, 3, 3}, 6, 2));
    CHECK(rep.sig == WedgeSignature(2, {5, 5}));
    CHECK(rep.k == 9);
    CHECK(rep.reconstruction_hypothesis);  // 9 <= 12
    CHECK(rep.predicates.hopf_injective_total);
    CHECK(rep.predicates.reduced_equals_double_prime);

    auto small = kappa_domain(LinkProblem({1, 1}, 3, 1));
    CHECK(small.sig == WedgeSignature(1, {2}));
    CHECK(small.k == 2);
    CHECK(small.reconstruction_hypothesis);  // 2 <= 2

    CHECK(!kappa_domain(LinkProblem({4, 4}, 4, 1)).reconstruction_hypothesis);  // 8 > 4
}

TEST_CASE("augmentation stems agree")
{
    auto c = augmentation_stem_check(LinkProblem({3, 3}, 6, 2), 1);
    CHECK(c.stem_a == 0);
    CHECK(c.stem_b == 0);
    CHECK(c.stems_equal);
    CHECK(c.multiplicity_identity);
    CHECK(augmentation_stem_check(LinkProblem({2, 5, 1}, 7, 3), 0).stems_equal);
}

TEST_CASE("linking pipeline")
{
    auto rep = linking_pipeline(LinkProblem({3, 3}, 6, 2), kTable, 2);
    CHECK(rep.wedge == WedgeSignature(2, {2}));
    CHECK(rep.rows[0].k_s == 2);
    CHECK(rep.rows[0].lambda_group == "pi_3(S^2)");
    CHECK(!rep.rows[0].stable_at_s);  // 1.5 <= 1 fails
    CHECK(rep.rows[1].stable_at_s);   // 1.5 <= 2 holds
    CHECK(rep.rows[0].mu.group == AbelianGroup::cyclic(2));
    CHECK(rep.rows[1].mu.group == AbelianGroup::cyclic(0));

    // n = 1, r = 2: stem p_1 + p_2 - m + 1 at every order
    auto rep1 = linking_pipeline(LinkProblem({2, 3}, 7, 1), kTable, 3);
    for (const auto& row : rep1.rows)
        CHECK(row.mu.stem_degree == 2 + 3 - 7 + 1);

    CHECK_THROWS_AS(linking_pipeline(LinkProblem({4, 4}, 6, 2), kTable, 2), ValidationError);
}

TEST_CASE("brunnian classification")
{
    auto rep = classify_brunnian(LinkProblem({3, 3, 3}, 6, 2), kTable, 4);
    for (const auto& [name, ok] : rep.assumptions)
        CHECK(ok);
    CHECK(rep.assembled == AbelianGroup::cyclic(0));
    CHECK(rep.caveats.empty());

    auto z2 = classify_brunnian(LinkProblem({3, 3}, 6, 3), kTable, 4);
    CHECK(z2.assembled == AbelianGroup::cyclic(2));

    auto failing = classify_brunnian(LinkProblem({3, 3}, 6, 2), kTable, 4);
    CHECK(!failing.caveats.empty());
    CHECK(failing.assembled == AbelianGroup::make(1, {2}));
}

TEST_CASE("total classification in covering-space mode")
{
    auto rep = classify_total(LinkProblem({3, 3, 3}, 6, 1), kTable, 2,
                              hilton::GradedWindow{-1, 1});
    // three pairs, each (2W+1) = 3 copies of Z_2; one triple with 9 copies of Z
    long long z2_copies = 0, z_copies = 0;
    for (const auto& s : rep.summands) {
        if (s.group == AbelianGroup::cyclic(2).power(3))
            ++z2_copies;
        if (s.group == AbelianGroup::cyclic(0).power(9))
            ++z_copies;
    }
    CHECK(z2_copies == 3);
    CHECK(z_copies == 1);
    CHECK(rep.assembled == AbelianGroup::make(9, std::vector<long long>(9, 2)));
    CHECK_THROWS_AS(classify_total(LinkProblem({3, 3}, 6, 1), kTable, 2), ValidationError);
}

TEST_CASE("total classification keeps component markers symbolic for n >= 2")
{
    auto rep = classify_total(LinkProblem({3, 3}, 6, 4), kTable, 3);
    CHECK(rep.symbolic.size() == 2);
    // mu part: pair stem 1 -> Z_2 at s=0, negative afterwards
    CHECK(rep.assembled == AbelianGroup::cyclic(2));
}

TEST_CASE("translation canonicalization")
{
    AbelianGroup z = AbelianGroup::make(1, {});
    hopf::GradedHopfDataset data;
    data.r = 3;
    data.group = z;
    data.insert({2, 3}, {1}, GroupElement{{Int(1)}, {}});
    auto canon = canonicalize_translation(data);
    REQUIRE(canon.entries.size() == 1);
    CHECK(canon.entries.begin()->first.first == std::vector<long long>{0, 0});

    hopf::GradedHopfDataset moved;
    moved.r = 3;
    moved.group = z;
    moved.insert({7, 2}, {1}, GroupElement{{Int(1)}, {}});
    CHECK(canonicalize_translation(moved).entries == canon.entries);

    hopf::GradedHopfDataset empty;
    empty.r = 3;
    empty.group = z;
    CHECK(canonicalize_translation(empty).entries.empty());
}

TEST_CASE("reconstruction at r = 2 is the inverse binomial transform")
{
    AbelianGroup z = AbelianGroup::make(1, {});
    hopf::GradedHopfDataset data;
    data.r = 2;
    data.group = z;
    data.insert({-1}, {}, GroupElement{{Int(2)}, {}});
    data.insert({1}, {}, GroupElement{{Int(-5)}, {}});

    transform::Box window{{{-2, 2}}};
    std::map<std::pair<std::vector<int>, std::vector<int>>, GroupElement> values;
    for (int s = 0; s <= 4; ++s)
        values[{{s}, {}}] = hopf::evaluate_H_graded(data, s)[0].second;
    auto result = reconstruct_kappa(values, window, WedgeSignature(1, {2}), z);
    CHECK(result.h_family.entries == data.entries);

    // surplus values are consistency-checked: a corrupted order-5 value is
    // detected as a window inconsistency
    values[{{5}, {}}] = hopf::evaluate_H_graded(data, 5)[0].second;
    CHECK(reconstruct_kappa(values, window, WedgeSignature(1, {2}), z).h_family.entries ==
          data.entries);
    values[{{5}, {}}] = GroupElement{{Int(999)}, {}};
    CHECK_THROWS_AS(reconstruct_kappa(values, window, WedgeSignature(1, {2}), z),
                    WindowInconsistency);
    values.erase({{5}, {}});

    // missing grid values are a precondition violation
    values.erase({{4}, {}});
    CHECK_THROWS_AS(reconstruct_kappa(values, window, WedgeSignature(1, {2}), z),
                    ValidationError);

    // all-zero values give the zero dataset
    std::map<std::pair<std::vector<int>, std::vector<int>>, GroupElement> zeros;
    for (int s = 0; s <= 4; ++s)
        zeros[{{s}, {}}] = zero_element(z);
    auto zres = reconstruct_kappa(zeros, window, WedgeSignature(1, {2}), z);
    CHECK(zres.h_family.entries.empty());
    CHECK(zres.hilton_coords.empty());
}
