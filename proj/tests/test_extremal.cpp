#include "zerosum/extremal.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace zerosum;

TEST_CASE("threshold arithmetic") {
    CHECK(extremal_threshold(6, 6) == 2);
    CHECK(extremal_threshold(2, 3) == 1);
    CHECK(extremal_threshold(40, 3) == pow2(38));
    CHECK_THROWS_AS(extremal_threshold(1, 3), std::invalid_argument);
}

TEST_CASE("extremal sets on pinned instances") {
    const auto g339 = FiniteAbelianGroup::parse("C3^2xC9");
    const auto pm1 = WeightSet::parse("pm1", g339);
    const auto S = Sequence::parse(g339, "(1,0,0)*2,(0,1,0),(0,0,1),(0,0,2),(0,0,4)");
    const auto E = e_set(S, pm1, 6);
    CHECK(E.threshold == 2);
    CHECK(std::binary_search(E.members.begin(), E.members.end(), ElementIndex(0)));

    // (1)(2) over C_5: every nonzero count is 2 while N[0] = 1, so the
    // extremal set is exactly {0}
    const auto c5 = FiniteAbelianGroup::parse("C5");
    const auto E5 = e_set(Sequence::parse(c5, "(1),(2)"), WeightSet::parse("pm1", c5), 3);
    CHECK(E5.threshold == 1);
    CHECK(E5.members == std::vector<ElementIndex>{0});

    // clearly non-extremal: N[0] = 20 against a threshold of 8
    const auto big = Sequence::parse(c5, "(1)*2,(2)*2,(3)");
    const auto cv = count_vector(big, WeightSet::parse("pm1", c5));
    CHECK(cv.at(0) == 20);
    const auto E20 = e_set(cv, 3);
    CHECK_FALSE(std::binary_search(E20.members.begin(), E20.members.end(), ElementIndex(0)));

    CHECK_THROWS_AS(e_set(Sequence::parse(c5, "(1)"), WeightSet::parse("pm1", c5), 3),
                    std::invalid_argument);
}

TEST_CASE("extremal enumeration") {
    const auto c33 = FiniteAbelianGroup::parse("C3^2");
    const auto full = WeightSet::parse("full", c33);
    const auto pairs = enumerate_extremal(c33, full, 3, 2);
    CHECK(pairs.complete);
    CHECK(pairs.sequences.size() == 24);  // exactly the independent pairs
    for (const auto& S : pairs.sequences) {
        CHECK(is_zero_sum_free(S, full));
        CHECK(fp_solve({S.term(0)}, S.term(1), 3) == std::nullopt);  // independent
    }

    // over C_5 with plus-minus weights nothing extremal exists past length 2:
    // the minimum of N[0] at length 3 is already 3 against a threshold of 2
    const auto c5 = FiniteAbelianGroup::parse("C5");
    const auto pm1 = WeightSet::parse("pm1", c5);
    CHECK(enumerate_extremal(c5, pm1, 3, 2).sequences.size() == 4);
    CHECK(enumerate_extremal(c5, pm1, 3, 3).sequences.empty());
    CHECK(enumerate_extremal(c5, pm1, 3, 4).sequences.empty());

    // the length-6 witness over C3^2 x C9 is extremal (checked directly;
    // enumerating all length-6 sequences over 80 elements is out of budget)
    const auto g339 = FiniteAbelianGroup::parse("C3^2xC9");
    const auto S = Sequence::parse(g339, "(1,0,0)*2,(0,1,0),(0,0,1),(0,0,2),(0,0,4)");
    CHECK(is_extremal(S, WeightSet::parse("pm1", g339), 6));

    EnumerateLimits tiny;
    tiny.budget = 5;
    const auto partial = enumerate_extremal(c33, full, 3, 2, tiny);
    CHECK_FALSE(partial.complete);
    CHECK(partial.enumerated == 5);
}

TEST_CASE("zero-padded extremal construction") {
    const auto c33 = FiniteAbelianGroup::parse("C3^2");
    const auto full = WeightSet::parse("full", c33);

    const auto S3 = construct_extremal_with_zeros(c33, full, 3);
    CHECK(S3.length() == 3);
    CHECK(S3.multiplicity_of(c33.identity()) == 1);
    const auto cv3 = count_vector(S3, full);
    for (ElementIndex g = 0; g < 9; ++g) CHECK(cv3.at(g) == 2);

    // k = D - 1 appends nothing: a zero-sum-free witness with all counts 1
    const auto S2 = construct_extremal_with_zeros(c33, full, 2);
    CHECK(S2.length() == 2);
    CHECK(is_zero_sum_free(S2, full));
    const auto cv2 = count_vector(S2, full);
    for (ElementIndex g = 0; g < 9; ++g) CHECK(cv2.at(g) == 1);

    const auto c5 = FiniteAbelianGroup::parse("C5");
    const auto full5 = WeightSet::parse("full", c5);
    const auto S4 = construct_extremal_with_zeros(c5, full5, 4);
    const auto cv4 = count_vector(S4, full5);
    CHECK(cv4.at(3) == 8);
    CHECK(cv4.at(0) == 8);

    CHECK_THROWS_AS(construct_extremal_with_zeros(c5, WeightSet::parse("pm1", c5), 4),
                    std::invalid_argument);
    CHECK_THROWS_AS(construct_extremal_with_zeros(c33, full, 1), std::invalid_argument);
}

TEST_CASE("full-support lower-bound check passes where it should") {
    const auto c5 = FiniteAbelianGroup::parse("C5");
    const auto pm1 = WeightSet::parse("pm1", c5);
    for (const auto& S : enumerate_extremal(c5, pm1, 3, 2).sequences)
        CHECK(check_corollary3(S, pm1, 3).status == CheckStatus::passed);

    const auto c33 = FiniteAbelianGroup::parse("C3^2");
    const auto full = WeightSet::parse("full", c33);
    for (int len = 2; len <= 3; ++len)
        for (const auto& S : enumerate_extremal(c33, full, 3, len).sequences)
            CHECK(check_corollary3(S, full, 3).status == CheckStatus::passed);

    // non-extremal inputs are not judged
    CHECK(check_corollary3(Sequence::parse(c5, "(1),(1)"), pm1, 3).status == CheckStatus::skipped);
}

TEST_CASE("divisor-count equality: where it holds and where it provably fails") {
    const auto c5 = FiniteAbelianGroup::parse("C5");
    const auto pm1 = WeightSet::parse("pm1", c5);
    const auto S = Sequence::parse(c5, "(1),(2)");

    // The claimed equality N[g] = N[0] for g | S is mechanically false here:
    // both {1} and {1,2} reach g = 1, so N[(1)] = 2 while N[0] = 1. The
    // brute-force enumeration of all four index sets pins this down.
    const auto r = check_corollary4(S, pm1, c5.element({1}));
    CHECK(r.status == CheckStatus::failed);
    CHECK(count_vector(S, pm1).at(1) == 2);
    CHECK(count_vector(S, pm1).at(0) == 1);

    // on the length-6 witness over C3^2 x C9 the equality holds at e2 but
    // fails at e1 and e3
    const auto g339 = FiniteAbelianGroup::parse("C3^2xC9");
    const auto pm9 = WeightSet::parse("pm1", g339);
    const auto W = Sequence::parse(g339, "(1,0,0)*2,(0,1,0),(0,0,1),(0,0,2),(0,0,4)");
    CHECK(check_corollary4(W, pm9, g339.element({0, 1, 0})).status == CheckStatus::passed);
    CHECK(check_corollary4(W, pm9, g339.element({1, 0, 0})).status == CheckStatus::failed);
    CHECK(check_corollary4(W, pm9, g339.element({0, 0, 1})).status == CheckStatus::failed);

    // hypotheses gate the check
    CHECK(check_corollary4(S, pm1, c5.element({3})).status == CheckStatus::skipped);  // g not in S
    CHECK(check_corollary4(S, WeightSet::parse("unit", c5), c5.element({1})).status ==
          CheckStatus::skipped);
}

TEST_CASE("the one-sided divisor-count inequality always holds") {
    // for weights acting as {-1,+1}, removing or adding the divisor index
    // is an involution, so N[g] >= N[0] whenever g | S
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const auto G = FiniteAbelianGroup::from_orders(
            std::vector<std::vector<int>>{{5}, {7}, {9}, {3, 3}, {16}, {3, 9}}[rng() % 6]);
        const auto A = WeightSet::parse("pm1", G);
        const int len = 1 + static_cast<int>(rng() % 8);
        std::vector<ElementIndex> terms;
        for (int i = 0; i < len; ++i) terms.push_back(static_cast<ElementIndex>(rng() % G.order()));
        const Sequence S(G, terms);
        const auto cv = count_vector(S, A);
        for (const auto& [elem, mult] : S.multiplicities()) CHECK(cv.at(elem) >= cv.at(0));
    }
}

TEST_CASE("removal keeps the extremal set") {
    const auto c33 = FiniteAbelianGroup::parse("C3^2");
    const auto full = WeightSet::parse("full", c33);
    // squared basis: E(S) survives removing one doubled term
    const auto S = Sequence::parse(c33, "(1,0)*2,(0,1)*2");
    CHECK(check_lemma6(S, full, c33.element({1, 0}), 3).status == CheckStatus::passed);

    // hypothesis violations are skipped, not judged
    const auto c5 = FiniteAbelianGroup::parse("C5");
    const auto pm1 = WeightSet::parse("pm1", c5);
    CHECK(check_lemma6(Sequence::parse(c5, "(1),(2)"), pm1, c5.element({1}), 3).status ==
          CheckStatus::skipped);

    // exhaustive over the extremal sweeps used elsewhere
    for (int len = 3; len <= 4; ++len)
        for (const auto& S2 : enumerate_extremal(c33, full, 3, len).sequences)
            for (const auto& [elem, mult] : S2.multiplicities()) {
                const auto r = check_lemma6(S2, full, c33.element_at(elem), 3);
                CHECK(r.status != CheckStatus::failed);
            }
}

TEST_CASE("repeated terms force strict slack") {
    const auto c5 = FiniteAbelianGroup::parse("C5");
    const auto pm1 = WeightSet::parse("pm1", c5);
    CHECK(check_proposition7(Sequence::parse(c5, "(1)*3"), pm1, 3).status == CheckStatus::passed);
    CHECK(check_proposition7(Sequence::parse(c5, "(1)*3,(2)"), pm1, 3).status ==
          CheckStatus::passed);
    CHECK(check_proposition7(Sequence::parse(c5, "(1),(2)"), pm1, 3).status ==
          CheckStatus::skipped);
}

TEST_CASE("multiplicity profile of extremal sequences") {
    const auto c5 = FiniteAbelianGroup::parse("C5");
    const auto pm1 = WeightSet::parse("pm1", c5);
    for (const auto& S : enumerate_extremal(c5, pm1, 3, 2).sequences)
        CHECK(check_theorem8(S, pm1, 3).status == CheckStatus::passed);

    const auto c7 = FiniteAbelianGroup::parse("C7");
    const auto pm7 = WeightSet::parse("pm1", c7);
    // {1,1,3} is extremal at length D with exactly one doubled element
    const auto S = Sequence::parse(c7, "(1)*2,(3)");
    CHECK(count_vector(S, pm7).at(0) == 2);
    CHECK(check_theorem8(S, pm7, 3).status == CheckStatus::passed);

    // groups with order-3 elements are excluded from the profile claim
    const auto c33 = FiniteAbelianGroup::parse("C3^2");
    const auto full = WeightSet::parse("full", c33);
    const auto sq = Sequence::parse(c33, "(1,0)*2,(0,1)*2");
    CHECK(check_theorem8(sq, full, 3).status == CheckStatus::skipped);

    // even-order groups are excluded outright
    const auto c24 = FiniteAbelianGroup::parse("C2^4");
    CHECK(check_theorem8(Sequence::parse(c24, "(1,0,0,0)"), WeightSet::parse("pm1", c24), 5)
              .status == CheckStatus::skipped);
}

TEST_CASE("prime-field solving") {
    const auto c33 = FiniteAbelianGroup::parse("C3^2");
    const auto e1 = c33.element({1, 0});
    const auto e2 = c33.element({0, 1});
    CHECK(fp_solve({e1, e2}, c33.element({1, 2}), 3) == std::vector<int>{1, 2});
    CHECK(fp_solve({e1, e1}, c33.element({1, 2}), 3) == std::nullopt);  // dependent
    CHECK(fp_solve({e1}, e2, 3) == std::nullopt);                      // outside the span
    CHECK_THROWS_AS(fp_solve({e1}, e2, 4), std::invalid_argument);

    // random invertible systems over F_5, verified by substitution
    std::mt19937_64 rng(9);
    const auto c555 = FiniteAbelianGroup::from_orders({5, 5, 5, 5});
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<GroupElement> basis;
        for (int i = 0; i < 4; ++i)
            basis.push_back(c555.element_at(static_cast<ElementIndex>(rng() % c555.order())));
        const auto target = c555.element_at(static_cast<ElementIndex>(rng() % c555.order()));
        const auto solution = fp_solve(basis, target, 5);
        if (!solution) continue;
        auto sum = c555.identity();
        for (int i = 0; i < 4; ++i) sum = c555.add(sum, c555.scalar_mul((*solution)[i], basis[i]));
        CHECK(sum == target);
    }
}

TEST_CASE("structure decomposition over prime-power rank-2 groups") {
    const auto c33 = FiniteAbelianGroup::parse("C3^2");
    const auto full = WeightSet::parse("full", c33);

    // basis plus one extra supported on both coordinates
    const auto S1 = Sequence::parse(c33, "(1,0),(0,1),(1,1)");
    REQUIRE(is_extremal(S1, full, 3));
    const auto d1 = decompose_theorem11(S1, 3, 2);
    REQUIRE(d1.has_value());
    CHECK(d1->basis.size() == 2);
    REQUIRE(d1->extras.size() == 1);
    CHECK(d1->extras[0].support == std::vector<int>{0, 1});

    // pure basis decomposes with no extras
    const auto d0 = decompose_theorem11(Sequence::parse(c33, "(1,0),(0,1)"), 3, 2);
    REQUIRE(d0.has_value());
    CHECK(d0->extras.empty());

    // squared basis: two extras with disjoint singleton supports
    const auto d2 = decompose_theorem11(Sequence::parse(c33, "(1,0)*2,(0,1)*2"), 3, 2);
    REQUIRE(d2.has_value());
    REQUIRE(d2->extras.size() == 2);
    CHECK(d2->extras[0].support != d2->extras[1].support);

    // overlapping supports admit no decomposition, and indeed such a
    // sequence is not extremal (N[0] = 5 against a threshold of 4)
    const auto overlap = Sequence::parse(c33, "(1,0),(0,1),(1,1),(2,1)");
    CHECK(count_vector(overlap, full).at(0) == 5);
    CHECK_FALSE(is_extremal(overlap, full, 3));
    CHECK(decompose_theorem11(overlap, 3, 2) == std::nullopt);

    // precondition validation
    CHECK_THROWS_AS(decompose_theorem11(Sequence::parse(c33, "(1,0)"), 3, 2),
                    std::invalid_argument);  // |S| < r
    CHECK_THROWS_AS(decompose_theorem11(Sequence::parse(c33, "(1,0)*5"), 3, 2),
                    std::invalid_argument);  // |S| > 2r
    CHECK_THROWS_AS(decompose_theorem11(Sequence::parse(c33, "(0,0),(1,0)"), 3, 2),
                    std::invalid_argument);  // 0 | S
    const auto c5 = FiniteAbelianGroup::parse("C5");
    CHECK_THROWS_AS(decompose_theorem11(Sequence::parse(c5, "(1),(2)"), 3, 2),
                    std::invalid_argument);  // wrong group
}

TEST_CASE("decomposed coefficients reproduce the extras") {
    const auto c55 = FiniteAbelianGroup::parse("C5^2");
    const auto full = WeightSet::parse("full", c55);
    for (const auto& S : enumerate_extremal(c55, full, 3, 3).sequences) {
        const auto d = decompose_theorem11(S, 5, 2);
        REQUIRE_MESSAGE(d.has_value(), S.to_literal());
        for (const auto& extra : d->extras) {
            auto sum = c55.identity();
            for (std::size_t i = 0; i < extra.support.size(); ++i) {
                CHECK(extra.coefficients[i] >= 1);
                CHECK(extra.coefficients[i] <= 4);
                sum = c55.add(sum,
                              c55.scalar_mul(extra.coefficients[i], d->basis[extra.support[i]]));
            }
            CHECK(sum == extra.term);
        }
    }
}
