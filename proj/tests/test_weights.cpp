#include "zerosum/weights.hpp"

#include <doctest.h>

#include <algorithm>

using namespace zerosum;

namespace {

std::vector<ElementIndex> orbit_of(const WeightSet& A, const FiniteAbelianGroup& G, long long g) {
    return weight_orbit_indices(A, G, static_cast<ElementIndex>(g));
}

}  // namespace

TEST_CASE("weight spec parsing") {
    const auto c5 = FiniteAbelianGroup::parse("C5");
    const auto pm1 = WeightSet::parse("pm1", c5);
    CHECK(pm1.weights() == std::vector<long long>{-1, 1});
    CHECK(pm1.symmetric());
    CHECK(pm1.canonical_name() == "{-1,1}");

    const auto c33 = FiniteAbelianGroup::parse("C3^2");
    CHECK(WeightSet::parse("full", c33).weights() == std::vector<long long>{1, 2});
    CHECK(WeightSet::parse("unit", c5).weights() == std::vector<long long>{1});

    const auto c7 = FiniteAbelianGroup::parse("C7");
    const auto w25 = WeightSet::parse("{2,5}", c7);
    CHECK(w25.weights() == std::vector<long long>{2, 5});
    CHECK_FALSE(w25.symmetric());       // symmetry is judged over Z
    CHECK(group_symmetric(w25, c7));    // but 5 = -2 mod 7

    CHECK(WeightSet::parse(" { -1 , 1 } ", c5).weights() == std::vector<long long>{-1, 1});
    CHECK_THROWS_AS(WeightSet::parse("{0,1}", c5), std::invalid_argument);
    CHECK_THROWS_AS(WeightSet::parse("{}", c5), std::invalid_argument);
    CHECK_THROWS_AS(WeightSet::parse("{1,{2}", c5), std::invalid_argument);
    CHECK_THROWS_AS(WeightSet::parse("{2000000}", c5), std::invalid_argument);
    CHECK_THROWS_AS(WeightSet::parse("full", FiniteAbelianGroup()), std::invalid_argument);
    CHECK(WeightSet::parse("full", FiniteAbelianGroup::parse("C2")).weights() ==
          std::vector<long long>{1});
}

TEST_CASE("weight orbits") {
    const auto c5 = FiniteAbelianGroup::parse("C5");
    CHECK(orbit_of(WeightSet::parse("pm1", c5), c5, 2) == std::vector<ElementIndex>{2, 3});

    const auto c3 = FiniteAbelianGroup::parse("C3");
    CHECK(orbit_of(WeightSet::parse("{1,2}", c3), c3, 1) == std::vector<ElementIndex>{1, 2});

    const auto c9 = FiniteAbelianGroup::parse("C9");
    CHECK(orbit_of(WeightSet::parse("{3}", c9), c9, 3) == std::vector<ElementIndex>{0});
}

TEST_CASE("group symmetry of residues") {
    CHECK(group_symmetric(WeightSet::parse("{2,5}", FiniteAbelianGroup::parse("C7")),
                          FiniteAbelianGroup::parse("C7")));
    CHECK(group_symmetric(WeightSet::parse("unit", FiniteAbelianGroup::parse("C2")),
                          FiniteAbelianGroup::parse("C2")));
    CHECK_FALSE(group_symmetric(WeightSet::parse("unit", FiniteAbelianGroup::parse("C5")),
                                FiniteAbelianGroup::parse("C5")));
}

TEST_CASE("weights acting as plus-minus one") {
    const auto c3 = FiniteAbelianGroup::parse("C3");
    const auto c5 = FiniteAbelianGroup::parse("C5");
    CHECK(acts_as_pm1(WeightSet::parse("{1,2}", c3), c3));
    CHECK_FALSE(acts_as_pm1(WeightSet::parse("{1,2}", c5), c5));
    CHECK(acts_as_pm1(WeightSet::parse("pm1", c5), c5));
    CHECK(acts_as_pm1(WeightSet::parse("{4,6}", c5), c5));  // residues {4,1}
}

TEST_CASE("orbit properties") {
    const auto groups = {FiniteAbelianGroup::parse("C5"), FiniteAbelianGroup::parse("C3xC9"),
                         FiniteAbelianGroup::parse("C2^3"), FiniteAbelianGroup::parse("C12")};
    const auto weight_sets = {WeightSet::parse("pm1", FiniteAbelianGroup::parse("C5")),
                              WeightSet::from_list({1, 3}), WeightSet::from_list({-2, 5}),
                              WeightSet::from_list({2})};
    for (const auto& G : groups) {
        for (const auto& A : weight_sets) {
            // orbit of the identity is exactly {0}
            CHECK(weight_orbit_indices(A, G, 0) == std::vector<ElementIndex>{0});
            for (ElementIndex g = 0; g < G.order(); ++g) {
                const auto orbit = weight_orbit_indices(A, G, g);
                // orbit(-g) = -orbit(g) elementwise
                std::vector<ElementIndex> negated;
                for (ElementIndex x : orbit) negated.push_back(G.neg_index(x));
                std::sort(negated.begin(), negated.end());
                CHECK(negated == weight_orbit_indices(A, G, G.neg_index(g)));
                // symmetric weights close every orbit under negation
                if (group_symmetric(A, G)) CHECK(negated == orbit);
            }
        }
    }
}

TEST_CASE("orbits depend on weights only mod the exponent") {
    const auto G = FiniteAbelianGroup::parse("C3xC9");
    const auto A = WeightSet::from_list({-2, 1, 4});
    std::vector<long long> shifted_values;
    for (long long a : A.weights()) shifted_values.push_back(a + G.exponent());
    const auto shifted = WeightSet::from_list(shifted_values);
    for (ElementIndex g = 0; g < G.order(); ++g)
        CHECK(weight_orbit_indices(A, G, g) == weight_orbit_indices(shifted, G, g));
}

TEST_CASE("weights congruent to zero mod the exponent are permitted") {
    // a = 9 on C_9 kills every element, so every orbit is {0}
    const auto c9 = FiniteAbelianGroup::parse("C9");
    const auto A = WeightSet::from_list({9});
    for (ElementIndex g = 0; g < 9; ++g)
        CHECK(weight_orbit_indices(A, c9, g) == std::vector<ElementIndex>{0});
}
