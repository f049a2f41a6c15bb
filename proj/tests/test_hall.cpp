#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gentle/hall.hpp"

using namespace gentle;

namespace {
IndecMultiset one(const IndecType& t) { return {{t, 1}}; }
}

TEST_CASE("grassmannian sizes and subspace enumeration agree") {
    CHECK(grassmannian_size(2, 1, 2) == 3);
    CHECK(grassmannian_size(2, 1, 3) == 4);
    CHECK(grassmannian_size(3, 1, 2) == 7);
    CHECK(grassmannian_size(3, 2, 2) == 7);
    CHECK(grassmannian_size(4, 2, 2) == 35);
    for (int d = 0; d <= 3; ++d)
        for (int e = 0; e <= d; ++e) {
            CHECK(long(all_subspaces<Fp<2>>(d, e).size()) == grassmannian_size(d, e, 2));
            CHECK(long(all_subspaces<Fp<3>>(d, e).size()) == grassmannian_size(d, e, 3));
        }
    // enumerated spans are pairwise distinct
    auto subs = all_subspaces<Fp<2>>(3, 2);
    for (size_t a = 0; a < subs.size(); ++a)
        for (size_t b = a + 1; b < subs.size(); ++b) {
            bool same = true;
            for (const auto& row : subs[a].rows())
                if (!subs[b].contains(row)) same = false;
            CHECK_FALSE(same);
        }
}

TEST_CASE("submodule variety counts: unique-submodule witnesses") {
    HallOracle oracle(3);
    IndecType W11 = IndecType::W(1, 1), U22 = IndecType::U(2, 2);
    IndecType U12 = IndecType::U(1, 2), U21 = IndecType::U(2, 1);
    // U(1,2) has a unique submodule isomorphic to U(2,2) with quotient W(1,1)
    CHECK(oracle.submodule_variety_count(one(W11), one(U22), one(U12), 2) == 1);
    CHECK(oracle.submodule_variety_count(one(W11), one(U22), one(U21), 2) == 1);
    // and no submodule isomorphic to W(1,1)
    CHECK(oracle.submodule_variety_count(one(U22), one(W11), one(U12), 2) == 0);
    // dimension-vector mismatch short-circuits to zero
    CHECK(oracle.submodule_variety_count(one(W11), one(W11), one(U12), 2) == 0);
}

TEST_CASE("euler characteristics") {
    HallOracle oracle(3);
    IndecType W11 = IndecType::W(1, 1), U22 = IndecType::U(2, 2), U21 = IndecType::U(2, 1);
    CHECK(oracle.euler_characteristic(one(W11), one(U22), one(U21)) == 1);
    IndecType V1 = IndecType::V(1), V3 = IndecType::V(3);
    CHECK(oracle.euler_characteristic(one(V1), one(V3), one(IndecType::U(3, 1))) == 1);
    // empty variety: U(1,3) has no submodule V(3) with quotient V(1)
    CHECK(oracle.euler_characteristic(one(V1), one(V3), one(IndecType::U(1, 3))) == 0);
}

TEST_CASE("non-constant point counts fit a linear polynomial") {
    // submodules of S_1 + S_1 isomorphic to S_1 with quotient S_1 form a
    // projective line: q+1 points, chi = 2
    HallOracle oracle(2);
    IndecMultiset two{{IndecType::W(1, 1), 2}};
    IndecMultiset oneS = one(IndecType::W(1, 1));
    CHECK(oracle.submodule_variety_count(oneS, oneS, two, 2) == 3);
    CHECK(oracle.submodule_variety_count(oneS, oneS, two, 3) == 4);
    CHECK(oracle.submodule_variety_count(oneS, oneS, two, 5) == 6);
    CHECK(oracle.euler_characteristic(oneS, oneS, two) == 2);
}

TEST_CASE("hall bracket oracle") {
    HallOracle oracle(3);
    auto b1 = oracle.hall_bracket(IndecType::W(1, 1), IndecType::W(2, 2));
    CHECK(b1 == std::map<IndecType, long>{{IndecType::W(1, 2), 1}});
    auto b2 = oracle.hall_bracket(IndecType::V(1), IndecType::V(3));
    CHECK(b2 == std::map<IndecType, long>{{IndecType::U(3, 1), 1}, {IndecType::U(1, 3), -1}});
    for (const IndecType& X : {IndecType::V(2), IndecType::U(1, 2), IndecType::W(1, 1)})
        CHECK(oracle.hall_bracket(X, X).empty());
}

TEST_CASE("budget guard is explicit") {
    HallOracle tight(3, {2, 3, 5}, 2);
    IndecType U11 = IndecType::U(1, 1);
    CHECK_THROWS_AS(tight.submodule_variety_count(one(IndecType::W(1, 1)), one(IndecType::U(2, 1)),
                                                  one(U11), 2),
                    BudgetExceeded);
}

TEST_CASE("oracle configuration is validated") {
    CHECK_THROWS_AS(HallOracle(3, {2}), std::invalid_argument);
    CHECK_THROWS_AS(HallOracle(3, {2, 2, 3}), std::invalid_argument);
    HallOracle o(3);
    CHECK_THROWS_AS(o.submodule_variety_count(one(IndecType::V(1)), one(IndecType::V(1)),
                                              one(IndecType::V(1)), 11),
                    std::invalid_argument);
}
