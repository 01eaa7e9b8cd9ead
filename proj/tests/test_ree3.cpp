#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "depthlab/ree3.hpp"

using namespace depthlab;

TEST_CASE("R(3) model basics") {
    R3Group r3 = build_r3();
    REQUIRE(r3.group);
    CHECK(r3.group->degree() == 9);
    CHECK(r3.group->order() == 1512);
    REQUIRE(r3.maximal_reps.size() == 4);
    CHECK(r3.maximal_reps[0].order() == 54);
    CHECK(r3.maximal_reps[1].order() == 168);
    CHECK(r3.maximal_reps[2].order() == 42);
    CHECK(r3.maximal_reps[3].order() == 504);
    // the derived subgroup representative is normal, the others are not
    for (std::size_t i = 0; i < 4; ++i) {
        bool normal = true;
        for (const auto& x : r3.group->generators())
            normal = normal && conjugate(r3.maximal_reps[i], x) == r3.maximal_reps[i];
        CHECK(normal == (i == 3));
    }
}

TEST_CASE("build is deterministic") {
    R3Group a = build_r3(0);
    R3Group b = build_r3(0);
    for (std::size_t i = 0; i < 4; ++i) CHECK(a.maximal_reps[i] == b.maximal_reps[i]);
}

TEST_CASE("depth survey matches the known row") {
    R3Group r3 = build_r3();
    auto survey = r3_depth_survey(r3);
    REQUIRE(survey.size() == 4);
    CHECK(survey[0].name == "N(P0)");
    CHECK(*survey[0].comb.dc == 5);
    CHECK(*survey[0].ord.d == 5);
    CHECK(survey[0].core.bound == 5);
    CHECK(*survey[1].comb.dc == 7);
    CHECK(*survey[1].ord.d == 7);
    CHECK(survey[1].core.bound == 7);
    CHECK(*survey[2].comb.dc == 5);
    CHECK(*survey[2].ord.d == 5);
    CHECK(survey[2].core.bound == 5);
    CHECK(*survey[3].comb.dc == 2);
    CHECK(*survey[3].ord.d == 2);
    for (const auto& e : survey) CHECK(*e.ord.d <= *e.comb.dc);
}
