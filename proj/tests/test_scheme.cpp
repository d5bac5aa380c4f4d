#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "battery.hpp"
#include "cpa/brute.hpp"
#include "cpa/scheme.hpp"

using namespace cpa;

namespace {
Permutation P(const char* s) { return Permutation::parse(s); }
} // namespace

TEST_CASE("scheme for 2143 reproduces the worked recurrence") {
    ClusterScheme s = build_scheme(PatternSet({P("2 1 4 3")}));
    REQUIRE(s.transitions.size() == 1);
    REQUIRE(s.transitions[0].size() == 2);
    const Transition& j1 = s.transitions[0][0];
    const Transition& j2 = s.transitions[0][1];
    CHECK(j1.overlap_len == 1);
    CHECK(j1.k_shift == 3);
    CHECK(j1.determined == std::vector<DeterminedSlot>{{3, 2, 1}}); // y3 = x2 - 1
    CHECK(j2.overlap_len == 2);
    CHECK(j2.k_shift == 2);
    CHECK(j2.determined ==
          std::vector<DeterminedSlot>{{3, 1, 0}, {4, 2, 0}}); // y3 = x1, y4 = x2
}

TEST_CASE("scheme for 132 and 12") {
    ClusterScheme s132 = build_scheme(PatternSet({P("1 3 2")}));
    REQUIRE(s132.transitions[0].size() == 1);
    CHECK(s132.transitions[0][0].overlap_len == 1);
    CHECK(s132.transitions[0][0].k_shift == 2);
    CHECK(s132.transitions[0][0].determined == std::vector<DeterminedSlot>{{2, 1, 0}});

    ClusterScheme s12 = build_scheme(PatternSet({P("1 2")}));
    REQUIRE(s12.transitions[0].size() == 1);
    CHECK(s12.transitions[0][0].k_shift == 1);
    CHECK(s12.transitions[0][0].determined == std::vector<DeterminedSlot>{{2, 1, 0}});
    // alpha for {12} is all ones
    SchemeEngine engine(PatternSet({P("1 2")}));
    AlphaSequence a = engine.alpha(6, false);
    for (int n = 1; n <= 6; ++n) CHECK(a.at0(n) == 1);
}

TEST_CASE("eval_C_tail examples") {
    SchemeEngine e2143(PatternSet({P("2 1 4 3")}));
    CHECK(e2143.eval_C_tail(4, 0, {1, 2, 3, 4}) == TPoly::t_minus_one());
    CHECK(e2143.eval_C_tail(3, 0, {1, 2, 3}).is_zero()); // k < |p|

    SchemeEngine e123(PatternSet({P("1 2 3")}));
    CHECK(e123.eval_C_tail(5, 0, {3, 4, 5}) ==
          TPoly::t_minus_one_pow(2) + TPoly::t_minus_one_pow(3));
    // the only nonzero length-5 tail
    for (int x1 = 1; x1 <= 3; ++x1)
        for (int x2 = x1 + 1; x2 <= 4; ++x2)
            for (int x3 = x2 + 1; x3 <= 5; ++x3)
                if (!(x1 == 3 && x2 == 4 && x3 == 5))
                    CHECK(e123.eval_C_tail(5, 0, {x1, x2, x3}).is_zero());
}

TEST_CASE("C_of_k matches the cluster oracle over the battery") {
    for (const auto& B : oracle_battery()) {
        SchemeEngine engine(B);
        for (int k = 1; k <= 9; ++k)
            CHECK(engine.C_of_k(k) == brute_C(B, k));
    }
}

TEST_CASE("alpha via scheme matches brute force with t tracked") {
    for (const auto& B : oracle_battery()) {
        SchemeEngine engine(B);
        CHECK(engine.alpha(8, true) == brute_alpha(B, 8, true));
    }
}

TEST_CASE("alpha via scheme reproduces the n=10 list") {
    SchemeEngine engine(PatternSet({P("1 2 3"), P("3 2 1")}));
    AlphaSequence a = engine.alpha(10, false);
    std::vector<long> want{1, 2, 4, 10, 32, 122, 544, 2770, 15872, 101042};
    for (int n = 1; n <= 10; ++n) CHECK(a.at0(n) == want[n - 1]);
}

TEST_CASE("alpha at t=1 is n!") {
    for (const auto& B : {PatternSet({P("2 1 4 3")}), PatternSet({P("1 2 3"), P("3 2 1")})}) {
        SchemeEngine engine(B);
        AlphaSequence a = engine.alpha(12, true);
        for (int n = 1; n <= 12; ++n) CHECK(a.entries[n - 1].eval(1) == factorial(n));
    }
}

TEST_CASE("memoization does not change values") {
    PatternSet B({P("1 3 2 4")});
    SchemeEngine with(B, true), without(B, false);
    for (int k = 1; k <= 8; ++k) CHECK(with.C_of_k(k) == without.C_of_k(k));
}

TEST_CASE("scheme text rendering mentions both branches") {
    std::string text = scheme_text(build_scheme(PatternSet({P("2 1 4 3")})));
    CHECK(text.find("y3 = x2 - 1") != std::string::npos);
    CHECK(text.find("y3 = x1, y4 = x2") != std::string::npos);
    CHECK(text.find("k-3") != std::string::npos);
    CHECK(text.find("k-2") != std::string::npos);
}
