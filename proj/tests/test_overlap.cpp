#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cpa/brute.hpp"
#include "cpa/overlap.hpp"

using namespace cpa;

namespace {
Permutation P(const char* s) { return Permutation::parse(s); }
} // namespace

TEST_CASE("overlap maps of 2143 with itself") {
    OverlapProfile prof = overlap_maps(P("2 1 4 3"), P("2 1 4 3"));
    REQUIRE(prof.size() == 2);
    CHECK(prof[1] == OverlapMap{{2, 3}});
    CHECK(prof[2] == OverlapMap{{1, 3}, {2, 4}});
}

TEST_CASE("overlap maps of 132 and 123") {
    OverlapProfile p132 = overlap_maps(P("1 3 2"), P("1 3 2"));
    REQUIRE(p132.size() == 1);
    CHECK(p132[1] == OverlapMap{{1, 2}});

    OverlapProfile p123 = overlap_maps(P("1 2 3"), P("1 2 3"));
    REQUIRE(p123.size() == 2);
    CHECK(p123[1] == OverlapMap{{1, 3}});
    CHECK(p123[2] == OverlapMap{{1, 2}, {2, 3}});
}

TEST_CASE("theorem 2 certificates") {
    auto cert = theorem2_certificate(PatternSet({P("1 3 4 2")}), PatternSet({P("1 4 3 2")}));
    REQUIRE(cert.has_value());
    CHECK(overlap_maps(P("1 3 4 2"), P("1 3 4 2")) ==
          overlap_maps(P("1 4 3 2"), P("1 4 3 2")));

    PatternSet same({P("2 1 4 3")});
    auto ident = theorem2_certificate(same, same);
    REQUIRE(ident.has_value());
    CHECK(ident->pairing == std::vector<int>{0});
    CHECK(ident->symmetry == 0);

    CHECK(!theorem2_certificate(PatternSet({P("1 2 3")}), PatternSet({P("1 3 2")})));
}

TEST_CASE("certificate symmetry") {
    std::vector<std::pair<PatternSet, PatternSet>> pairs = {
        {PatternSet({P("1 3 4 2")}), PatternSet({P("1 4 3 2")})},
        {PatternSet({P("1 2 3")}), PatternSet({P("1 3 2")})},
        {PatternSet({P("1 2 3"), P("3 2 1")}), PatternSet({P("1 3 2"), P("2 3 1")})},
    };
    for (const auto& [a, b] : pairs)
        CHECK(theorem2_certificate(a, b).has_value() ==
              theorem2_certificate(b, a).has_value());
}

TEST_CASE("certified pairs share the tracked distribution") {
    PatternSet a({P("1 3 4 2")}), b({P("1 4 3 2")});
    REQUIRE(theorem2_certificate(a, b).has_value());
    for (int n = 1; n <= 7; ++n)
        CHECK(brute_alpha(a, n, true).entries.back() ==
              brute_alpha(b, n, true).entries.back());
}

TEST_CASE("symmetry orbits") {
    auto orbit123 = symmetry_orbit(PatternSet({P("1 2 3")}));
    CHECK(orbit123.size() == 2); // reverse = complement here

    auto orbit132 = symmetry_orbit(PatternSet({P("1 3 2")}));
    CHECK(orbit132.size() == 4);

    auto closed = symmetry_orbit(PatternSet({P("1 2 3"), P("3 2 1")}));
    CHECK(closed.size() == 1);
}

TEST_CASE("alpha is invariant across the symmetry orbit") {
    for (const auto& B : {PatternSet({P("1 3 2")}), PatternSet({P("2 1 4 3")}),
                          PatternSet({P("1 2 3"), P("2 1 3")})}) {
        AlphaSequence base = brute_alpha(B, 6, true);
        for (const auto& image : symmetry_orbit(B))
            CHECK(brute_alpha(image, 6, true) == base);
    }
}

TEST_CASE("profile cardinality structure is preserved by reverse+complement") {
    // reversal turns tails into heads, so the arguments swap
    std::vector<Permutation> pats{P("1 3 2"), P("2 1 4 3"), P("1 2 3"), P("2 4 1 3")};
    for (const auto& a : pats)
        for (const auto& b : pats) {
            OverlapProfile p = overlap_maps(a, b);
            OverlapProfile q = overlap_maps(b.reversed().complemented(),
                                            a.reversed().complemented());
            REQUIRE(p.size() == q.size());
            for (const auto& [j, map] : p) {
                REQUIRE(q.count(j));
                CHECK(map.size() == q[j].size());
            }
        }
}

TEST_CASE("canonical pattern sets") {
    auto len3 = canonical_pattern_sets(3, 1);
    REQUIRE(len3.size() == 2);
    CHECK(len3[0] == PatternSet({P("1 2 3")}));
    CHECK(len3[1] == PatternSet({P("1 3 2")}));

    CHECK(canonical_pattern_sets(2, 1).size() == 1);

    // orbit sizes over all 3-subsets of S3 must sum to binom(6,3) = 20
    auto len33 = canonical_pattern_sets(3, 3);
    size_t total = 0;
    for (const auto& B : len33) total += symmetry_orbit(B).size();
    CHECK(total == 20);

    CHECK(canonical_pattern_sets(4, 1).size() == 8);

    CHECK_THROWS_AS(canonical_pattern_sets(7, 2), CapExceeded);
}
