#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cpa/json_io.hpp"
#include "cpa/tailfe.hpp"

using namespace cpa;

namespace {
Permutation P(const char* s) { return Permutation::parse(s); }
} // namespace

TEST_CASE("tpoly json round trip uses decimal strings") {
    TPoly p = TPoly::from_coeffs({BigInt("123456789012345678901234567890"), -7, 0, 2});
    json j = to_json(p);
    CHECK(j[0] == "123456789012345678901234567890");
    CHECK(tpoly_from_json(j) == p);
}

TEST_CASE("upoly and urat round trip") {
    UPoly p = UPoly::monomial(TPoly::t_minus_one(), 3) + UPoly(TPoly(BigInt(5)));
    CHECK(upoly_from_json(to_json(p)) == p);
    URat r(p, UPoly(TPoly(BigInt(1))) - UPoly::monomial(TPoly(BigInt(1)), 1));
    URat back = urat_from_json(to_json(r));
    CHECK(back == r);
}

TEST_CASE("alpha sequence round trip") {
    AlphaSequence a;
    a.tracked = true;
    a.entries = {TPoly(BigInt(1)), TPoly::from_coeffs({4, 2}),
                 TPoly::from_coeffs({122, 300, 236, 60, 2})};
    CHECK(alpha_from_json(to_json(a)) == a);
}

TEST_CASE("overlap profile round trip and shape") {
    OverlapProfile prof = overlap_maps(P("2 1 4 3"), P("2 1 4 3"));
    json j = to_json(prof);
    CHECK(j.dump() == "[[1,[[2,3]]],[2,[[1,3],[2,4]]]]");
    CHECK(overlap_profile_from_json(j) == prof);
}

TEST_CASE("certificate round trip") {
    EquivCertificate c{{1, 0, 2}, 2};
    CHECK(certificate_from_json(to_json(c)) == c);
}

TEST_CASE("scheme round trip") {
    ClusterScheme s = build_scheme(PatternSet({P("1 2 3"), P("3 2 1")}));
    ClusterScheme back = scheme_from_json(to_json(s));
    CHECK(back.patterns == s.patterns);
    CHECK(back.transitions[0] == s.transitions[0]);
    CHECK(back.transitions[1] == s.transitions[1]);
}

TEST_CASE("tail fe round trip") {
    TailFE fe = build_tail_fe(PatternSet({P("1 3 2")}));
    json j = to_json(fe);
    TailFE back = tail_fe_from_json(j);
    CHECK(to_json(back) == j);
    CHECK(back.terms[0] == fe.terms[0]);
}

TEST_CASE("classification report round trip") {
    ClassificationReport r = wilf_classify(3, 1, 8);
    json j = to_json(r);
    ClassificationReport back = classification_from_json(j);
    CHECK(back == r);
    CHECK(to_json(back) == j);
}

TEST_CASE("asym estimate round trip of exact fields") {
    AsymEstimate e = asym_estimate(PatternSet({P("1 2 3")}), 12, 6);
    AsymEstimate back = asym_estimate_from_json(to_json(e));
    CHECK(back.rho_exact == e.rho_exact);
    CHECK(back.gamma_exact == e.gamma_exact);
    CHECK(back.stabilization == e.stabilization);
    CHECK(back.N == e.N);
    CHECK(back.rho_str() == e.rho_str());
}

TEST_CASE("pattern set parse accepts json and one-line") {
    CHECK(PatternSet::parse("[[1,2,3],[3,2,1]]") ==
          PatternSet({P("1 2 3"), P("3 2 1")}));
    CHECK_THROWS_AS(PatternSet::parse("[[1,2],[1,2,3"), ParseError);
    CHECK_THROWS_AS(PatternSet::parse("{\"a\":1}"), ParseError);
}
