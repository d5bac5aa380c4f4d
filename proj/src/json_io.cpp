#include "cpa/json_io.hpp"

namespace cpa {

json to_json(const TPoly& p) {
    json j = json::array();
    for (const auto& c : p.coeffs()) j.push_back(c.str());
    return j;
}

TPoly tpoly_from_json(const json& j) {
    std::vector<BigInt> c;
    for (const auto& v : j) c.emplace_back(v.get<std::string>());
    return TPoly::from_coeffs(std::move(c));
}

json to_json(const UPoly& p) {
    json j = json::array();
    for (const auto& c : p.coeffs()) j.push_back(to_json(c));
    return j;
}

UPoly upoly_from_json(const json& j) {
    std::vector<TPoly> c;
    for (const auto& v : j) c.push_back(tpoly_from_json(v));
    return UPoly::from_coeffs(std::move(c));
}

json to_json(const URat& r) {
    return json{{"num", to_json(r.num())}, {"den", to_json(r.den())}};
}

URat urat_from_json(const json& j) {
    return URat(upoly_from_json(j.at("num")), upoly_from_json(j.at("den")));
}

json to_json(const Permutation& p) { return json(p.values()); }

Permutation permutation_from_json(const json& j) {
    return Permutation(j.get<std::vector<int>>());
}

json to_json(const PatternSet& b) {
    json j = json::array();
    for (const auto& p : b.patterns()) j.push_back(to_json(p));
    return j;
}

PatternSet pattern_set_from_json(const json& j) {
    std::vector<Permutation> pats;
    for (const auto& v : j) pats.push_back(permutation_from_json(v));
    return PatternSet(std::move(pats));
}

PatternSet parse_pattern_set_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad pattern set JSON: ") + e.what());
    }
    if (!j.is_array()) throw ParseError("pattern set JSON must be an array");
    if (!j.empty() && j[0].is_number()) // single pattern as one array
        return PatternSet({permutation_from_json(j)});
    return pattern_set_from_json(j);
}

json to_json(const AlphaSequence& a) {
    json entries = json::array();
    for (const auto& e : a.entries) entries.push_back(to_json(e));
    return json{{"tracked", a.tracked}, {"entries", entries}};
}

AlphaSequence alpha_from_json(const json& j) {
    AlphaSequence a;
    a.tracked = j.at("tracked").get<bool>();
    for (const auto& e : j.at("entries")) a.entries.push_back(tpoly_from_json(e));
    return a;
}

json to_json(const OverlapProfile& p) {
    json j = json::array();
    for (const auto& [len, map] : p) {
        json pairs = json::array();
        for (const auto& [a, b] : map) pairs.push_back(json::array({a, b}));
        j.push_back(json::array({len, pairs}));
    }
    return j;
}

OverlapProfile overlap_profile_from_json(const json& j) {
    OverlapProfile p;
    for (const auto& entry : j) {
        OverlapMap map;
        for (const auto& pr : entry.at(1)) map.emplace_back(pr.at(0), pr.at(1));
        p[entry.at(0).get<int>()] = std::move(map);
    }
    return p;
}

json to_json(const EquivCertificate& c) {
    return json{{"pairing", c.pairing}, {"symmetry", c.symmetry}};
}

EquivCertificate certificate_from_json(const json& j) {
    return EquivCertificate{j.at("pairing").get<std::vector<int>>(),
                            j.at("symmetry").get<int>()};
}

json to_json(const Cluster& c) {
    json intervals = json::array();
    for (const auto& [i, jj] : c.intervals) intervals.push_back(json::array({i, jj}));
    return json{{"perm", to_json(c.perm)}, {"intervals", intervals}};
}

json to_json(const ClusterScheme& s) {
    json transitions = json::array();
    for (const auto& per_pattern : s.transitions) {
        json list = json::array();
        for (const auto& tr : per_pattern) {
            json det = json::array();
            for (const auto& d : tr.determined)
                det.push_back(json{{"slot", d.slot},
                                   {"source", d.source_rank},
                                   {"shift", d.shift}});
            list.push_back(json{{"last", tr.last_pattern},
                                {"prev", tr.prev_pattern},
                                {"overlap_len", tr.overlap_len},
                                {"k_shift", tr.k_shift},
                                {"determined", det}});
        }
        transitions.push_back(list);
    }
    return json{{"patterns", to_json(s.patterns)}, {"transitions", transitions}};
}

ClusterScheme scheme_from_json(const json& j) {
    ClusterScheme s{pattern_set_from_json(j.at("patterns")), {}};
    for (const auto& list : j.at("transitions")) {
        std::vector<Transition> per_pattern;
        for (const auto& t : list) {
            Transition tr;
            tr.last_pattern = t.at("last").get<int>();
            tr.prev_pattern = t.at("prev").get<int>();
            tr.overlap_len = t.at("overlap_len").get<int>();
            tr.k_shift = t.at("k_shift").get<int>();
            for (const auto& d : t.at("determined"))
                tr.determined.push_back({d.at("slot").get<int>(),
                                         d.at("source").get<int>(),
                                         d.at("shift").get<int>()});
            per_pattern.push_back(std::move(tr));
        }
        s.transitions.push_back(std::move(per_pattern));
    }
    return s;
}

namespace {

json kexp_json(const KExponent& e) { return json::array({e.a, e.b}); }
KExponent kexp_from_json(const json& j) { return {j.at(0).get<int>(), j.at(1).get<int>()}; }

} // namespace

json to_json(const TailFE& fe) {
    json terms = json::array();
    for (const auto& per_pattern : fe.terms) {
        json list = json::array();
        for (const auto& t : per_pattern) {
            json numer = json::array();
            for (const auto& e : t.numerator.exps) numer.push_back(kexp_json(e));
            json lf = json::array();
            for (const auto& e : t.length_factors) lf.push_back(kexp_json(e));
            list.push_back(json{{"sign", t.sign},
                                {"numerator", numer},
                                {"denominator", t.denominator},
                                {"length_factors", lf},
                                {"k_shift", t.k_shift},
                                {"target", t.target},
                                {"args", t.argument_monomials}});
        }
        terms.push_back(list);
    }
    return json{{"patterns", to_json(fe.patterns)}, {"terms", terms}};
}

TailFE tail_fe_from_json(const json& j) {
    TailFE fe{pattern_set_from_json(j.at("patterns")), {}, {}};
    for (const auto& list : j.at("terms")) {
        std::vector<FETerm> per_pattern;
        for (const auto& t : list) {
            FETerm term;
            term.sign = t.at("sign").get<int>();
            for (const auto& e : t.at("numerator")) term.numerator.exps.push_back(kexp_from_json(e));
            term.denominator = t.at("denominator").get<std::vector<ZMonomial>>();
            for (const auto& e : t.at("length_factors")) term.length_factors.push_back(kexp_from_json(e));
            term.k_shift = t.at("k_shift").get<int>();
            term.target = t.at("target").get<int>();
            term.argument_monomials = t.at("args").get<std::vector<ZMonomial>>();
            per_pattern.push_back(std::move(term));
        }
        fe.terms.push_back(std::move(per_pattern));
    }
    // plans are derived data; rebuild from the pattern set
    fe.plans = build_tail_fe(fe.patterns).plans;
    return fe;
}

namespace {

json rat_json(const BigRat& r) {
    return json{{"num", boost::multiprecision::numerator(r).str()},
                {"den", boost::multiprecision::denominator(r).str()}};
}

BigRat rat_from_json(const json& j) {
    return BigRat(BigInt(j.at("num").get<std::string>()),
                  BigInt(j.at("den").get<std::string>()));
}

} // namespace

json to_json(const ClassificationReport& r) {
    json classes = json::array();
    for (const auto& c : r.classes) {
        json members = json::array();
        for (const auto& m : c.members) members.push_back(to_json(m));
        json certs = json::array();
        for (const auto& cert : c.certificates)
            certs.push_back(cert ? to_json(*cert) : json(nullptr));
        classes.push_back(json{{"members", members},
                               {"status", c.proven ? "proven" : "conjectural"},
                               {"certificates", certs}});
    }
    return json{{"pattern_len", r.pattern_len},
                {"set_size", r.set_size},
                {"depth", r.depth},
                {"recheck_depth", r.recheck_depth},
                {"classes", classes}};
}

ClassificationReport classification_from_json(const json& j) {
    ClassificationReport r;
    r.pattern_len = j.at("pattern_len").get<int>();
    r.set_size = j.at("set_size").get<int>();
    r.depth = j.at("depth").get<int>();
    r.recheck_depth = j.at("recheck_depth").get<int>();
    for (const auto& c : j.at("classes")) {
        WilfClass cls;
        for (const auto& m : c.at("members")) cls.members.push_back(pattern_set_from_json(m));
        cls.proven = c.at("status").get<std::string>() == "proven";
        for (const auto& cert : c.at("certificates"))
            cls.certificates.push_back(cert.is_null()
                                           ? std::optional<EquivCertificate>{}
                                           : std::optional<EquivCertificate>{certificate_from_json(cert)});
        r.classes.push_back(std::move(cls));
    }
    return r;
}

json to_json(const AsymEstimate& e) {
    return json{{"patterns", to_json(e.patterns)},
                {"N", e.N},
                {"digits", e.digits},
                {"rho", e.rho_str()},
                {"gamma", e.gamma_str()},
                {"rho_exact", rat_json(e.rho_exact)},
                {"gamma_exact", rat_json(e.gamma_exact)},
                {"stabilization", rat_json(e.stabilization)},
                {"insufficient_n", e.insufficient_n},
                {"aitken", e.aitken}};
}

AsymEstimate asym_estimate_from_json(const json& j) {
    AsymEstimate e(pattern_set_from_json(j.at("patterns")));
    e.N = j.at("N").get<int>();
    e.digits = j.at("digits").get<int>();
    e.rho_exact = rat_from_json(j.at("rho_exact"));
    e.gamma_exact = rat_from_json(j.at("gamma_exact"));
    e.stabilization = rat_from_json(j.at("stabilization"));
    e.insufficient_n = j.at("insufficient_n").get<bool>();
    e.aitken = j.at("aitken").get<bool>();
    return e;
}

json to_json(const std::vector<AsymRankRow>& rows) {
    json j = json::array();
    for (const auto& r : rows) {
        json members = json::array();
        for (const auto& m : r.members) members.push_back(to_json(m));
        j.push_back(json{{"members", members}, {"estimate", to_json(r.estimate)}});
    }
    return j;
}

} // namespace cpa
