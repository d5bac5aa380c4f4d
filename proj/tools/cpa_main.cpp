// cpa: count permutations avoiding (or containing k occurrences of) a set
// of consecutive patterns, classify equivalences, estimate growth constants.
//
// Engines: naive (exhaustive scan), scheme (cluster recurrence), tailfe
// (cluster-tail functional equation; default).
//
// Exit codes: 0 success, 2 usage/parse error, 3 cap exceeded,
// 4 verification mismatch.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "cpa/analysis.hpp"
#include "cpa/brute.hpp"
#include "cpa/json_io.hpp"
#include "cpa/scheme.hpp"
#include "cpa/tailfe.hpp"

namespace {

using namespace cpa;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;
constexpr int kExitMismatch = 4;

std::string alpha_list_str(const AlphaSequence& a) {
    std::string s = "[";
    for (int i = 0; i < a.n(); ++i) {
        if (i) s += ", ";
        s += a.entries[i].str();
    }
    return s + "]";
}

std::string profile_str(const OverlapProfile& prof) {
    std::string s = "{";
    bool first_map = true;
    for (const auto& [j, map] : prof) {
        (void)j;
        if (!first_map) s += ", ";
        s += "{";
        for (size_t i = 0; i < map.size(); ++i) {
            if (i) s += ", ";
            s += "(" + std::to_string(map[i].first) + "," + std::to_string(map[i].second) + ")";
        }
        s += "}";
        first_map = false;
    }
    return s + "}";
}

struct Options {
    std::string format = "text";
    std::string patterns;
    std::string p1, p2, pattern;
    std::string engine = "tailfe";
    int n = 10;
    int k = 0;
    int brute_cap = kDefaultBruteCap;
    long long enum_cap = 5'000'000;
    int len = 0, size = 1, depth = 12, recheck_extra = 2;
    int N = 30, digits = 10;
    bool track = false;
    bool aitken = false;
    bool direct_only = false;
    bool verbose = false;
    bool inject_fault = false;
};

bool json_mode(const Options& o) { return o.format == "json"; }

int cmd_count(const Options& o) {
    PatternSet B = PatternSet::parse(o.patterns);
    AlphaSequence a;
    if (o.engine == "naive") {
        a = brute_alpha(B, o.n, o.track, o.brute_cap);
    } else if (o.engine == "scheme") {
        SchemeEngine engine(B);
        a = engine.alpha(o.n, o.track);
    } else if (o.engine == "tailfe") {
        TailEngine engine(B);
        a = engine.alpha_fast(o.n, o.track);
    } else {
        throw ParseError("unknown engine: " + o.engine);
    }
    if (json_mode(o)) std::cout << to_json(a).dump() << "\n";
    else std::cout << alpha_list_str(a) << "\n";
    return kExitOk;
}

int cmd_verify(const Options& o) {
    PatternSet B = PatternSet::parse(o.patterns);
    const int n = o.n;
    if (n > o.brute_cap)
        throw CapExceeded("verify needs n <= brute cap (" + std::to_string(o.brute_cap) +
                          "); use --brute-cap to raise it");
    const int kmax = o.k > 0 ? o.k : std::min(n, o.brute_cap);

    AlphaSequence a_naive = brute_alpha(B, n, true, o.brute_cap);
    SchemeEngine scheme_engine(B);
    AlphaSequence a_scheme = scheme_engine.alpha(n, true);
    if (o.inject_fault && !a_scheme.entries.empty())
        a_scheme.entries.back() += TPoly(BigInt(1));
    TailEngine tail_engine(B);
    AlphaSequence a_tail = tail_engine.alpha_fast(n, true);

    bool ok = true;
    std::cout << "alpha(n,t) cross-check for " << B.str() << "\n";
    for (int i = 1; i <= n; ++i) {
        bool agree = a_naive.entries[i - 1] == a_scheme.entries[i - 1] &&
                     a_naive.entries[i - 1] == a_tail.entries[i - 1];
        std::cout << "  n=" << i << "  naive=" << a_naive.entries[i - 1].str()
                  << "  scheme=" << a_scheme.entries[i - 1].str()
                  << "  tailfe=" << a_tail.entries[i - 1].str()
                  << (agree ? "  AGREE" : "  MISMATCH") << "\n";
        ok = ok && agree;
    }
    std::cout << "C(k) cross-check\n";
    for (int k = 1; k <= kmax; ++k) {
        TPoly cb = brute_C(B, k, o.brute_cap);
        TPoly cs = scheme_engine.C_of_k(k);
        TPoly cf = tail_engine.C_of_k_fast(k);
        bool agree = cb == cs && cb == cf;
        std::cout << "  k=" << k << "  brute=" << cb.str() << "  scheme=" << cs.str()
                  << "  tailfe=" << cf.str() << (agree ? "  AGREE" : "  MISMATCH") << "\n";
        ok = ok && agree;
    }
    std::cout << (ok ? "all engines agree" : "engines disagree") << "\n";
    return ok ? kExitOk : kExitMismatch;
}

int cmd_scheme(const Options& o) {
    PatternSet B = PatternSet::parse(o.patterns);
    ClusterScheme s = build_scheme(B);
    if (json_mode(o)) std::cout << to_json(s).dump(2) << "\n";
    else std::cout << scheme_text(s);
    return kExitOk;
}

int cmd_tail_fe(const Options& o) {
    PatternSet B = PatternSet::parse(o.patterns);
    TailFE fe = build_tail_fe(B);
    if (json_mode(o)) std::cout << to_json(fe).dump(2) << "\n";
    else std::cout << tail_fe_text(fe);
    return kExitOk;
}

int cmd_overlaps(const Options& o) {
    Permutation p1 = Permutation::parse(o.p1);
    Permutation p2 = Permutation::parse(o.p2);
    OverlapProfile prof = overlap_maps(p1, p2);
    if (json_mode(o)) std::cout << to_json(prof).dump() << "\n";
    else std::cout << profile_str(prof) << "\n";
    return kExitOk;
}

int cmd_classify(const Options& o) {
    ClassifyOptions copts;
    copts.allow_symmetry_images = !o.direct_only;
    copts.recheck_extra = o.recheck_extra;
    copts.enumeration_cap = o.enum_cap;
    ClassificationReport r = wilf_classify(o.len, o.size, o.depth, copts);
    if (json_mode(o)) std::cout << to_json(r).dump(2) << "\n";
    else std::cout << classification_text(r, o.verbose);
    return kExitOk;
}

int cmd_asym(const Options& o) {
    PatternSet B = PatternSet::parse(o.pattern);
    AsymEstimate est = asym_estimate(B, o.N, o.digits, o.aitken);
    if (json_mode(o)) {
        std::cout << to_json(est).dump(2) << "\n";
    } else {
        std::cout << "pattern " << B.str() << "  N=" << est.N << "\n";
        std::cout << "gamma = " << est.gamma_str() << "\n";
        std::cout << "rho   = " << est.rho_str() << "\n";
        if (est.insufficient_n)
            std::cout << "warning: |rho_hat(N) - rho_hat(N-1)| = "
                      << decimal_string(est.stabilization, est.digits)
                      << " exceeds 10^-" << est.digits << "; increase N\n";
    }
    return kExitOk;
}

int cmd_asym_rank(const Options& o) {
    auto rows = asym_rank(o.len, o.N, o.digits, o.aitken);
    if (json_mode(o)) std::cout << to_json(rows).dump(2) << "\n";
    else std::cout << asym_rank_text(rows);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"consecutive pattern avoidance: exact counts, classification, asymptotics"};
    app.require_subcommand(1);
    app.fallthrough(); // let subcommands see the global --format
    Options o;

    app.add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    auto add_patterns = [&](CLI::App* c) {
        c->add_option("--patterns", o.patterns,
                      "pattern set: JSON [[...],[...]] or one-line \"2 1 4 3\"")
            ->required();
    };
    auto add_caps = [&](CLI::App* c) {
        c->add_option("--brute-cap", o.brute_cap, "brute-force size cap")
            ->envname("CPA_BRUTE_CAP")
            ->capture_default_str();
    };

    CLI::App* count = app.add_subcommand("count", "alpha(1..n), avoiding or tracking");
    add_patterns(count);
    count->add_option("--n", o.n, "compute alpha(1..n)")->required();
    count->add_option("--engine", o.engine, "naive|scheme|tailfe")
        ->check(CLI::IsMember({"naive", "scheme", "tailfe"}))
        ->capture_default_str();
    count->add_flag("--track", o.track, "track occurrence counts in t");
    add_caps(count);

    CLI::App* verify = app.add_subcommand("verify", "run all three engines and compare");
    add_patterns(verify);
    verify->add_option("--n", o.n, "alpha cross-check bound")->required();
    verify->add_option("--k", o.k, "C(k) cross-check bound (default min(n, cap))");
    add_caps(verify);
    verify->add_flag("--inject-fault", o.inject_fault)->group(""); // test hook

    CLI::App* scheme = app.add_subcommand("scheme", "print the cluster recurrence");
    add_patterns(scheme);

    CLI::App* tailfe = app.add_subcommand("tail-fe", "print the tail functional equation");
    add_patterns(tailfe);

    CLI::App* overlaps = app.add_subcommand("overlaps", "overlap maps of tails of p1 with heads of p2");
    overlaps->add_option("--p1", o.p1, "first pattern")->required();
    overlaps->add_option("--p2", o.p2, "second pattern")->required();

    CLI::App* classify = app.add_subcommand("classify", "c-Wilf-equivalence classification");
    classify->add_option("--len", o.len, "pattern length")->required();
    classify->add_option("--size", o.size, "patterns per set")->capture_default_str();
    classify->add_option("--depth", o.depth, "fingerprint depth N")->capture_default_str();
    classify->add_option("--recheck-extra", o.recheck_extra,
                         "extra depth for conjectural rechecks")->capture_default_str();
    classify->add_flag("--direct-only", o.direct_only,
                       "certificates without trying symmetry images");
    classify->add_flag("--verbose", o.verbose, "list singleton classes too");
    classify->add_option("--enum-cap", o.enum_cap, "enumeration cap")
        ->envname("CPA_ENUM_CAP")
        ->capture_default_str();

    CLI::App* asym = app.add_subcommand("asym", "growth constants gamma, rho for one pattern");
    asym->add_option("--pattern", o.pattern, "single pattern")->required();
    asym->add_option("--N", o.N, "sequence length used")->capture_default_str();
    asym->add_option("--digits", o.digits, "decimal digits")->capture_default_str();
    asym->add_flag("--aitken", o.aitken, "Aitken-extrapolated ratio");

    CLI::App* rank = app.add_subcommand("asym-rank", "rank all length-len patterns by rho");
    rank->add_option("--len", o.len, "pattern length")->required();
    rank->add_option("--N", o.N, "sequence length used")->capture_default_str();
    rank->add_option("--digits", o.digits, "decimal digits")->capture_default_str();
    rank->add_flag("--aitken", o.aitken, "Aitken-extrapolated ratio");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (count->parsed()) return cmd_count(o);
        if (verify->parsed()) return cmd_verify(o);
        if (scheme->parsed()) return cmd_scheme(o);
        if (tailfe->parsed()) return cmd_tail_fe(o);
        if (overlaps->parsed()) return cmd_overlaps(o);
        if (classify->parsed()) return cmd_classify(o);
        if (asym->parsed()) return cmd_asym(o);
        if (rank->parsed()) return cmd_asym_rank(o);
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
