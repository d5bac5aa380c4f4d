#include "cpa/analysis.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "cpa/tailfe.hpp"

namespace cpa {

int ClassificationReport::proven_count() const {
    return static_cast<int>(
        std::count_if(classes.begin(), classes.end(),
                      [](const WilfClass& c) { return c.proven; }));
}

int ClassificationReport::conjectural_count() const {
    return static_cast<int>(classes.size()) - proven_count();
}

namespace {

std::vector<BigInt> fingerprint(const PatternSet& B, int depth) {
    TailEngine engine(B);
    auto seq = engine.alpha_fast(depth, false);
    std::vector<BigInt> fp;
    for (const auto& e : seq.entries) fp.push_back(e.at0());
    return fp;
}

// Certify a candidate group; fills per-class certificates and status.
WilfClass certify_group(std::vector<PatternSet> members, bool allow_symmetry) {
    WilfClass cls;
    std::sort(members.begin(), members.end());
    cls.members = std::move(members);
    cls.proven = true;
    for (size_t i = 0; i + 1 < cls.members.size(); ++i)
        cls.certificates.push_back(
            theorem2_certificate(cls.members[i], cls.members[i + 1], allow_symmetry));
    // proven needs every pair certified, not just the chain
    for (size_t i = 0; i < cls.members.size() && cls.proven; ++i)
        for (size_t j = i + 1; j < cls.members.size() && cls.proven; ++j)
            if (!theorem2_certificate(cls.members[i], cls.members[j], allow_symmetry))
                cls.proven = false;
    return cls;
}

} // namespace

ClassificationReport wilf_classify(int pattern_len, int set_size, int depth,
                                   const ClassifyOptions& opts) {
    ClassificationReport report;
    report.pattern_len = pattern_len;
    report.set_size = set_size;
    report.depth = depth;
    report.recheck_depth = depth + opts.recheck_extra;

    auto reps = canonical_pattern_sets(pattern_len, set_size, opts.enumeration_cap);
    std::map<std::vector<BigInt>, std::vector<PatternSet>> groups;
    for (const auto& B : reps) groups[fingerprint(B, depth)].push_back(B);

    for (auto& [fp, members] : groups) {
        (void)fp;
        WilfClass cls = certify_group(members, opts.allow_symmetry_images);
        if (cls.proven || cls.members.size() == 1) {
            report.classes.push_back(std::move(cls));
            continue;
        }
        // fingerprints matched at `depth` but certification is incomplete:
        // refingerprint deeper and split accidental collisions
        std::map<std::vector<BigInt>, std::vector<PatternSet>> regrouped;
        for (const auto& B : cls.members)
            regrouped[fingerprint(B, report.recheck_depth)].push_back(B);
        for (auto& [fp2, members2] : regrouped) {
            (void)fp2;
            report.classes.push_back(certify_group(members2, opts.allow_symmetry_images));
        }
    }
    std::sort(report.classes.begin(), report.classes.end(),
              [](const WilfClass& a, const WilfClass& b) { return a.members < b.members; });
    return report;
}

std::string classification_text(const ClassificationReport& r, bool verbose) {
    std::ostringstream os;
    os << "pattern length " << r.pattern_len << ", sets of " << r.set_size
       << ", fingerprint depth " << r.depth << " (recheck " << r.recheck_depth << ")\n";
    os << r.classes.size() << " classes: " << r.proven_count() << " proven, "
       << r.conjectural_count() << " conjectural\n";
    int idx = 0;
    for (const auto& c : r.classes) {
        ++idx;
        if (!verbose && c.members.size() == 1) continue;
        os << "  class " << idx << " [" << (c.proven ? "proven" : "conjectural") << "]";
        for (const auto& m : c.members) os << " " << m.str();
        os << "\n";
    }
    return os.str();
}

AsymEstimate asym_estimate(const PatternSet& B, int N, int digits, bool aitken) {
    if (N < 4) throw Error("asym: N must be >= 4");
    if (digits < 1) throw Error("asym: digits must be >= 1");
    AsymEstimate est(B);
    est.N = N;
    est.digits = digits;
    est.aitken = aitken;

    TailEngine engine(B);
    auto seq = engine.alpha_fast(N, false);
    auto a = [&](int n) { return seq.at0(n); };
    BigRat r3(a(N - 2), BigInt(N - 2) * a(N - 3));
    BigRat r2(a(N - 1), BigInt(N - 1) * a(N - 2));
    BigRat r1(a(N), BigInt(N) * a(N - 1));
    est.rho_exact = r1;
    if (aitken) {
        BigRat d1 = r1 - r2, d2 = r2 - r3;
        if (d1 - d2 != 0) est.rho_exact = r1 - d1 * d1 / (d1 - d2);
    }
    est.stabilization = r1 >= r2 ? BigRat(r1 - r2) : BigRat(r2 - r1);

    // gamma = alpha(N) / (rho^N * N!), exact
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    BigInt rn = numerator(est.rho_exact), rd = denominator(est.rho_exact);
    BigInt rho_pow_num = 1, rho_pow_den = 1;
    for (int i = 0; i < N; ++i) { rho_pow_num *= rn; rho_pow_den *= rd; }
    est.gamma_exact = BigRat(a(N) * rho_pow_den, rho_pow_num * factorial(N));

    BigRat tol(BigInt(1), [&] { BigInt s = 1; for (int i = 0; i < digits; ++i) s *= 10; return s; }());
    est.insufficient_n = est.stabilization > tol;
    return est;
}

std::vector<AsymRankRow> asym_rank(int len, int N, int digits, bool aitken) {
    // group canonical single patterns into classes first so equivalent
    // patterns share a row
    int class_depth = std::min(N, 12);
    auto report = wilf_classify(len, 1, class_depth);
    std::vector<AsymRankRow> rows;
    for (const auto& cls : report.classes) {
        std::vector<Permutation> members;
        for (const auto& B : cls.members) members.push_back(B[0]);
        std::sort(members.begin(), members.end());
        rows.push_back({std::move(members),
                        asym_estimate(cls.members.front(), N, digits, aitken)});
    }
    std::sort(rows.begin(), rows.end(), [](const AsymRankRow& a, const AsymRankRow& b) {
        if (a.estimate.rho_exact != b.estimate.rho_exact)
            return a.estimate.rho_exact > b.estimate.rho_exact;
        return a.members < b.members;
    });
    return rows;
}

std::string asym_rank_text(const std::vector<AsymRankRow>& rows) {
    std::ostringstream os;
    size_t w = 7;
    for (const auto& r : rows) {
        std::string label;
        for (size_t i = 0; i < r.members.size(); ++i)
            label += (i ? " ~ " : "") + r.members[i].str();
        w = std::max(w, label.size());
    }
    os << std::string(w - 7, ' ') << "pattern | gamma | rho\n";
    for (const auto& r : rows) {
        std::string label;
        for (size_t i = 0; i < r.members.size(); ++i)
            label += (i ? " ~ " : "") + r.members[i].str();
        os << std::string(w - label.size(), ' ') << label << " | "
           << r.estimate.gamma_str() << " | " << r.estimate.rho_str();
        if (r.estimate.insufficient_n) os << "  (warning: ratio not stabilized)";
        os << "\n";
    }
    return os.str();
}

} // namespace cpa
