#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cpa/bigint.hpp"
#include "cpa/overlap.hpp"
#include "cpa/perm.hpp"

namespace cpa {

// One equivalence class of canonical pattern-set representatives.
// proven: every pair of members carries a Theorem-2 certificate.
// conjectural: fingerprints agree (also at the recheck depth) but at
// least one pair has no certificate.
struct WilfClass {
    std::vector<PatternSet> members;
    bool proven = true;
    // certificates[i] links members[i] to members[i+1] when present
    std::vector<std::optional<EquivCertificate>> certificates;
    bool operator==(const WilfClass&) const = default;
};

struct ClassificationReport {
    int pattern_len = 0;
    int set_size = 0;
    int depth = 0;         // fingerprint length N
    int recheck_depth = 0; // conjectural groups re-fingerprinted to here
    std::vector<WilfClass> classes;
    bool operator==(const ClassificationReport&) const = default;

    int proven_count() const;
    int conjectural_count() const;
};

struct ClassifyOptions {
    bool allow_symmetry_images = true;
    int recheck_extra = 2;
    long long enumeration_cap = 5'000'000;
};

ClassificationReport wilf_classify(int pattern_len, int set_size, int depth,
                                   const ClassifyOptions& opts = {});

std::string classification_text(const ClassificationReport& r, bool verbose = false);

// Growth-constant estimate for alpha(n) ~ gamma * rho^n * n!.
struct AsymEstimate {
    explicit AsymEstimate(PatternSet B) : patterns(std::move(B)) {}
    PatternSet patterns;
    int N = 0;
    int digits = 0;
    BigRat rho_exact;
    BigRat gamma_exact;
    BigRat stabilization; // |rho_hat(N) - rho_hat(N-1)|
    bool insufficient_n = false;
    bool aitken = false;
    std::string rho_str() const { return decimal_string(rho_exact, digits); }
    std::string gamma_str() const { return decimal_string(gamma_exact, digits); }
};

AsymEstimate asym_estimate(const PatternSet& B, int N, int digits, bool aitken = false);

struct AsymRankRow {
    std::vector<Permutation> members; // patterns sharing the class, sorted
    AsymEstimate estimate;
};

// One row per c-Wilf class of single length-`len` patterns, sorted by
// rho descending.
std::vector<AsymRankRow> asym_rank(int len, int N, int digits, bool aitken = false);

std::string asym_rank_text(const std::vector<AsymRankRow>& rows);

} // namespace cpa
