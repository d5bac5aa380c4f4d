#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "cpa/alpha.hpp"
#include "cpa/overlap.hpp"
#include "cpa/perm.hpp"
#include "cpa/tpoly.hpp"

namespace cpa {

// y_slot = x_source_rank - shift, forced by the reduction when the tail
// of the previous pattern is chopped off.
struct DeterminedSlot {
    int slot;        // position in the new tail (1-based rank)
    int source_rank; // rank of the shared value in the old tail
    int shift;       // # chopped values below it, a constant of the pattern
    bool operator==(const DeterminedSlot&) const = default;
};

// One way the previous pattern can overlap the head of the last one.
struct Transition {
    int last_pattern; // index of p1 in the pattern set (being chopped)
    int prev_pattern; // index of p2 (new last pattern)
    int overlap_len;  // j
    int k_shift;      // delta = |p1| - j
    std::vector<DeterminedSlot> determined; // sorted by slot, exactly j entries
    bool operator==(const Transition&) const = default;
};

struct ClusterScheme {
    PatternSet patterns;
    std::vector<std::vector<Transition>> transitions; // per last-pattern index
};

ClusterScheme build_scheme(const PatternSet& B);

// human-readable recurrence, one block per pattern
std::string scheme_text(const ClusterScheme& s);

// Memoized evaluation of C(k,p;[tail]) by direct iteration over free
// tail slots.  The reference mid-speed engine.
class SchemeEngine {
  public:
    explicit SchemeEngine(const PatternSet& B, bool use_memo = true)
        : scheme_(build_scheme(B)), use_memo_(use_memo) {}

    const ClusterScheme& scheme() const { return scheme_; }

    TPoly eval_C_tail(int k, int pattern_idx, const std::vector<int>& tail);
    TPoly C_of_k(int k);
    AlphaSequence alpha(int n, bool track_t);

  private:
    ClusterScheme scheme_;
    bool use_memo_;
    std::unordered_map<uint64_t, TPoly> memo_;
};

// 6 bits per entry; requires k <= 60
uint64_t pack_tail(int pattern_idx, int k, const std::vector<int>& tail);

} // namespace cpa
