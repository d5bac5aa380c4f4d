#pragma once

#include <utility>
#include <vector>

#include "cpa/alpha.hpp"
#include "cpa/perm.hpp"
#include "cpa/tpoly.hpp"

namespace cpa {

// Exhaustive-enumeration oracles.  Slow on purpose; every faster engine
// is tested against these.

inline constexpr int kDefaultBruteCap = 10;

// A permutation together with a chain of marked pattern windows:
// intervals [i1,j1],...,[im,jm] with i1 = 1, jm = k, i < i' <= j
// for consecutive windows, every window reducing to a pattern.
struct Cluster {
    Permutation perm;
    std::vector<std::pair<int, int>> intervals;
    int marks() const { return static_cast<int>(intervals.size()); }
    bool operator==(const Cluster&) const = default;
};

std::vector<Cluster> enumerate_clusters(const PatternSet& B, int k,
                                        int cap = kDefaultBruteCap);

// sum over clusters of length k of (t-1)^marks
TPoly brute_C(const PatternSet& B, int k, int cap = kDefaultBruteCap);

// alpha(1..n) by scanning every permutation; tracked mode bins
// permutations by total occurrence count.
AlphaSequence brute_alpha(const PatternSet& B, int n, bool track_t,
                          int cap = kDefaultBruteCap);

} // namespace cpa
