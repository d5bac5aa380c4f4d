#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cpa/perm.hpp"

namespace cpa {

// The pairing {(pi_r, sigma_{n-j+r})} recording how a length-j tail of
// sigma can coincide with a length-j head of pi.  Kept sorted; compared
// as a set.
using OverlapMap = std::vector<std::pair<int, int>>;

// One map per feasible overlap length j, 1 <= j < min(|sigma|,|pi|).
using OverlapProfile = std::map<int, OverlapMap>;

OverlapProfile overlap_maps(const Permutation& sigma, const Permutation& pi);

// Certificate of strong c-Wilf-equivalence: a length-preserving
// bijection i -> pairing[i] between the patterns of B and B' under
// which all pairwise overlap profiles agree.  symmetry applied to B'
// first: 0 none, 1 reverse, 2 complement, 3 both.
struct EquivCertificate {
    std::vector<int> pairing;
    int symmetry = 0;
    bool operator==(const EquivCertificate&) const = default;
};

std::optional<EquivCertificate> theorem2_certificate(const PatternSet& B,
                                                     const PatternSet& Bp,
                                                     bool allow_symmetry_images = true);

// Elementwise images of B under {id, reverse, complement, both}, deduplicated.
std::vector<PatternSet> symmetry_orbit(const PatternSet& B);

// Lexicographically least member of the symmetry orbit.
PatternSet canonical_form(const PatternSet& B);

// One representative per symmetry orbit over all size-`set_size` sets of
// length-`pattern_len` patterns, in lexicographic order.
std::vector<PatternSet> canonical_pattern_sets(int pattern_len, int set_size,
                                               long long enumeration_cap = 5'000'000);

} // namespace cpa
