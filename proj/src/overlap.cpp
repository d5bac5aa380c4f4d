#include "cpa/overlap.hpp"

#include <algorithm>
#include <numeric>

namespace cpa {

OverlapProfile overlap_maps(const Permutation& sigma, const Permutation& pi) {
    const int n = sigma.size(), m = pi.size();
    OverlapProfile prof;
    for (int j = 1; j < std::min(n, m); ++j) {
        auto tail = Permutation::reduce(
            std::span<const int>(sigma.values()).subspan(n - j, j));
        auto head = Permutation::reduce(
            std::span<const int>(pi.values()).subspan(0, j));
        if (tail != head) continue;
        OverlapMap map;
        for (int r = 1; r <= j; ++r) map.emplace_back(pi[r], sigma[n - j + r]);
        std::sort(map.begin(), map.end());
        prof[j] = std::move(map);
    }
    return prof;
}

namespace {

PatternSet apply_symmetry(const PatternSet& B, int s) {
    std::vector<Permutation> pats;
    for (const auto& p : B.patterns()) {
        Permutation q = p;
        if (s & 1) q = q.reversed();
        if (s & 2) q = q.complemented();
        pats.push_back(std::move(q));
    }
    return PatternSet(std::move(pats));
}

bool profiles_match(const PatternSet& B, const PatternSet& Bp,
                    const std::vector<int>& pairing) {
    const int n = B.size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (overlap_maps(B[i], B[j]) != overlap_maps(Bp[pairing[i]], Bp[pairing[j]]))
                return false;
    return true;
}

} // namespace

std::optional<EquivCertificate> theorem2_certificate(const PatternSet& B,
                                                     const PatternSet& Bp,
                                                     bool allow_symmetry_images) {
    if (B.size() != Bp.size()) return std::nullopt;
    const int n = B.size();
    for (int s = 0; s < (allow_symmetry_images ? 4 : 1); ++s) {
        PatternSet image = apply_symmetry(Bp, s);
        std::vector<int> idx(n);
        std::iota(idx.begin(), idx.end(), 0);
        do {
            bool lengths_ok = true;
            for (int i = 0; i < n && lengths_ok; ++i)
                lengths_ok = B[i].size() == image[idx[i]].size();
            if (lengths_ok && profiles_match(B, image, idx))
                return EquivCertificate{idx, s};
        } while (std::next_permutation(idx.begin(), idx.end()));
    }
    return std::nullopt;
}

std::vector<PatternSet> symmetry_orbit(const PatternSet& B) {
    std::vector<PatternSet> orbit;
    for (int s = 0; s < 4; ++s) {
        PatternSet image = apply_symmetry(B, s);
        if (std::find(orbit.begin(), orbit.end(), image) == orbit.end())
            orbit.push_back(std::move(image));
    }
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

PatternSet canonical_form(const PatternSet& B) {
    return symmetry_orbit(B).front();
}

std::vector<PatternSet> canonical_pattern_sets(int pattern_len, int set_size,
                                               long long enumeration_cap) {
    if (pattern_len < 2) throw CapExceeded("pattern length must be >= 2");
    long long nperms = 1;
    for (int i = 2; i <= pattern_len; ++i) nperms *= i;
    long long space = 1;
    for (int i = 0; i < set_size; ++i) space = space * (nperms - i) / (i + 1);
    if (space > enumeration_cap)
        throw CapExceeded("enumeration space " + std::to_string(space) +
                          " exceeds cap " + std::to_string(enumeration_cap));

    std::vector<Permutation> all;
    std::vector<int> v(pattern_len);
    std::iota(v.begin(), v.end(), 1);
    do {
        all.emplace_back(std::vector<int>(v));
    } while (std::next_permutation(v.begin(), v.end()));

    std::vector<PatternSet> reps;
    std::vector<int> pick(set_size);
    std::iota(pick.begin(), pick.end(), 0);
    const int total = static_cast<int>(all.size());
    while (true) {
        std::vector<Permutation> pats;
        for (int i : pick) pats.push_back(all[i]);
        PatternSet B(std::move(pats)); // same-length sets are never redundant
        if (B == canonical_form(B)) reps.push_back(std::move(B));
        // next combination
        int i = set_size - 1;
        while (i >= 0 && pick[i] == total - set_size + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < set_size; ++j) pick[j] = pick[j - 1] + 1;
    }
    std::sort(reps.begin(), reps.end());
    return reps;
}

} // namespace cpa
