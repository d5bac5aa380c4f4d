#include "cpa/brute.hpp"

#include <algorithm>
#include <numeric>

namespace cpa {

namespace {

void require_cap(int value, int cap, const char* what) {
    if (value > cap)
        throw CapExceeded(std::string(what) + " " + std::to_string(value) +
                          " exceeds brute-force cap " + std::to_string(cap));
}

// all pattern windows of p as sorted (start, end) pairs
std::vector<std::pair<int, int>> mark_windows(const Permutation& p, const PatternSet& B) {
    std::vector<std::pair<int, int>> w;
    for (const auto& pat : B.patterns())
        for (int i : occurrences(p, pat)) w.emplace_back(i, i + pat.size() - 1);
    std::sort(w.begin(), w.end());
    return w;
}

} // namespace

std::vector<Cluster> enumerate_clusters(const PatternSet& B, int k, int cap) {
    require_cap(k, cap, "cluster length");
    std::vector<Cluster> out;
    std::vector<int> v(k);
    std::iota(v.begin(), v.end(), 1);
    do {
        Permutation p{std::vector<int>(v)};
        auto windows = mark_windows(p, B);
        if (windows.empty()) continue;
        std::vector<std::pair<int, int>> chain;
        auto extend = [&](auto&& self, size_t from) -> void {
            auto [ci, cj] = chain.back();
            if (cj == k) out.push_back({p, chain});
            for (size_t t = from; t < windows.size(); ++t) {
                auto [i, j] = windows[t];
                if (i > ci && i <= cj) {
                    chain.push_back(windows[t]);
                    self(self, t + 1);
                    chain.pop_back();
                }
            }
        };
        for (size_t s = 0; s < windows.size(); ++s) {
            if (windows[s].first != 1) break; // sorted: starts > 1 follow
            chain = {windows[s]};
            extend(extend, s + 1);
        }
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

TPoly brute_C(const PatternSet& B, int k, int cap) {
    TPoly sum;
    for (const auto& c : enumerate_clusters(B, k, cap))
        sum += TPoly::t_minus_one_pow(c.marks());
    return sum;
}

AlphaSequence brute_alpha(const PatternSet& B, int n, bool track_t, int cap) {
    require_cap(n, cap, "length");
    AlphaSequence seq;
    seq.tracked = track_t;
    for (int len = 1; len <= n; ++len) {
        std::vector<BigInt> by_count; // index = total occurrences
        std::vector<int> v(len);
        std::iota(v.begin(), v.end(), 1);
        do {
            Permutation p{std::vector<int>(v)};
            int occ = 0;
            for (const auto& pat : B.patterns())
                occ += static_cast<int>(occurrences(p, pat).size());
            if (!track_t && occ > 0) continue;
            if (occ >= static_cast<int>(by_count.size())) by_count.resize(occ + 1);
            by_count[occ] += 1;
        } while (std::next_permutation(v.begin(), v.end()));
        seq.entries.push_back(TPoly::from_coeffs(std::move(by_count)));
    }
    return seq;
}

} // namespace cpa
