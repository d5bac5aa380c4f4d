#include "cpa/scheme.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cpa {

ClusterScheme build_scheme(const PatternSet& B) {
    ClusterScheme s{B, {}};
    s.transitions.resize(B.size());
    for (int i1 = 0; i1 < B.size(); ++i1) {
        const Permutation& p1 = B[i1];
        const int m1 = p1.size();
        for (int i2 = 0; i2 < B.size(); ++i2) {
            const Permutation& p2 = B[i2];
            const int m2 = p2.size();
            for (const auto& [j, map] : overlap_maps(p2, p1)) {
                (void)map;
                Transition tr;
                tr.last_pattern = i1;
                tr.prev_pattern = i2;
                tr.overlap_len = j;
                tr.k_shift = m1 - j;
                std::vector<int> chopped;
                for (int s2 = j + 1; s2 <= m1; ++s2) chopped.push_back(p1[s2]);
                for (int r = 1; r <= j; ++r) {
                    int rank = p1[r];          // shared value's rank in the old tail
                    int slot = p2[m2 - j + r]; // its rank in the new tail
                    int shift = static_cast<int>(
                        std::count_if(chopped.begin(), chopped.end(),
                                      [&](int c) { return c < rank; }));
                    tr.determined.push_back({slot, rank, shift});
                }
                std::sort(tr.determined.begin(), tr.determined.end(),
                          [](const DeterminedSlot& a, const DeterminedSlot& b) {
                              return a.slot < b.slot;
                          });
                s.transitions[i1].push_back(std::move(tr));
            }
        }
    }
    return s;
}

std::string scheme_text(const ClusterScheme& s) {
    std::ostringstream os;
    for (int i = 0; i < s.patterns.size(); ++i) {
        const Permutation& p = s.patterns[i];
        const int m = p.size();
        auto tail_vars = [&](char v) {
            std::string r;
            for (int a = 1; a <= m; ++a)
                r += std::string(a > 1 ? "," : "") + v + std::to_string(a);
            return r;
        };
        os << "C(k, " << p.str() << "; [" << tail_vars('x') << "]):\n";
        os << "  = 0                      if k < " << m << "\n";
        os << "  = weight(" << p.str() << ")         if k = " << m << "\n";
        os << "  for k > " << m << ": sum of\n";
        for (const auto& tr : s.transitions[i]) {
            const Permutation& p2 = s.patterns[tr.prev_pattern];
            os << "    weight(" << p.str() << ") * sum over 1 <= y1 < ... < y"
               << p2.size() << " <= k-" << tr.k_shift << " with ";
            for (size_t d = 0; d < tr.determined.size(); ++d) {
                const auto& ds = tr.determined[d];
                if (d) os << ", ";
                os << "y" << ds.slot << " = x" << ds.source_rank;
                if (ds.shift) os << " - " << ds.shift;
            }
            os << " of C(k-" << tr.k_shift << ", " << p2.str() << "; [y...])\n";
        }
    }
    return os.str();
}

uint64_t pack_tail(int pattern_idx, int k, const std::vector<int>& tail) {
    uint64_t key = (static_cast<uint64_t>(pattern_idx) << 6) | static_cast<uint64_t>(k);
    for (int v : tail) key = (key << 6) | static_cast<uint64_t>(v);
    return key;
}

TPoly SchemeEngine::eval_C_tail(int k, int pattern_idx, const std::vector<int>& tail) {
    const Permutation& p1 = scheme_.patterns[pattern_idx];
    const int m = p1.size();
    if (k < m) return {};
    if (k > 60) throw CapExceeded("scheme engine limited to k <= 60");
    uint64_t key = 0;
    if (use_memo_) {
        key = pack_tail(pattern_idx, k, tail);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }

    TPoly total;
    for (const auto& tr : scheme_.transitions[pattern_idx]) {
        const int kp = k - tr.k_shift;
        const Permutation& p2 = scheme_.patterns[tr.prev_pattern];
        const int m2 = p2.size();
        if (kp < m2) continue;
        // determined slot values, visited in slot order: must be strictly
        // increasing and inside [1, k']
        std::vector<int> fixed(m2 + 1, 0);
        bool ok = true;
        int prev = 0;
        for (const auto& ds : tr.determined) {
            int v = tail[ds.source_rank - 1] - ds.shift;
            if (v < 1 || v > kp || v <= prev) { ok = false; break; }
            fixed[ds.slot] = v;
            prev = v;
        }
        if (!ok) continue;
        // direct iteration over all strictly increasing completions
        std::vector<int> y(m2 + 1, 0);
        auto fill = [&](auto&& self, int slot, int low) -> void {
            if (slot > m2) {
                total += eval_C_tail(kp, tr.prev_pattern,
                                     std::vector<int>(y.begin() + 1, y.end()));
                return;
            }
            if (fixed[slot]) {
                if (fixed[slot] >= low) {
                    y[slot] = fixed[slot];
                    self(self, slot + 1, fixed[slot] + 1);
                }
                return;
            }
            for (int v = low; v <= kp - (m2 - slot); ++v) {
                // skip past any fixed value we must stay below
                bool clash = false;
                for (int s2 = slot + 1; s2 <= m2 && !clash; ++s2)
                    if (fixed[s2] && fixed[s2] <= v + (s2 - slot - 1)) clash = true;
                if (clash) break;
                y[slot] = v;
                self(self, slot + 1, v + 1);
            }
        };
        fill(fill, 1, 1);
    }
    TPoly value = TPoly::t_minus_one() * total;
    if (k == m) {
        bool iota = true;
        for (int a = 0; a < m; ++a)
            if (tail[a] != a + 1) { iota = false; break; }
        if (iota) value += TPoly::t_minus_one();
    }
    if (use_memo_) memo_[key] = value;
    return value;
}

TPoly SchemeEngine::C_of_k(int k) {
    if (k < 1) throw Error("C_of_k: k must be >= 1");
    TPoly sum;
    for (int i = 0; i < scheme_.patterns.size(); ++i) {
        const int m = scheme_.patterns[i].size();
        if (k < m) continue;
        std::vector<int> tail(m);
        std::iota(tail.begin(), tail.end(), 1);
        while (true) {
            sum += eval_C_tail(k, i, tail);
            int a = m - 1;
            while (a >= 0 && tail[a] == k - (m - 1 - a)) --a;
            if (a < 0) break;
            ++tail[a];
            for (int b = a + 1; b < m; ++b) tail[b] = tail[b - 1] + 1;
        }
    }
    return sum;
}

AlphaSequence SchemeEngine::alpha(int n, bool track_t) {
    AlphaSequence seq;
    seq.tracked = track_t;
    if (track_t) {
        auto a = alpha_recurrence<TPoly>([&](int k) { return C_of_k(k); }, n);
        seq.entries = std::move(a);
    } else {
        auto a = alpha_recurrence<BigInt>([&](int k) { return C_of_k(k).at0(); }, n);
        for (auto& v : a) seq.entries.emplace_back(std::move(v));
    }
    return seq;
}

} // namespace cpa
