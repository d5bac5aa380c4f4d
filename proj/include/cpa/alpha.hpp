#pragma once

#include <functional>
#include <vector>

#include "cpa/bigint.hpp"
#include "cpa/tpoly.hpp"

namespace cpa {

// alpha(1..n): avoidance counts, or the occurrence-tracking polynomials
// alpha(n,t) when tracked.
struct AlphaSequence {
    bool tracked = false;
    std::vector<TPoly> entries; // entries[i] = alpha(i+1)

    int n() const { return static_cast<int>(entries.size()); }
    BigInt at0(int len) const { return entries[len - 1].at0(); }
    bool operator==(const AlphaSequence&) const = default;
};

// alpha(n) = n*alpha(n-1) + sum_{k=1..n} binom(n,k)*C(k)*alpha(n-k),
// alpha(0) = 1.  Works over BigInt or TPoly cluster weights.
template <class R>
std::vector<R> alpha_recurrence(const std::function<R(int)>& cluster_weight, int n) {
    BinomialTable binom(n);
    std::vector<R> cw(n + 1);
    for (int k = 1; k <= n; ++k) cw[k] = cluster_weight(k);
    std::vector<R> a(n + 1);
    a[0] = R(BigInt(1));
    for (int i = 1; i <= n; ++i) {
        R v = R(BigInt(i)) * a[i - 1];
        for (int k = 1; k <= i; ++k) {
            if constexpr (std::is_same_v<R, BigInt>) {
                v += binom(i, k) * cw[k] * a[i - k];
            } else {
                v += TPoly(binom(i, k)) * cw[k] * a[i - k];
            }
        }
        a[i] = v;
    }
    return {a.begin() + 1, a.end()};
}

} // namespace cpa
