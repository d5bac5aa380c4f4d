#pragma once

#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "cpa/alpha.hpp"
#include "cpa/scheme.hpp"
#include "cpa/upoly.hpp"

namespace cpa {

// Monomial in the tail variables z_1..z_m: exponent per slot.
using ZMonomial = std::vector<int>;

// Exponent affine in k: value a + b*k.
struct KExponent {
    int a = 0;
    int b = 0;
    bool operator==(const KExponent&) const = default;
};

// Monomial whose per-slot exponents may carry a k term, e.g. z2^k z3^{k+1}.
struct KMonomial {
    std::vector<KExponent> exps;
    bool operator==(const KMonomial&) const = default;
};

// x_var + k_coeff*k + constant; var = 0 means no variable reference.
struct AffineExpr {
    int var = 0;
    int k_coeff = 0;
    int constant = 0;
    bool operator==(const AffineExpr&) const = default;
    std::string str(const char* varname = "x") const;
};

// The two-term split (M^lower - M^{upper+1}) / (1 - M).
struct GeomSplit {
    AffineExpr lower_exp; // exponent of the leading piece
    AffineExpr upper_exp; // exponent of the trailing piece (sign flips)
    ZMonomial denom;      // the (1 - M) factor
};

// Finite geometric series over M^x, x from lower to upper.
// Throws DegenerateBase when M is the empty monomial.
GeomSplit geom_sum(const ZMonomial& M, const AffineExpr& lower, const AffineExpr& upper);

// Ordering and bounds of the tail-variable summations for one transition:
// kept variables stay outermost (they rebuild into the recursive call),
// chopped ones are eliminated innermost-first.
struct SummationPlan {
    int transition_index = 0;
    std::vector<int> kept;    // ranks i_1 < ... < i_j
    std::vector<int> chopped; // ranks i_{j+1} < ... < i_m
    // bounds indexed by rank (1-based, size m+1); slot 0 unused
    std::vector<AffineExpr> lower;
    std::vector<AffineExpr> upper;
    // per chopped rank: the kept rank bounding it above (0 when the bound is k)
    std::vector<int> bound_by;
};

// One summand of the Theorem-style functional equation:
//   sign * (t-1) * numerator / prod(1 - D) * F(k - k_shift, target; args)
struct FETerm {
    int sign = 1;
    KMonomial numerator;
    std::vector<ZMonomial> denominator;
    std::vector<KExponent> length_factors; // scalar (a + b*k) factors; empty in practice
    int k_shift = 0;
    int target = 0; // pattern index
    std::vector<ZMonomial> argument_monomials; // one per slot of the target
    bool operator==(const FETerm&) const = default;
};

struct TailFE {
    PatternSet patterns;
    std::vector<std::vector<FETerm>> terms;        // per pattern index
    std::vector<std::vector<SummationPlan>> plans; // per pattern index
};

TailFE build_tail_fe(const PatternSet& B);

std::string tail_fe_text(const TailFE& fe);

namespace detail {

template <class R>
struct RingOf;
template <>
struct RingOf<BigInt> {
    static BigInt weight() { return BigInt(-1); }
    static BigInt scalar(const BigInt& v) { return v; }
};
template <>
struct RingOf<TPoly> {
    static TPoly weight() { return TPoly::t_minus_one(); }
    static TPoly scalar(const BigInt& v) { return TPoly(v); }
};

// Shared evaluation core.  Values of the cluster tail generating
// function collapse onto powers of one variable u.  Admissible exponent
// vectors (every denominator pairing >= 1) are evaluated through the
// functional equation with exact rational arithmetic; vectors that make
// a denominator collapse are answered from the cluster-tail table,
// which the same transitions drive.
template <class R>
class TailCore {
  public:
    TailCore(const ClusterScheme& scheme, const TailFE& fe)
        : scheme_(scheme), fe_(fe), levels_(scheme.patterns.size()) {}

    // complete value of F(k, p; [u^e...]) as an exact polynomial
    PolyU<R> eval_poly(int k, int pat, const std::vector<int>& e);

    // the same value as the unreduced rational sum of the FE terms
    RatU<R> eval_rat(int k, int pat, const std::vector<int>& e);

    R C_fast(int k);
    std::vector<R> alpha(int n);

    // direct projection of the tail table: sum over tails of value * u^<e,x>
    PolyU<R> tail_sum_poly(int k, int pat, const std::vector<int>& e);

    bool admissible(int pat, const std::vector<int>& e) const;
    void build_levels_to(int K);

  private:
    std::pair<PolyU<R>, PolyU<R>> eval_parts(int k, int pat, const std::vector<int>& e);

    const ClusterScheme& scheme_;
    const TailFE& fe_;
    // levels_[pat][k]: tail -> C(k, pat; [tail]), nonzero entries only
    std::vector<std::vector<std::unordered_map<uint64_t, R>>> levels_;
    int built_k_ = 0;
    // (k, pat, slot mask) -> packed determined values -> aggregated value
    std::map<std::tuple<int, int, uint64_t>, std::unordered_map<uint64_t, R>> aggregates_;
    std::map<std::tuple<int, int, std::vector<int>>, PolyU<R>> memo_;
};

extern template class TailCore<BigInt>;
extern template class TailCore<TPoly>;

} // namespace detail

// The fast engine: builds the functional equation once per pattern set
// and keeps all memo tables for the session.
class TailEngine {
  public:
    explicit TailEngine(const PatternSet& B);

    const TailFE& fe() const { return fe_; }
    const ClusterScheme& scheme() const { return scheme_; }

    URat eval_F(int k, const Permutation& p, const std::vector<int>& u_exponents);
    URat eval_F(int k, int pattern_idx, const std::vector<int>& u_exponents);

    TPoly C_of_k_fast(int k);
    AlphaSequence alpha_fast(int n, bool track_t);

  private:
    PatternSet patterns_;
    ClusterScheme scheme_;
    TailFE fe_;
    detail::TailCore<TPoly> track_;
    detail::TailCore<BigInt> avoid_;
};

} // namespace cpa
