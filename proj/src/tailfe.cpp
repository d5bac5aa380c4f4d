#include "cpa/tailfe.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cpa {

std::string AffineExpr::str(const char* varname) const {
    std::ostringstream os;
    bool first = true;
    if (var) { os << varname << var; first = false; }
    if (k_coeff) {
        if (!first) os << (k_coeff > 0 ? "+" : "-");
        else if (k_coeff < 0) os << "-";
        if (std::abs(k_coeff) != 1) os << std::abs(k_coeff);
        os << "k";
        first = false;
    }
    if (constant || first) {
        if (!first) os << (constant >= 0 ? "+" : "-") << std::abs(constant);
        else os << constant;
    }
    return os.str();
}

GeomSplit geom_sum(const ZMonomial& M, const AffineExpr& lower, const AffineExpr& upper) {
    if (std::all_of(M.begin(), M.end(), [](int e) { return e == 0; }))
        throw DegenerateBase("geometric sum over the empty monomial");
    AffineExpr up1 = upper;
    up1.constant += 1;
    return GeomSplit{lower, up1, M};
}

namespace {

void add_scaled(ZMonomial& dst, const ZMonomial& src, int c = 1) {
    for (size_t i = 0; i < dst.size(); ++i) dst[i] += c * src[i];
}

struct BuildTerm {
    int sign = 1;
    ZMonomial const_exp; // constant part of per-slot exponents
    ZMonomial k_exp;     // k part of per-slot exponents
    std::map<int, ZMonomial> acc; // rank -> accumulated monomial, symbolic vars only
    std::vector<ZMonomial> denoms;
    std::vector<KExponent> length_factors;
};

} // namespace

TailFE build_tail_fe(const PatternSet& B) {
    ClusterScheme scheme = build_scheme(B);
    TailFE fe{B, {}, {}};
    fe.terms.resize(B.size());
    fe.plans.resize(B.size());

    for (int pi = 0; pi < B.size(); ++pi) {
        const Permutation& p1 = B[pi];
        const int m = p1.size();
        for (size_t ti = 0; ti < scheme.transitions[pi].size(); ++ti) {
            const Transition& tr = scheme.transitions[pi][ti];
            const int j = tr.overlap_len;

            SummationPlan plan;
            plan.transition_index = static_cast<int>(ti);
            for (int s = 1; s <= j; ++s) plan.kept.push_back(p1[s]);
            for (int s = j + 1; s <= m; ++s) plan.chopped.push_back(p1[s]);
            std::sort(plan.kept.begin(), plan.kept.end());
            std::sort(plan.chopped.begin(), plan.chopped.end());
            const int top_kept = plan.kept.back();

            plan.lower.assign(m + 1, {});
            plan.upper.assign(m + 1, {});
            plan.bound_by.assign(m + 1, 0);
            for (size_t r = 0; r < plan.kept.size(); ++r) {
                int rank = plan.kept[r];
                plan.lower[rank] = r == 0
                    ? AffineExpr{0, 0, rank}
                    : AffineExpr{plan.kept[r - 1], 0, rank - plan.kept[r - 1]};
                plan.upper[rank] = AffineExpr{0, 1, rank - m};
            }
            for (int rank : plan.chopped) {
                plan.lower[rank] = rank == 1 ? AffineExpr{0, 0, 1}
                                             : AffineExpr{rank - 1, 0, 1};
                if (rank > top_kept) {
                    plan.upper[rank] = AffineExpr{0, 1, rank - m};
                } else {
                    int b = *std::upper_bound(plan.kept.begin(), plan.kept.end(), rank);
                    plan.upper[rank] = AffineExpr{b, 0, rank - b};
                    plan.bound_by[rank] = b;
                }
            }
            // bounds may only reference variables summed further out
            for (size_t r = 0; r < plan.chopped.size(); ++r)
                for (const auto* bound : {&plan.lower[plan.chopped[r]],
                                          &plan.upper[plan.chopped[r]]})
                    if (bound->var && bound->var >= plan.chopped[r] &&
                        std::find(plan.chopped.begin() + r + 1, plan.chopped.end(),
                                  bound->var) != plan.chopped.end())
                        throw Error("summation plan references an inner variable");

            // eliminate chopped variables, innermost (largest rank) first
            BuildTerm start;
            start.const_exp.assign(m, 0);
            start.k_exp.assign(m, 0);
            for (int rank = 1; rank <= m; ++rank) {
                ZMonomial unit(m, 0);
                unit[rank - 1] = 1;
                start.acc[rank] = std::move(unit);
            }
            std::vector<BuildTerm> terms{std::move(start)};
            for (auto it = plan.chopped.rbegin(); it != plan.chopped.rend(); ++it) {
                const int c = *it;
                std::vector<BuildTerm> next;
                next.reserve(terms.size() * 2);
                for (BuildTerm& t : terms) {
                    ZMonomial M = t.acc[c];
                    if (std::all_of(M.begin(), M.end(), [](int e) { return e == 0; })) {
                        // degenerate: the sum is just its length
                        const auto& lo = plan.lower[c];
                        const auto& hi = plan.upper[c];
                        if (lo.var || hi.var)
                            throw DegenerateBase(
                                "degenerate geometric sum with variable bounds");
                        BuildTerm d = t;
                        d.acc.erase(c);
                        d.length_factors.push_back(
                            {hi.constant - lo.constant + 1, hi.k_coeff - lo.k_coeff});
                        next.push_back(std::move(d));
                        continue;
                    }
                    GeomSplit split = geom_sum(M, plan.lower[c], plan.upper[c]);
                    for (int piece = 0; piece < 2; ++piece) {
                        const AffineExpr& ex = piece == 0 ? split.lower_exp : split.upper_exp;
                        BuildTerm nt = t;
                        nt.sign = piece == 0 ? t.sign : -t.sign;
                        nt.acc.erase(c);
                        nt.denoms.push_back(split.denom);
                        if (ex.var) add_scaled(nt.acc[ex.var], M);
                        if (ex.k_coeff) add_scaled(nt.k_exp, M, ex.k_coeff);
                        add_scaled(nt.const_exp, M, ex.constant);
                        next.push_back(std::move(nt));
                    }
                }
                terms = std::move(next);
            }

            const Permutation& p2 = B[tr.prev_pattern];
            for (BuildTerm& t : terms) {
                FETerm out;
                out.sign = t.sign;
                out.k_shift = tr.k_shift;
                out.target = tr.prev_pattern;
                out.length_factors = std::move(t.length_factors);
                out.argument_monomials.assign(p2.size(), ZMonomial(m, 0));
                for (const auto& ds : tr.determined) {
                    const ZMonomial& A = t.acc.at(ds.source_rank);
                    out.argument_monomials[ds.slot - 1] = A;
                    add_scaled(t.const_exp, A, ds.shift);
                }
                out.numerator.exps.resize(m);
                for (int s = 0; s < m; ++s) {
                    out.numerator.exps[s] = {t.const_exp[s], t.k_exp[s]};
                    // exponents must be nonnegative whenever k >= |p|
                    if (t.const_exp[s] + t.k_exp[s] * m < 0)
                        throw Error("negative exponent in functional equation term");
                }
                out.denominator = std::move(t.denoms);
                fe.terms[pi].push_back(std::move(out));
            }
            fe.plans[pi].push_back(std::move(plan));
        }
    }
    return fe;
}

namespace {

std::string zmon_str(const ZMonomial& z, const char* var = "z") {
    std::string s;
    for (size_t i = 0; i < z.size(); ++i) {
        if (!z[i]) continue;
        if (!s.empty()) s += "*";
        s += var + std::to_string(i + 1);
        if (z[i] != 1) s += "^" + std::to_string(z[i]);
    }
    return s.empty() ? "1" : s;
}

std::string kmon_str(const KMonomial& mono) {
    std::string s;
    for (size_t i = 0; i < mono.exps.size(); ++i) {
        const auto& [a, b] = mono.exps[i];
        if (a == 0 && b == 0) continue;
        if (!s.empty()) s += "*";
        s += "z" + std::to_string(i + 1);
        if (b == 0) {
            if (a != 1) s += "^" + std::to_string(a);
        } else {
            std::ostringstream e;
            e << "^(";
            if (b == 1) e << "k";
            else e << b << "k";
            if (a > 0) e << "+" << a;
            if (a < 0) e << a;
            e << ")";
            s += e.str();
        }
    }
    return s.empty() ? "1" : s;
}

} // namespace

std::string tail_fe_text(const TailFE& fe) {
    std::ostringstream os;
    for (int pi = 0; pi < fe.patterns.size(); ++pi) {
        const Permutation& p = fe.patterns[pi];
        os << "F(k, " << p.str() << "; [z...]) = (t-1) * (\n";
        for (const auto& term : fe.terms[pi]) {
            os << "    " << (term.sign > 0 ? "+ " : "- ") << kmon_str(term.numerator);
            for (const auto& lf : term.length_factors) {
                os << " * (" << AffineExpr{0, lf.b, lf.a}.str() << ")";
            }
            if (!term.denominator.empty()) {
                os << " / (";
                for (size_t d = 0; d < term.denominator.size(); ++d) {
                    if (d) os << " ";
                    os << "(1-" << zmon_str(term.denominator[d]) << ")";
                }
                os << ")";
            }
            os << " * F(k-" << term.k_shift << ", "
               << fe.patterns[term.target].str() << "; [";
            for (size_t a = 0; a < term.argument_monomials.size(); ++a) {
                if (a) os << ", ";
                os << zmon_str(term.argument_monomials[a]);
            }
            os << "])\n";
        }
        os << ")  with F(" << p.size() << ", " << p.str()
           << "; [z...]) = (t-1)*z1^1*...*z" << p.size() << "^" << p.size()
           << ",  F(k<" << p.size() << ") = 0\n";
    }
    return os.str();
}

namespace detail {

namespace {

int pairing(const ZMonomial& mono, const std::vector<int>& e) {
    int s = 0;
    for (size_t i = 0; i < mono.size(); ++i) s += mono[i] * e[i];
    return s;
}

uint64_t pack_values(const std::vector<int>& v) {
    uint64_t key = 1;
    for (int x : v) key = (key << 6) | static_cast<uint64_t>(x);
    return key;
}

} // namespace

template <class R>
void TailCore<R>::build_levels_to(int K) {
    if (K > 60) throw CapExceeded("tail engine limited to k <= 60");
    const int npat = scheme_.patterns.size();
    for (int p = 0; p < npat; ++p)
        if (static_cast<int>(levels_[p].size()) <= K) levels_[p].resize(K + 1);
    for (int k = built_k_ + 1; k <= K; ++k) {
        for (int p = 0; p < npat; ++p) {
            const int m = scheme_.patterns[p].size();
            if (k < m) continue;
            auto& level = levels_[p][k];
            if (k == m) {
                std::vector<int> iota_tail(m);
                std::iota(iota_tail.begin(), iota_tail.end(), 1);
                level.emplace(pack_values(iota_tail), RingOf<R>::weight());
                continue;
            }
            // gather the aggregate maps needed by each transition
            std::vector<const std::unordered_map<uint64_t, R>*> aggs;
            for (const auto& tr : scheme_.transitions[p]) {
                uint64_t mask = 0;
                for (const auto& ds : tr.determined) mask |= 1u << ds.slot;
                auto key = std::make_tuple(k - tr.k_shift, tr.prev_pattern, mask);
                auto it = aggregates_.find(key);
                if (it == aggregates_.end()) {
                    std::unordered_map<uint64_t, R> agg;
                    if (k - tr.k_shift >= 1 &&
                        k - tr.k_shift < static_cast<int>(levels_[tr.prev_pattern].size())) {
                        const int m2 = scheme_.patterns[tr.prev_pattern].size();
                        for (const auto& [packed, val] : levels_[tr.prev_pattern][k - tr.k_shift]) {
                            std::vector<int> vals;
                            for (const auto& ds : tr.determined) {
                                int shiftbits = 6 * (m2 - ds.slot);
                                vals.push_back(static_cast<int>((packed >> shiftbits) & 63));
                            }
                            auto [slot_it, inserted] = agg.try_emplace(pack_values(vals), val);
                            if (!inserted) slot_it->second = slot_it->second + val;
                        }
                    }
                    it = aggregates_.emplace(key, std::move(agg)).first;
                }
                aggs.push_back(&it->second);
            }
            // iterate all tails x_1 < ... < x_m in [1, k]
            std::vector<int> tail(m);
            std::iota(tail.begin(), tail.end(), 1);
            std::vector<int> det_vals;
            while (true) {
                R sum{};
                bool any = false;
                for (size_t t = 0; t < scheme_.transitions[p].size(); ++t) {
                    const auto& tr = scheme_.transitions[p][t];
                    const int kp = k - tr.k_shift;
                    if (kp < scheme_.patterns[tr.prev_pattern].size()) continue;
                    det_vals.clear();
                    int prev = 0;
                    bool ok = true;
                    for (const auto& ds : tr.determined) {
                        int v = tail[ds.source_rank - 1] - ds.shift;
                        if (v < 1 || v > kp || v <= prev) { ok = false; break; }
                        det_vals.push_back(v);
                        prev = v;
                    }
                    if (!ok) continue;
                    auto hit = aggs[t]->find(pack_values(det_vals));
                    if (hit != aggs[t]->end()) {
                        sum = sum + hit->second;
                        any = true;
                    }
                }
                if (any && !coeff_is_zero(sum))
                    level.emplace(pack_values(tail), RingOf<R>::weight() * sum);
                int a = m - 1;
                while (a >= 0 && tail[a] == k - (m - 1 - a)) --a;
                if (a < 0) break;
                ++tail[a];
                for (int b = a + 1; b < m; ++b) tail[b] = tail[b - 1] + 1;
            }
        }
        built_k_ = k;
    }
}

template <class R>
PolyU<R> TailCore<R>::tail_sum_poly(int k, int pat, const std::vector<int>& e) {
    build_levels_to(k);
    const int m = scheme_.patterns[pat].size();
    std::vector<R> coeffs;
    for (const auto& [packed, val] : levels_[pat][k]) {
        int ex = 0;
        for (int s = 0; s < m; ++s) {
            int v = static_cast<int>((packed >> (6 * (m - 1 - s))) & 63);
            ex += e[s] * v;
        }
        if (ex >= static_cast<int>(coeffs.size())) coeffs.resize(ex + 1);
        coeffs[ex] = coeffs[ex] + val;
    }
    return PolyU<R>::from_coeffs(std::move(coeffs));
}

template <class R>
bool TailCore<R>::admissible(int pat, const std::vector<int>& e) const {
    for (const auto& term : fe_.terms[pat])
        for (const auto& d : term.denominator)
            if (pairing(d, e) < 1) return false;
    return true;
}

// shared FE-sum assembly: returns (numerator, denominator) before the
// exact division; numerator already carries the (t-1) weight
template <class R>
std::pair<PolyU<R>, PolyU<R>> TailCore<R>::eval_parts(int k, int pat,
                                                      const std::vector<int>& e) {
    PolyU<R> one(RingOf<R>::scalar(BigInt(1)));
    PolyU<R> num, den = one;
    for (const auto& term : fe_.terms[pat]) {
        int ex = 0;
        for (size_t s = 0; s < term.numerator.exps.size(); ++s)
            ex += e[s] * (term.numerator.exps[s].a + term.numerator.exps[s].b * k);
        if (ex < 0) throw Error("negative collapsed exponent");
        PolyU<R> sub = eval_poly(k - term.k_shift, term.target,
                                 [&] {
                                     std::vector<int> e2(term.argument_monomials.size());
                                     for (size_t a = 0; a < e2.size(); ++a)
                                         e2[a] = pairing(term.argument_monomials[a], e);
                                     return e2;
                                 }());
        PolyU<R> n_i = sub.shifted(ex);
        if (term.sign < 0) n_i = -n_i;
        for (const auto& lf : term.length_factors)
            n_i = n_i * PolyU<R>(RingOf<R>::scalar(BigInt(lf.a) + BigInt(lf.b) * k));
        PolyU<R> d_i = one;
        for (const auto& d : term.denominator) {
            int a = pairing(d, e);
            PolyU<R> factor = one - PolyU<R>::monomial(RingOf<R>::scalar(BigInt(1)), a);
            d_i = d_i * factor;
        }
        num = num * d_i + n_i * den;
        den = den * d_i;
    }
    num = num * PolyU<R>(RingOf<R>::weight());
    return {std::move(num), std::move(den)};
}

template <class R>
PolyU<R> TailCore<R>::eval_poly(int k, int pat, const std::vector<int>& e) {
    const int m = scheme_.patterns[pat].size();
    if (k < m) return {};
    auto key = std::make_tuple(k, pat, e);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    PolyU<R> value;
    if (k == m) {
        int ex = 0;
        for (int s = 0; s < m; ++s) ex += (s + 1) * e[s];
        value = PolyU<R>::monomial(RingOf<R>::weight(), ex);
    } else if (admissible(pat, e)) {
        auto [num, den] = eval_parts(k, pat, e);
        auto q = PolyU<R>::div_exact(num, den);
        if (!q) throw NonDivisible("tail functional equation produced a non-polynomial value");
        value = std::move(*q);
    } else {
        value = tail_sum_poly(k, pat, e);
    }
    memo_.emplace(std::move(key), value);
    return value;
}

template <class R>
RatU<R> TailCore<R>::eval_rat(int k, int pat, const std::vector<int>& e) {
    const int m = scheme_.patterns[pat].size();
    if (k <= m || !admissible(pat, e)) return RatU<R>(eval_poly(k, pat, e));
    auto [num, den] = eval_parts(k, pat, e);
    return RatU<R>(std::move(num), std::move(den));
}

template <class R>
R TailCore<R>::C_fast(int k) {
    R total{};
    for (int p = 0; p < scheme_.patterns.size(); ++p) {
        const int m = scheme_.patterns[p].size();
        if (k < m) continue;
        total = total + eval_poly(k, p, std::vector<int>(m, 1)).eval_at_one();
    }
    return total;
}

template <class R>
std::vector<R> TailCore<R>::alpha(int n) {
    return alpha_recurrence<R>([&](int k) { return C_fast(k); }, n);
}

template class TailCore<BigInt>;
template class TailCore<TPoly>;

} // namespace detail

TailEngine::TailEngine(const PatternSet& B)
    : patterns_(B),
      scheme_(build_scheme(B)),
      fe_(build_tail_fe(B)),
      track_(scheme_, fe_),
      avoid_(scheme_, fe_) {}

URat TailEngine::eval_F(int k, int pattern_idx, const std::vector<int>& e) {
    if (e.size() != static_cast<size_t>(patterns_[pattern_idx].size()))
        throw Error("eval_F: exponent vector length mismatch");
    return track_.eval_rat(k, pattern_idx, e);
}

URat TailEngine::eval_F(int k, const Permutation& p, const std::vector<int>& e) {
    for (int i = 0; i < patterns_.size(); ++i)
        if (patterns_[i] == p) return eval_F(k, i, e);
    throw Error("eval_F: pattern not in set: " + p.str());
}

TPoly TailEngine::C_of_k_fast(int k) {
    if (k < 1) throw Error("C_of_k_fast: k must be >= 1");
    return track_.C_fast(k);
}

AlphaSequence TailEngine::alpha_fast(int n, bool track_t) {
    AlphaSequence seq;
    seq.tracked = track_t;
    if (track_t) {
        seq.entries = track_.alpha(n);
    } else {
        auto a = avoid_.alpha(n);
        for (auto& v : a) seq.entries.emplace_back(std::move(v));
    }
    return seq;
}

} // namespace cpa
