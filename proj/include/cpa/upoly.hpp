#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cpa/bigint.hpp"
#include "cpa/errors.hpp"
#include "cpa/tpoly.hpp"

namespace cpa {

// Coefficient-ring shims so the u-polynomials work over either plain
// BigInt (avoidance-only fast path) or TPoly (occurrence tracking).
inline bool coeff_is_zero(const BigInt& c) { return c == 0; }
inline bool coeff_is_zero(const TPoly& c) { return c.is_zero(); }
inline BigInt coeff_content(const BigInt& c) { return c < 0 ? BigInt(-c) : c; }
inline BigInt coeff_content(const TPoly& c) { return c.content(); }
inline std::optional<BigInt> coeff_div_exact(const BigInt& a, const BigInt& b) {
    if (b == 0 || a % b != 0) return std::nullopt;
    return BigInt(a / b);
}
inline std::optional<TPoly> coeff_div_exact(const TPoly& a, const TPoly& b) {
    return TPoly::div_exact(a, b);
}
// sign of the leading BigInt inside a coefficient (0 for zero)
inline int coeff_sign(const BigInt& c) { return c == 0 ? 0 : (c < 0 ? -1 : 1); }
inline int coeff_sign(const TPoly& c) {
    return c.is_zero() ? 0 : (c.coeffs().back() < 0 ? -1 : 1);
}
inline BigInt coeff_div_int(const BigInt& a, const BigInt& g) { return a / g; }
inline TPoly coeff_div_int(const TPoly& a, const BigInt& g) {
    std::vector<BigInt> c = a.coeffs();
    for (auto& x : c) x /= g;
    return TPoly::from_coeffs(std::move(c));
}

// Polynomial in the collapse variable u, dense ascending coefficients.
template <class C>
class PolyU {
  public:
    PolyU() = default;
    explicit PolyU(C c) {
        if (!coeff_is_zero(c)) c_.push_back(std::move(c));
    }
    static PolyU monomial(C c, int e) {
        PolyU p;
        if (!coeff_is_zero(c)) {
            p.c_.resize(e + 1);
            p.c_[e] = std::move(c);
        }
        return p;
    }
    static PolyU from_coeffs(std::vector<C> c) {
        PolyU p;
        p.c_ = std::move(c);
        p.trim();
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    C coeff(int k) const {
        return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : C{};
    }
    const std::vector<C>& coeffs() const { return c_; }

    PolyU operator-() const {
        PolyU r = *this;
        for (auto& c : r.c_) c = neg(c);
        return r;
    }
    PolyU& operator+=(const PolyU& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
        trim();
        return *this;
    }
    PolyU& operator-=(const PolyU& o) { return *this += -o; }
    friend PolyU operator+(PolyU a, const PolyU& b) { return a += b; }
    friend PolyU operator-(PolyU a, const PolyU& b) { return a -= b; }
    friend PolyU operator*(const PolyU& a, const PolyU& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<C> r(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (coeff_is_zero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        }
        return from_coeffs(std::move(r));
    }
    bool operator==(const PolyU& o) const = default;

    // multiply by u^e
    PolyU shifted(int e) const {
        if (is_zero()) return {};
        std::vector<C> r(c_.size() + e);
        for (size_t i = 0; i < c_.size(); ++i) r[i + e] = c_[i];
        return from_coeffs(std::move(r));
    }

    // evaluation at u = 1: sum of all coefficients
    C eval_at_one() const {
        C s{};
        for (const auto& c : c_) s = s + c;
        return s;
    }

    BigInt content() const {
        BigInt g = 0;
        for (const auto& c : c_) g = boost::multiprecision::gcd(g, coeff_content(c));
        return g;
    }

    static std::optional<PolyU> div_exact(const PolyU& a, const PolyU& b) {
        if (b.is_zero()) return std::nullopt;
        if (a.is_zero()) return PolyU{};
        if (a.degree() < b.degree()) return std::nullopt;
        std::vector<C> rem = a.c_;
        std::vector<C> q(a.c_.size() - b.c_.size() + 1);
        const C& lead = b.c_.back();
        for (int d = static_cast<int>(q.size()) - 1; d >= 0; --d) {
            const C& top = rem[d + b.degree()];
            if (coeff_is_zero(top)) continue;
            auto f = coeff_div_exact(top, lead);
            if (!f) return std::nullopt;
            q[d] = *f;
            for (size_t i = 0; i < b.c_.size(); ++i)
                rem[d + i] = rem[d + i] - q[d] * b.c_[i];
        }
        for (const auto& c : rem)
            if (!coeff_is_zero(c)) return std::nullopt;
        return from_coeffs(std::move(q));
    }

  private:
    static C neg(const C& c) { return C{} - c; }
    void trim() {
        while (!c_.empty() && coeff_is_zero(c_.back())) c_.pop_back();
    }
    std::vector<C> c_;
};

// Rational function in u.  Denominator never the zero polynomial.
// Normal form: integer content reduced across numerator and denominator
// together, leading denominator coefficient positive.
template <class C>
class RatU {
  public:
    RatU() : num_{}, den_{PolyU<C>(one())} {}
    RatU(PolyU<C> num, PolyU<C> den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw Error("RatU: zero denominator");
        normalize();
    }
    explicit RatU(PolyU<C> num) : RatU(std::move(num), PolyU<C>(one())) {}

    const PolyU<C>& num() const { return num_; }
    const PolyU<C>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RatU operator+(const RatU& a, const RatU& b) {
        return RatU(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatU operator*(const RatU& a, const RatU& b) {
        return RatU(a.num_ * b.num_, a.den_ * b.den_);
    }
    RatU operator-() const {
        RatU r = *this;
        r.num_ = -r.num_;
        return r;
    }

    // value equality via cross multiplication
    bool operator==(const RatU& o) const {
        return num_ * o.den_ == o.num_ * den_;
    }

    // exact polynomial form; throws NonDivisible if den does not divide num
    PolyU<C> to_poly() const {
        auto q = PolyU<C>::div_exact(num_, den_);
        if (!q) throw NonDivisible("denominator does not divide numerator");
        return *q;
    }

  private:
    static C one() { return C(BigInt(1)); }
    void normalize() {
        if (num_.is_zero()) {
            den_ = PolyU<C>(one());
            return;
        }
        BigInt g = boost::multiprecision::gcd(num_.content(), den_.content());
        if (g > 1) {
            num_ = divide_content(num_, g);
            den_ = divide_content(den_, g);
        }
        if (coeff_sign(den_.coeffs().back()) < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }
    static PolyU<C> divide_content(const PolyU<C>& p, const BigInt& g) {
        std::vector<C> c = p.coeffs();
        for (auto& x : c) x = coeff_div_int(x, g);
        return PolyU<C>::from_coeffs(std::move(c));
    }
    PolyU<C> num_, den_;
};

using UPoly = PolyU<TPoly>;
using URat = RatU<TPoly>;

} // namespace cpa
