#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cpa/bigint.hpp"

namespace cpa {

// Polynomial in the occurrence-tracking variable t, dense ascending
// coefficients, exact BigInt arithmetic.  Trailing zeros are stripped;
// the zero polynomial is the empty coefficient vector.
class TPoly {
  public:
    TPoly() = default;
    explicit TPoly(BigInt c) { if (c != 0) c_.push_back(std::move(c)); }
    explicit TPoly(long c) : TPoly(BigInt(c)) {}

    static TPoly from_coeffs(std::vector<BigInt> c);
    static TPoly t() { return from_coeffs({0, 1}); }
    static TPoly t_minus_one() { return from_coeffs({-1, 1}); }
    // (t-1)^m
    static TPoly t_minus_one_pow(int m);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    BigInt coeff(int k) const {
        return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : BigInt(0);
    }
    const std::vector<BigInt>& coeffs() const { return c_; }

    TPoly operator-() const;
    TPoly& operator+=(const TPoly& o);
    TPoly& operator-=(const TPoly& o);
    friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
    friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
    friend TPoly operator*(const TPoly& a, const TPoly& b);
    bool operator==(const TPoly& o) const = default;

    BigInt eval(const BigInt& t0) const; // Horner
    BigInt at0() const { return coeff(0); }

    // gcd of all coefficients, nonnegative; 0 for the zero polynomial
    BigInt content() const;

    // exact quotient, or nullopt if b does not divide a (or b == 0)
    static std::optional<TPoly> div_exact(const TPoly& a, const TPoly& b);

    // "122 + 300t + 236t^2"
    std::string str(const std::string& var = "t") const;

  private:
    void trim();
    std::vector<BigInt> c_;
};

} // namespace cpa
