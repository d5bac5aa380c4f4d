#include "cpa/tpoly.hpp"

#include <sstream>

namespace cpa {

void TPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

TPoly TPoly::from_coeffs(std::vector<BigInt> c) {
    TPoly p;
    p.c_ = std::move(c);
    p.trim();
    return p;
}

TPoly TPoly::t_minus_one_pow(int m) {
    TPoly r(BigInt(1));
    for (int i = 0; i < m; ++i) r = r * t_minus_one();
    return r;
}

TPoly TPoly::operator-() const {
    TPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

TPoly& TPoly::operator+=(const TPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return TPoly::from_coeffs(std::move(r));
}

BigInt TPoly::eval(const BigInt& t0) const {
    BigInt r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t0 + *it;
    return r;
}

BigInt TPoly::content() const {
    BigInt g = 0;
    for (const auto& c : c_) g = boost::multiprecision::gcd(g, c);
    return g < 0 ? -g : g;
}

std::optional<TPoly> TPoly::div_exact(const TPoly& a, const TPoly& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return TPoly{};
    if (a.degree() < b.degree()) return std::nullopt;
    std::vector<BigInt> rem = a.c_;
    std::vector<BigInt> q(a.c_.size() - b.c_.size() + 1, BigInt(0));
    const BigInt& lead = b.c_.back();
    for (int d = static_cast<int>(q.size()) - 1; d >= 0; --d) {
        BigInt top = rem[d + b.degree()];
        if (top == 0) continue;
        if (top % lead != 0) return std::nullopt;
        BigInt f = top / lead;
        q[d] = f;
        for (size_t i = 0; i < b.c_.size(); ++i) rem[d + i] -= f * b.c_[i];
    }
    for (const auto& c : rem)
        if (c != 0) return std::nullopt;
    return from_coeffs(std::move(q));
}

std::string TPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        BigInt c = c_[k];
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        if (k == 0 || c != 1) os << c.str();
        if (k >= 1) {
            os << var;
            if (k >= 2) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

} // namespace cpa
