#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace cpa {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// Rows of Pascal's triangle up to n, exact.
class BinomialTable {
  public:
    explicit BinomialTable(int n) : rows_(n + 1) {
        for (int i = 0; i <= n; ++i) {
            rows_[i].resize(i + 1, 1);
            for (int j = 1; j < i; ++j)
                rows_[i][j] = rows_[i - 1][j - 1] + rows_[i - 1][j];
        }
    }
    const BigInt& operator()(int n, int k) const { return rows_[n][k]; }

  private:
    std::vector<std::vector<BigInt>> rows_;
};

// Fixed-point decimal rendering of an exact rational, rounded half away
// from zero at the last place.
std::string decimal_string(const BigRat& value, int digits);

} // namespace cpa
