#include "cpa/bigint.hpp"

namespace cpa {

std::string decimal_string(const BigRat& value, int digits) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    BigInt num = numerator(value), den = denominator(value);
    bool neg = num < 0;
    if (neg) num = -num;
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    // truncate toward zero, matching the published tables; truncation also
    // keeps shorter renderings exact prefixes of longer ones
    BigInt scaled = num * scale / den;
    BigInt ip = scaled / scale, fp = scaled % scale;
    std::string frac = fp.str();
    frac.insert(frac.begin(), digits - frac.size(), '0');
    std::string out = (neg && scaled != 0 ? "-" : "") + ip.str();
    if (digits > 0) out += "." + frac;
    return out;
}

} // namespace cpa
