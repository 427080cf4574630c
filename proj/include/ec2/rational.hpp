#ifndef EC2_RATIONAL_HPP
#define EC2_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace ec2 {

using Rational = mpq_class;

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

/// Fixed-point rendering of num/den with `digits` decimals, trailing zeros
/// trimmed but at least one decimal kept: 1 -> "1.0", 9/7 -> "1.285714".
/// Truncates toward zero; deterministic across platforms.
inline std::string to_decimal(std::uint64_t num, std::uint64_t den, int digits = 6) {
    std::string out = std::to_string(num / den) + ".";
    std::uint64_t rem = num % den;
    std::string frac;
    for (int i = 0; i < digits; ++i) {
        rem *= 10;
        frac.push_back(static_cast<char>('0' + rem / den));
        rem %= den;
    }
    while (frac.size() > 1 && frac.back() == '0') frac.pop_back();
    return out + frac;
}

} // namespace ec2

#endif // EC2_RATIONAL_HPP
