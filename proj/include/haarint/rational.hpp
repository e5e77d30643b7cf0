#pragma once

// Exact arithmetic base types. cpp_rational keeps values reduced with a
// positive denominator, which is exactly the BigRational invariant.

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace haarint {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

BigInt factorial(unsigned n);
BigInt double_factorial_odd(unsigned k);  // k!! for odd k; (-1)!! = 1

BigRational rational_pow(const BigRational& base, long exp);

// Accepts "p", "p/q" and decimal strings like "-0.125" (exact).
BigRational parse_rational(const std::string& s);

std::string to_string(const BigRational& q);
double to_double(const BigRational& q);
int sign_of(const BigRational& q);

}  // namespace haarint
