#include "haarint/rational.hpp"

#include "haarint/errors.hpp"

namespace haarint {

BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

BigInt double_factorial_odd(unsigned k) {
  BigInt f = 1;
  for (unsigned m = k; m >= 3; m -= 2) f *= m;
  return f;
}

BigRational rational_pow(const BigRational& base, long exp) {
  if (exp == 0) return BigRational(1);
  if (exp < 0) {
    if (base == 0) throw Error("0 raised to a negative power");
    return 1 / rational_pow(base, -exp);
  }
  BigRational acc = 1, b = base;
  long e = exp;
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

BigRational parse_rational(const std::string& s) {
  if (s.empty()) throw Error("empty rational literal");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw Error("zero denominator in " + s);
    return BigRational(num, den);
  }
  auto dot = s.find('.');
  if (dot == std::string::npos) return BigRational(BigInt(s));
  std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
  bool neg = !head.empty() && head[0] == '-';
  if (head == "-" || head.empty()) head = neg ? "-0" : "0";
  BigInt ip(head);
  BigInt frac = tail.empty() ? BigInt(0) : BigInt(tail);
  BigInt scale = 1;
  for (size_t i = 0; i < tail.size(); ++i) scale *= 10;
  BigRational r = BigRational(ip) + (neg ? -1 : 1) * BigRational(frac, scale);
  return r;
}

std::string to_string(const BigRational& q) { return q.str(); }

double to_double(const BigRational& q) { return q.convert_to<double>(); }

int sign_of(const BigRational& q) { return q == 0 ? 0 : (q < 0 ? -1 : 1); }

}  // namespace haarint
