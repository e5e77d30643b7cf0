#pragma once

// Univariate polynomials and rational functions in the size symbol N.
// RationalFunctionN is stored expanded and reduced: gcd(num, den) = 1 and
// den monic, so equality is representation equality.

#include <string>
#include <vector>

#include "haarint/rational.hpp"

namespace haarint {

class PolyN {
 public:
  PolyN() = default;
  PolyN(const BigRational& c);                 // constant
  PolyN(long c) : PolyN(BigRational(c)) {}
  explicit PolyN(std::vector<BigRational> ascending);
  static PolyN variable();                     // N
  static PolyN monomial(const BigRational& c, int deg);
  static PolyN from_roots(const std::vector<long>& roots);  // prod (N - r)

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
  const BigRational& leading() const;
  BigRational coeff(int k) const;
  const std::vector<BigRational>& coeffs() const { return c_; }

  PolyN operator-() const;
  PolyN operator+(const PolyN& o) const;
  PolyN operator-(const PolyN& o) const;
  PolyN operator*(const PolyN& o) const;
  PolyN operator*(const BigRational& s) const;
  bool operator==(const PolyN& o) const { return c_ == o.c_; }

  BigRational eval(const BigRational& x) const;

  // Exact division; throws if remainder is nonzero.
  PolyN divide_exact(const PolyN& d) const;
  // Euclidean remainder.
  static PolyN rem(PolyN a, const PolyN& b);
  // Monic gcd.
  static PolyN gcd(PolyN a, PolyN b);

  PolyN monic() const;

  // Descending-degree text, e.g. "N^3+N^2-2N".
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigRational> c_;  // ascending, no trailing zeros
};

struct Asymptotics {
  int degree;           // deg num - deg den
  BigRational leading;  // ratio of leading coefficients
};

class RationalFunctionN {
 public:
  RationalFunctionN() : num_(), den_(1) {}
  RationalFunctionN(const BigRational& c) : num_(c), den_(1) {}
  RationalFunctionN(long c) : num_(BigRational(c)), den_(1) {}
  RationalFunctionN(PolyN num, PolyN den = PolyN(1));
  static RationalFunctionN variable() { return RationalFunctionN(PolyN::variable()); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  BigRational as_constant() const;

  const PolyN& num() const { return num_; }
  const PolyN& den() const { return den_; }

  RationalFunctionN operator-() const;
  RationalFunctionN operator+(const RationalFunctionN& o) const;
  RationalFunctionN operator-(const RationalFunctionN& o) const;
  RationalFunctionN operator*(const RationalFunctionN& o) const;
  RationalFunctionN operator/(const RationalFunctionN& o) const;
  RationalFunctionN& operator+=(const RationalFunctionN& o) { return *this = *this + o; }
  RationalFunctionN& operator-=(const RationalFunctionN& o) { return *this = *this - o; }
  RationalFunctionN& operator*=(const RationalFunctionN& o) { return *this = *this * o; }
  bool operator==(const RationalFunctionN& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RationalFunctionN& o) const { return !(*this == o); }

  BigRational eval_at(long long n) const;  // throws PoleAtN
  Asymptotics asymptotic() const;          // throws ZeroFunction

  // "(N+1)/(N^3+N^2-2N)"; bare polynomial when den == 1.
  std::string to_string() const;
  // Re-factors num and den over small integer roots for display, e.g.
  // "(N+1)/(N(N-1)(N+2))".
  std::string to_factored_string() const;

 private:
  void normalize();
  PolyN num_, den_;
};

}  // namespace haarint
