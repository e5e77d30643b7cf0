#include "haarint/polynomial.hpp"

#include <sstream>

#include "haarint/errors.hpp"

namespace haarint {

PolyN::PolyN(const BigRational& c) {
  if (c != 0) c_.push_back(c);
}

PolyN::PolyN(std::vector<BigRational> ascending) : c_(std::move(ascending)) { trim(); }

PolyN PolyN::variable() { return PolyN(std::vector<BigRational>{BigRational(0), BigRational(1)}); }

PolyN PolyN::monomial(const BigRational& c, int deg) {
  if (c == 0) return PolyN();
  std::vector<BigRational> v(deg + 1, BigRational(0));
  v[deg] = c;
  return PolyN(std::move(v));
}

PolyN PolyN::from_roots(const std::vector<long>& roots) {
  PolyN p(1);
  for (long r : roots) p = p * PolyN(std::vector<BigRational>{BigRational(-r), BigRational(1)});
  return p;
}

void PolyN::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const BigRational& PolyN::leading() const {
  if (c_.empty()) throw Error("leading coefficient of zero polynomial");
  return c_.back();
}

BigRational PolyN::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return BigRational(0);
  return c_[k];
}

PolyN PolyN::operator-() const {
  PolyN r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

PolyN PolyN::operator+(const PolyN& o) const {
  std::vector<BigRational> v(std::max(c_.size(), o.c_.size()), BigRational(0));
  for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return PolyN(std::move(v));
}

PolyN PolyN::operator-(const PolyN& o) const { return *this + (-o); }

PolyN PolyN::operator*(const PolyN& o) const {
  if (is_zero() || o.is_zero()) return PolyN();
  std::vector<BigRational> v(c_.size() + o.c_.size() - 1, BigRational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  return PolyN(std::move(v));
}

PolyN PolyN::operator*(const BigRational& s) const {
  if (s == 0) return PolyN();
  PolyN r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

BigRational PolyN::eval(const BigRational& x) const {
  BigRational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

PolyN PolyN::divide_exact(const PolyN& d) const {
  if (d.is_zero()) throw Error("division by zero polynomial");
  PolyN r = *this, q;
  std::vector<BigRational> qc(std::max(0, degree() - d.degree() + 1), BigRational(0));
  while (!r.is_zero() && r.degree() >= d.degree()) {
    int k = r.degree() - d.degree();
    BigRational c = r.leading() / d.leading();
    qc[k] = c;
    r = r - d * PolyN::monomial(c, k);
  }
  if (!r.is_zero()) throw Error("inexact polynomial division");
  return PolyN(std::move(qc));
}

PolyN PolyN::rem(PolyN a, const PolyN& b) {
  while (!a.is_zero() && a.degree() >= b.degree()) {
    BigRational c = a.leading() / b.leading();
    a = a - b * PolyN::monomial(c, a.degree() - b.degree());
  }
  return a;
}

PolyN PolyN::gcd(PolyN a, PolyN b) {
  while (!b.is_zero()) {
    PolyN r = rem(a, b);
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  return a.monic();
}

PolyN PolyN::monic() const {
  if (is_zero()) return *this;
  return *this * (BigRational(1) / leading());
}

std::string PolyN::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    BigRational c = coeff(k);
    if (c == 0) continue;
    if (!first && c > 0) os << "+";
    if (k == 0) {
      os << c.str();
    } else {
      if (c == -1)
        os << "-";
      else if (c != 1)
        os << c.str();
      os << "N";
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

RationalFunctionN::RationalFunctionN(PolyN num, PolyN den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error("zero denominator in rational function");
  normalize();
}

void RationalFunctionN::normalize() {
  if (num_.is_zero()) {
    den_ = PolyN(1);
    return;
  }
  PolyN g = PolyN::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divide_exact(g);
    den_ = den_.divide_exact(g);
  }
  BigRational lead = den_.leading();
  if (lead != 1) {
    BigRational inv = BigRational(1) / lead;
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

BigRational RationalFunctionN::as_constant() const {
  if (!is_constant()) throw Error("rational function is not constant");
  return num_.coeff(0);
}

RationalFunctionN RationalFunctionN::operator-() const {
  RationalFunctionN r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunctionN RationalFunctionN::operator+(const RationalFunctionN& o) const {
  return RationalFunctionN(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunctionN RationalFunctionN::operator-(const RationalFunctionN& o) const {
  return RationalFunctionN(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunctionN RationalFunctionN::operator*(const RationalFunctionN& o) const {
  return RationalFunctionN(num_ * o.num_, den_ * o.den_);
}

RationalFunctionN RationalFunctionN::operator/(const RationalFunctionN& o) const {
  if (o.is_zero()) throw Error("division by zero rational function");
  return RationalFunctionN(num_ * o.den_, den_ * o.num_);
}

BigRational RationalFunctionN::eval_at(long long n) const {
  BigRational x(n);
  BigRational d = den_.eval(x);
  if (d == 0) throw PoleAtN(n);
  return num_.eval(x) / d;
}

Asymptotics RationalFunctionN::asymptotic() const {
  if (is_zero()) throw ZeroFunction();
  return Asymptotics{num_.degree() - den_.degree(), num_.leading() / den_.leading()};
}

std::string RationalFunctionN::to_string() const {
  if (den_.degree() == 0 && den_.coeff(0) == 1) return is_zero() ? "0" : num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

namespace {

// Pull out small integer roots; leftover factor printed expanded.
std::string factored(const PolyN& p) {
  if (p.degree() <= 1) return p.to_string();
  PolyN rest = p;
  std::ostringstream os;
  bool any = false;
  for (long r = 64; r >= -64 && rest.degree() > 0;) {
    if (rest.eval(BigRational(r)) == 0) {
      rest = rest.divide_exact(PolyN(std::vector<BigRational>{BigRational(-r), BigRational(1)}));
      if (r == 0)
        os << "N";
      else
        os << "(N" << (r > 0 ? "-" : "+") << (r > 0 ? r : -r) << ")";
      any = true;
      continue;  // same root may repeat
    }
    --r;
  }
  std::string head;
  if (rest.degree() == 0) {
    if (!(rest.coeff(0) == 1) || !any) head = rest.coeff(0).str();
  } else {
    head = "(" + rest.to_string() + ")";
  }
  return head + os.str();
}

}  // namespace

std::string RationalFunctionN::to_factored_string() const {
  if (den_.degree() == 0 && den_.coeff(0) == 1) return is_zero() ? "0" : factored(num_);
  return factored(num_) + " / [" + factored(den_) + "]";
}

}  // namespace haarint
