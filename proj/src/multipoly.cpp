#include "haarint/multipoly.hpp"

#include <sstream>

#include "haarint/errors.hpp"

namespace haarint {

SymbolTable::SymbolTable(std::vector<std::string> names) : names_(std::move(names)) {
  for (int i = 0; i < static_cast<int>(names_.size()); ++i) index_[names_[i]] = i;
}

int SymbolTable::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw UnknownSymbol(name);
  return it->second;
}

MultiPoly MultiPoly::constant(SymbolTablePtr syms, const BigRational& c) {
  MultiPoly p(std::move(syms));
  if (c != 0) p.terms_[std::vector<int>(p.syms_->size(), 0)] = c;
  return p;
}

MultiPoly MultiPoly::symbol(SymbolTablePtr syms, const std::string& name) {
  MultiPoly p(syms);
  std::vector<int> e(syms->size(), 0);
  e[syms->index_of(name)] = 1;
  p.terms_[e] = 1;
  return p;
}

void MultiPoly::add_term(const std::vector<int>& expo, const BigRational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(expo, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r(syms_);
  std::vector<int> e(syms_->size());
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  return r;
}

MultiPoly MultiPoly::operator*(const BigRational& s) const {
  if (s == 0) return MultiPoly(syms_);
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c *= s;
  return r;
}

MultiPoly MultiPoly::partial(const std::string& symbol) const {
  return partial(syms_->index_of(symbol));
}

MultiPoly MultiPoly::partial(int k) const {
  MultiPoly r(syms_);
  for (const auto& [e, c] : terms_) {
    if (e[k] == 0) continue;
    std::vector<int> e2 = e;
    e2[k] -= 1;
    r.add_term(e2, c * e[k]);
  }
  return r;
}

MultiPoly MultiPoly::substitute(int k, const MultiPoly& value) const {
  MultiPoly r(syms_);
  for (const auto& [e, c] : terms_) {
    std::vector<int> e2 = e;
    int p = e2[k];
    e2[k] = 0;
    MultiPoly term(syms_);
    term.terms_[e2] = c;
    r += term * value.pow(p);
  }
  return r;
}

MultiPoly MultiPoly::pow(int e) const {
  MultiPoly acc = constant(syms_, 1);
  for (int i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

BigRational MultiPoly::eval(const std::vector<BigRational>& point) const {
  BigRational total = 0;
  for (const auto& [e, c] : terms_) {
    BigRational t = c;
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) t *= rational_pow(point[i], e[i]);
    total += t;
  }
  return total;
}

int MultiPoly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    BigRational a = c < 0 ? BigRational(-c) : c;
    bool unit = (a == 1);
    bool any_sym = false;
    std::ostringstream mono;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (any_sym) mono << "*";
      mono << syms_->name(i);
      if (e[i] > 1) mono << "^" << e[i];
      any_sym = true;
    }
    if (!unit || !any_sym) {
      os << a.str();
      if (any_sym) os << "*";
    }
    os << mono.str();
    first = false;
  }
  return os.str();
}

}  // namespace haarint
