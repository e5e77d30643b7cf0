#pragma once

// Multivariate polynomials over a fixed list of named scalar symbols
// (a_1..a_N, b_1..b_N, ...). Exponent vectors are dense over the symbol
// list, term storage is sparse.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "haarint/rational.hpp"

namespace haarint {

class SymbolTable {
 public:
  explicit SymbolTable(std::vector<std::string> names);
  int index_of(const std::string& name) const;  // throws UnknownSymbol
  const std::string& name(int i) const { return names_[i]; }
  int size() const { return static_cast<int>(names_.size()); }

 private:
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
};

using SymbolTablePtr = std::shared_ptr<const SymbolTable>;

class MultiPoly {
 public:
  explicit MultiPoly(SymbolTablePtr syms) : syms_(std::move(syms)) {}
  static MultiPoly constant(SymbolTablePtr syms, const BigRational& c);
  static MultiPoly symbol(SymbolTablePtr syms, const std::string& name);

  bool is_zero() const { return terms_.empty(); }
  const SymbolTablePtr& symbols() const { return syms_; }
  const std::map<std::vector<int>, BigRational>& terms() const { return terms_; }

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const BigRational& s) const;
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

  MultiPoly partial(const std::string& symbol) const;
  MultiPoly partial(int symbol_index) const;

  // Substitute a polynomial for a symbol (used by the moment/cumulant
  // round trip).
  MultiPoly substitute(int symbol_index, const MultiPoly& value) const;

  MultiPoly pow(int e) const;
  BigRational eval(const std::vector<BigRational>& point) const;
  int total_degree() const;

  std::string to_string() const;

 private:
  void add_term(const std::vector<int>& expo, const BigRational& c);
  SymbolTablePtr syms_;
  std::map<std::vector<int>, BigRational> terms_;  // exponent vector -> coeff, no zeros
};

}  // namespace haarint
