#pragma once

#include <stdexcept>
#include <string>

namespace haarint {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// algebra
struct PoleAtN : Error {
  explicit PoleAtN(long long n)
      : Error("denominator vanishes at N = " + std::to_string(n)), n(n) {}
  long long n;
};
struct ZeroFunction : Error {
  ZeroFunction() : Error("asymptotics of the zero function") {}
};
struct UnknownSymbol : Error {
  explicit UnknownSymbol(const std::string& s) : Error("unknown symbol: " + s) {}
};

// combinatorics
struct OddSize : Error {
  explicit OddSize(int n) : Error("pairing ground set must be even, got " + std::to_string(n)) {}
};
struct SizeMismatch : Error {
  SizeMismatch() : Error("pairings on different ground sets") {}
};
struct WeightMismatch : Error {
  WeightMismatch() : Error("partitions of different weight") {}
};

// weingarten / moments
struct TableOrderMismatch : Error {
  TableOrderMismatch() : Error("weingarten tables are not of consecutive orders") {}
};
struct ParityViolation : Error {
  explicit ParityViolation(const std::string& m) : Error(m) {}
};
struct UnsupportedLetter : Error {
  explicit UnsupportedLetter(const std::string& m) : Error("unsupported letter: " + m) {}
};

// cumulants
struct MissingMoment : Error {
  explicit MissingMoment(int p) : Error("moment phi_" + std::to_string(p) + " not provided") {}
};
struct UnknownTag : Error {
  explicit UnknownTag(const std::string& t) : Error("unknown polarized-cumulant tag: " + t) {}
};

// series
struct OrderTooLarge : Error {
  explicit OrderTooLarge(int order, int cap)
      : Error("expansion order " + std::to_string(order) + " exceeds engine cap " + std::to_string(cap)) {}
};

// hciz
struct DegenerateSpectrum : Error {
  explicit DegenerateSpectrum(const std::string& m) : Error(m) {}
};
struct ResidualRationalTerm : Error {
  explicit ResidualRationalTerm(const std::string& m) : Error(m) {}
};

// montecarlo
struct NonFinite : Error {
  explicit NonFinite(const std::string& m) : Error(m) {}
};
struct RngExhausted : Error {
  RngExhausted() : Error("rng stream exhausted") {}
};

}  // namespace haarint
