#pragma once

// Exact Weingarten coefficients C([sigma]) for O(N) and U(N) as rational
// functions of N, plus fixed-N tables valid below the stability bound.

#include <map>
#include <string>
#include <vector>

#include "haarint/pairing.hpp"
#include "haarint/partition.hpp"
#include "haarint/polynomial.hpp"

namespace haarint {

enum class Group { Orthogonal, Unitary };

std::string group_name(Group g);

struct WeingartenTable {
  Group group;
  int order;  // n
  std::map<Partition, RationalFunctionN> entries;
  const RationalFunctionN& at(const Partition& cls) const;
};

// Unitary: explicit character-sum formula.
WeingartenTable wg_unitary(int n);
// Orthogonal: exact solve of the pairing Gram system G w = e, reduced over
// classes; the full system is verified separately (gram_consistency_check).
WeingartenTable wg_orthogonal(int n);

// Cached symbolic tables (built once per (group, n)).
const WeingartenTable& wg_table(Group g, int n);

// Fixed-N table. Uses the symbolic table when pole-free at N; below the
// stability region falls back to the exact pseudo-inverse of the fixed-N
// Gram matrix (orthogonal) or to the character sum restricted to at most
// N rows (unitary), which are the correct coefficients for every N >= 1.
std::map<Partition, BigRational> wg_table_at(Group g, int n, long long N);

// Verifies every row of the full Gram system symbolically in N:
// orthogonal: sum_{p2} N^{l([p1 p2])} C([p0 p2]) = [p1 == p0],
// unitary:    sum_{tau} N^{cycles(sigma tau^-1)} C([tau]) = [sigma == id].
bool gram_consistency_check(Group g, int n);

struct ContractionReport {
  bool pass = true;
  int relations_checked = 0;
  std::string first_violation;
};

// Verifies, as identities of rational functions in N, every relation
// obtained by contracting the last two indices of the order-n expansion
// against the order-(n-1) expansion. Throws TableOrderMismatch.
ContractionReport contraction_check(int n, const WeingartenTable& table_n,
                                    const WeingartenTable& table_n_minus_1);

}  // namespace haarint
