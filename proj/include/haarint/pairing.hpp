#pragma once

#include <utility>
#include <vector>

#include "haarint/partition.hpp"

namespace haarint {

// Perfect matching on {0..2n-1}, stored as pairs (a,b) with a < b sorted by a.
class Pairing {
 public:
  Pairing() = default;
  explicit Pairing(std::vector<std::pair<int, int>> pairs, int ground_size);

  int ground_size() const { return 2 * static_cast<int>(pairs_.size()); }
  int partner(int x) const { return partner_[x]; }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

  bool operator==(const Pairing& o) const { return pairs_ == o.pairs_; }
  std::string to_string() const;  // "{(1,2),(3,4)}" 1-based

 private:
  std::vector<std::pair<int, int>> pairs_;
  std::vector<int> partner_;
};

// All pairings of {0..two_n-1} in the deterministic order given by
// "smallest unmatched element pairs with each larger element in turn".
// The first entry is always {(0,1),(2,3),...}. Throws OddSize.
std::vector<Pairing> pairings_of(int two_n);

// Cycle type of p1∘p2 (pairings as fixed-point-free involutions) has every
// length with even multiplicity; returns the halved type, a partition of n.
Partition pairing_product_class(const Pairing& p1, const Pairing& p2);

}  // namespace haarint
