#pragma once

#include <vector>

#include "haarint/partition.hpp"

namespace haarint {

// Bijection on {0..m-1} stored as an image array.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);  // validates bijection
  static Permutation identity(int m);

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[x]; }
  const std::vector<int>& images() const { return img_; }

  Permutation inverse() const;
  // (*this after o): (compose(o))(x) = this(o(x))
  Permutation compose(const Permutation& o) const;

  bool operator==(const Permutation& o) const { return img_ == o.img_; }

 private:
  std::vector<int> img_;
};

Partition cycle_type(const Permutation& p);

std::vector<Permutation> all_permutations(int m);

}  // namespace haarint
