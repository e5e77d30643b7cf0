#include "haarint/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "haarint/errors.hpp"

namespace haarint {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
      throw Error("image array is not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int m) {
  std::vector<int> v(m);
  std::iota(v.begin(), v.end(), 0);
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> v(img_.size());
  for (int i = 0; i < size(); ++i) v[img_[i]] = i;
  return Permutation(std::move(v));
}

Permutation Permutation::compose(const Permutation& o) const {
  std::vector<int> v(img_.size());
  for (int i = 0; i < size(); ++i) v[i] = img_[o.img_[i]];
  return Permutation(std::move(v));
}

Partition cycle_type(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  std::vector<int> lens;
  for (int s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    int len = 0, x = s;
    while (!seen[x]) {
      seen[x] = true;
      x = p(x);
      ++len;
    }
    lens.push_back(len);
  }
  return Partition(std::move(lens));
}

std::vector<Permutation> all_permutations(int m) {
  std::vector<int> v(m);
  std::iota(v.begin(), v.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace haarint
