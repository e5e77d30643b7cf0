#pragma once

#include <string>
#include <vector>

namespace haarint {

// Integer partition: weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);  // sorts descending, validates

  int weight() const;
  int num_parts() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }

  // Accepts "[2,1,1]" and exponent form "1^2 2".
  static Partition parse(const std::string& s);
  std::string to_string() const;  // "[2,1,1]"

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

  // multiplicity vector: count of part p at index p-1, length = weight
  std::vector<int> multiplicities() const;

 private:
  std::vector<int> parts_;
};

// All partitions of n in reverse lexicographic order: [n] first, [1^n] last.
std::vector<Partition> partitions_of(int n);

// Independent counting recursion p(n,k) used as test oracle lives in tests.
}  // namespace haarint
