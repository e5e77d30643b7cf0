#include "haarint/pairing.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "haarint/errors.hpp"

namespace haarint {

Pairing::Pairing(std::vector<std::pair<int, int>> pairs, int ground_size) : pairs_(std::move(pairs)) {
  if (ground_size != 2 * static_cast<int>(pairs_.size())) throw Error("pairing size mismatch");
  partner_.assign(ground_size, -1);
  for (auto& [a, b] : pairs_) {
    if (a > b) std::swap(a, b);
    if (a < 0 || b >= ground_size || partner_[a] != -1 || partner_[b] != -1)
      throw Error("not a perfect matching");
    partner_[a] = b;
    partner_[b] = a;
  }
  std::sort(pairs_.begin(), pairs_.end());
}

std::string Pairing::to_string() const {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < pairs_.size(); ++i) {
    if (i) os << ",";
    os << "(" << pairs_[i].first + 1 << "," << pairs_[i].second + 1 << ")";
  }
  os << "}";
  return os.str();
}

namespace {

void gen(std::vector<int>& avail, std::vector<std::pair<int, int>>& cur, int two_n,
         std::vector<Pairing>& out) {
  if (avail.empty()) {
    out.push_back(Pairing(cur, two_n));
    return;
  }
  int a = avail.front();
  for (size_t i = 1; i < avail.size(); ++i) {
    int b = avail[i];
    std::vector<int> rest;
    rest.reserve(avail.size() - 2);
    for (size_t j = 1; j < avail.size(); ++j)
      if (j != i) rest.push_back(avail[j]);
    cur.emplace_back(a, b);
    gen(rest, cur, two_n, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Pairing> pairings_of(int two_n) {
  if (two_n < 2 || two_n % 2 != 0) throw OddSize(two_n);
  std::vector<int> avail(two_n);
  for (int i = 0; i < two_n; ++i) avail[i] = i;
  std::vector<std::pair<int, int>> cur;
  std::vector<Pairing> out;
  gen(avail, cur, two_n, out);
  return out;
}

Partition pairing_product_class(const Pairing& p1, const Pairing& p2) {
  if (p1.ground_size() != p2.ground_size()) throw SizeMismatch();
  int m = p1.ground_size();
  std::vector<bool> seen(m, false);
  std::map<int, int> mult;  // cycle length -> count
  for (int s = 0; s < m; ++s) {
    if (seen[s]) continue;
    int len = 0, x = s;
    while (!seen[x]) {
      seen[x] = true;
      x = p1.partner(p2.partner(x));
      ++len;
    }
    mult[len]++;
  }
  std::vector<int> parts;
  for (auto [len, cnt] : mult) {
    if (cnt % 2 != 0) throw Error("pairing product cycle multiplicities not even");
    for (int i = 0; i < cnt / 2; ++i) parts.push_back(len);
  }
  return Partition(std::move(parts));
}

}  // namespace haarint
