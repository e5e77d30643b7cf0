#include "haarint/partition.hpp"

#include <algorithm>
#include <sstream>

#include "haarint/errors.hpp"

namespace haarint {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 1) throw Error("partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
}

int Partition::weight() const {
  int w = 0;
  for (int p : parts_) w += p;
  return w;
}

std::vector<int> Partition::multiplicities() const {
  std::vector<int> m(weight(), 0);
  for (int p : parts_) m[p - 1]++;
  return m;
}

Partition Partition::parse(const std::string& s) {
  std::vector<int> parts;
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw Error("unterminated partition literal: " + s);
    std::string body = s.substr(1, s.size() - 2);
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) continue;
      parts.push_back(std::stoi(tok));
    }
  } else {
    // exponent form: "1^2 2" means parts 1,1,2
    std::stringstream ss(s);
    std::string tok;
    while (ss >> tok) {
      auto caret = tok.find('^');
      if (caret == std::string::npos) {
        parts.push_back(std::stoi(tok));
      } else {
        int p = std::stoi(tok.substr(0, caret));
        int m = std::stoi(tok.substr(caret + 1));
        for (int i = 0; i < m; ++i) parts.push_back(p);
      }
    }
  }
  if (parts.empty()) throw Error("empty partition literal: " + s);
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ",";
    os << parts_[i];
  }
  os << "]";
  return os.str();
}

namespace {

void gen(int rem, int maxpart, std::vector<int>& cur, std::vector<Partition>& out) {
  if (rem == 0) {
    out.push_back(Partition(cur));
    return;
  }
  for (int k = std::min(rem, maxpart); k >= 1; --k) {
    cur.push_back(k);
    gen(rem - k, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 1) throw Error("partitions_of requires n >= 1");
  std::vector<Partition> out;
  std::vector<int> cur;
  gen(n, n, cur, out);
  return out;
}

}  // namespace haarint
