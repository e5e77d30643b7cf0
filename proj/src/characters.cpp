#include "haarint/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "haarint/errors.hpp"

namespace haarint {

namespace {

// Border-strip recursion on beta-numbers b_i = lambda_i + (rows-1-i).
long long mn(const std::vector<int>& lambda, const std::vector<int>& mu, size_t mu_pos,
             std::map<std::pair<std::vector<int>, size_t>, long long>& memo) {
  if (mu_pos == mu.size()) return lambda.empty() ? 1 : 0;
  if (lambda.empty()) return 0;
  auto key = std::make_pair(lambda, mu_pos);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  int k = mu[mu_pos];
  int rows = static_cast<int>(lambda.size());
  std::vector<int> beta(rows);
  for (int i = 0; i < rows; ++i) beta[i] = lambda[i] + (rows - 1 - i);

  long long total = 0;
  for (int i = 0; i < rows; ++i) {
    int nb = beta[i] - k;
    if (nb < 0) continue;
    if (std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
    int cross = 0;
    for (int b : beta)
      if (nb < b && b < beta[i]) ++cross;
    std::vector<int> nbeta = beta;
    nbeta[i] = nb;
    std::sort(nbeta.begin(), nbeta.end(), std::greater<int>());
    std::vector<int> nlam;
    for (int j = 0; j < rows; ++j) {
      int l = nbeta[j] - (rows - 1 - j);
      if (l > 0) nlam.push_back(l);
    }
    long long sub = mn(nlam, mu, mu_pos + 1, memo);
    total += (cross % 2 == 0 ? sub : -sub);
  }
  memo[key] = total;
  return total;
}

std::mutex g_char_mutex;
std::map<std::pair<std::vector<int>, std::vector<int>>, long long> g_char_cache;

std::vector<int> conjugate(const std::vector<int>& lam) {
  if (lam.empty()) return {};
  std::vector<int> conj(lam[0], 0);
  for (int j = 0; j < lam[0]; ++j)
    for (int l : lam)
      if (l > j) conj[j]++;
  return conj;
}

}  // namespace

long long character(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight()) throw WeightMismatch();
  auto key = std::make_pair(lambda.parts(), mu.parts());
  {
    std::lock_guard<std::mutex> lk(g_char_mutex);
    auto it = g_char_cache.find(key);
    if (it != g_char_cache.end()) return it->second;
  }
  std::map<std::pair<std::vector<int>, size_t>, long long> memo;
  long long v = mn(lambda.parts(), mu.parts(), 0, memo);
  std::lock_guard<std::mutex> lk(g_char_mutex);
  g_char_cache[key] = v;
  return v;
}

BigInt dim_sn(const Partition& lambda) {
  const auto& lam = lambda.parts();
  auto conj = conjugate(lam);
  BigInt d = factorial(lambda.weight());
  for (size_t i = 0; i < lam.size(); ++i)
    for (int j = 0; j < lam[i]; ++j) {
      int hook = (lam[i] - j - 1) + (conj[j] - static_cast<int>(i) - 1) + 1;
      d /= hook;
    }
  return d;
}

RationalFunctionN dim_gl(const Partition& lambda) {
  const auto& lam = lambda.parts();
  auto conj = conjugate(lam);
  PolyN num(1);
  BigInt hooks = 1;
  for (size_t i = 0; i < lam.size(); ++i)
    for (int j = 0; j < lam[i]; ++j) {
      int hook = (lam[i] - j - 1) + (conj[j] - static_cast<int>(i) - 1) + 1;
      hooks *= hook;
      long content = static_cast<long>(j) - static_cast<long>(i);
      num = num * PolyN(std::vector<BigRational>{BigRational(content), BigRational(1)});
    }
  return RationalFunctionN(num * BigRational(BigInt(1), hooks));
}

BigInt centralizer_size(const Partition& mu) {
  BigInt z = 1;
  auto mult = mu.multiplicities();
  for (size_t p = 1; p <= mult.size(); ++p) {
    int m = mult[p - 1];
    if (m == 0) continue;
    for (int i = 0; i < m; ++i) z *= static_cast<long>(p);
    z *= factorial(m);
  }
  return z;
}

}  // namespace haarint
