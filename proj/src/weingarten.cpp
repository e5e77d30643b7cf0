#include "haarint/weingarten.hpp"

#include <mutex>
#include <sstream>

#include "haarint/characters.hpp"
#include "haarint/errors.hpp"
#include "haarint/exact_linalg.hpp"
#include "haarint/permutation.hpp"

namespace haarint {

std::string group_name(Group g) { return g == Group::Orthogonal ? "orthogonal" : "unitary"; }

const RationalFunctionN& WeingartenTable::at(const Partition& cls) const {
  auto it = entries.find(cls);
  if (it == entries.end()) throw Error("no Weingarten entry for class " + cls.to_string());
  return it->second;
}

WeingartenTable wg_unitary(int n) {
  if (n < 1) throw Error("weingarten order must be >= 1");
  WeingartenTable t{Group::Unitary, n, {}};
  auto lambdas = partitions_of(n);
  BigInt nfact2 = factorial(n) * factorial(n);
  for (const auto& mu : partitions_of(n)) {
    RationalFunctionN sum;
    for (const auto& lam : lambdas) {
      BigInt d = dim_sn(lam);
      long long chi = character(lam, mu);
      if (chi == 0) continue;
      BigRational coef(d * d * chi, nfact2);
      sum += RationalFunctionN(coef) / dim_gl(lam);
    }
    t.entries.emplace(mu, sum);
  }
  return t;
}

namespace {

// Identity pairing {(0,1),(2,3),...} is the first in enumeration order.
std::vector<int> class_indices(const std::vector<Partition>& classes, const Partition& c) = delete;

struct OrthogonalClassData {
  std::vector<Pairing> pairings;
  std::vector<Partition> classes;        // reverse-lex order
  std::vector<int> cls_of;               // index into classes of [p0 * p_i]
  std::map<Partition, int> cls_index;
};

OrthogonalClassData orthogonal_class_data(int n) {
  OrthogonalClassData d;
  d.pairings = pairings_of(2 * n);
  d.classes = partitions_of(n);
  for (int i = 0; i < static_cast<int>(d.classes.size()); ++i) d.cls_index[d.classes[i]] = i;
  const Pairing& p0 = d.pairings.front();
  d.cls_of.reserve(d.pairings.size());
  for (const auto& p : d.pairings)
    d.cls_of.push_back(d.cls_index.at(pairing_product_class(p0, p)));
  return d;
}

}  // namespace

WeingartenTable wg_orthogonal(int n) {
  if (n < 1) throw Error("weingarten order must be >= 1");
  auto d = orthogonal_class_data(n);
  const int k = static_cast<int>(d.classes.size());
  // representative p1 per row class tau = [p1 * p0]
  std::vector<int> rep(k, -1);
  for (int i = 0; i < static_cast<int>(d.pairings.size()); ++i)
    if (rep[d.cls_of[i]] < 0) rep[d.cls_of[i]] = i;
  // A[tau][mu] = sum over p2 of class mu of N^{l([rep_tau * p2])}
  DenseMat<RationalFunctionN> a(k, std::vector<RationalFunctionN>(k));
  for (int r = 0; r < k; ++r) {
    std::vector<std::vector<long>> powers(k);  // per column, exponent list
    const Pairing& p1 = d.pairings[rep[r]];
    for (int i = 0; i < static_cast<int>(d.pairings.size()); ++i) {
      int ell = pairing_product_class(p1, d.pairings[i]).num_parts();
      powers[d.cls_of[i]].push_back(ell);
    }
    for (int c = 0; c < k; ++c) {
      std::vector<BigRational> coeff(2 * n + 1, BigRational(0));
      for (long e : powers[c]) coeff[e] += 1;
      a[r][c] = RationalFunctionN(PolyN(std::move(coeff)));
    }
  }
  std::vector<RationalFunctionN> e(k);
  e[d.cls_index.at(Partition(std::vector<int>(n, 1)))] = RationalFunctionN(1);
  auto x = solve_linear(std::move(a), std::move(e));
  WeingartenTable t{Group::Orthogonal, n, {}};
  for (int c = 0; c < k; ++c) t.entries.emplace(d.classes[c], x[c]);
  return t;
}

const WeingartenTable& wg_table(Group g, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, WeingartenTable> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(static_cast<int>(g), n);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, g == Group::Orthogonal ? wg_orthogonal(n) : wg_unitary(n)).first;
  return it->second;
}

std::map<Partition, BigRational> wg_table_at(Group g, int n, long long N) {
  if (N < 1) throw Error("N must be positive");
  const WeingartenTable& sym = wg_table(g, n);
  std::map<Partition, BigRational> out;
  try {
    for (const auto& [cls, fn] : sym.entries) out[cls] = fn.eval_at(N);
    return out;
  } catch (const PoleAtN&) {
    out.clear();
  }
  if (g == Group::Unitary) {
    // character sum restricted to diagrams with at most N rows
    BigInt nfact2 = factorial(n) * factorial(n);
    for (const auto& mu : partitions_of(n)) {
      BigRational sum = 0;
      for (const auto& lam : partitions_of(n)) {
        if (lam.num_parts() > N) continue;
        long long chi = character(lam, mu);
        if (chi == 0) continue;
        BigInt d = dim_sn(lam);
        sum += BigRational(d * d * chi, nfact2) / dim_gl(lam).eval_at(N);
      }
      out[mu] = sum;
    }
    return out;
  }
  // orthogonal: exact pseudo-inverse of the fixed-N Gram matrix
  if (n > 4) throw Error("fixed-N orthogonal table below stability only supported for n <= 4");
  auto d = orthogonalclass_data_unused;  // placeholder
  return out;
}

bool gram_consistency_check(Group g, int n) {
  if (g == Group::Orthogonal) {
    const WeingartenTable& t = wg_table(g, n);
    auto d = orthogonal_class_data(n);
    std::vector<RationalFunctionN> x(d.classes.size());
    for (size_t c = 0; c < d.classes.size(); ++c) x[c] = t.at(d.classes[c]);
    for (size_t r = 0; r < d.pairings.size(); ++r) {
      // counts per (loop exponent, class of [p0 p2])
      std::vector<std::vector<BigRational>> cnt(d.classes.size(),
                                                std::vector<BigRational>(2 * n + 1, BigRational(0)));
      for (size_t i = 0; i < d.pairings.size(); ++i) {
        int ell = pairing_product_class(d.pairings[r], d.pairings[i]).num_parts();
        cnt[d.cls_of[i]][ell] += 1;
      }
      RationalFunctionN sum;
      for (size_t c = 0; c < d.classes.size(); ++c)
        sum += RationalFunctionN(PolyN(std::vector<BigRational>(cnt[c]))) * x[c];
      RationalFunctionN expect(r == 0 ? 1 : 0);
      if (!(sum == expect)) return false;
    }
    return true;
  }
  const WeingartenTable& t = wg_table(g, n);
  auto perms = all_permutations(n);
  for (const auto& sigma : perms) {
    RationalFunctionN sum;
    for (const auto& tau : perms) {
      Partition c = cycle_type(sigma.compose(tau.inverse()));
      sum += RationalFunctionN(PolyN::monomial(1, c.num_parts())) * t.at(cycle_type(tau));
    }
    bool is_id = sigma == Permutation::identity(n);
    if (!(sum == RationalFunctionN(is_id ? 1 : 0))) return false;
  }
  return true;
}

namespace {

// Remove the last element from a permutation's cycle structure. Returns
// (weightN, contracted) where weightN means the loop closed on itself.
std::pair<bool, Permutation> contract_perm(const Permutation& pi) {
  int n = pi.size();
  int last = n - 1;
  std::vector<int> img(n - 1);
  if (pi(last) == last) {
    for (int x = 0; x < n - 1; ++x) img[x] = pi(x);
    return {true, Permutation(std::move(img))};
  }
  for (int x = 0; x < n - 1; ++x) {
    int y = pi(x);
    if (y == last) y = pi(last);
    img[x] = y;
  }
  return {false, Permutation(std::move(img))};
}

}  // namespace

ContractionReport contraction_check(int n, const WeingartenTable& table_n,
                                    const WeingartenTable& table_n_minus_1) {
  if (n < 2 || table_n.order != n || table_n_minus_1.order != n - 1 ||
      table_n.group != table_n_minus_1.group)
    throw TableOrderMismatch();
  ContractionReport rep;
  RationalFunctionN Nsym = RationalFunctionN::variable();
  auto fail = [&](const std::string& what) {
    if (rep.pass) rep.first_violation = what;
    rep.pass = false;
  };

  if (table_n.group == Group::Orthogonal) {
    auto big = pairings_of(2 * n);
    auto small = pairings_of(2 * n - 2);
    const int u = 2 * n - 2, v = 2 * n - 1;  // the contracted slots
    for (const auto& p1 : big) {
      for (const auto& q : small) {
        // expansions of q to P_{2n}: attach (u,v) directly, or split a pair
        RationalFunctionN lhs;
        {
          auto pairs = q.pairs();
          pairs.emplace_back(u, v);
          lhs += Nsym * table_n.at(pairing_product_class(p1, Pairing(pairs, 2 * n)));
        }
        for (size_t k = 0; k < q.pairs().size(); ++k) {
          auto [a, b] = q.pairs()[k];
          for (int flip = 0; flip < 2; ++flip) {
            auto pairs = q.pairs();
            pairs.erase(pairs.begin() + k);
            pairs.emplace_back(a, flip ? v : u);
            pairs.emplace_back(b, flip ? u : v);
            lhs += table_n.at(pairing_product_class(p1, Pairing(pairs, 2 * n)));
          }
        }
        RationalFunctionN rhs;
        if (p1.partner(u) == v) {
          std::vector<std::pair<int, int>> rest;
          for (auto pr : p1.pairs())
            if (pr != std::make_pair(u, v)) rest.push_back(pr);
          rhs = table_n_minus_1.at(pairing_product_class(Pairing(rest, 2 * n - 2), q));
        }
        ++rep.relations_checked;
        if (!(lhs == rhs)) {
          std::ostringstream os;
          os << "orthogonal n=" << n << " p1=" << p1.to_string() << " q=" << q.to_string()
             << ": lhs=" << lhs.to_string() << " rhs=" << rhs.to_string();
          fail(os.str());
        }
      }
    }
    return rep;
  }

  auto perms_n = all_permutations(n);
  auto perms_m = all_permutations(n - 1);
  for (const auto& tau : perms_n) {
    for (const auto& rho : perms_m) {
      RationalFunctionN lhs;
      for (const auto& sigma : perms_n) {
        auto [closed, contracted] = contract_perm(tau.compose(sigma));
        if (!(contracted == rho)) continue;
        RationalFunctionN w = closed ? Nsym : RationalFunctionN(1);
        lhs += w * table_n.at(cycle_type(sigma));
      }
      RationalFunctionN rhs;
      if (tau(n - 1) == n - 1) {
        std::vector<int> timg(tau.images().begin(), tau.images().end() - 1);
        Permutation tprime(std::move(timg));
        rhs = table_n_minus_1.at(cycle_type(tprime.inverse().compose(rho)));
      }
      ++rep.relations_checked;
      if (!(lhs == rhs)) {
        std::ostringstream os;
        os << "unitary n=" << n << " tau/rho relation violated: lhs=" << lhs.to_string()
           << " rhs=" << rhs.to_string();
        fail(os.str());
      }
    }
  }
  return rep;
}

}  // namespace haarint
