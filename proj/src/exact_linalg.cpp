#include "haarint/exact_linalg.hpp"

namespace haarint {

DenseMat<BigRational> pseudo_inverse_psd(const DenseMat<BigRational>& g) {
  const std::size_t n = g.size();
  // rank-revealing elimination to pick independent columns
  DenseMat<BigRational> work = g;
  std::vector<std::size_t> basis;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t piv = row;
    while (piv < n && work[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(work[piv], work[row]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || work[r][col] == 0) continue;
      BigRational f = work[r][col] / work[row][col];
      for (std::size_t c = col; c < n; ++c) work[r][c] -= f * work[row][c];
    }
    basis.push_back(col);
    ++row;
  }
  const std::size_t r = basis.size();
  // U = G[:, basis]; M = U^T (G U); G^+ = U M^-1 U^T
  DenseMat<BigRational> u(n, std::vector<BigRational>(r));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < r; ++i) u[a][i] = g[a][basis[i]];
  DenseMat<BigRational> gu(n, std::vector<BigRational>(r, BigRational(0)));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t k = 0; k < n; ++k) {
      if (g[a][k] == 0) continue;
      for (std::size_t i = 0; i < r; ++i) gu[a][i] += g[a][k] * u[k][i];
    }
  DenseMat<BigRational> m(r, std::vector<BigRational>(r, BigRational(0)));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t a = 0; a < n; ++a) {
      if (u[a][i] == 0) continue;
      for (std::size_t j = 0; j < r; ++j) m[i][j] += u[a][i] * gu[a][j];
    }
  DenseMat<BigRational> minv = invert(std::move(m));
  DenseMat<BigRational> t(n, std::vector<BigRational>(r, BigRational(0)));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < r; ++i) {
      if (u[a][i] == 0) continue;
      for (std::size_t j = 0; j < r; ++j) t[a][j] += u[a][i] * minv[i][j];
    }
  DenseMat<BigRational> out(n, std::vector<BigRational>(n, BigRational(0)));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t j = 0; j < r; ++j) {
      if (t[a][j] == 0) continue;
      for (std::size_t b = 0; b < n; ++b) out[a][b] += t[a][j] * u[b][j];
    }
  return out;
}

}  // namespace haarint
