#pragma once

// Small dense exact linear algebra over a field (BigRational or
// RationalFunctionN): Gaussian solve and Moore-Penrose pseudo-inverse of a
// symmetric PSD rational matrix.

#include <vector>

#include "haarint/errors.hpp"
#include "haarint/rational.hpp"

namespace haarint {

template <class F>
using DenseMat = std::vector<std::vector<F>>;

template <class F>
std::vector<F> solve_linear(DenseMat<F> a, std::vector<F> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == F(0)) ++piv;
    if (piv == n) throw Error("singular linear system");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == F(0)) continue;
      F factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] = a[r][c] - factor * a[col][c];
      b[r] = b[r] - factor * b[col];
    }
  }
  std::vector<F> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

template <class F>
DenseMat<F> invert(DenseMat<F> a) {
  const std::size_t n = a.size();
  DenseMat<F> inv(n, std::vector<F>(n, F(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = F(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == F(0)) ++piv;
    if (piv == n) throw Error("singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    F d = a[col][col];
    for (std::size_t c = 0; c < n; ++c) {
      a[col][c] = a[col][c] / d;
      inv[col][c] = inv[col][c] / d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == F(0)) continue;
      F factor = a[r][col];
      for (std::size_t c = 0; c < n; ++c) {
        a[r][c] = a[r][c] - factor * a[col][c];
        inv[r][c] = inv[r][c] - factor * inv[col][c];
      }
    }
  }
  return inv;
}

// For symmetric PSD G with column-space basis G[:,C]: G^+ = U (U^T G U)^-1 U^T
// where U = G[:,C].
DenseMat<BigRational> pseudo_inverse_psd(const DenseMat<BigRational>& g);

}  // namespace haarint
