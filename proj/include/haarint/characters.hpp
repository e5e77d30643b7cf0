#pragma once

// Symmetric-group characters (Murnaghan-Nakayama) and representation
// dimensions for S_n and GL(N).

#include "haarint/partition.hpp"
#include "haarint/polynomial.hpp"
#include "haarint/rational.hpp"

namespace haarint {

// chi^lambda(mu); throws WeightMismatch. Memoized, safe for concurrent use.
long long character(const Partition& lambda, const Partition& mu);

// Hook length formula; equals character(lambda, [1^n]).
BigInt dim_sn(const Partition& lambda);

// Schur polynomial dimension s_lambda(I_N) = prod_{cells} (N + j - i)/hook(i,j),
// a polynomial in N.
RationalFunctionN dim_gl(const Partition& lambda);

// |centralizer of class mu| = prod_p p^{m_p} m_p!
BigInt centralizer_size(const Partition& mu);

}  // namespace haarint
