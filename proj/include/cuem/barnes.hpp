#pragma once

#include "cuem/rational.hpp"

namespace cuem {

/// Barnes G at a positive integer: G(n) = prod_{j=1}^{n-2} j!.
BigInt barnes_g(int n);

/// F_N(0,k) = G(N+2k+1) G(N+1) G(k+1)^2 / (G(N+k+1)^2 G(2k+1)).
Rational F_N_zero(int N, int k);

/// F(0,k) = G(k+1)^2 / G(2k+1).
Rational F_zero_limit(int k);

}  // namespace cuem
