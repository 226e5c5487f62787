#pragma once

#include <cstddef>

#include "cuem/moment.hpp"
#include "cuem/polynomial.hpp"
#include "cuem/series.hpp"

namespace cuem {

struct LaguerreParams {
    int N = 0;
    int k = 1;
    int h = 0;
};

/// L_n^{(alpha)}(-x) as a series in x. The rational-n overload uses rising
/// products in place of factorial ratios.
PowerSeries laguerre_series(int n, int alpha, std::size_t order);
PowerSeries laguerre_series(const Rational& n, int alpha, std::size_t order);

/// det[L^{(2k-1)}_{N+k-1-i-j}(-x)]_{i,j=0..k-1}. Requires N >= k-1.
PowerSeries laguerre_det_series(const LaguerreParams& p, std::size_t order);
PowerSeries laguerre_det_series(const Rational& N, int k, std::size_t order);

/// f_k(x) = (-1)^{k(k-1)/2} e^{-Nx/2} det[...].
PowerSeries f_k_series(const LaguerreParams& p, std::size_t order);
PowerSeries f_k_series(const Rational& N, int k, std::size_t order);

/// x d/dx log f_k(x); its coefficients are the alpha_j of the sigma-PV series.
PowerSeries sigma_tilde_from_determinant(int N, int k, std::size_t order);

/// F_N(h,k) = (-1)^h (2h)! [x^{2h}] f_k. Fails loudly if an odd coefficient
/// below x^{2h} is nonzero.
MomentResult moment_direct(const LaguerreParams& p);

/// F_N(h,k) as a polynomial of degree k^2+2h in N, by interpolation.
DensePolynomial moment_poly_in_N(int h, int k);

/// [x^1] det == (N/2) [x^0] det.
bool derivative_identity_check(int N, int k);

}  // namespace cuem
