#pragma once

#include <map>

#include "cuem/moment.hpp"
#include "cuem/partition.hpp"
#include "cuem/polynomial.hpp"
#include "cuem/series.hpp"

namespace cuem {

struct BlockParams {
    Rational theta0_tilde;
    Rational theta_t;
    Rational theta_star;
    Rational sigma;
};

/// Painleve V block B_{lambda,mu}. A vanishing numerator factor makes the
/// block zero outright; otherwise a vanishing denominator raises
/// ErrorKind::singular_block.
Rational block_v(const Partition& lambda, const Partition& mu, const BlockParams& p);

/// Painleve III block B^{III}_{lambda,mu}(theta_star, sigma), same conventions.
Rational block_iii(const Partition& lambda, const Partition& mu, const Rational& theta_star, const Rational& sigma);

/// C~_0(theta_t; k; sigma); zero when 1 + 2 theta_t - sigma < 1.
Rational struct_const_regularized(const Rational& theta_t, int k, int sigma);
/// C_III(k; sigma).
Rational struct_const_iii(int k, int sigma);

/// Full conformal-block expansion of f_k, n = 0 .. min(N, n_max) terms.
PowerSeries f_k_conformal_series(int N, int k, int order);
/// The n-th term of that expansion alone, prefactors included.
PowerSeries f_k_conformal_term(int N, int k, int n, int order);

PowerSeries tau_iii_series(int k, int order);

/// F_N(h,k) read off the conformal expansion.
MomentResult moment_conformal(int N, int h, int k);

/// F(h,k) as a hook sum over |lambda| = 2h, lambda_1 <= k.
MomentResult moment_limit_hooksum(int h, int k);

/// Tables of X~_r(s) keyed by r = 2h. Injectable so a corrupted entry can be
/// exercised by the verification harness.
struct DehayeTable {
    std::map<int, DensePolynomial> x_tilde;
};
const DehayeTable& default_dehaye_table();
/// Y_r(s) = prod_{odd a < r} (s^2 - a^2)^{eta_a(r)}.
DensePolynomial dehaye_y(int r);
MomentResult moment_limit_dehaye(int h, int k, const DehayeTable& table = default_dehaye_table());

}  // namespace cuem
