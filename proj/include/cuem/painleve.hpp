#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "cuem/moment.hpp"
#include "cuem/series.hpp"

namespace cuem {

/// sigma~(x) = sum_{j>=2} alpha_j x^j for the finite-N sigma-PV problem.
struct SigmaVSeries {
    int N = 0;
    int k = 1;
    int order = 0;
    std::vector<Rational> alpha;  ///< alpha[j], j = 0..order; alpha[0] = alpha[1] = 0
    std::optional<Rational> free_param;

    PowerSeries series() const { return PowerSeries(alpha); }
};

/// xi(t) = sum_{j>=2} xi_j t^j for the sigma-PIII' limit problem.
struct XiSeries {
    int k = 1;
    int order = 0;
    std::vector<Rational> xi;  ///< xi[j], j = 0..order
    std::optional<Rational> free_param;

    PowerSeries series() const { return PowerSeries(xi); }
};

/// Solves the sigma-PV recursion through x^order. Orders above 2k need the
/// free parameter alpha_{2k+1}.
SigmaVSeries solve_sigma_v(int N, int k, int order, std::optional<Rational> free_param = std::nullopt);

/// Same scheme for xi(t); the free parameter is xi_{2k+1}.
XiSeries solve_xi(int k, int order, std::optional<Rational> free_param = std::nullopt);

/// Coefficients of LHS - RHS of the respective ODE, known through the series order.
PowerSeries sigma_v_residual(const SigmaVSeries& s);
PowerSeries xi_residual(const XiSeries& s);

/// Lowest order with a nonzero ODE residual, or order+1 when clean.
int residual_check(const SigmaVSeries& s);
int residual_check(const XiSeries& s);

MomentResult moment_painleve(int N, int h, int k);
MomentResult moment_limit_painleve(int h, int k);

/// sigma_III(s) = 2 xi(s^2) + k^2; order <= 4k.
PowerSeries sigma_iii_series(int k, int order);

/// Large-N limit of f(N)/N^degree for f polynomial in N of the given degree:
/// interpolates f at first_N, first_N+1, ... and returns the N^degree
/// coefficient. One extra sample checks the degree.
Rational leading_coefficient_in_N(const std::function<Rational(int)>& f, int degree, int first_N);

}  // namespace cuem
