#include "cuem/laguerre.hpp"

#include <string>
#include <vector>

#include "cuem/error.hpp"

namespace cuem {

PowerSeries laguerre_series(const Rational& n, int alpha, std::size_t order) {
    if (alpha < 0) throw std::invalid_argument("laguerre_series: alpha must be non-negative");
    std::vector<Rational> c(order + 1);
    for (std::size_t j = 0; j <= order; ++j) {
        const int ji = static_cast<int>(j);
        // Gamma(n+alpha+1)/Gamma(n-j+1) = prod_{m=1}^{alpha+j} (n-j+m)
        Rational num(1);
        for (int m = 1; m <= alpha + ji; ++m) {
            num *= n - Rational(ji) + Rational(m);
            if (num.is_zero()) break;
        }
        c[j] = num / Rational(factorial(alpha + ji) * factorial(ji));
    }
    return PowerSeries(std::move(c));
}

PowerSeries laguerre_series(int n, int alpha, std::size_t order) {
    if (n < 0) throw std::invalid_argument("laguerre_series: negative degree");
    return laguerre_series(Rational(n), alpha, order);
}

PowerSeries laguerre_det_series(const Rational& N, int k, std::size_t order) {
    if (k < 1) throw Error(ErrorKind::invalid_input, "k must be a positive integer");
    if (N < Rational(k - 1))
        throw Error(ErrorKind::invalid_input, "index of Laguerre polynomial would be negative (N=" +
                                                  N.to_string() + ", k=" + std::to_string(k) + ")");
    std::vector<PowerSeries> by_offset;  // entries depend on i+j only
    for (int s = 0; s <= 2 * k - 2; ++s)
        by_offset.push_back(laguerre_series(N + Rational(k - 1 - s), 2 * k - 1, order));
    SeriesMatrix m(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m[static_cast<std::size_t>(i)].push_back(by_offset[static_cast<std::size_t>(i + j)]);
    return series_determinant(m);
}

PowerSeries laguerre_det_series(const LaguerreParams& p, std::size_t order) {
    if (p.N < 0) throw Error(ErrorKind::invalid_input, "N must be non-negative");
    return laguerre_det_series(Rational(p.N), p.k, order);
}

PowerSeries f_k_series(const Rational& N, int k, std::size_t order) {
    PowerSeries det = laguerre_det_series(N, k, order);
    PowerSeries e = series_exp(PowerSeries::monomial(-N / Rational(2), 1, order));
    PowerSeries f = e * det;
    return ((k * (k - 1) / 2) % 2 == 0) ? f : -f;
}

PowerSeries f_k_series(const LaguerreParams& p, std::size_t order) {
    if (p.N < 0) throw Error(ErrorKind::invalid_input, "N must be non-negative");
    return f_k_series(Rational(p.N), p.k, order);
}

PowerSeries sigma_tilde_from_determinant(int N, int k, std::size_t order) {
    PowerSeries f = f_k_series(LaguerreParams{N, k, 0}, order);
    return series_euler(series_log(f).log);
}

MomentResult moment_direct(const LaguerreParams& p) {
    validate_moment_params(p.N, p.h, p.k);
    const std::size_t order = static_cast<std::size_t>(2 * p.h);
    PowerSeries f = f_k_series(p, order);
    for (std::size_t j = 1; j < order; j += 2)
        if (!f[j].is_zero())
            throw Error(ErrorKind::internal_consistency,
                        "odd coefficient x^" + std::to_string(j) + " of f_k is " + f[j].to_string() +
                            " (N=" + std::to_string(p.N) + ", k=" + std::to_string(p.k) + "), expected 0");
    Rational v = Rational(factorial(2 * p.h)) * f[order];
    if (p.h % 2) v = -v;
    return MomentResult{p.N, p.h, p.k, Method::laguerre, v, static_cast<int>(order)};
}

DensePolynomial moment_poly_in_N(int h, int k) {
    validate_moment_params(std::nullopt, h, k);
    const int degree = k * k + 2 * h;
    const int first = k - 1;
    std::vector<std::pair<Rational, Rational>> pts;
    for (int N = first; N <= first + degree; ++N)
        pts.emplace_back(Rational(N), moment_direct(LaguerreParams{N, k, h}).value);
    DensePolynomial poly = poly_interpolate(pts);
    // One extra sample guards the assumed degree.
    const int extra = first + degree + 1;
    if (poly(Rational(extra)) != moment_direct(LaguerreParams{extra, k, h}).value)
        throw Error(ErrorKind::internal_consistency,
                    "F_N(" + std::to_string(h) + "," + std::to_string(k) + ") is not a polynomial of degree " +
                        std::to_string(degree) + " in N");
    return poly;
}

bool derivative_identity_check(int N, int k) {
    PowerSeries det = laguerre_det_series(LaguerreParams{N, k, 0}, 1);
    return det[1] == Rational(N, 2) * det[0];
}

}  // namespace cuem
