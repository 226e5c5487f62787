#include "cuem/bessel.hpp"

#include <algorithm>
#include <map>

#include "cuem/error.hpp"
#include "cuem/laguerre.hpp"
#include "cuem/painleve.hpp"

namespace cuem {

BesselSeries bessel_i_series(int nu, int order) {
    if (nu < 0 || order < 0) throw Error(ErrorKind::invalid_input, "bessel_i_series: need nu >= 0, order >= 0");
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    for (int m = 0; 2 * m + nu <= order; ++m)
        c[static_cast<std::size_t>(2 * m + nu)] = Rational(BigInt(1), factorial(m) * factorial(m + nu));
    return BesselSeries{nu, PowerSeries(std::move(c))};
}

PowerSeries h_iii_det_series(int k, int order) {
    if (k < 1 || order < 0) throw Error(ErrorKind::invalid_input, "h_iii_det_series: need k >= 1, order >= 0");
    std::vector<PowerSeries> by_index;
    for (int nu = 1; nu <= 2 * k - 1; ++nu) by_index.push_back(bessel_i_series(nu, order).coeffs);
    SeriesMatrix m(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m[static_cast<std::size_t>(i)].push_back(by_index[static_cast<std::size_t>(i + j)]);
    return series_determinant(m);
}

namespace {

// t d/dt log H(sqrt t) - t/2 through t^order. H = s^{k^2} P(s^2), so this is
// k^2/2 + t P'(t)/P(t) - t/2.
PowerSeries bessel_log_derivative(int k, int order) {
    const int val = k * k;
    PowerSeries H = h_iii_det_series(k, val + 2 * order);
    for (int j = 0; j < val; ++j)
        if (!H[static_cast<std::size_t>(j)].is_zero())
            throw Error(ErrorKind::internal_consistency, "H determinant has a term below s^{k^2}");
    std::vector<Rational> P(static_cast<std::size_t>(order) + 1);
    for (int j = val; j <= val + 2 * order; ++j) {
        const Rational& c = H[static_cast<std::size_t>(j)];
        if ((j - val) % 2) {
            if (!c.is_zero())
                throw Error(ErrorKind::internal_consistency, "H determinant is not s^{k^2} times an even series");
        } else {
            P[static_cast<std::size_t>((j - val) / 2)] = c;
        }
    }
    PowerSeries logd = series_euler(series_log(PowerSeries(std::move(P))).log);
    std::vector<Rational> c(logd.coeffs().begin(), logd.coeffs().end());
    c[0] += Rational(val, 2);
    if (order >= 1) c[1] -= Rational(1, 2);
    return PowerSeries(std::move(c));
}

}  // namespace

PowerSeries xi_from_bessel(int k, int order) {
    PowerSeries d = bessel_log_derivative(k, order);
    std::vector<Rational> c(d.coeffs().begin(), d.coeffs().end());
    c[0] = Rational(0);
    return PowerSeries(std::move(c));
}

XiRelation verify_xi_relation(int k, int order) {
    if (order > 2 * k)
        throw Error(ErrorKind::free_parameter_required, "free parameter required beyond order 2k+1 (order > 2k)");
    PowerSeries lhs = bessel_log_derivative(k, order);
    PowerSeries xi = solve_xi(k, order).series();
    PowerSeries d = lhs - xi;
    XiRelation out{d[0], order, d};
    for (int j = 1; j <= order; ++j) {
        if (!d[static_cast<std::size_t>(j)].is_zero()) {
            throw Error(ErrorKind::relation_violated, "relation violated: D(t) has t^" + std::to_string(j) +
                                                          " coefficient " + d[static_cast<std::size_t>(j)].to_string() +
                                                          " (k=" + std::to_string(k) + ")");
        }
    }
    return out;
}

TransitionReport verify_transition(int k, int order) {
    TransitionReport rep;
    if (order > 2 * k)
        throw Error(ErrorKind::free_parameter_required, "free parameter required beyond order 2k+1 (order > 2k)");
    const XiSeries xi = solve_xi(k, order);
    const PowerSeries xb = xi_from_bessel(k, order);
    const int first_N = std::max(k - 1, 1);
    std::map<int, PowerSeries> sigma_by_N;
    auto sigma_at = [&](int N) -> const PowerSeries& {
        auto it = sigma_by_N.find(N);
        if (it == sigma_by_N.end())
            it = sigma_by_N.emplace(N, sigma_tilde_from_determinant(N, k, static_cast<std::size_t>(order))).first;
        return it->second;
    };
    for (int j = 2; j <= order; ++j) {
        const std::size_t ju = static_cast<std::size_t>(j);
        auto alpha_j = [&](int N) { return sigma_at(N)[ju]; };
        const Rational limit = leading_coefficient_in_N(alpha_j, j, first_N);
        if (limit != xi.xi[ju])
            rep.mismatches.push_back("t^" + std::to_string(j) + ": lim alpha_j/N^j = " + limit.to_string() +
                                     ", xi_j = " + xi.xi[ju].to_string());
        if (xb[ju] != xi.xi[ju])
            rep.mismatches.push_back("t^" + std::to_string(j) + ": Bessel xi_j = " + xb[ju].to_string() +
                                     ", xi_j = " + xi.xi[ju].to_string());
    }
    rep.ok = rep.mismatches.empty();
    return rep;
}

}  // namespace cuem
