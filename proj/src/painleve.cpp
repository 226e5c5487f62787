#include "cuem/painleve.hpp"

#include <string>

#include "cuem/barnes.hpp"
#include "cuem/error.hpp"
#include "cuem/polynomial.hpp"

namespace cuem {

namespace {

// Value plus derivative with respect to the unknown coefficient. Products
// drop the second-order part, which never reaches the target order m >= 3.
struct Dual {
    Rational v, d;
    Dual() = default;
    Dual(const Rational& value, const Rational& deriv = Rational()) : v(value), d(deriv) {}
};

Dual operator+(const Dual& a, const Dual& b) { return {a.v + b.v, a.d + b.d}; }
Dual operator-(const Dual& a, const Dual& b) { return {a.v - b.v, a.d - b.d}; }
Dual operator*(const Dual& a, const Dual& b) { return {a.v * b.v, a.v * b.d + a.d * b.v}; }
Dual operator*(const Rational& s, const Dual& a) { return {s * a.v, s * a.d}; }
bool is_zero(const Dual& a) { return a.v.is_zero() && a.d.is_zero(); }
bool is_zero(const Rational& a) { return a.is_zero(); }

template <class T>
using Coeffs = std::vector<T>;

template <class T>
Coeffs<T> conv(const Coeffs<T>& a, const Coeffs<T>& b, std::size_t n) {
    Coeffs<T> r(n + 1);
    for (std::size_t i = 0; i <= n && i < a.size(); ++i) {
        if (is_zero(a[i])) continue;
        for (std::size_t j = 0; i + j <= n && j < b.size(); ++j)
            if (!is_zero(b[j])) r[i + j] = r[i + j] + a[i] * b[j];
    }
    return r;
}

template <class T>
Coeffs<T> add(const Coeffs<T>& a, const Coeffs<T>& b) {
    Coeffs<T> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

template <class T>
Coeffs<T> scale(const Rational& c, const Coeffs<T>& a) {
    Coeffs<T> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

// x^p * a, truncated to n
template <class T>
Coeffs<T> shift(const Coeffs<T>& a, std::size_t p, std::size_t n) {
    Coeffs<T> r(n + 1);
    for (std::size_t i = 0; i + p <= n && i < a.size(); ++i) r[i + p] = a[i];
    return r;
}

// First and second derivatives as length-(n+1) vectors. Missing top entries
// are left zero; with s_0 = s_1 = 0 they never enter a coefficient <= n.
template <class T>
std::pair<Coeffs<T>, Coeffs<T>> derivatives(const Coeffs<T>& s, std::size_t n) {
    Coeffs<T> d1(n + 1), d2(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (i + 1 < s.size()) d1[i] = Rational(static_cast<long>(i + 1)) * s[i + 1];
        if (i + 2 < s.size()) d2[i] = Rational(static_cast<long>((i + 2) * (i + 1))) * s[i + 2];
    }
    return {d1, d2};
}

// (x s'')^2 + 4x s'^3 - (4k^2 + x^2 + 4s) s'^2 - x(M - 2s) s' - (s - M) s
template <class T>
Coeffs<T> sigma_v_lhs_minus_rhs(const Coeffs<T>& s, const Rational& M, int k, std::size_t n) {
    auto [d1, d2] = derivatives(s, n);
    Coeffs<T> xd2 = shift(d2, 1, n);
    Coeffs<T> d1sq = conv(d1, d1, n);
    Coeffs<T> r = conv(xd2, xd2, n);
    r = add(r, scale(Rational(4), shift(conv(d1sq, d1, n), 1, n)));
    Coeffs<T> coef = scale(Rational(4), s);
    coef.resize(n + 1);
    coef[0] = coef[0] + T(Rational(4 * k * k));
    if (n >= 2) coef[2] = coef[2] + T(Rational(1));
    r = add(r, scale(Rational(-1), conv(coef, d1sq, n)));
    Coeffs<T> m_minus_2s = scale(Rational(-2), s);
    m_minus_2s.resize(n + 1);
    m_minus_2s[0] = m_minus_2s[0] + T(M);
    r = add(r, scale(Rational(-1), shift(conv(m_minus_2s, d1, n), 1, n)));
    Coeffs<T> s_minus_m = s;
    s_minus_m.resize(n + 1);
    s_minus_m[0] = s_minus_m[0] - T(M);
    r = add(r, scale(Rational(-1), conv(s_minus_m, s, n)));
    return r;
}

// (t xi'')^2 + 4t xi'^3 - (4k^2 + 4 xi) xi'^2 - t xi' + xi
template <class T>
Coeffs<T> xi_lhs_minus_rhs(const Coeffs<T>& s, int k, std::size_t n) {
    auto [d1, d2] = derivatives(s, n);
    Coeffs<T> xd2 = shift(d2, 1, n);
    Coeffs<T> d1sq = conv(d1, d1, n);
    Coeffs<T> r = conv(xd2, xd2, n);
    r = add(r, scale(Rational(4), shift(conv(d1sq, d1, n), 1, n)));
    Coeffs<T> coef = scale(Rational(4), s);
    coef.resize(n + 1);
    coef[0] = coef[0] + T(Rational(4 * k * k));
    r = add(r, scale(Rational(-1), conv(coef, d1sq, n)));
    r = add(r, scale(Rational(-1), shift(d1, 1, n)));
    Coeffs<T> sn = s;
    sn.resize(n + 1);
    return add(r, sn);
}

// Shared order-by-order solver. `residual(coeffs, m)` returns the x^m
// coefficient of the ODE residual.
template <class Residual>
std::vector<Rational> solve_recursion(int k, int order, const std::optional<Rational>& free_param,
                                      Residual residual, const std::string& what) {
    std::vector<Rational> a(static_cast<std::size_t>(std::max(order, 0)) + 1);
    if (order < 2) return a;

    // Order 2: R(t) = a t^2 + b t, pick the nonzero root.
    auto at2 = [&](const Rational& t) {
        std::vector<Dual> s(3);
        s[2] = Dual(t);
        return residual(s, 2).v;
    };
    Rational r0 = at2(Rational(0)), rp = at2(Rational(1)), rm = at2(Rational(-1));
    Rational qa = (rp + rm) / Rational(2) - r0, qb = (rp - rm) / Rational(2);
    if (!r0.is_zero())
        throw Error(ErrorKind::inconsistent_recursion, what + ": nonzero residual at x^2 for the zero root");
    if (qa.is_zero() || qb.is_zero())
        throw Error(ErrorKind::underdetermined,
                    what + ": underdetermined, the x^2 relation has no nonzero root (trivial and nontrivial branches coincide)");
    a[2] = -qb / qa;

    for (int m = 3; m <= order; ++m) {
        std::vector<Dual> s(static_cast<std::size_t>(m) + 1);
        for (int j = 2; j < m; ++j) s[static_cast<std::size_t>(j)] = Dual(a[static_cast<std::size_t>(j)]);
        s[static_cast<std::size_t>(m)] = Dual(Rational(0), Rational(1));
        Dual r = residual(s, static_cast<std::size_t>(m));
        const Rational& A = r.d;
        const Rational& B = r.v;
        if (!A.is_zero()) {
            a[static_cast<std::size_t>(m)] = -B / A;
        } else if (B.is_zero() && m == 2 * k + 1) {
            if (!free_param)
                throw Error(ErrorKind::free_parameter_required, "free parameter required beyond order 2k+1 (k=" +
                                                                    std::to_string(k) + ", order " + std::to_string(order) + ")");
            a[static_cast<std::size_t>(m)] = *free_param;
        } else {
            throw Error(ErrorKind::inconsistent_recursion,
                        what + ": inconsistent recursion at order " + std::to_string(m) + " (A=0, B=" + B.to_string() + ")");
        }
    }
    return a;
}

int first_nonzero(const PowerSeries& r) {
    auto v = r.valuation();
    return v ? static_cast<int>(*v) : static_cast<int>(r.order()) + 1;
}

MomentResult moment_from_log_coeffs(const std::vector<Rational>& c, int h, const Rational& f0) {
    const std::size_t order = static_cast<std::size_t>(2 * h);
    std::vector<Rational> logc(order + 1);
    for (std::size_t j = 2; j <= order; ++j) logc[j] = c[j] / Rational(static_cast<long>(j));
    PowerSeries e = series_exp(PowerSeries(std::move(logc)));
    Rational v = Rational(factorial(2 * h)) * f0 * e[order];
    if (h % 2) v = -v;
    MomentResult r;
    r.h = h;
    r.value = v;
    r.truncation_order = static_cast<int>(order);
    return r;
}

}  // namespace

SigmaVSeries solve_sigma_v(int N, int k, int order, std::optional<Rational> free_param) {
    if (k < 1) throw Error(ErrorKind::invalid_input, "k must be a positive integer");
    if (order < 0) throw Error(ErrorKind::invalid_input, "order must be non-negative");
    const Rational M = Rational(N) * Rational(N + 2 * k);
    auto residual = [&](const std::vector<Dual>& s, std::size_t m) {
        return sigma_v_lhs_minus_rhs(s, M, k, m)[m];
    };
    SigmaVSeries out;
    out.N = N;
    out.k = k;
    out.order = order;
    out.alpha = solve_recursion(k, order, free_param, residual,
                                "sigma-PV (N=" + std::to_string(N) + ", k=" + std::to_string(k) + ")");
    if (order >= 2 * k + 1) out.free_param = free_param;
    return out;
}

XiSeries solve_xi(int k, int order, std::optional<Rational> free_param) {
    if (k < 1) throw Error(ErrorKind::invalid_input, "k must be a positive integer");
    if (order < 0) throw Error(ErrorKind::invalid_input, "order must be non-negative");
    auto residual = [&](const std::vector<Dual>& s, std::size_t m) { return xi_lhs_minus_rhs(s, k, m)[m]; };
    XiSeries out;
    out.k = k;
    out.order = order;
    out.xi = solve_recursion(k, order, free_param, residual, "sigma-PIII' (k=" + std::to_string(k) + ")");
    if (order >= 2 * k + 1) out.free_param = free_param;
    return out;
}

PowerSeries sigma_v_residual(const SigmaVSeries& s) {
    const Rational M = Rational(s.N) * Rational(s.N + 2 * s.k);
    return PowerSeries(sigma_v_lhs_minus_rhs(s.alpha, M, s.k, static_cast<std::size_t>(s.order)));
}

PowerSeries xi_residual(const XiSeries& s) {
    return PowerSeries(xi_lhs_minus_rhs(s.xi, s.k, static_cast<std::size_t>(s.order)));
}

int residual_check(const SigmaVSeries& s) { return first_nonzero(sigma_v_residual(s)); }
int residual_check(const XiSeries& s) { return first_nonzero(xi_residual(s)); }

MomentResult moment_painleve(int N, int h, int k) {
    validate_moment_params(N, h, k);
    const Rational f0 = F_N_zero(N, k);
    std::vector<Rational> alpha(static_cast<std::size_t>(2 * h) + 1);
    if (h > 0) alpha = solve_sigma_v(N, k, 2 * h).alpha;
    MomentResult r = moment_from_log_coeffs(alpha, h, f0);
    r.N = N;
    r.k = k;
    r.method = Method::painleve5;
    return r;
}

MomentResult moment_limit_painleve(int h, int k) {
    validate_moment_params(std::nullopt, h, k);
    std::vector<Rational> xi(static_cast<std::size_t>(2 * h) + 1);
    if (h > 0) xi = solve_xi(k, 2 * h).xi;
    MomentResult r = moment_from_log_coeffs(xi, h, F_zero_limit(k));
    r.k = k;
    r.method = Method::painleve3;
    return r;
}

PowerSeries sigma_iii_series(int k, int order) {
    if (order < 0) throw Error(ErrorKind::invalid_input, "order must be non-negative");
    if (order > 4 * k)
        throw Error(ErrorKind::free_parameter_required, "free parameter required beyond order 2k+1 of xi (sigma_III order > 4k)");
    XiSeries xi = solve_xi(k, order / 2);
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    c[0] = Rational(k * k);
    for (int j = 1; 2 * j <= order; ++j)
        c[static_cast<std::size_t>(2 * j)] = Rational(2) * xi.xi[static_cast<std::size_t>(j)];
    return PowerSeries(std::move(c));
}

Rational leading_coefficient_in_N(const std::function<Rational(int)>& f, int degree, int first_N) {
    std::vector<std::pair<Rational, Rational>> pts;
    for (int N = first_N; N <= first_N + degree; ++N) pts.emplace_back(Rational(N), f(N));
    DensePolynomial p = poly_interpolate(pts);
    const int extra = first_N + degree + 1;
    if (p(Rational(extra)) != f(extra))
        throw Error(ErrorKind::internal_consistency,
                    "sampled quantity is not a polynomial of degree " + std::to_string(degree) + " in N");
    return p.coeff(static_cast<std::size_t>(degree));
}

}  // namespace cuem
