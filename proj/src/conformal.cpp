#include "cuem/conformal.hpp"

#include <string>
#include <vector>

#include "cuem/barnes.hpp"
#include "cuem/error.hpp"

namespace cuem {

namespace {

struct Factor {
    Rational num;
    Rational den;  // already squared
    int i, j;
    bool in_mu;
};

Rational evaluate_block(const std::vector<Factor>& factors, const Partition& lambda, const Partition& mu) {
    for (const auto& f : factors)
        if (f.num.is_zero()) return Rational(0);
    Rational v(1);
    for (const auto& f : factors) {
        if (f.den.is_zero())
            throw Error(ErrorKind::singular_block, "singular block: vanishing denominator at box (" + std::to_string(f.i) +
                                                       "," + std::to_string(f.j) + ") of " + (f.in_mu ? "mu" : "lambda") +
                                                       " for lambda=" + lambda.to_string() + ", mu=" + mu.to_string());
        v *= f.num / f.den;
    }
    return v;
}

Rational sq(const Rational& x) { return x * x; }

// Partitions of every size up to n, computed once per call.
std::vector<std::vector<Partition>> partitions_upto(int n) {
    std::vector<std::vector<Partition>> out;
    for (int s = 0; s <= n; ++s) out.push_back(enumerate_partitions(s));
    return out;
}

// sum_{|lambda|+|mu| = s} B x^s for s <= order
template <class BlockFn>
std::vector<Rational> block_sum(int order, BlockFn block) {
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    auto parts = partitions_upto(order);
    for (int s = 0; s <= order; ++s)
        for (int a = 0; a <= s; ++a)
            for (const auto& lambda : parts[static_cast<std::size_t>(a)])
                for (const auto& mu : parts[static_cast<std::size_t>(s - a)])
                    c[static_cast<std::size_t>(s)] += block(lambda, mu);
    return c;
}

Rational signed_pow2(int sigma, int k) {
    Rational v = pow(Rational(2), 2 * sigma - 2 * k);
    if ((static_cast<long>(sigma) * (sigma + k)) % 2 != 0) v = -v;
    return v;
}

int two_theta(const Rational& theta_t) {
    Rational t2 = Rational(2) * theta_t;
    if (!t2.is_integer()) throw Error(ErrorKind::invalid_input, "2*theta_t must be an integer");
    return static_cast<int>(t2.numerator().get_si());
}

}  // namespace

Rational block_v(const Partition& lambda, const Partition& mu, const BlockParams& p) {
    std::vector<Factor> fs;
    const Rational& s = p.sigma;
    for (auto [i, j] : lambda.boxes()) {
        Rational ij(i - j);
        Rational num = (p.theta_star + s + ij) * (sq(p.theta_t + s + ij) - sq(p.theta0_tilde));
        Rational den = Rational(lambda.hook_length(i, j)) * Rational(lambda.hook_length(i, j)) *
                       sq(Rational(lambda.column(j) + mu.row(i) - i - j + 1) + Rational(2) * s);
        fs.push_back({num, den, i, j, false});
    }
    for (auto [i, j] : mu.boxes()) {
        Rational ij(i - j);
        Rational num = (p.theta_star - s + ij) * (sq(p.theta_t - s + ij) - sq(p.theta0_tilde));
        Rational den = Rational(mu.hook_length(i, j)) * Rational(mu.hook_length(i, j)) *
                       sq(Rational(lambda.row(i) + mu.column(j) - i - j + 1) - Rational(2) * s);
        fs.push_back({num, den, i, j, true});
    }
    return evaluate_block(fs, lambda, mu);
}

Rational block_iii(const Partition& lambda, const Partition& mu, const Rational& theta_star, const Rational& sigma) {
    std::vector<Factor> fs;
    for (auto [i, j] : lambda.boxes()) {
        Rational ij(i - j);
        Rational num = (theta_star + sigma + ij) * (sigma + ij);
        Rational den = Rational(lambda.hook_length(i, j)) * Rational(lambda.hook_length(i, j)) *
                       sq(Rational(lambda.column(j) + mu.row(i) - i - j + 1) + Rational(2) * sigma);
        fs.push_back({num, den, i, j, false});
    }
    for (auto [i, j] : mu.boxes()) {
        Rational ij(i - j);
        Rational num = (theta_star - sigma + ij) * (-sigma + ij);
        Rational den = Rational(mu.hook_length(i, j)) * Rational(mu.hook_length(i, j)) *
                       sq(Rational(lambda.row(i) + mu.column(j) - i - j + 1) - Rational(2) * sigma);
        fs.push_back({num, den, i, j, true});
    }
    return evaluate_block(fs, lambda, mu);
}

Rational struct_const_regularized(const Rational& theta_t, int k, int sigma) {
    if (k < 1 || sigma < 0) throw Error(ErrorKind::invalid_input, "struct_const_regularized: need k >= 1, sigma >= 0");
    const int tt = two_theta(theta_t);
    if (1 + tt - sigma < 1) return Rational(0);
    BigInt g2s = barnes_g(1 + 2 * sigma);
    BigInt gs = barnes_g(1 + sigma);
    Rational num(barnes_g(1 + k + sigma) * barnes_g(1 + tt + sigma) * barnes_g(1 + tt - sigma) * gs * gs);
    return num / (signed_pow2(sigma, k) * Rational(g2s * g2s));
}

Rational struct_const_iii(int k, int sigma) {
    if (k < 1 || sigma < 0) throw Error(ErrorKind::invalid_input, "struct_const_iii: need k >= 1, sigma >= 0");
    BigInt g2s = barnes_g(1 + 2 * sigma);
    BigInt gs = barnes_g(1 + sigma);
    return Rational(barnes_g(1 + k + sigma) * gs * gs) / (signed_pow2(sigma, k) * Rational(g2s * g2s));
}

PowerSeries f_k_conformal_term(int N, int k, int n, int order) {
    if (N < 0 || k < 1 || n < 0 || order < 0)
        throw Error(ErrorKind::invalid_input, "f_k_conformal_term: need N >= 0, k >= 1, n >= 0, order >= 0");
    const std::size_t ord = static_cast<std::size_t>(order);
    std::vector<Rational> c(ord + 1);
    const int shift = 2 * n * k + n * n;
    const Rational theta = Rational(N + k, 2);
    const Rational C = struct_const_regularized(theta, k, k + n);
    if (n <= N && shift <= order && !C.is_zero()) {
        BlockParams p{theta, theta, Rational(k), Rational(k + n)};
        auto sums = block_sum(order - shift, [&](const Partition& l, const Partition& m) { return block_v(l, m, p); });
        for (std::size_t s = 0; s < sums.size(); ++s) c[s + static_cast<std::size_t>(shift)] = C * sums[s];
    }
    BigInt g = barnes_g(N + k + 1);
    PowerSeries e = series_exp(PowerSeries::monomial(-(Rational(N, 2) + Rational(k)), 1, ord));
    return (Rational(1) / Rational(g * g)) * (e * PowerSeries(std::move(c)));
}

PowerSeries f_k_conformal_series(int N, int k, int order) {
    PowerSeries total(static_cast<std::size_t>(order));
    for (int n = 0; n <= N && 2 * n * k + n * n <= order; ++n) total = total + f_k_conformal_term(N, k, n, order);
    return total;
}

PowerSeries tau_iii_series(int k, int order) {
    if (k < 1 || order < 0) throw Error(ErrorKind::invalid_input, "tau_iii_series: need k >= 1, order >= 0");
    const std::size_t ord = static_cast<std::size_t>(order);
    std::vector<Rational> c(ord + 1);
    for (int n = 0; 2 * n * k + n * n <= order; ++n) {
        const int shift = 2 * n * k + n * n;
        const Rational C = struct_const_iii(k, k + n);
        auto sums = block_sum(order - shift, [&](const Partition& l, const Partition& m) {
            return block_iii(l, m, Rational(k), Rational(k + n));
        });
        for (std::size_t s = 0; s < sums.size(); ++s) c[s + static_cast<std::size_t>(shift)] += C * sums[s];
    }
    PowerSeries e = series_exp(PowerSeries::monomial(Rational(-1, 2), 1, ord));
    return e * PowerSeries(std::move(c));
}

MomentResult moment_conformal(int N, int h, int k) {
    validate_moment_params(N, h, k);
    PowerSeries f = f_k_conformal_series(N, k, 2 * h);
    for (int j = 1; j < 2 * h; j += 2)
        if (!f[static_cast<std::size_t>(j)].is_zero())
            throw Error(ErrorKind::internal_consistency,
                        "odd coefficient x^" + std::to_string(j) + " of the conformal f_k is nonzero");
    Rational v = Rational(factorial(2 * h)) * f[static_cast<std::size_t>(2 * h)];
    if (h % 2) v = -v;
    return MomentResult{N, h, k, Method::conformal, v, 2 * h};
}

MomentResult moment_limit_hooksum(int h, int k) {
    validate_moment_params(std::nullopt, h, k);
    // Coefficients of sum over lambda (lambda_1 <= k) of the box products, by |lambda|.
    const int order = 2 * h;
    std::vector<Rational> block(static_cast<std::size_t>(order + 1));
    for (int n = 0; n <= order; ++n) {
        for (const auto& lambda : enumerate_partitions(n, k)) {
            Rational term(1);
            for (auto [i, j] : lambda.boxes()) {
                const int hl = lambda.hook_length(i, j);
                const int d = lambda.column(j) - i - j + 1 + 2 * k;
                term *= Rational((2 * k + i - j) * (k + i - j)) / Rational(hl * hl * d * d);
            }
            block[static_cast<std::size_t>(n)] += term;
        }
    }
    // times e^{-t/2}
    Rational sum;
    Rational e(1);
    for (int m = 0; m <= order; ++m) {
        if (m > 0) e *= Rational(-1, 2) / Rational(m);
        sum += e * block[static_cast<std::size_t>(order - m)];
    }
    Rational v = F_zero_limit(k) * Rational(factorial(2 * h)) * sum;
    if (h % 2) v = -v;
    return MomentResult{std::nullopt, h, k, Method::hooksum, v, 2 * h};
}

const DehayeTable& default_dehaye_table() {
    static const DehayeTable table{{
        {2, DensePolynomial({Rational(1)})},
        {4, DensePolynomial({Rational(1)})},
        {6, DensePolynomial({Rational(-9), Rational(0), Rational(1)})},
        {8, DensePolynomial({Rational(-33), Rational(0), Rational(1)})},
        {10, DensePolynomial({Rational(1497), Rational(0), Rational(-90), Rational(0), Rational(1)})},
    }};
    return table;
}

DensePolynomial dehaye_y(int r) {
    DensePolynomial y({Rational(1)});
    for (int a = 1; a <= r - 1; a += 2) {
        // eta = floor((-a + sqrt(a^2 + 4r)) / 2), exactly
        BigInt root = isqrt(BigInt(a * a + 4 * r));
        BigInt eta_z = (root - a) / 2;
        const long eta = eta_z.get_si();
        DensePolynomial f({Rational(-a * a), Rational(0), Rational(1)});
        for (long e = 0; e < eta; ++e) y = y * f;
    }
    return y;
}

MomentResult moment_limit_dehaye(int h, int k, const DehayeTable& table) {
    validate_moment_params(std::nullopt, h, k);
    if (h == 0) return MomentResult{std::nullopt, 0, k, Method::dehaye, F_zero_limit(k), 0};
    auto it = table.x_tilde.find(2 * h);
    if (it == table.x_tilde.end())
        throw Error(ErrorKind::table_exhausted, "Dehaye table exhausted (h=" + std::to_string(h) + " > 5)");
    const Rational s(2 * k);
    const Rational y = dehaye_y(2 * h)(s);
    if (y.is_zero()) throw Error(ErrorKind::invalid_input, "2k is a root of Y_{2h}");
    Rational pref = Rational(factorial(2 * h), factorial(h) * BigInt(1 << (3 * h)));
    Rational v = pref * F_zero_limit(k) * it->second(s) / y;
    return MomentResult{std::nullopt, h, k, Method::dehaye, v, 2 * h};
}

}  // namespace cuem
