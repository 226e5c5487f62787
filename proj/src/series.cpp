#include "cuem/series.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cuem {

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("PowerSeries: empty coefficient list");
}

PowerSeries PowerSeries::constant(const Rational& c, std::size_t order) {
    PowerSeries s(order);
    s.c_[0] = c;
    return s;
}

PowerSeries PowerSeries::monomial(const Rational& c, std::size_t power, std::size_t order) {
    PowerSeries s(order);
    if (power <= order) s.c_[power] = c;
    return s;
}

const Rational& PowerSeries::coeff(std::size_t j) const {
    if (j > order()) throw std::out_of_range("PowerSeries: coefficient beyond truncation order");
    return c_[j];
}

PowerSeries PowerSeries::truncated(std::size_t order) const {
    if (order > this->order()) throw std::invalid_argument("PowerSeries: cannot extend truncation order");
    return PowerSeries(std::vector<Rational>(c_.begin(), c_.begin() + static_cast<long>(order) + 1));
}

std::optional<std::size_t> PowerSeries::valuation() const {
    for (std::size_t j = 0; j < c_.size(); ++j)
        if (!c_[j].is_zero()) return j;
    return std::nullopt;
}

PowerSeries PowerSeries::operator-() const {
    PowerSeries r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r(std::min(a.order(), b.order()));
    for (std::size_t j = 0; j <= r.order(); ++j) r.c_[j] = a.c_[j] + b.c_[j];
    return r;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r(std::min(a.order(), b.order()));
    for (std::size_t j = 0; j <= r.order(); ++j) r.c_[j] = a.c_[j] - b.c_[j];
    return r;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    PowerSeries r(n);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= n; ++j)
            if (!b.c_[j].is_zero()) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
}

PowerSeries operator*(const Rational& s, const PowerSeries& a) {
    PowerSeries r(a);
    for (auto& c : r.c_) c *= s;
    return r;
}

PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b) { return a * b; }

PowerSeries series_derive(const PowerSeries& a) {
    if (a.order() == 0) throw std::invalid_argument("series_derive: order-0 series has no known derivative");
    std::vector<Rational> c(a.order());
    for (std::size_t j = 1; j <= a.order(); ++j) c[j - 1] = Rational(static_cast<long>(j)) * a[j];
    return PowerSeries(std::move(c));
}

PowerSeries series_integrate(const PowerSeries& a) {
    std::vector<Rational> c(a.order() + 2);
    for (std::size_t j = 0; j <= a.order(); ++j) c[j + 1] = a[j] / Rational(static_cast<long>(j + 1));
    return PowerSeries(std::move(c));
}

PowerSeries series_euler(const PowerSeries& a) {
    std::vector<Rational> c(a.order() + 1);
    for (std::size_t j = 1; j <= a.order(); ++j) c[j] = Rational(static_cast<long>(j)) * a[j];
    return PowerSeries(std::move(c));
}

PowerSeries series_inverse(const PowerSeries& a) {
    if (a[0].is_zero()) throw std::domain_error("series_inverse: zero constant term");
    const std::size_t n = a.order();
    std::vector<Rational> b(n + 1);
    const Rational inv0 = Rational(1) / a[0];
    b[0] = inv0;
    for (std::size_t m = 1; m <= n; ++m) {
        Rational acc;
        for (std::size_t i = 1; i <= m; ++i)
            if (!a[i].is_zero()) acc += a[i] * b[m - i];
        b[m] = -acc * inv0;
    }
    return PowerSeries(std::move(b));
}

// exp via y' = a' y:  m y_m = sum_{i=1}^m i a_i y_{m-i}
PowerSeries series_exp(const PowerSeries& a) {
    if (!a[0].is_zero()) throw std::domain_error("exp requires zero constant term");
    const std::size_t n = a.order();
    std::vector<Rational> y(n + 1);
    y[0] = Rational(1);
    for (std::size_t m = 1; m <= n; ++m) {
        Rational acc;
        for (std::size_t i = 1; i <= m; ++i)
            if (!a[i].is_zero()) acc += Rational(static_cast<long>(i)) * a[i] * y[m - i];
        y[m] = acc / Rational(static_cast<long>(m));
    }
    return PowerSeries(std::move(y));
}

// log via a L' = a':  m a0 L_m = m a_m - sum_{i=1}^{m-1} i L_i a_{m-i}
LogResult series_log(const PowerSeries& a) {
    if (a[0].is_zero()) throw std::domain_error("log of non-unit series");
    const std::size_t n = a.order();
    std::vector<Rational> L(n + 1);
    for (std::size_t m = 1; m <= n; ++m) {
        Rational acc = Rational(static_cast<long>(m)) * a[m];
        for (std::size_t i = 1; i < m; ++i)
            if (!L[i].is_zero()) acc -= Rational(static_cast<long>(i)) * L[i] * a[m - i];
        L[m] = acc / (Rational(static_cast<long>(m)) * a[0]);
    }
    return {PowerSeries(std::move(L)), a[0]};
}

namespace {

void check_square(const SeriesMatrix& m) {
    if (m.empty()) throw std::invalid_argument("series_determinant: empty matrix");
    for (const auto& row : m)
        if (row.size() != m.size()) throw std::invalid_argument("series_determinant: matrix is not square");
}

std::size_t min_order(const SeriesMatrix& m) {
    std::size_t o = m[0][0].order();
    for (const auto& row : m)
        for (const auto& e : row) o = std::min(o, e.order());
    return o;
}

}  // namespace

PowerSeries series_determinant_leibniz(const SeriesMatrix& m) {
    check_square(m);
    const std::size_t n = m.size();
    const std::size_t order = min_order(m);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    PowerSeries det(order);
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        PowerSeries term = m[0][perm[0]].truncated(order);
        for (std::size_t i = 1; i < n; ++i) term = term * m[i][perm[i]];
        det = (inversions % 2 == 0) ? det + term : det - term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

// Berkowitz: the characteristic polynomial is the product of Toeplitz
// matrices built from the leading principal submatrices; det = (-1)^n c_n.
PowerSeries series_determinant_berkowitz(const SeriesMatrix& m) {
    check_square(m);
    const std::size_t n = m.size();
    const std::size_t order = min_order(m);
    const PowerSeries one = PowerSeries::constant(1, order);
    const PowerSeries zero(order);

    // Characteristic-polynomial coefficients of the leading 1x1 block.
    std::vector<PowerSeries> poly{one, -m[0][0].truncated(order)};

    for (std::size_t r = 1; r < n; ++r) {
        // Block [[A, S], [R, a]] with A = leading r x r, S column, R row.
        const PowerSeries& a = m[r][r];
        std::vector<PowerSeries> R(m[r].begin(), m[r].begin() + static_cast<long>(r));
        std::vector<PowerSeries> S;
        for (std::size_t i = 0; i < r; ++i) S.push_back(m[i][r]);

        // Toeplitz column: 1, -a, -R S, -R A S, -R A^2 S, ...
        std::vector<PowerSeries> col{one, -a.truncated(order)};
        std::vector<PowerSeries> v = S;
        for (std::size_t p = 0; p < r; ++p) {
            PowerSeries dot = zero;
            for (std::size_t i = 0; i < r; ++i) dot = dot + R[i] * v[i];
            col.push_back(-dot);
            if (p + 1 < r) {
                std::vector<PowerSeries> w(r, zero);
                for (std::size_t i = 0; i < r; ++i)
                    for (std::size_t j = 0; j < r; ++j) w[i] = w[i] + m[i][j] * v[j];
                v = std::move(w);
            }
        }
        // new_poly = T * poly, T lower-triangular Toeplitz of size (r+2) x (r+1)
        std::vector<PowerSeries> next(r + 2, zero);
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t j = 0; j <= std::min(i, r); ++j)
                next[i] = next[i] + col[i - j] * poly[j];
        poly = std::move(next);
    }
    return (n % 2 == 0) ? poly[n] : -poly[n];
}

PowerSeries series_determinant(const SeriesMatrix& m) {
    return m.size() <= 6 ? series_determinant_leibniz(m) : series_determinant_berkowitz(m);
}

}  // namespace cuem
