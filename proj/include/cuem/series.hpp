#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cuem/rational.hpp"

namespace cuem {

/// Truncated power series sum_{j<=order} c_j x^j. Coefficients above `order`
/// are unknown, not zero; binary operations keep the smaller order.
class PowerSeries {
public:
    /// The zero series known through `order`.
    explicit PowerSeries(std::size_t order) : c_(order + 1) {}
    /// Order is coeffs.size() - 1; coeffs must be non-empty.
    explicit PowerSeries(std::vector<Rational> coeffs);

    static PowerSeries constant(const Rational& c, std::size_t order);
    /// c * x^power, known through `order`.
    static PowerSeries monomial(const Rational& c, std::size_t power, std::size_t order);

    std::size_t order() const { return c_.size() - 1; }
    const Rational& operator[](std::size_t j) const { return c_[j]; }
    /// Bounds-checked coefficient access.
    const Rational& coeff(std::size_t j) const;
    std::span<const Rational> coeffs() const { return c_; }

    PowerSeries truncated(std::size_t order) const;
    /// Index of the first nonzero coefficient, if any within the known range.
    std::optional<std::size_t> valuation() const;

    PowerSeries operator-() const;
    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const Rational& s, const PowerSeries& a);
    friend PowerSeries operator*(const PowerSeries& a, const Rational& s) { return s * a; }

    friend bool operator==(const PowerSeries& a, const PowerSeries& b) = default;

private:
    std::vector<Rational> c_;
};

PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b);
/// Requires a[0] == 0.
PowerSeries series_exp(const PowerSeries& a);

struct LogResult {
    PowerSeries log;       ///< log(a / a0), zero constant term
    Rational leading;      ///< a0
};
/// Requires a[0] != 0. The constant log(a0) is returned separately as a0.
LogResult series_log(const PowerSeries& a);

/// Derivative; the result has order a.order() - 1. Requires order >= 1.
PowerSeries series_derive(const PowerSeries& a);
/// Antiderivative with zero constant term; order grows by one.
PowerSeries series_integrate(const PowerSeries& a);
/// Multiplicative inverse; requires a[0] != 0.
PowerSeries series_inverse(const PowerSeries& a);
/// x * d/dx, same order as the input.
PowerSeries series_euler(const PowerSeries& a);

using SeriesMatrix = std::vector<std::vector<PowerSeries>>;

/// Determinant of a square matrix over the truncated series ring. Uses the
/// permutation expansion for n <= 6 and Berkowitz's division-free algorithm
/// above that.
PowerSeries series_determinant(const SeriesMatrix& m);
PowerSeries series_determinant_leibniz(const SeriesMatrix& m);
PowerSeries series_determinant_berkowitz(const SeriesMatrix& m);

}  // namespace cuem
