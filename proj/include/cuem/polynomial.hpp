#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cuem/rational.hpp"

namespace cuem {

/// Polynomial with rational coefficients, ascending powers, no trailing zeros.
class DensePolynomial {
public:
    DensePolynomial() = default;
    explicit DensePolynomial(std::vector<Rational> coeffs);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    /// Coefficient of x^j (zero beyond the degree).
    Rational coeff(std::size_t j) const { return j < c_.size() ? c_[j] : Rational(); }
    Rational leading() const { return c_.empty() ? Rational() : c_.back(); }
    std::span<const Rational> coeffs() const { return c_; }

    Rational operator()(const Rational& x) const;

    friend DensePolynomial operator+(const DensePolynomial& a, const DensePolynomial& b);
    friend DensePolynomial operator-(const DensePolynomial& a, const DensePolynomial& b);
    friend DensePolynomial operator*(const DensePolynomial& a, const DensePolynomial& b);
    friend bool operator==(const DensePolynomial& a, const DensePolynomial& b) = default;

    std::string to_string(const std::string& var = "x") const;

private:
    std::vector<Rational> c_;
};

/// Newton divided-difference interpolation through distinct nodes.
DensePolynomial poly_interpolate(std::span<const std::pair<Rational, Rational>> points);

}  // namespace cuem
