#include "cuem/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace cuem {

DensePolynomial::DensePolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational DensePolynomial::operator()(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

DensePolynomial operator+(const DensePolynomial& a, const DensePolynomial& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = a.coeff(j) + b.coeff(j);
    return DensePolynomial(std::move(c));
}

DensePolynomial operator-(const DensePolynomial& a, const DensePolynomial& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = a.coeff(j) - b.coeff(j);
    return DensePolynomial(std::move(c));
}

DensePolynomial operator*(const DensePolynomial& a, const DensePolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return DensePolynomial(std::move(c));
}

std::string DensePolynomial::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t j = c_.size(); j-- > 0;) {
        if (c_[j].is_zero()) continue;
        Rational c = c_[j];
        if (out.empty()) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        c = abs(c);
        bool unit = c == Rational(1);
        if (!unit || j == 0) out += c.to_string();
        if (j > 0) {
            if (!unit) out += "*";
            out += var;
            if (j > 1) out += "^" + std::to_string(j);
        }
    }
    return out;
}

DensePolynomial poly_interpolate(std::span<const std::pair<Rational, Rational>> points) {
    const std::size_t n = points.size();
    if (n == 0) return {};
    std::vector<Rational> dd(n);
    for (std::size_t i = 0; i < n; ++i) dd[i] = points[i].second;
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            Rational dx = points[i].first - points[i - level].first;
            if (dx.is_zero()) throw std::invalid_argument("poly_interpolate: repeated node");
            dd[i] = (dd[i] - dd[i - 1]) / dx;
        }
    }
    // Horner on the Newton form.
    DensePolynomial p(std::vector<Rational>{dd[n - 1]});
    for (std::size_t i = n - 1; i-- > 0;) {
        p = p * DensePolynomial(std::vector<Rational>{-points[i].first, Rational(1)});
        p = p + DensePolynomial(std::vector<Rational>{dd[i]});
    }
    return p;
}

}  // namespace cuem
