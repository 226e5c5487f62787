#include "cuem/barnes.hpp"

#include <stdexcept>
#include <string>

namespace cuem {

BigInt barnes_g(int n) {
    if (n < 1) throw std::domain_error("barnes_g: argument " + std::to_string(n) + " is not a positive integer");
    BigInt g = 1;
    BigInt fact = 1;
    for (int j = 1; j <= n - 2; ++j) {
        fact *= j;
        g *= fact;
    }
    return g;
}

Rational F_N_zero(int N, int k) {
    if (N < 0) throw std::invalid_argument("F_N_zero: N must be non-negative");
    if (k < 1) throw std::invalid_argument("F_N_zero: k must be positive");
    BigInt gk = barnes_g(k + 1);
    BigInt gnk = barnes_g(N + k + 1);
    return Rational(barnes_g(N + 2 * k + 1) * barnes_g(N + 1) * gk * gk, gnk * gnk * barnes_g(2 * k + 1));
}

Rational F_zero_limit(int k) {
    if (k < 1) throw std::invalid_argument("F_zero_limit: k must be positive");
    BigInt gk = barnes_g(k + 1);
    return Rational(gk * gk, barnes_g(2 * k + 1));
}

}  // namespace cuem
