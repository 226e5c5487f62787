// Published closed forms used as oracles by the unit and acceptance tests.
#pragma once

#include "cuem/rational.hpp"

namespace cuem::ref {

inline Rational q(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }

// F_N(0,k) as the explicit product C_k * prod (N+j)^{min(j, 2k-j)}.
inline Rational F_N_zero_product(int N, int k) {
    Rational num(1), den(1);
    for (int j = 1; j <= 2 * k - 1; ++j) {
        const int e = j <= k ? j : 2 * k - j;
        num *= pow(Rational(N + j), e);
        den *= pow(Rational(j), e);
    }
    return num / den;
}

inline Rational F_N0_k1(int N) { return Rational(N + 1); }
inline Rational F_N0_k2(int N) { return q((N + 1) * (N + 2) * (N + 2) * (N + 3), 12); }
inline Rational F_N0_k3(int N) {
    Rational p = Rational(N + 1) * pow(Rational(N + 2), 2) * pow(Rational(N + 3), 3) * pow(Rational(N + 4), 2) *
                 Rational(N + 5);
    return p / Rational(3 * 24 * 120);
}

// sigma-PV coefficients as polynomials in N (lower odd ones zero).
inline Rational alpha2(int N, int k) { return -q(N * (N + 2 * k)) / q(4 * (4 * k * k - 1)); }
inline Rational alpha4(int N, int k) {
    const long a = 4L * k * k - 1;
    return q(long(N) * (N + 2 * k) * (2 * N + 2 * k - 1) * (2 * N + 2 * k + 1)) / q(16 * a * a * (4L * k * k - 9));
}
inline Rational alpha6(int N, int k) {
    const long a = 4L * k * k - 1;
    const long p = long(N) * (N + 2 * k) * (2 * N + 2 * k - 1) * (2 * N + 2 * k + 1) *
                   (6L * N * N + 12L * N * k + 4L * k * k - 1);
    return -q(p) / q(32 * a * a * a * (4L * k * k - 9) * (4L * k * k - 25));
}

inline Rational xi2(int k) { return -q(1, 4 * (4 * k * k - 1)); }
inline Rational xi4(int k) {
    const long a = 4L * k * k - 1;
    return q(1) / q(4 * a * a * (4L * k * k - 9));
}
inline Rational xi6(int k) {
    const long a = 4L * k * k - 1;
    return q(-3) / q(4 * a * a * a * (4L * k * k - 9) * (4L * k * k - 25));
}

// F_N(h,k) / F_N(0,k) for h = 1, 2, 3.
inline Rational ratio_h1(int N, int k) { return q(N * (N + 2 * k)) / q(4 * (4 * k * k - 1)); }
inline Rational ratio_h2(int N, int k) {
    return q(3L * N * (N + 2 * k) * (N * N + 2 * k * N + 2)) / q(16L * (4 * k * k - 1) * (4 * k * k - 9));
}
inline Rational quartic_h3(int N, int k) {
    const long n = N, K = k;
    return q(-16 + 64 * K * K + 20 * K * n + 48 * K * K * K * n + 10 * n * n - 12 * K * K * n * n +
             16 * K * K * K * K * n * n - 36 * K * n * n * n + 16 * K * K * K * n * n * n - 9 * n * n * n * n +
             4 * K * K * n * n * n * n);
}
// As printed, with the factor -(k^2-9) in the denominator (undefined at k=3).
inline Rational ratio_h3_printed(int N, int k) {
    const long a = 4L * k * k - 1;
    return q(-15) / q(64) * q(long(N) * (2 * k + N)) / q((4L * k * k - 25) * (long(k) * k - 9) * a * a) *
           quartic_h3(N, k);
}
// Corrected: (4k^2-9) in place of -(k^2-9).
inline Rational ratio_h3(int N, int k) {
    const long a = 4L * k * k - 1;
    return q(15) / q(64) * q(long(N) * (2 * k + N)) / q((4L * k * k - 25) * (4L * k * k - 9) * a * a) *
           quartic_h3(N, k);
}

// F(h,k) / F(0,k) with the printed constants (925 at h = 5).
inline Rational limit_ratio_table(int h, int k) {
    const long s = 4L * k * k;
    switch (h) {
        case 0: return q(1);
        case 1: return q(1) / q(4 * (s - 1));
        case 2: return q(3) / q(16 * (s - 1) * (s - 9));
        case 3: return q(15) / q(64 * (s - 1) * (s - 1) * (s - 25));
        case 4: return q(105 * (s - 33)) / q(256 * (s - 1) * (s - 1) * (s - 9) * (s - 25) * (s - 49));
        case 5: {
            Rational den = q(1024) * pow(q(s - 1), 2) * pow(q(s - 9), 2) * q(s - 25) * q(s - 49) * q(s - 81);
            return q(925) * q(s * s - 90 * s + 1497) / den;
        }
        default: return q(0);
    }
}

}  // namespace cuem::ref
