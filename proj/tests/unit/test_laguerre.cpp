#include <vector>

#include "doctest.h"

#include "cuem/barnes.hpp"
#include "cuem/error.hpp"
#include "cuem/laguerre.hpp"
#include "reference.hpp"

using namespace cuem;
using ref::q;

TEST_SUITE("laguerre series") {
    TEST_CASE("low degrees") {
        CHECK(laguerre_series(0, 5, 3) == PowerSeries::constant(1, 3));
        for (int k = 1; k <= 4; ++k) CHECK(laguerre_series(1, 2 * k - 1, 2) == PowerSeries({2 * k, 1, 0}));
        CHECK(laguerre_series(2, 1, 3) == PowerSeries({3, 3, q(1, 2), 0}));
    }

    TEST_CASE("rational degree agrees with integer degree") {
        for (int n = 0; n <= 6; ++n) CHECK(laguerre_series(Rational(n), 3, 8) == laguerre_series(n, 3, 8));
    }

    TEST_CASE("bad arguments") {
        CHECK_THROWS(laguerre_series(2, -1, 3));
        CHECK_THROWS(laguerre_series(-1, 1, 3));
    }
}

TEST_SUITE("determinant") {
    TEST_CASE("k=1 is L_N^(1)(-x)") {
        for (int N = 0; N <= 6; ++N) {
            auto d = laguerre_det_series({N, 1, 0}, 4);
            CHECK(d == laguerre_series(N, 1, 4));
            CHECK(d[0] == N + 1);
        }
    }

    TEST_CASE("k=2, N=2 constant term") {
        auto d = laguerre_det_series({2, 2, 0}, 0);
        CHECK(abs(d[0]) == 20);
        CHECK(d[0] == -20);
    }

    TEST_CASE("N below k-1 is rejected") {
        CHECK_THROWS_WITH(laguerre_det_series({1, 3, 0}, 2),
                          doctest::Contains("index of Laguerre polynomial would be negative"));
        try {
            f_k_series({0, 2, 0}, 2);
            FAIL("expected an error");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::invalid_input);
        }
    }

    TEST_CASE("constant term matches the factorial-ratio determinant") {
        // det[(N+3k-2-i-j)! / ((2k-1)! (N+k-1-i-j)!)] at x = 0
        for (int k = 1; k <= 4; ++k)
            for (int N = k - 1; N <= k + 3; ++N) {
                SeriesMatrix m(k, std::vector<PowerSeries>(k, PowerSeries(0)));
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j)
                        m[i][j] = PowerSeries::constant(
                            Rational(factorial(N + 3 * k - 2 - i - j)) /
                                Rational(factorial(2 * k - 1) * factorial(N + k - 1 - i - j)),
                            0);
                CHECK(series_determinant(m)[0] == laguerre_det_series({N, k, 0}, 0)[0]);
            }
    }
}

TEST_SUITE("f_k") {
    TEST_CASE("f_k(0) = F_N(0,k)") {
        for (int k = 1; k <= 5; ++k)
            for (int N = k - 1; N <= k + 6; ++N) CHECK(f_k_series({N, k, 0}, 0)[0] == F_N_zero(N, k));
    }

    TEST_CASE("odd coefficients vanish below 2k") {
        for (int k = 1; k <= 4; ++k)
            for (int N = k - 1; N <= k + 4; ++N) {
                auto f = f_k_series({N, k, 0}, 2 * k);
                for (int j = 1; j < 2 * k; j += 2) CHECK(f[j] == 0);
            }
    }

    TEST_CASE("normalized x^2 coefficient") {
        auto f = f_k_series({4, 2, 0}, 2);
        CHECK(f[2] / f[0] == q(-4, 15));
        for (int k = 1; k <= 4; ++k)
            for (int N = k; N <= k + 4; ++N) {
                auto g = f_k_series({N, k, 0}, 2);
                CHECK(g[2] / g[0] == ref::alpha2(N, k) / Rational(2));
            }
    }

    TEST_CASE("rational N agrees at integers") {
        for (int N = 2; N <= 5; ++N) CHECK(f_k_series(Rational(N), 3, 7) == f_k_series({N, 3, 0}, 7));
    }

    TEST_CASE("sigma tilde starts at x^2") {
        auto s = sigma_tilde_from_determinant(3, 2, 5);
        CHECK(s[0] == 0);
        CHECK(s[1] == 0);
        CHECK(s[2] == ref::alpha2(3, 2));
        CHECK(s[4] == ref::alpha4(3, 2));
    }
}

TEST_SUITE("moments") {
    TEST_CASE("examples") {
        CHECK(moment_direct({3, 1, 0}).value == 4);
        CHECK(moment_direct({4, 2, 1}).value == 56);
        CHECK(moment_direct({3, 1, 1}).value == 5);
        CHECK(moment_direct({0, 1, 0}).value == 1);
        auto r = moment_direct({4, 2, 1});
        CHECK(r.method == Method::laguerre);
        CHECK(r.N == 4);
        CHECK(r.truncation_order == 2);
    }

    TEST_CASE("h > k is out of scope") {
        try {
            moment_direct({4, 1, 2});
            FAIL("expected an error");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::out_of_scope);
            CHECK(std::string(e.what()).find("F(1/2,1) = (e^2-5)/(4*pi)") != std::string::npos);
        }
    }

    TEST_CASE("closed forms for h = 1, 2") {
        for (int k = 1; k <= 4; ++k)
            for (int N = k; N <= k + 5; ++N) {
                const Rational f0 = F_N_zero(N, k);
                CHECK(moment_direct({N, k, 1}).value == ref::ratio_h1(N, k) * f0);
                if (k >= 2) CHECK(moment_direct({N, k, 2}).value == ref::ratio_h2(N, k) * f0);
            }
    }

    TEST_CASE("h = 3 quartic: corrected factor matches, printed factor is off") {
        for (int k = 3; k <= 6; ++k)
            for (int N = k; N < k + 8; ++N) {
                const Rational v = moment_direct({N, k, 3}).value;
                const Rational f0 = F_N_zero(N, k);
                CHECK(v == ref::ratio_h3(N, k) * f0);
                if (k != 3) CHECK(ref::ratio_h3_printed(N, k) * f0 * Rational(-(k * k - 9)) / Rational(4 * k * k - 9) == v);
            }
    }

    TEST_CASE("polynomial in N") {
        auto p10 = moment_poly_in_N(0, 1);
        CHECK(p10 == DensePolynomial({1, 1}));
        auto p20 = moment_poly_in_N(0, 2);
        for (int N = 0; N <= 9; ++N) CHECK(p20(Rational(N)) == ref::F_N0_k2(N));
        CHECK(moment_poly_in_N(1, 1).leading() == q(1, 12));
        for (int k = 1; k <= 3; ++k)
            for (int h = 0; h <= k; ++h) {
                auto p = moment_poly_in_N(h, k);
                CHECK(p.degree() == k * k + 2 * h);
                for (int N : {k + 11, k + 17}) CHECK(p(Rational(N)) == moment_direct({N, k, h}).value);
            }
    }

    TEST_CASE("x^1 coefficient is N/2 times the constant") {
        for (int k = 1; k <= 6; ++k)
            for (int N = k - 1; N <= k + 6; ++N) CHECK(derivative_identity_check(N, k));
    }
}
