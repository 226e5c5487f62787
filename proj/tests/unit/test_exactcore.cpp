#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "doctest.h"

#include "cuem/polynomial.hpp"
#include "cuem/rational.hpp"
#include "cuem/series.hpp"

using namespace cuem;

namespace {

PowerSeries S(std::vector<Rational> c) { return PowerSeries(std::move(c)); }

PowerSeries random_series(std::mt19937& rng, std::size_t order) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    std::vector<Rational> c;
    for (std::size_t j = 0; j <= order; ++j) c.emplace_back(BigInt(num(rng)), BigInt(den(rng)));
    return S(c);
}

}  // namespace

TEST_SUITE("rational") {
    TEST_CASE("canonical form") {
        Rational a(BigInt(6), BigInt(-4));
        CHECK(a.to_string() == "-3/2");
        CHECK(a.denominator() == 2);
        CHECK(Rational(BigInt(4), BigInt(2)).to_string() == "2");
        CHECK(Rational(BigInt(0), BigInt(-5)).to_string() == "0");
        CHECK(Rational(BigInt(2), BigInt(4)) == Rational(BigInt(1), BigInt(2)));
    }

    TEST_CASE("zero denominator throws") {
        CHECK_THROWS(Rational(BigInt(1), BigInt(0)));
        CHECK_THROWS(Rational(1) / Rational(0));
    }

    TEST_CASE("parse") {
        CHECK(Rational::parse("7") == Rational(7));
        CHECK(Rational::parse("-10/4") == Rational(BigInt(-5), BigInt(2)));
        CHECK(Rational::parse("+3/9") == Rational(BigInt(1), BigInt(3)));
        CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
        CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
        CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
        CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
    }

    TEST_CASE("arithmetic and ordering") {
        Rational h(BigInt(1), BigInt(2)), t(BigInt(1), BigInt(3));
        CHECK(h + t == Rational(BigInt(5), BigInt(6)));
        CHECK(h - t == Rational(BigInt(1), BigInt(6)));
        CHECK(h * t == Rational(BigInt(1), BigInt(6)));
        CHECK(h / t == Rational(BigInt(3), BigInt(2)));
        CHECK(t < h);
        CHECK(pow(h, -3) == Rational(8));
        CHECK(pow(Rational(-2), 3) == Rational(-8));
        CHECK(abs(Rational(-4)) == Rational(4));
    }

    TEST_CASE("big values stay exact") {
        Rational f(factorial(30));
        CHECK(f.to_string() == "265252859812191058636308480000000");
        CHECK((f / Rational(factorial(29))) == Rational(30));
    }

    TEST_CASE("isqrt") {
        CHECK(isqrt(BigInt(0)) == 0);
        CHECK(isqrt(BigInt(15)) == 3);
        CHECK(isqrt(BigInt(16)) == 4);
        BigInt big = BigInt("123456789012345678901234567890");
        BigInt r = isqrt(big * big + 5);
        CHECK(r == big);
    }
}

TEST_SUITE("series") {
    TEST_CASE("mul examples") {
        CHECK(series_mul(S({1, 1, 0}), S({1, -1, 0})) == S({1, 0, -1}));
        auto a = S({3, Rational(BigInt(1), BigInt(2)), -2});
        CHECK(series_mul(a, PowerSeries::constant(1, 2)) == a);
        CHECK(series_mul(S({1, 1, 1}), S({1, 1, 0})) == S({1, 2, 2}));
    }

    TEST_CASE("mixed orders truncate to the minimum") {
        auto a = S({1, 2, 3, 4, 5});
        auto b = S({1, 1});
        CHECK((a * b).order() == 1);
        CHECK((a + b).order() == 1);
        CHECK((a - b) == S({0, 1}));
    }

    TEST_CASE("exp") {
        CHECK(series_exp(S({0, 1, 0, 0})) ==
              S({1, 1, Rational(BigInt(1), BigInt(2)), Rational(BigInt(1), BigInt(6))}));
        CHECK(series_exp(PowerSeries(3)) == PowerSeries::constant(1, 3));
        CHECK(series_exp(S({0, 0, Rational(BigInt(1), BigInt(2)), 0, 0})) ==
              S({1, 0, Rational(BigInt(1), BigInt(2)), 0, Rational(BigInt(1), BigInt(8))}));
        CHECK_THROWS_WITH(series_exp(S({1, 1})), doctest::Contains("exp requires zero constant term"));
    }

    TEST_CASE("log") {
        auto l = series_log(S({1, 1, 0, 0}));
        CHECK(l.log == S({0, 1, Rational(BigInt(-1), BigInt(2)), Rational(BigInt(1), BigInt(3))}));
        CHECK(l.leading == 1);
        auto c = series_log(PowerSeries::constant(5, 4));
        CHECK(c.log == PowerSeries(4));
        CHECK(c.leading == 5);
        CHECK(series_exp(series_log(S({1, 1, 1, 0, 0, 0})).log) == S({1, 1, 1, 0, 0, 0}));
        CHECK_THROWS_WITH(series_log(S({0, 1})), doctest::Contains("log of non-unit series"));
    }

    TEST_CASE("derive and integrate") {
        CHECK(series_derive(S({1, 0, 1})) == S({0, 2}));
        CHECK(series_integrate(S({0, 2})) == S({0, 0, 1}));
        CHECK(series_euler(S({5, 1, 1})) == S({0, 1, 2}));
        CHECK(series_inverse(S({1, -1, 0, 0})) == S({1, 1, 1, 1}));
    }

    TEST_CASE("determinants agree") {
        std::mt19937 rng(7);
        for (int n = 1; n <= 6; ++n) {
            SeriesMatrix m(n, std::vector<PowerSeries>(n, PowerSeries(0)));
            for (auto& row : m)
                for (auto& e : row) e = random_series(rng, 4);
            CHECK(series_determinant_leibniz(m) == series_determinant_berkowitz(m));
        }
        SeriesMatrix id(8, std::vector<PowerSeries>(8, PowerSeries(3)));
        for (int i = 0; i < 8; ++i) id[i][i] = S({2, 1, 0, 0});
        // (2+x)^8 through x^3
        CHECK(series_determinant(id) == S({256, 1024, 1792, 1792}));
    }
}

TEST_SUITE("series properties") {
    TEST_CASE("ring axioms on random series") {
        std::mt19937 rng(2024);
        for (int trial = 0; trial < 25; ++trial) {
            std::size_t order = trial % 9;
            auto a = random_series(rng, order), b = random_series(rng, order), c = random_series(rng, order);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            CHECK(a + b == b + a);
        }
    }

    TEST_CASE("exp and log are inverse") {
        std::mt19937 rng(99);
        for (int trial = 0; trial < 20; ++trial) {
            auto a = random_series(rng, 7);
            auto z = a - PowerSeries::constant(a[0], 7);
            CHECK(series_log(series_exp(z)).log == z);
            if (!a[0].is_zero()) {
                auto l = series_log(a);
                CHECK(series_exp(l.log) * l.leading == a);
            }
        }
    }

    TEST_CASE("derive after integrate") {
        std::mt19937 rng(3);
        for (int trial = 0; trial < 20; ++trial) {
            auto a = random_series(rng, 6);
            CHECK(series_derive(series_integrate(a)) == a);
            auto back = series_integrate(series_derive(a));
            CHECK(back == a - PowerSeries::constant(a[0], 6));
        }
    }
}

TEST_SUITE("polynomial") {
    TEST_CASE("interpolate a line") {
        std::vector<std::pair<Rational, Rational>> pts{{0, 1}, {1, 2}};
        CHECK(poly_interpolate(pts) == DensePolynomial({1, 1}));
    }

    TEST_CASE("interpolate (N+1)(N+2)^2(N+3)/12") {
        std::vector<std::pair<Rational, Rational>> pts;
        for (int N = 0; N <= 4; ++N) pts.emplace_back(N, Rational((N + 1) * (N + 2) * (N + 2) * (N + 3)) / Rational(12));
        auto p = poly_interpolate(pts);
        DensePolynomial expect = DensePolynomial({1, 1}) * DensePolynomial({2, 1}) * DensePolynomial({2, 1}) *
                                 DensePolynomial({3, 1}) * DensePolynomial({Rational(BigInt(1), BigInt(12))});
        CHECK(p == expect);
        CHECK(p.degree() == 4);
    }

    TEST_CASE("repeated abscissa throws") {
        std::vector<std::pair<Rational, Rational>> pts{{1, 1}, {1, 2}};
        CHECK_THROWS(poly_interpolate(pts));
    }

    TEST_CASE("random polynomials are reproduced") {
        std::mt19937 rng(11);
        std::uniform_int_distribution<int> num(-20, 20);
        for (int d = 0; d <= 8; ++d) {
            std::vector<Rational> c;
            for (int j = 0; j <= d; ++j) c.emplace_back(BigInt(num(rng)), BigInt(1 + (j % 5)));
            if (c.back().is_zero()) c.back() = 1;
            DensePolynomial p(c);
            std::vector<std::pair<Rational, Rational>> pts;
            for (int j = 0; j <= d; ++j) {
                Rational x(BigInt(3 * j - 7), BigInt(2));
                pts.emplace_back(x, p(x));
            }
            CHECK(poly_interpolate(pts) == p);
        }
    }

    TEST_CASE("zero polynomial") {
        DensePolynomial z({0, 0});
        CHECK(z.is_zero());
        CHECK(z.degree() == -1);
        CHECK(z.leading() == 0);
    }
}
