#include <doctest.h>

#include <cmath>
#include <random>

#include "oscint/core.hpp"
#include "oscint/errors.hpp"
#include "oscint/specfun.hpp"

using namespace oscint;
using namespace oscint::specfun;

TEST_SUITE("specfun") {

TEST_CASE("Bernoulli polynomials")
{
    CHECK(bernoulli_polynomial(2, 0.0) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
    CHECK(std::abs(bernoulli_polynomial(1, 0.5)) < 1e-16);
    CHECK(std::abs(bernoulli_polynomial(3, 0.5)) < 1e-16);
    CHECK_THROWS_AS(bernoulli_polynomial(17, 0.3), DomainError);
}

TEST_CASE("Bernoulli table is exact")
{
    const auto& t = bernoulli_table();
    CHECK(t.number(0) == Rational{1, 1});
    CHECK(t.number(1) == Rational{-1, 2});
    CHECK(t.number(12) == Rational{-691, 2730});
    CHECK(t.number(16) == Rational{-3617, 510});
    CHECK(t.number(15) == Rational{0, 1});
    // B_3(x) = x^3 - 3/2 x^2 + 1/2 x
    CHECK(t.row(3)[2] == Rational{-3, 2});
    CHECK(t.row(3)[1] == Rational{1, 2});
}

TEST_CASE("Bernoulli symmetry B_m(1-x) = (-1)^m B_m(x)")
{
    for (int m = 0; m <= 16; ++m)
        for (double x : {0.1, 0.37, 0.8}) {
            const double s = m % 2 == 0 ? 1.0 : -1.0;
            CHECK(bernoulli_polynomial(m, 1.0 - x) == doctest::Approx(s * bernoulli_polynomial(m, x)).epsilon(1e-10));
        }
}

TEST_CASE("periodized Bernoulli")
{
    CHECK(std::abs(periodized_bernoulli(1, pi)) < 1e-15);
    CHECK(periodized_bernoulli(2, 0.0) == doctest::Approx(1.0 / 6.0));
    CHECK(periodized_bernoulli(1, pi / 2) == doctest::Approx(-0.25));
    CHECK(periodized_bernoulli_unit(2, 3.25) == doctest::Approx(bernoulli_polynomial(2, 0.25)));
}

TEST_CASE("polylog")
{
    CHECK(polylog(1, 0.5) == doctest::Approx(0.6931471806).epsilon(1e-10));
    for (int k = 1; k <= 6; ++k) CHECK(polylog(k, 0.0) == 0.0);
    // Li_2(e^{-2 pi}), reference value from arbitrary-precision summation
    CHECK(polylog(2, std::exp(-two_pi)) == doctest::Approx(0.0018683152916593964).epsilon(1e-14));
    CHECK(polylog(2, 0.5) == doctest::Approx(pi * pi / 12 - std::log(2.0) * std::log(2.0) / 2).epsilon(1e-14));
    CHECK_THROWS_AS(polylog(2, 1.0), DomainError);
    CHECK_THROWS_AS(polylog(2, -0.1), DomainError);
    CHECK_THROWS_AS(polylog(0, 0.5), DomainError);
}

TEST_CASE("Li_1 is -ln(1-x)")
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 0.999);
    for (int i = 0; i < 100; ++i) {
        const double x = u(rng);
        CHECK(std::abs(polylog(1, x) + std::log(1.0 - x)) <= 1e-12 * std::max(1.0, std::abs(std::log(1.0 - x))));
    }
}

TEST_CASE("Bessel J")
{
    CHECK(bessel_j(0, 0.0) == 1.0);
    CHECK(bessel_j(1, 0.0) == 0.0);
    CHECK(std::abs(bessel_j(0, 1.0) - 0.7651976865579666) < 1e-10);
    CHECK(std::abs(bessel_j(1, 2.0) - 0.5767248077568734) < 1e-13);
    CHECK(std::abs(bessel_j(3, -1.5) + 0.06096395114113963) < 1e-13);  // J_n(-z) = (-1)^n J_n(z)
    CHECK_THROWS_AS(bessel_j(41, 1.0), DomainError);
    CHECK_THROWS_AS(bessel_j(-1, 1.0), DomainError);
    CHECK_THROWS_AS(bessel_j(0, 25.0), DomainError);
}

TEST_CASE("fractional part")
{
    CHECK(fractional_part(2.25) == 0.25);
    CHECK(fractional_part(-0.25) == 0.75);
    CHECK(fractional_part(3.0) == 0.0);
}


TEST_CASE("Bernoulli polynomials have zero mean and B_n' = n B_{n-1}")
{
    for (int n = 1; n <= 8; ++n) {
        // Simpson's rule, 2000 panels
        const int m = 2000;
        double s = bernoulli_polynomial(n, 0.0) + bernoulli_polynomial(n, 1.0);
        for (int j = 1; j < m; ++j) s += (j % 2 ? 4.0 : 2.0) * bernoulli_polynomial(n, static_cast<double>(j) / m);
        CHECK(std::abs(s / (3.0 * m)) < 1e-10);

        for (double x : {0.1, 0.45, 0.9}) {
            const double h = 1e-5;
            const double d = (bernoulli_polynomial(n, x + h) - bernoulli_polynomial(n, x - h)) / (2 * h);
            CHECK(std::abs(d - n * bernoulli_polynomial(n - 1, x)) < 1e-6);
        }
    }
}

TEST_CASE("polylog decreases in its order")
{
    for (double x : {0.05, 0.3, 0.6, 0.9, 0.99})
        for (int k = 2; k <= 6; ++k) CHECK(polylog(k, x) < polylog(k - 1, x));
}

TEST_CASE("Bessel normalization J_0^2 + 2 sum J_n^2 = 1")
{
    for (double z : {0.5, 1.0, 2.0}) {
        double s = bessel_j(0, z) * bessel_j(0, z);
        for (int n = 1; n <= 40; ++n) s += 2.0 * bessel_j(n, z) * bessel_j(n, z);
        CHECK(std::abs(s - 1.0) < 1e-10);
    }
}

}
