#include <doctest.h>

#include <cmath>
#include <random>

#include "oscint/closedform.hpp"
#include "oscint/errors.hpp"
#include "oscint/fourier.hpp"

using namespace oscint;

TEST_SUITE("fourier") {

TEST_CASE("cosine, 64 samples")
{
    auto f = PeriodicEvaluator::real([](double t) { return std::cos(t); }, Parity::even);
    const auto c = estimate_coefficients(f, {64, 4, std::nullopt});
    for (int n = -4; n <= 4; ++n) {
        const double expected = std::abs(n) == 1 ? 0.5 : 0.0;
        CHECK(std::abs(c[n] - cplx(expected)) < 1e-13);
    }
}

TEST_CASE("-ln|sin(t/2)| has a_n = 1/n")
{
    auto f = PeriodicEvaluator::real([](double t) { return -std::log(std::abs(std::sin(t / 2))); }, Parity::even, {0.0});
    const auto c = estimate_coefficients(f, {4096, 32, std::nullopt});
    const auto s = to_cos_sin(c, 1e-10);
    CHECK(std::abs(s.a0 / 2 - std::log(2.0)) < 1e-3);
    for (int n = 1; n <= 32; ++n) CHECK(std::abs(s.a[n - 1] - 1.0 / n) < 1e-3);

    const double r = residual_check(f, c, 256);
    CHECK(r > 1e-3);  // truncation of a log singularity is visible
    CHECK(r < 0.2);
}

TEST_CASE("square wave has b_n = 4/(pi n) for odd n")
{
    auto f = PeriodicEvaluator::real([](double t) { return std::sin(t) >= 0 ? 1.0 : -1.0; }, Parity::odd, {0.0, pi});
    const auto s = to_cos_sin(estimate_coefficients(f, {4096, 16, std::nullopt}), 1e-10);
    for (int n = 1; n <= 16; ++n) {
        const double expected = n % 2 == 1 ? 4.0 / (pi * n) : 0.0;
        CHECK(std::abs(s.b[n - 1] - expected) < 1e-3);
    }
}

TEST_CASE("random trigonometric polynomials are recovered")
{
    std::mt19937_64 rng(23);
    std::normal_distribution<double> g;
    std::uniform_int_distribution<int> deg(0, 32);
    for (int trial = 0; trial < 20; ++trial) {
        const int N = deg(rng);
        std::vector<cplx> c(static_cast<std::size_t>(2 * N + 1));
        for (auto& v : c) v = {g(rng), g(rng)};
        FourierCoefficients exact(N, c);
        PeriodicEvaluator f(
            [exact](double t) {
                cplx s{};
                for (int n = -exact.max_order(); n <= exact.max_order(); ++n) s += exact[n] * std::polar(1.0, n * t);
                return s;
            },
            Parity::none);
        const auto est = estimate_coefficients(f, {128, 32, std::nullopt});
        for (int n = -32; n <= 32; ++n) CHECK(std::abs(est[n] - exact[n]) < 1e-10);
        CHECK(residual_check(f, exact, 64) < 1e-12);
    }
}

TEST_CASE("zero function against an empty table")
{
    auto f = PeriodicEvaluator::real([](double) { return 0.0; }, Parity::even);
    CHECK(residual_check(f, FourierCoefficients(), 32) == 0.0);
}

TEST_CASE("sampling plan validation and singular nodes")
{
    auto f = PeriodicEvaluator::real([](double t) { return t; }, Parity::none, {0.0});
    CHECK_THROWS_AS(estimate_coefficients(f, {100, 4, std::nullopt}), DomainError);
    CHECK_THROWS_AS(estimate_coefficients(f, {64, 40, std::nullopt}), DomainError);
    // offset of one full step lands a node on 2 pi
    CHECK_THROWS_AS(estimate_coefficients(f, {64, 4, two_pi / 64}), DomainError);
    auto g = PeriodicEvaluator::real([](double t) { return t; }, Parity::none, {two_pi / 64 + 1e-3});
    try {
        estimate_coefficients(g, {64, 4, 1e-3});
        FAIL("expected a sampling error");
    } catch (const SamplingError& e) {
        CHECK(e.node() == doctest::Approx(two_pi / 64 + 1e-3));
    }
}


TEST_CASE("M = 256 recovers uniform random coefficients")
{
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<cplx> c(65);
        for (auto& v : c) v = {u(rng), u(rng)};
        FourierCoefficients exact(32, c);
        PeriodicEvaluator f(
            [exact](double t) {
                cplx s{};
                for (int n = -32; n <= 32; ++n) s += exact[n] * std::polar(1.0, n * t);
                return s;
            },
            Parity::none);
        const auto est = estimate_coefficients(f, {256, 32, std::nullopt});
        for (int n = -32; n <= 32; ++n) CHECK(std::abs(est[n] - exact[n]) < 1e-10);
    }
}

TEST_CASE("estimated tables of real signals are conjugate-symmetric")
{
    auto f = PeriodicEvaluator::real([](double t) { return std::exp(std::sin(t)) * std::cos(3.0 * t); }, Parity::none);
    CHECK(estimate_coefficients(f, {}).conjugate_symmetry_defect() < 1e-12);
}

TEST_CASE("estimated cos t table feeds the closed-form engine")
{
    auto f = PeriodicEvaluator::real([](double t) { return std::cos(t); }, Parity::even);
    const auto c = estimate_coefficients(f, {});
    const auto g = polynomial_handle({0.0, 1.0});
    for (double l : {0.5, 1.0, 2.0}) CHECK(std::abs(eval_I_fourier(c, l, 1e-13) - eval_I_analytic(g, l)) < 1e-9);
}

}
