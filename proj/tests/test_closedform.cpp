#include <doctest.h>

#include <cmath>
#include <random>

#include "oscint/closedform.hpp"
#include "oscint/errors.hpp"

using namespace oscint;

namespace {

constexpr cplx I_unit{0.0, 1.0};
const double half_pi_over_e = 0.57786367489546085896;  // (pi/2) e^{-1}

FourierCoefficients table(std::initializer_list<std::pair<int, cplx>> entries, int n = 4)
{
    std::vector<cplx> c(2 * n + 1);
    for (auto [k, v] : entries) c[static_cast<std::size_t>(k + n)] = v;
    return FourierCoefficients(n, std::move(c));
}

CoefficientRule rule_from(std::function<cplx(std::int64_t)> f, double bound)
{
    return {std::move(f), "test", bound};
}

}  // namespace

TEST_SUITE("closedform") {

TEST_CASE("eval_I_fourier")
{
    CHECK(eval_I_fourier(table({{0, 1.0}}), 2.0, 1e-12) == doctest::Approx(pi / 4).epsilon(1e-15));
    CHECK(eval_I_fourier(table({{1, 0.5}, {-1, 0.5}}), 1.0, 1e-12) == doctest::Approx(half_pi_over_e).epsilon(1e-15));

    // -ln|sin(t/2)| = ln 2 + sum cos(nt)/n
    auto neglogsin = rule_from(
        [](std::int64_t n) -> cplx { return n == 0 ? std::log(2.0) : 0.5 / std::abs(static_cast<double>(n)); }, 1.0);
    // (pi/2)(ln 2 - ln(1 - e^{-1}))
    CHECK(eval_I_fourier(neglogsin, 1.0, 1e-14) == doctest::Approx(1.8092782787179444).epsilon(1e-13));
}

TEST_CASE("eval_J_fourier")
{
    const cplx half_i = 1.0 / cplx(0.0, 2.0);
    CHECK(eval_J_fourier(table({{1, half_i}, {-1, -half_i}}), 1.0, 1e-12) ==
          doctest::Approx(half_pi_over_e).epsilon(1e-15));
    CHECK(eval_J_fourier(table({{0, 3.0}, {2, 1.0}, {-2, 1.0}}), 1.0, 1e-12) == 0.0);

    // Bernoulli function B_1({t/2pi}): b_n = -1/(pi n)
    auto b1 = rule_from(
        [](std::int64_t n) -> cplx { return n == 0 ? cplx(0.0) : I_unit / (2.0 * pi * static_cast<double>(n)); },
        1.0 / (2 * pi));
    CHECK(eval_J_fourier(b1, 1.0, 1e-14) == doctest::Approx(0.5 * std::log(1.0 - std::exp(-1.0))).epsilon(1e-13));
}

TEST_CASE("eval_L_series")
{
    CHECK(std::abs(eval_L_series(table({{0, 1.0}}), -1.0, 1e-12) - I_unit * pi) < 1e-15);
    CHECK(std::abs(eval_L_series(table({{-1, 1.0}}), 1.0, 1e-12) + 2.0 * pi * I_unit * std::exp(-1.0)) < 1e-15);

    auto analytic = table({{0, 0.7}, {1, 2.0}, {2, -1.0}, {3, cplx(0.3, 0.1)}});
    CHECK(std::abs(eval_L_series(analytic, 1.3, 1e-12) + I_unit * pi * 0.7) < 1e-15);
    CHECK_THROWS_AS(eval_L_series(analytic, 0.0, 1e-12), DomainError);
}

TEST_CASE("domain and convergence errors")
{
    auto one = rule_from([](std::int64_t n) -> cplx { return n == 0 ? 1.0 : 0.0; }, 1.0);
    CHECK_THROWS_AS(eval_I_fourier(one, 0.0, 1e-8), DomainError);
    CHECK_THROWS_AS(eval_I_fourier(one, -1.0, 1e-8), DomainError);
    CHECK_THROWS_AS(eval_J_fourier(one, -1.0, 1e-8), DomainError);

    auto slow = rule_from([](std::int64_t) -> cplx { return 1.0; }, 1.0);
    try {
        eval_I_fourier(slow, 1e-6, 1e-8);
        FAIL("expected a convergence error");
    } catch (const ConvergenceError& e) {
        CHECK(e.achieved_bound() > 1e-8);
        CHECK(std::isfinite(e.best_estimate()));
    }
}

TEST_CASE("complex integrand through a real wrapper is refused")
{
    CHECK_THROWS_AS(eval_I_fourier(table({{1, I_unit}}), 1.0, 1e-12), DomainError);
    CHECK_THROWS_AS(eval_J_fourier(table({{1, 1.0}}), 1.0, 1e-12), DomainError);
}

TEST_CASE("truncation tail honors tol")
{
    auto geo = rule_from([](std::int64_t n) -> cplx { return std::pow(0.5, std::abs(static_cast<double>(n))); }, 1.0);
    const auto v = fourier_I(geo, 0.1, 1e-12);
    // sum_n 0.5^{|n|} e^{-0.1|n|} = (1+q)/(1-q), q = 0.5 e^{-0.1}
    const double q = 0.5 * std::exp(-0.1);
    CHECK(std::abs(v.value.real() - pi / 0.2 * (1 + q) / (1 - q)) < 1e-12);
    CHECK(v.tail_bound < 1e-12);
}

TEST_CASE("analytic engine")
{
    AnalyticHandle one([](cplx) { return cplx(1.0); }, "entire", true);
    CHECK(eval_I_analytic(one, 3.0) == doctest::Approx(pi / 6));
    CHECK(eval_J_analytic(one, 3.0) == 0.0);

    const double e2 = std::exp(2.0);
    AnalyticHandle ratio([e2](cplx z) { return (e2 + z) / (e2 - z); }, "|z| < e^2", true);
    const double em = std::exp(-1.0);
    CHECK(eval_I_analytic(ratio, 1.0) == doctest::Approx(pi / 2 * (e2 + em) / (e2 - em)).epsilon(1e-15));
    CHECK(eval_I_analytic(ratio, 1.0) == doctest::Approx(1.7354022619715468).epsilon(1e-15));
    CHECK(eval_J_analytic(ratio, 1.0) == doctest::Approx(pi / (std::exp(3.0) - 1.0)).epsilon(1e-14));

    AnalyticHandle z([](cplx w) { return w; }, "entire", true);
    CHECK(eval_I_analytic(z, 1.0) == doctest::Approx(half_pi_over_e).epsilon(1e-15));
    CHECK(eval_J_analytic(z, 1.0) == doctest::Approx(half_pi_over_e).epsilon(1e-15));
    CHECK_THROWS_AS(eval_I_analytic(z, 0.0), DomainError);
}

TEST_CASE("analytic and Fourier engines agree on induced coefficients")
{
    auto g = polynomial_handle({0.5, -1.0, 2.0, 0.25});
    const auto c = induced_coefficients(g);
    const auto s = sine_part_coefficients(g);
    for (double l : {0.5, 1.0, 2.0}) {
        CHECK(std::abs(eval_I_analytic(g, l) - eval_I_fourier(c, l, 1e-14)) < 1e-13);
        CHECK(std::abs(eval_J_analytic(g, l) - eval_J_fourier(s, l, 1e-14)) < 1e-13);
        // f = G(e^{it}) has odd part i g_s, so its J is i times the analytic value.
        CHECK(std::abs(fourier_J(c, l).value - I_unit * eval_J_analytic(g, l)) < 1e-13);
    }
    CHECK(s[0] == cplx(0.0));
    CHECK(std::abs(s[2] - 2.0 / (2.0 * I_unit)) < 1e-15);
    CHECK(std::abs(s[-2] + 2.0 / (2.0 * I_unit)) < 1e-15);
}

TEST_CASE("recombine and split_L")
{
    CHECK(std::abs(recombine(pi / 2 * 3.0, 0.0, 1.0) + I_unit * pi * 3.0) < 1e-15);

    auto ones = table({{0, 1.0}});
    auto [I1, J1] = split_L(eval_L_series(ones, 1.0, 1e-12), eval_L_series(ones, -1.0, 1e-12), 1.0);
    CHECK(std::abs(I1 - pi / 2) < 1e-15);
    CHECK(std::abs(J1) < 1e-15);

    auto cosine = table({{1, 0.5}, {-1, 0.5}});
    auto [Ic, Jc] = split_L(eval_L_series(cosine, 1.0, 1e-12), eval_L_series(cosine, -1.0, 1e-12), 1.0);
    CHECK(std::abs(Ic - half_pi_over_e) < 1e-15);
    CHECK(std::abs(Jc) < 1e-15);

    const cplx h = 1.0 / cplx(0.0, 2.0);
    auto sine = table({{1, h}, {-1, -h}});
    auto [Is, Js] = split_L(eval_L_series(sine, 1.0, 1e-12), eval_L_series(sine, -1.0, 1e-12), 1.0);
    CHECK(std::abs(Is) < 1e-15);
    CHECK(std::abs(Js - half_pi_over_e) < 1e-15);
}

TEST_CASE("random tables satisfy the recombination identities")
{
    std::mt19937_64 rng(17);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<cplx> c(2 * 8 + 1);
        for (auto& v : c) v = {g(rng), g(rng)};
        FourierCoefficients t(8, c);
        for (double l : {0.5, 1.0, 2.0}) {
            const cplx I = fourier_I(t, l).value;
            const cplx J = fourier_J(t, l).value;
            const cplx Lp = series_L(t, l).value;
            const cplx Lm = series_L(t, -l).value;
            CHECK(std::abs(recombine(I, J, l) - Lp) < 1e-12);
            const auto [Ib, Jb] = split_L(Lp, Lm, l);
            CHECK(std::abs(Ib - I) < 1e-12);
            CHECK(std::abs(Jb - J) < 1e-12);
        }
    }
}


TEST_CASE("I decreases in lambda for nonnegative coefficients")
{
    const auto t = table({{-3, 0.2}, {-1, 0.5}, {0, 1.0}, {1, 0.5}, {2, 0.1}, {4, 0.7}});
    double prev = INFINITY;
    for (double l = 0.1; l < 5.0; l += 0.1) {
        const double v = eval_I_fourier(t, l, 1e-14);
        CHECK(v < prev);
        prev = v;
    }
}

}
