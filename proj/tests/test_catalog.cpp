#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oscint/catalog.hpp"
#include "oscint/closedform.hpp"
#include "oscint/errors.hpp"

using namespace oscint;

TEST_SUITE("catalog") {

TEST_CASE("registry contents")
{
    const auto entries = list_entries();
    CHECK(entries.size() == 15);
    CHECK(std::is_sorted(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.id < b.id; }));
    auto has = [&](const std::string& id) {
        return std::any_of(entries.begin(), entries.end(), [&](const auto& e) { return e.id == id; });
    };
    CHECK(has("intro-sin2-tan"));
    CHECK(has("aiyar-product"));
    for (const auto& e : entries) {
        CHECK_FALSE(e.reference.empty());
        const auto& entry = find_entry(e.id);
        CHECK_FALSE(entry.default_grid.empty());
        for (const auto& p : entry.default_grid) CHECK(std::isfinite(std::abs(closed_form(e.id, p))));
    }
    CHECK_THROWS_AS(find_entry("nonexistent"), UnknownEntryError);
}

TEST_CASE("closed forms")
{
    CHECK(closed_form("log-tan2", {{"lambda", 1.0}}).real() == doctest::Approx(pi * std::log(std::tanh(1.0))).epsilon(1e-15));
    CHECK(closed_form("log-tan2", {{"lambda", 1.0}}).real() == doctest::Approx(-0.8555859580012631).epsilon(1e-14));
    CHECK(closed_form("mu-sin2-even", {{"mu", 1.0}, {"lambda", 1.0}}).real() ==
          doctest::Approx(1.1635284915161013).epsilon(1e-14));
    ParamSet aiyar;
    aiyar.set("a", 1.0).set("t", std::vector<double>{0.5}).set("lambda", 1.0);
    CHECK(closed_form("aiyar-product", aiyar).real() == doctest::Approx(1.9248533060845995).epsilon(1e-14));
    CHECK(closed_form("logratio-mu-cos", {{"mu", 0.0}, {"lambda", 1.0}}) == cplx(0.0));
    CHECK(closed_form("logratio-mu-sin", {{"mu", 0.0}, {"lambda", 1.0}}) == cplx(0.0));
}

TEST_CASE("closed forms are odd in mu for the log-ratio entries")
{
    for (const char* id : {"logratio-mu-cos", "logratio-mu-sin"}) {
        const cplx a = closed_form(id, {{"mu", 0.4}, {"lambda", 0.7}});
        const cplx b = closed_form(id, {{"mu", -0.4}, {"lambda", 0.7}});
        CHECK(std::abs(a + b) < 1e-14);
    }
}

TEST_CASE("parameter validation")
{
    CHECK_THROWS_AS(closed_form("log-sin", {{"lambda", -1.0}}), ParameterError);
    try {
        closed_form("log-sin", {{"lambda", -1.0}});
    } catch (const ParameterError& e) {
        CHECK(std::string(e.what()) == "lambda must be positive");
    }
    CHECK_THROWS_AS(closed_form("logratio-mu-cos", {{"mu", 1.0}, {"lambda", 1.0}}), ParameterError);
    CHECK_THROWS_AS(closed_form("mu-cos-odd", {{"mu", 1.0}, {"lambda", 1.0}}), ParameterError);
    CHECK_THROWS_AS(closed_form("bernoulli-odd", {{"m", 1.5}, {"lambda", 1.0}}), ParameterError);
    CHECK_THROWS_AS(closed_form("log-sin", {{"lambda", 1.0}, {"nu", 2.0}}), ParameterError);
    ParamSet bad;
    bad.set("a", 1.0).set("t", std::vector<double>{0.5, 1.0}).set("lambda", 1.0);
    CHECK_THROWS_AS(closed_form("aiyar-product", bad), ParameterError);
    CHECK_THROWS_AS(closed_form("nonexistent", {}), UnknownEntryError);
}

TEST_CASE("missing parameters come from the first grid point")
{
    const auto& e = find_entry("mu-sin2-even");
    const ParamSet p = complete_params(e, {{"lambda", 2.0}});
    CHECK(p.real("mu") == e.default_grid.front().real("mu"));
    CHECK(p.real("lambda") == 2.0);
}

TEST_CASE("verify examples")
{
    CHECK(verify("log-sin", {{"lambda", 1.0}}, 1e-6).pass);
    CHECK(verify("arctan-mu-cos", {{"mu", 1.0}, {"lambda", 1.0}}, 1e-6).pass);
    const auto b = verify("bessel-exp-cos", {{"z", 1.0}, {"lambda", 1.0}}, 1e-6);
    CHECK(b.pass);
    CHECK(b.complex_valued);
    REQUIRE(b.components.size() == 2);
    CHECK(b.components[0].name == "re");
    CHECK(b.components[1].name == "im");
    CHECK(std::abs(b.numeric - b.closed) < 1e-6);
}

TEST_CASE("every entry passes on its default grid")
{
    for (const auto& info : list_entries()) {
        for (const auto& p : find_entry(info.id).default_grid) {
            const auto r = verify(info.id, p, 1e-6);
            INFO(info.id);
            CHECK(r.pass);
            CHECK(r.abs_err <= std::max(1e-6, 1e-6 * std::abs(r.closed)));
            CHECK(r.reason.empty());
        }
    }
}

TEST_CASE("series forms reproduce the closed forms")
{
    for (const auto& info : list_entries()) {
        for (const auto& p : find_entry(info.id).default_grid) {
            INFO(info.id);
            const cplx c = closed_form(info.id, p);
            CHECK(std::abs(series_form(info.id, p) - c) <= 1e-10 * std::max(1.0, std::abs(c)));
        }
    }
}

TEST_CASE("Aiyar identity I_1 - J_1 = pi/(2 a^n)")
{
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> ua(0.5, 2.0), u01(0.0, 1.0);
    std::uniform_int_distribution<int> un(1, 4);
    for (int trial = 0; trial < 20; ++trial) {
        const double a = ua(rng);
        std::vector<double> t(static_cast<std::size_t>(un(rng)));
        for (auto& tk : t) tk = a * (0.02 + 0.96 * u01(rng));
        std::sort(t.begin(), t.end());
        ParamSet p;
        p.set("a", a).set("t", t).set("lambda", 1.0);
        const auto comps = find_entry("aiyar-product").components(complete_params(find_entry("aiyar-product"), p));
        REQUIRE(comps.size() == 3);
        const cplx diff = comps[0].closed - comps[1].closed;
        const double expected = pi / (2.0 * std::pow(a, static_cast<double>(t.size())));
        CHECK(std::abs(diff - expected) <= 1e-10 * expected);
        CHECK(std::abs(comps[2].closed - expected) <= 1e-10 * expected);
    }
}

TEST_CASE("mu-cos-odd grows as mu approaches 1")
{
    double prev_closed = 0.0, prev_numeric = 0.0;
    for (double mu : {1.5, 1.1, 1.01}) {
        const auto r = verify("mu-cos-odd", {{"mu", mu}, {"lambda", 1.0}}, 1e-6);
        CHECK(r.pass);
        CHECK(r.closed.real() > prev_closed);
        CHECK(r.numeric.real() > prev_numeric);
        prev_closed = r.closed.real();
        prev_numeric = r.numeric.real();
    }
}

TEST_CASE("log-sin is the rescaled ln sin^2(t/2) integral")
{
    auto half = PeriodicEvaluator::real(
        [](double t) {
            const double s = std::sin(t / 2);
            return std::log(s * s);
        },
        Parity::even, {0.0});
    for (double l : {0.5, 1.0, 2.0}) {
        const cplx rescaled = 2.0 * integrate_even_kernel(half, 2.0 * l).value;
        CHECK(std::abs(rescaled - closed_form("log-sin", {{"lambda", l}})) < 1e-8);
    }
}

TEST_CASE("oracle failure becomes a failing report")
{
    OracleConfig cfg;
    cfg.tol = 1e-30;
    cfg.max_periods = 64;
    const auto r = verify("log-sin", {{"lambda", 1.0}}, 1e-6, cfg);
    CHECK_FALSE(r.pass);
    CHECK_FALSE(r.reason.empty());
    CHECK(std::isfinite(r.numeric.real()));
}

TEST_CASE("plot data")
{
    const auto d = plot_data("intro-sin2-tan", {}, 2000);
    REQUIRE(d.size() == 2000);
    CHECK(d.front().x == 0.0);
    CHECK(d.front().value.real() == 1.0);
    CHECK(d[1000].x == doctest::Approx(pi / 4));
    CHECK(d[1000].value.real() == doctest::Approx(1.0 / (1.0 + std::pow(std::sin(1.0), 2))).epsilon(1e-12));
    CHECK(d.back().x < pi / 2);

    const auto s = plot_data("log-sin", {{"lambda", 1.0}}, 100, std::pair{0.0, 2.0 * pi});
    CHECK(std::isnan(s.front().value.real()));
    CHECK(std::isnan(s[50].value.real()));  // t = pi
    CHECK(std::isfinite(s[25].value.real()));
    CHECK_THROWS_AS(plot_data("log-sin", {}, 0), ParameterError);
}


TEST_CASE("oracle error estimates are honest on the default grids")
{
    int honest = 0, total = 0;
    for (const auto& info : list_entries()) {
        for (const auto& p : find_entry(info.id).default_grid) {
            for (const auto& c : verify(info.id, p, 1e-6).components) {
                ++total;
                // A 1e-15 floor keeps exact agreement from counting against a zero estimate.
                if (c.abs_err <= 10.0 * c.diagnostics.abs_error_estimate + 1e-15) ++honest;
            }
        }
    }
    CHECK(total > 0);
    CHECK(honest >= 0.95 * total);
}

}
