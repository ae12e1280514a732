#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "oscint/cli.hpp"
#include "oscint/core.hpp"

using namespace oscint;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "oscint");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s)
{
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("list in three formats")
{
    auto text = cli({"list"});
    CHECK(text.code == exit_ok);
    CHECK(lines(text.out).size() == 15);

    auto json = cli({"list", "--format", "json"});
    const auto arr = nlohmann::json::parse(json.out);
    REQUIRE(arr.size() == 15);
    for (const auto& e : arr) {
        CHECK(e.contains("id"));
        CHECK(e.contains("params"));
        CHECK(e.contains("reference"));
    }

    auto csv = cli({"list", "--format", "csv"});
    CHECK(lines(csv.out).size() == 16);
}

TEST_CASE("eval")
{
    auto a = cli({"eval", "log-tan2", "--param", "lambda=1"});
    CHECK(a.code == exit_ok);
    CHECK(lines(a.out).at(0) == "-0.855585958");

    auto b = cli({"eval", "mu-sin2-even", "--param", "mu=1", "--param", "lambda=1"});
    CHECK(lines(b.out).at(0) == "1.163528492");

    auto c = cli({"eval", "log-sin", "--param", "lambda=-1"});
    CHECK(c.code == exit_usage);
    CHECK(c.err.find("lambda must be positive") != std::string::npos);

    auto d = cli({"eval", "aiyar-product", "--param", "a=1", "--param", "t=0.5", "--param", "lambda=1", "--format", "json"});
    const auto j = nlohmann::json::parse(d.out);
    CHECK(j["closed"].get<double>() == doctest::Approx(1.9248533060846).epsilon(1e-13));
    CHECK(j["params"]["t"].is_array());

    CHECK(cli({"eval", "log-sin", "--param", "lambda"}).code == exit_usage);
    CHECK(cli({"eval", "log-sin", "--param", "lambda=abc"}).code == exit_usage);
    CHECK(cli({"eval", "log-sin", "--param", "nu=1"}).code == exit_usage);
}

TEST_CASE("verify report schema")
{
    auto r = cli({"verify", "log-sin", "--param", "lambda=0.5", "--format", "json"});
    CHECK(r.code == exit_ok);
    const auto arr = nlohmann::json::parse(r.out);
    REQUIRE(arr.size() == 1);
    const auto& row = arr[0];
    const std::vector<std::string> keys{"id", "params", "closed", "numeric", "abs_err",
                                        "rel_err", "pass", "periods_used", "function_evals"};
    std::vector<std::string> got;
    for (auto it = row.begin(); it != row.end(); ++it) got.push_back(it.key());
    std::sort(got.begin(), got.end());
    auto want = keys;
    std::sort(want.begin(), want.end());
    CHECK(got == want);
    CHECK(row["pass"].get<bool>());
    CHECK(row["abs_err"].get<double>() < 1e-6);
    CHECK(nlohmann::json::parse(arr.dump()) == arr);

    auto b = nlohmann::json::parse(cli({"verify", "bessel-exp-cos", "--format", "json"}).out);
    CHECK(b[0]["closed"].contains("re"));
    CHECK(b[0]["closed"].contains("im"));
}

TEST_CASE("verify exit codes")
{
    CHECK(cli({"verify", "nonexistent"}).code == exit_usage);
    CHECK(cli({"verify"}).code == exit_usage);
    CHECK(cli({"verify", "log-sin", "--all"}).code == exit_usage);
    CHECK(cli({"verify", "log-sin", "--tol", "1e-16"}).code == exit_failure);

    auto all = cli({"verify", "--all", "--tol", "1e-6"});
    CHECK(all.code == exit_ok);
    CHECK(all.out.find("15/15 passed") != std::string::npos);
}

TEST_CASE("OSCINT_DEFAULT_TOL sets the default tolerance")
{
    setenv("OSCINT_DEFAULT_TOL", "1e-16", 1);
    CHECK(cli({"verify", "log-sin"}).code == exit_failure);
    CHECK(cli({"verify", "log-sin", "--tol", "1e-6"}).code == exit_ok);
    setenv("OSCINT_DEFAULT_TOL", "bogus", 1);
    CHECK(cli({"verify", "log-sin"}).code == exit_usage);
    unsetenv("OSCINT_DEFAULT_TOL");
    CHECK(cli({"verify", "log-sin"}).code == exit_ok);
}

TEST_CASE("--jobs output is identical to serial output")
{
    for (const char* fmt : {"json", "csv", "text"}) {
        const auto serial = cli({"verify", "--all", "--grid", "--format", fmt, "--jobs", "1"});
        const auto parallel = cli({"verify", "--all", "--grid", "--format", fmt, "--jobs", "4"});
        CHECK(serial.code == exit_ok);
        CHECK(serial.out == parallel.out);
    }
}

TEST_CASE("fourier")
{
    auto c = cli({"fourier", "cos", "--max-order", "4", "--format", "csv"});
    CHECK(c.code == exit_ok);
    const auto rows = lines(c.out);
    REQUIRE(rows.size() == 10);
    CHECK(rows[0] == "n,re,im,a,b");
    CHECK(rows[4].rfind("-1,0.5,", 0) == 0);
    CHECK(rows[6].rfind("1,0.5,", 0) == 0);

    auto j = nlohmann::json::parse(cli({"fourier", "neglogsin", "--samples", "4096", "--max-order", "8", "--format", "json"}).out);
    for (const auto& row : j["coefficients"]) {
        const int n = row["n"];
        if (n >= 1) CHECK(std::abs(row["a"].get<double>() - 1.0 / n) < 1e-3);
    }
    CHECK(j["residual"].get<double>() > 1e-2);

    auto sq = nlohmann::json::parse(cli({"fourier", "squarewave", "--max-order", "8", "--format", "json"}).out);
    for (const auto& row : sq["coefficients"]) {
        if (row["n"] == 1) CHECK(std::abs(row["b"].get<double>() - 4.0 / pi) < 1e-3);
        if (row["n"] == 2) CHECK(std::abs(row["b"].get<double>()) < 1e-3);
    }

    CHECK(cli({"fourier", "triangle"}).code == exit_usage);
}

TEST_CASE("fourier closed-form evaluation respects the residual gate")
{
    auto ok = nlohmann::json::parse(cli({"fourier", "cos", "--max-order", "4", "--lambda", "1", "--format", "json"}).out);
    CHECK(ok["I"].get<double>() == doctest::Approx(0.5778636749).epsilon(1e-10));
    CHECK(std::abs(ok["J"].get<double>()) < 1e-12);

    auto refused = cli({"fourier", "neglogsin", "--max-order", "8", "--lambda", "1"});
    CHECK(refused.code == exit_usage);
    CHECK(refused.err.find("residual") != std::string::npos);
    CHECK(cli({"fourier", "neglogsin", "--max-order", "8", "--lambda", "1", "--force"}).code == exit_ok);
}

TEST_CASE("plot-data")
{
    auto r = cli({"plot-data", "intro-sin2-tan", "--points", "2000"});
    CHECK(r.code == exit_ok);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 2001);
    CHECK(rows[0] == "x,value");
    CHECK(rows[1] == "0,1");

    auto s = lines(cli({"plot-data", "log-sin", "--points", "4", "--range", "0,6.283185307179586"}).out);
    CHECK(s[1] == "0,nan");
    CHECK(s[3].find(",nan") != std::string::npos);

    CHECK(cli({"plot-data", "nonexistent"}).code == exit_usage);
    CHECK(cli({"plot-data", "log-sin", "--range", "1"}).code == exit_usage);
}

TEST_CASE("usage errors")
{
    CHECK(cli({}).code == exit_usage);
    CHECK(cli({"frobnicate"}).code == exit_usage);
    CHECK(cli({"list", "--format", "xml"}).code == exit_usage);
    CHECK(cli({"--help"}).code == exit_ok);
}

}
