#include "oscint/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "oscint/closedform.hpp"
#include "oscint/errors.hpp"
#include "oscint/specfun.hpp"

namespace oscint {

const char* to_string(IntegralKind k) noexcept
{
    switch (k) {
    case IntegralKind::even_kernel: return "even_kernel";
    case IntegralKind::odd_kernel: return "odd_kernel";
    case IntegralKind::tan_form: return "tan_form";
    case IntegralKind::principal_value: return "principal_value";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// ParamSet
// ---------------------------------------------------------------------------

ParamSet::ParamSet(std::initializer_list<std::pair<const std::string, double>> scalars)
{
    for (const auto& [k, v] : scalars) set(k, v);
}

ParamSet& ParamSet::set(const std::string& name, double value)
{
    values_[name] = {value};
    return *this;
}

ParamSet& ParamSet::set(const std::string& name, std::vector<double> values)
{
    values_[name] = std::move(values);
    return *this;
}

double ParamSet::real(const std::string& name) const
{
    const auto& v = vec(name);
    if (v.size() != 1) throw ParameterError("parameter " + name + " must be a single number");
    return v.front();
}

const std::vector<double>& ParamSet::vec(const std::string& name) const
{
    auto it = values_.find(name);
    if (it == values_.end()) throw ParameterError("missing parameter " + name);
    return it->second;
}

namespace {

constexpr cplx I_unit{0.0, 1.0};

// ---------------------------------------------------------------------------
// Validation helpers
// ---------------------------------------------------------------------------

double lambda_of(const ParamSet& p) { return p.real("lambda"); }

void require_lambda(const ParamSet& p)
{
    const double l = lambda_of(p);
    if (!(l > 0.0) || !std::isfinite(l)) throw ParameterError("lambda must be positive");
}

void require_range(const ParamSet& p, const std::string& name, double lo, double hi, bool lo_open, bool hi_open,
                   const std::string& text)
{
    const double v = p.real(name);
    const bool ok = std::isfinite(v) && (lo_open ? v > lo : v >= lo) && (hi_open ? v < hi : v <= hi);
    if (!ok) {
        std::ostringstream msg;
        msg << name << " must satisfy " << text << " (got " << v << ")";
        throw ParameterError(msg.str());
    }
}

void require_integer(const ParamSet& p, const std::string& name, int lo, int hi)
{
    const double v = p.real(name);
    if (!(v == std::floor(v)) || v < lo || v > hi) {
        std::ostringstream msg;
        msg << name << " must be an integer in [" << lo << ", " << hi << "] (got " << v << ")";
        throw ParameterError(msg.str());
    }
}

const ParamSpec lambda_spec{"lambda", ParamKind::real, "lambda > 0"};

std::vector<ParamSet> lambda_grid(std::initializer_list<double> lambdas = {0.5, 1.0, 2.0})
{
    std::vector<ParamSet> g;
    for (double l : lambdas) g.push_back(ParamSet{{"lambda", l}});
    return g;
}

std::vector<ParamSet> product_grid(const std::string& name, std::initializer_list<double> values,
                                   std::initializer_list<double> lambdas = {0.5, 1.0, 2.0})
{
    std::vector<ParamSet> g;
    for (double v : values)
        for (double l : lambdas) g.push_back(ParamSet{{name, v}, {"lambda", l}});
    return g;
}

// ---------------------------------------------------------------------------
// Oracle wrappers
// ---------------------------------------------------------------------------

QuadratureResult scaled(QuadratureResult r, double s)
{
    r.value *= s;
    r.abs_error_estimate *= std::abs(s);
    r.oscillation_amplitude *= std::abs(s);
    return r;
}

template <typename Run>
QuadratureResult run_scaled(Run&& run, double s)
{
    try {
        return scaled(run(), s);
    } catch (const ConvergenceError& e) {
        throw ConvergenceError(e.what(), e.best_estimate() * s, e.achieved_bound() * std::abs(s));
    }
}

ComponentSpec even_component(std::string name, PeriodicEvaluator f, double lambda, cplx closed, double scale = 1.0)
{
    return {std::move(name), IntegralKind::even_kernel, closed, [f = std::move(f), lambda, scale](const OracleConfig& cfg) {
                return run_scaled([&] { return integrate_even_kernel(f, lambda, cfg); }, scale);
            }};
}

ComponentSpec odd_component(std::string name, PeriodicEvaluator f, double lambda, cplx closed, double scale = 1.0)
{
    return {std::move(name), IntegralKind::odd_kernel, closed, [f = std::move(f), lambda, scale](const OracleConfig& cfg) {
                return run_scaled([&] { return integrate_odd_kernel(f, lambda, cfg); }, scale);
            }};
}

// f(x)/(lambda^2+x^2), NaN on declared singularities.
cplx plot_even(const PeriodicEvaluator& f, double lambda, double x)
{
    if (f.distance_to_singularity(x) < 1e-12) return {std::nan(""), 0.0};
    return f(x) / (lambda * lambda + x * x);
}

// ---------------------------------------------------------------------------
// Integrands and coefficient rules
// ---------------------------------------------------------------------------

PeriodicEvaluator mu_sin2(double mu)
{
    return PeriodicEvaluator::real(
        [mu](double t) {
            const double s = std::sin(t);
            return 1.0 / (mu * mu + s * s);
        },
        Parity::even);
}

// 1/(mu^2 + sin^2 t) = (2/sinh 2x)(1 + 2 sum e^{-2nx} cos 2nt), mu = sinh x
CoefficientRule mu_sin2_rule(double mu)
{
    const double x = std::asinh(mu);
    const double c0 = 2.0 / std::sinh(2.0 * x);
    return {[c0, x](std::int64_t n) -> cplx {
                if (n % 2 != 0) return 0.0;
                return c0 * std::exp(-std::abs(static_cast<double>(n)) * x);
            },
            "geometric, ratio e^{-asinh(mu)}", c0};
}

double mu_sin2_closed(double mu, double lambda)
{
    const double root = std::sqrt(1.0 + mu * mu);
    const double q2 = (root - mu) * (root - mu);
    const double e2 = std::exp(2.0 * lambda);
    return pi / (2.0 * lambda * mu * root) * (e2 + q2) / (e2 - q2);
}

double factorial(int k)
{
    double f = 1.0;
    for (int j = 2; j <= k; ++j) f *= j;
    return f;
}

// Bernoulli function B_k({t/2pi}): C_n = -k! / (2 pi i n)^k, C_0 = 0.
cplx bernoulli_coefficient(int k, std::int64_t n)
{
    if (n == 0) return 0.0;
    const cplx base = 2.0 * pi * I_unit * static_cast<double>(n);
    return -factorial(k) / std::pow(base, k);
}

double bernoulli_bound(int k) { return factorial(k) / std::pow(two_pi, k); }

// Odd harmonics only: c_k for k odd > 0 and the conjugate rule for negative k.
template <typename Pos>
CoefficientRule odd_harmonic_rule(Pos pos, bool odd_function, std::string note, double bound)
{
    return {[pos, odd_function](std::int64_t n) -> cplx {
                const std::int64_t k = n < 0 ? -n : n;
                if (k % 2 == 0) return 0.0;
                const double c = pos(k);
                if (!odd_function) return c;
                return n > 0 ? -I_unit * c : I_unit * c;
            },
            std::move(note), bound};
}

double odd_sign(std::int64_t k) { return ((k - 1) / 2) % 2 == 0 ? 1.0 : -1.0; }

// Jacobi-Anger: e^{iz cos x} = sum i^{|n|} J_{|n|}(z) e^{inx}.  Orders past
// 40 are below 1e-20 for |z| <= 10 and are dropped.
cplx bessel_coefficient(double z, std::int64_t n)
{
    const std::int64_t k = n < 0 ? -n : n;
    if (k > 40) return 0.0;
    static const cplx powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return powers[k % 4] * specfun::bessel_j(static_cast<int>(k), z);
}

cplx bessel_closed(double z, double lambda)
{
    cplx acc = specfun::bessel_j(0, z);
    double mag = 1.0;  // (|z|/2)^n / n!
    for (int n = 1; n <= 40; ++n) {
        mag *= std::abs(z) / 2.0 / n;
        const double damp = std::exp(-n * lambda);
        acc += 2.0 * bessel_coefficient(z, n) * damp;
        if (2.0 * mag * damp < 1e-18) break;
    }
    return pi / (2.0 * lambda) * acc;
}

// Aiyar product G(z) = prod 1/(a - t_k z).
struct Aiyar {
    double a;
    std::vector<double> t;

    cplx G(cplx z) const
    {
        cplx p = 1.0;
        for (double tk : t) p /= (a - tk * z);
        return p;
    }

    // cos and sin of (phi_1 + ... + phi_n), over rho_1 ... rho_n
    std::pair<double, double> circle(double theta) const
    {
        double phase = 0.0;
        double rho = 1.0;
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        for (double tk : t) {
            phase += std::atan2(tk * s, a - tk * c);
            rho *= std::sqrt(a * a - 2.0 * tk * a * c + tk * tk);
        }
        return {std::cos(phase) / rho, std::sin(phase) / rho};
    }
};

Aiyar aiyar_of(const ParamSet& p) { return {p.real("a"), p.vec("t")}; }

void validate_aiyar(const ParamSet& p)
{
    require_lambda(p);
    require_range(p, "a", 0.0, INFINITY, true, true, "a > 0");
    const double a = p.real("a");
    const auto& t = p.vec("t");
    if (t.empty() || t.size() > 16) throw ParameterError("t must hold between 1 and 16 values");
    for (double tk : t)
        if (!(tk > 0.0 && tk < a)) {
            std::ostringstream msg;
            msg << "every t_k must satisfy 0 < t_k < a (got " << tk << " with a = " << a << ")";
            throw ParameterError(msg.str());
        }
}

double aiyar_product(const ParamSet& p) { return aiyar_of(p).G(std::exp(-lambda_of(p))).real(); }

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

std::vector<CatalogEntry> build_registry()
{
    std::vector<CatalogEntry> r;

    // intro-sin2-tan ---------------------------------------------------------
    {
        CatalogEntry e;
        e.id = "intro-sin2-tan";
        e.kind = IntegralKind::tan_form;
        e.reference = "int_0^{pi/2} dtheta / (1 + sin^2(tan theta)) = (pi/(2 sqrt 2)) (e^2 + 3 - 2 sqrt 2)/(e^2 - 3 + 2 sqrt 2)";
        e.default_grid = {ParamSet{}};
        e.plot_range = {0.0, pi / 2.0};
        e.validate = [](const ParamSet&) {};
        e.closed_form = [](const ParamSet&) -> cplx {
            const double e2 = std::exp(2.0);
            const double r2 = 2.0 * std::sqrt(2.0);
            return pi / r2 * (e2 + 3.0 - r2) / (e2 - 3.0 + r2);
        };
        e.series_form = [](const ParamSet&, double tol) { return fourier_I(mu_sin2_rule(1.0), 1.0, tol).value; };
        e.components = [](const ParamSet& p) {
            const cplx closed = find_entry("intro-sin2-tan").closed_form(p);
            return std::vector<ComponentSpec>{{"value", IntegralKind::tan_form, closed, [](const OracleConfig& cfg) {
                                                   return integrate_tan_form(mu_sin2(1.0), 1.0, cfg);
                                               }}};
        };
        e.plot_integrand = [](const ParamSet&, double x) -> cplx {
            const double s = std::sin(std::tan(x));
            return 1.0 / (1.0 + s * s);
        };
        r.push_back(std::move(e));
    }

    // mu-sin2-even -----------------------------------------------------------
    {
        CatalogEntry e;
        e.id = "mu-sin2-even";
        e.params = {{"mu", ParamKind::real, "mu > 0"}, lambda_spec};
        e.kind = IntegralKind::even_kernel;
        e.reference =
            "int_0^inf dtheta / ((mu^2 + sin^2 theta)(lambda^2 + theta^2)) = pi/(2 lambda mu sqrt(1+mu^2)) "
            "(e^{2 lambda} + q^2)/(e^{2 lambda} - q^2), q = sqrt(1+mu^2) - mu";
        e.default_grid = product_grid("mu", {0.5, 1.0, 2.0});
        e.validate = [](const ParamSet& p) {
            require_lambda(p);
            require_range(p, "mu", 0.0, INFINITY, true, true, "mu > 0");
        };
        e.closed_form = [](const ParamSet& p) -> cplx { return mu_sin2_closed(p.real("mu"), lambda_of(p)); };
        e.series_form = [](const ParamSet& p, double tol) {
            return fourier_I(mu_sin2_rule(p.real("mu")), lambda_of(p), tol).value;
        };
        e.components = [](const ParamSet& p) {
            const double mu = p.real("mu");
            return std::vector<ComponentSpec>{
                even_component("value", mu_sin2(mu), lambda_of(p), mu_sin2_closed(mu, lambda_of(p)))};
        };
        e.plot_integrand = [](const ParamSet& p, double x) { return plot_even(mu_sin2(p.real("mu")), lambda_of(p), x); };
        r.push_back(std::move(e));
    }

    // mu-cos-odd -------------------------------------------------------------
    {
        CatalogEntry e;
        e.id = "mu-cos-odd";
        e.params = {{"mu", ParamKind::real, "mu > 1"}, lambda_spec};
        e.kind = IntegralKind::odd_kernel;
        e.reference = "int_0^inf theta sin theta / ((mu - cos theta)(lambda^2 + theta^2)) dtheta = "
                      "pi / (e^lambda (mu + sqrt(mu^2 - 1)) - 1)";
        e.default_grid = product_grid("mu", {1.5, 2.0, 3.0});
        e.validate = [](const ParamSet& p) {
            require_lambda(p);
            require_range(p, "mu", 1.0, INFINITY, true, true, "mu > 1");
        };
        e.closed_form = [](const ParamSet& p) -> cplx {
            const double mu = p.real("mu");
            return pi / (std::exp(lambda_of(p)) * (mu + std::sqrt(mu * mu - 1.0)) - 1.0);
        };
        // sin t / (mu - cos t) = 2 sum rho^n sin nt, rho = mu - sqrt(mu^2 - 1)
        e.series_form = [](const ParamSet& p, double tol) {
            const double mu = p.real("mu");
            const double rho = 1.0 / (mu + std::sqrt(mu * mu - 1.0));
            CoefficientRule c{[rho](std::int64_t n) -> cplx {
                                  if (n == 0) return 0.0;
                                  const double m = std::pow(rho, std::abs(static_cast<double>(n)));
                                  return n > 0 ? -I_unit * m : I_unit * m;
                              },
                              "geometric, ratio rho", rho};
            return fourier_J(c, lambda_of(p), tol).value;
        };
        e.components = [](const ParamSet& p) {
            const double mu = p.real("mu");
            auto f = PeriodicEvaluator::real([mu](double t) { return std::sin(t) / (mu - std::cos(t)); }, Parity::odd);
            return std::vector<ComponentSpec>{
                odd_component("value", f, lambda_of(p), find_entry("mu-cos-odd").closed_form(p))};
        };
        e.plot_integrand = [](const ParamSet& p, double x) -> cplx {
            const double mu = p.real("mu");
            const double l = lambda_of(p);
            return x * std::sin(x) / ((mu - std::cos(x)) * (l * l + x * x));
        };
        r.push_back(std::move(e));
    }

    // log-sin ----------------------------------------------------------------
    {
        CatalogEntry e;
        e.id = "log-sin";
        e.params = {lambda_spec};
        e.kind = IntegralKind::even_kernel;
        e.reference = "int_0^inf ln(sin^2 t) / (lambda^2 + t^2) dt = (pi/lambda) ln((1 - e^{-2 lambda})/2)";
        e.default_grid = lambda_grid();
        e.validate = require_lambda;
        e.closed_form = [](const ParamSet& p) -> cplx {
            const double l = lambda_of(p);
            return pi / l * std::log(-std::expm1(-2.0 * l) / 2.0);
        };
        // ln sin^2 t = -2 ln 2 - 2 sum cos(2nt)/n
        e.series_form = [](const ParamSet& p, double tol) {
            CoefficientRule c{[](std::int64_t n) -> cplx {
                                  if (n == 0) return -2.0 * std::log(2.0);
                                  if (n % 2 != 0) return 0.0;
                                  return -2.0 / std::abs(static_cast<double>(n));
                              },
                              "1/n", 2.0 * std::log(2.0)};
            return fourier_I(c, lambda_of(p), tol).value;
        };
        e.components = [](const ParamSet& p) {
            auto f = PeriodicEvaluator::real(
                [](double t) {
                    const double s = std::sin(t);
                    return std::log(s * s);
                },
                Parity::even, {0.0, pi});
            return std::vector<ComponentSpec>{
                even_component("value", f, lambda_of(p), find_entry("log-sin").closed_form(p))};
        };
        e.plot_integrand = [](const ParamSet& p, double x) -> cplx {
            auto f = PeriodicEvaluator::real(
                [](double t) {
                    const double s = std::sin(t);
                    return std::log(s * s);
                },
                Parity::even, {0.0, pi});
            return plot_even(f, lambda_of(p), x);
        };
        r.push_back(std::move(e));
    }

    // aiyar-product ----------------------------------------------------------
    {
        CatalogEntry e;
        e.id = "aiyar-product";
        e.params = {{"a", ParamKind::real, "a > 0"}, {"t", ParamKind::vector, "0 < t_k < a, 1 to 16 values"}, lambda_spec};
        e.kind = IntegralKind::even_kernel;
        e.reference =
            "int_0^inf cos(sum phi_k)/(prod rho_k) dtheta/(lambda^2+theta^2) = (pi/(2 lambda)) prod 1/(a - t_k e^{-lambda}); "
            "int_0^inf sin(sum phi_k)/(prod rho_k) theta dtheta/(lambda^2+theta^2) = (pi/2)(prod 1/(a - t_k e^{-lambda}) - a^{-n}); "
            "at lambda = 1 their difference is pi/(2 a^n)";
        auto point = [](double a, std::vector<double> t, double l) {
            ParamSet p;
            p.set("a", a).set("t", std::move(t)).set("lambda", l);
            return p;
        };
        e.default_grid = {point(1.0, {0.5}, 0.5), point(1.0, {0.5}, 1.0), point(1.0, {0.5}, 2.0),
                          point(1.0, {0.2, 0.4, 0.6}, 1.0), point(2.0, {0.5, 1.5}, 1.0)};
        e.validate = validate_aiyar;
        e.closed_form = [](const ParamSet& p) -> cplx { return pi / (2.0 * lambda_of(p)) * aiyar_product(p); };
        e.series_form = [](const ParamSet& p, double) -> cplx {
            const Aiyar g = aiyar_of(p);
            AnalyticHandle h([g](cplx z) { return g.G(z); }, "poles at a/t_k, outside the closed unit disk", true);
            return analytic_I(h, lambda_of(p)).complex_value;
        };
        e.components = [](const ParamSet& p) {
            const Aiyar g = aiyar_of(p);
            const double l = lambda_of(p);
            const double prod = aiyar_product(p);
            const double I = pi / (2.0 * l) * prod;
            const double J = pi / 2.0 * (prod - std::pow(g.a, -static_cast<double>(g.t.size())));
            auto gc = PeriodicEvaluator::real([g](double th) { return g.circle(th).first; }, Parity::even);
            auto gs = PeriodicEvaluator::real([g](double th) { return g.circle(th).second; }, Parity::odd);
            ComponentSpec combined{"cos_minus_sin", IntegralKind::even_kernel, I - J,
                                   [gc, gs, l](const OracleConfig& cfg) {
                                       QuadratureResult a = integrate_even_kernel(gc, l, cfg);
                                       const QuadratureResult b = integrate_odd_kernel(gs, l, cfg);
                                       a.value -= b.value;
                                       a.abs_error_estimate += b.abs_error_estimate;
                                       a.periods_used = std::max(a.periods_used, b.periods_used);
                                       a.function_evals += b.function_evals;
                                       a.fell_back = a.fell_back || b.fell_back;
                                       return a;
                                   }};
            return std::vector<ComponentSpec>{even_component("cos", gc, l, I), odd_component("sin", gs, l, J),
                                              std::move(combined)};
        };
        e.plot_integrand = [](const ParamSet& p, double x) -> cplx {
            const auto [c, s] = aiyar_of(p).circle(x);
            const double l = lambda_of(p);
            return (c - x * s) / (l * l + x * x);
        };
        r.push_back(std::move(e));
    }

    // Bernoulli entries ------------------------------------------------------
    // Under x = t/(2 pi) the 1-periodic B_k({x}) becomes the 2 pi-periodic
    // Bernoulli function and lambda becomes Lambda = 2 pi lambda:
    //   int x B_k({x}) / (lambda^2 + x^2) dx = J_Lambda,
    //   int B_k({x}) / (lambda^2 + x^2) dx   = 2 pi I_Lambda.
    auto bernoulli_validate = [](const ParamSet& p) {
        require_lambda(p);
        require_integer(p, "m", 1, 8);
    };
    const ParamSpec m_spec{"m", ParamKind::integer, "integer 1 <= m <= 8"};

    {
        CatalogEntry e;
        e.id = "bernoulli-odd";
        e.params = {m_spec, lambda_spec};
        e.kind = IntegralKind::odd_kernel;
        e.reference = "int_0^inf x B_{2m-1}({x})/(lambda^2 + x^2) dx = (-1)^m (2m-1)!/(2 (2 pi)^{2m-2}) Li_{2m-1}(e^{-2 pi lambda})";
        e.default_grid = product_grid("m", {1.0, 2.0});
        e.validate = bernoulli_validate;
        e.closed_form = [](const ParamSet& p) -> cplx {
            const int m = static_cast<int>(p.real("m"));
            const double sign = m % 2 == 0 ? 1.0 : -1.0;
            return sign * factorial(2 * m - 1) / (2.0 * std::pow(two_pi, 2 * m - 2)) *
                   specfun::polylog(2 * m - 1, std::exp(-two_pi * lambda_of(p)));
        };
        e.series_form = [](const ParamSet& p, double tol) {
            const int k = 2 * static_cast<int>(p.real("m")) - 1;
            CoefficientRule c{[k](std::int64_t n) { return bernoulli_coefficient(k, n); }, "n^{-k}", bernoulli_bound(k)};
            return fourier_J(c, two_pi * lambda_of(p), tol).value;
        };
        e.components = [](const ParamSet& p) {
            const int k = 2 * static_cast<int>(p.real("m")) - 1;
            auto f = PeriodicEvaluator::real([k](double t) { return specfun::periodized_bernoulli(k, t); }, Parity::odd, {0.0});
            return std::vector<ComponentSpec>{
                odd_component("value", f, two_pi * lambda_of(p), find_entry("bernoulli-odd").closed_form(p))};
        };
        e.plot_integrand = [](const ParamSet& p, double x) -> cplx {
            const int k = 2 * static_cast<int>(p.real("m")) - 1;
            const double l = lambda_of(p);
            return x * specfun::periodized_bernoulli_unit(k, x) / (l * l + x * x);
        };
        r.push_back(std::move(e));
    }

    {
        CatalogEntry e;
        e.id = "bernoulli-even";
        e.params = {m_spec, lambda_spec};
        e.kind = IntegralKind::even_kernel;
        e.reference = "int_0^inf B_{2m}({x})/(lambda^2 + x^2) dx = (-1)^{m+1} (2m)!/(2 (2 pi)^{2m-1}) Li_{2m}(e^{-2 pi lambda}) / lambda";
        e.default_grid = product_grid("m", {1.0, 2.0});
        e.validate = bernoulli_validate;
        e.closed_form = [](const ParamSet& p) -> cplx {
            const int m = static_cast<int>(p.real("m"));
            const double sign = m % 2 == 0 ? -1.0 : 1.0;
            const double l = lambda_of(p);
            return sign * factorial(2 * m) / (2.0 * std::pow(two_pi, 2 * m - 1)) *
                   specfun::polylog(2 * m, std::exp(-two_pi * l)) / l;
        };
        e.series_form = [](const ParamSet& p, double tol) {
            const int k = 2 * static_cast<int>(p.real("m"));
            CoefficientRule c{[k](std::int64_t n) { return bernoulli_coefficient(k, n); }, "n^{-k}", bernoulli_bound(k)};
            return two_pi * fourier_I(c, two_pi * lambda_of(p), tol).value;
        };
        e.components = [](const ParamSet& p) {
            const int k = 2 * static_cast<int>(p.real("m"));
            auto f = PeriodicEvaluator::real([k](double t) { return specfun::periodized_bernoulli(k, t); }, Parity::even, {0.0});
            return std::vector<ComponentSpec>{even_component("value", f, two_pi * lambda_of(p),
                                                             find_entry("bernoulli-even").closed_form(p), two_pi)};
        };
        e.plot_integrand = [](const ParamSet& p, double x) -> cplx {
            const int k = 2 * static_cast<int>(p.real("m"));
            const double l = lambda_of(p);
            return specfun::periodized_bernoulli_unit(k, x) / (l * l + x * x);
        };
        r.push_back(std::move(e));
    }

    // ({x} - 1/2)^3 = B_3({x}) + B_1({x})/4
    {
        CatalogEntry e;
        e.id = "frac-half-cubed";
        e.params = {lambda_spec};
        e.kind = IntegralKind::odd_kernel;
        e.reference = "int_0^inf x ({x} - 1/2)^3/(lambda^2 + x^2) dx = (1/8) ln(1 - e^{-2 pi lambda}) + 3/(4 pi^2) Li_3(e^{-2 pi lambda})";
        e.default_grid = lambda_grid();
        e.validate = require_lambda;
        e.closed_form = [](const ParamSet& p) -> cplx {
            const double q = std::exp(-two_pi * lambda_of(p));
            return std::log1p(-q) / 8.0 + 3.0 / (4.0 * pi * pi) * specfun::polylog(3, q);
        };
        e.series_form = [](const ParamSet& p, double tol) {
            CoefficientRule c{[](std::int64_t n) { return bernoulli_coefficient(3, n) + 0.25 * bernoulli_coefficient(1, n); },
                              "1/n", bernoulli_bound(3) + 0.25 * bernoulli_bound(1)};
            return fourier_J(c, two_pi * lambda_of(p), tol).value;
        };
        e.components = [](const ParamSet& p) {
            auto f = PeriodicEvaluator::real(
                [](double t) {
                    const double u = specfun::fractional_part(t / two_pi) - 0.5;
                    return u * u * u;
                },
                Parity::odd, {0.0});
            return std::vector<ComponentSpec>{
                odd_component("value", f, two_pi * lambda_of(p), find_entry("frac-half-cubed").closed_form(p))};
        };
        e.plot_integrand = [](const ParamSet& p, double x) -> cplx {
            const double u = specfun::fractional_part(x) - 0.5;
            const double l = lambda_of(p);
            return x * u * u * u / (l * l + x * x);
        };
        r.push_back(std::move(e));
    }

    {
        CatalogEntry e;
        e.id = "frac-half-linear";
        e.params = {lambda_spec};
        e.kind = IntegralKind::odd_kernel;
        e.reference = "int_0^inf x ({x} - 1/2)/(lambda^2 + x^2) dx = (1/2) ln(1 - e^{-2 pi lambda})";
        e.default_grid = lambda_grid();
        e.validate = require_lambda;
        e.closed_form = [](const ParamSet& p) -> cplx { return 0.5 * std::log1p(-std::exp(-two_pi * lambda_of(p))); };
        e.series_form = [](const ParamSet& p, double tol) {
            CoefficientRule c{[](std::int64_t n) { return bernoulli_coefficient(1, n); }, "1/n", bernoulli_bound(1)};
            return fourier_J(c, two_pi * lambda_of(p), tol).value;
        };
        e.components = [](const ParamSet& p) {
            auto f = PeriodicEvaluator::real([](double t) { return specfun::fractional_part(t / two_pi) - 0.5; },
                                             Parity::odd, {0.0});
            return std::vector<ComponentSpec>{
                odd_component("value", f, two_pi * lambda_of(p), find_entry("frac-half-linear").closed_form(p))};
        };
        e.plot_integrand = [](const ParamSet& p, double x) -> cplx {
            const double l = lambda_of(p);
            return x * (specfun::fractional_part(x) - 0.5) / (l * l + x * x);
        };
        r.push_back(std::move(e));
    }

    // arctan entries: arctan(mu sin x) = 2 sum_{k odd} r^k sin(kx)/k,
    // arctan(mu cos x) = 2 sum_{k odd} (-1)^{(k-1)/2} r^k cos(kx)/k,
    // r = (sqrt(1+mu^2) - 1)/mu.
    auto arctan_validate = [](const ParamSet& p) {
        require_lambda(p);
        require_range(p, "mu", 0.0, INFINITY, true, true, "mu > 0");
    };
    auto arctan_r = [](double mu) { return (std::sqrt(1.0 + mu * mu) - 1.0) / mu; };

    {
        CatalogEntry e;
        e.id = "arctan-mu-sin";
        e.params = {{"mu", ParamKind::real, "mu > 0"}, lambda_spec};
        e.kind = IntegralKind::odd_kernel;
        e.reference = "int_0^inf x arctan(mu sin x)/(x^2 + lambda^2) dx = (pi/2) ln((mu e^lambda + sqrt(1+mu^2) - 1)/(mu e^lambda - sqrt(1+mu^2) + 1))";
        e.default_grid = product_grid("mu", {0.5, 1.0, 2.0});
        e.validate = arctan_validate;
        e.closed_form = [](const ParamSet& p) -> cplx {
            const double mu = p.real("mu");
            const double me = mu * std::exp(lambda_of(p));
            const double w = std::sqrt(1.0 + mu * mu) - 1.0;
            return pi / 2.0 * std::log((me + w) / (me - w));
        };
        e.series_form = [arctan_r](const ParamSet& p, double tol) {
            const double r = arctan_r(p.real("mu"));
            auto c = odd_harmonic_rule([r](std::int64_t k) { return std::pow(r, static_cast<double>(k)) / k; }, true,
                                       "r^k/k", r);
            return fourier_J(c, lambda_of(p), tol).value;
        };
        e.components = [](const ParamSet& p) {
            const double mu = p.real("mu");
            auto f = PeriodicEvaluator::real([mu](double t) { return std::atan(mu * std::sin(t)); }, Parity::odd);
            return std::vector<ComponentSpec>{
                odd_component("value", f, lambda_of(p), find_entry("arctan-mu-sin").closed_form(p))};
        };
        e.plot_integrand = [](const ParamSet& p, double x) -> cplx {
            const double l = lambda_of(p);
            return x * std::atan(p.real("mu") * std::sin(x)) / (x * x + l * l);
        };
        r.push_back(std::move(e));
    }

    {
        CatalogEntry e;
        e.id = "arctan-mu-cos";
        e.params = {{"mu", ParamKind::real, "mu > 0"}, lambda_spec};
        e.kind = IntegralKind::even_kernel;
        e.reference = "int_0^inf arctan(mu cos x)/(x^2 + lambda^2) dx = (pi/lambda) arctan((sqrt(1+mu^2) - 1)/(mu e^lambda))";
        e.default_grid = product_grid("mu", {0.5, 1.0, 2.0});
        e.validate = arctan_validate;
        e.closed_form = [](const ParamSet& p) -> cplx {
            const double mu = p.real("mu");
            const double l = lambda_of(p);
            return pi / l * std::atan((std::sqrt(1.0 + mu * mu) - 1.0) / (mu * std::exp(l)));
        };
        e.series_form = [arctan_r](const ParamSet& p, double tol) {
            const double r = arctan_r(p.real("mu"));
            auto c = odd_harmonic_rule(
                [r](std::int64_t k) { return odd_sign(k) * std::pow(r, static_cast<double>(k)) / k; }, false, "r^k/k", r);
            return fourier_I(c, lambda_of(p), tol).value;
        };
        e.components = [](const ParamSet& p) {
            const double mu = p.real("mu");
            auto f = PeriodicEvaluator::real([mu](double t) { return std::atan(mu * std::cos(t)); }, Parity::even);
            return std::vector<ComponentSpec>{
                even_component("value", f, lambda_of(p), find_entry("arctan-mu-cos").closed_form(p))};
        };
        e.plot_integrand = [](const ParamSet& p, double x) -> cplx {
            const double l = lambda_of(p);
            return std::atan(p.real("mu") * std::cos(x)) / (x * x + l * l);
        };
        r.push_back(std::move(e));
    }

    // log-ratio entries; series ratio s = (1 - sqrt(1 - mu^2))/mu.
    auto logratio_validate = [](const ParamSet& p) {
        require_lambda(p);
        require_range(p, "mu", -1.0, 1.0, true, true, "-1 < mu < 1");
    };
    auto logratio_s = [](double mu) { return mu == 0.0 ? 0.0 : (1.0 - std::sqrt(1.0 - mu * mu)) / mu; };

    {
        CatalogEntry e;
        e.id = "logratio-mu-cos";
        e.params = {{"mu", ParamKind::real, "-1 < mu < 1"}, lambda_spec};
        e.kind = IntegralKind::even_kernel;
        e.reference = "int_0^inf ln((1 + mu cos x)/(1 - mu cos x))/(x^2 + lambda^2) dx = "
                      "(pi/lambda) ln((mu e^lambda - sqrt(1-mu^2) + 1)/(mu e^lambda + sqrt(1-mu^2) - 1))";
        e.default_grid = product_grid("mu", {0.3, 0.7});
        e.validate = logratio_validate;
        e.closed_form = [](const ParamSet& p) -> cplx {
            const double mu = p.real("mu");
            if (mu == 0.0) return 0.0;
            const double l = lambda_of(p);
            const double me = mu * std::exp(l);
            const double w = 1.0 - std::sqrt(1.0 - mu * mu);
            return pi / l * std::log((me + w) / (me - w));
        };
        // = 4 sum_{k odd} s^k cos(kx)/k
        e.series_form = [logratio_s](const ParamSet& p, double tol) {
            const double s = logratio_s(p.real("mu"));
            auto c = odd_harmonic_rule([s](std::int64_t k) { return 2.0 * std::pow(s, static_cast<double>(k)) / k; },
                                       false, "s^k/k", 2.0 * std::abs(s));
            return fourier_I(c, lambda_of(p), tol).value;
        };
        e.components = [](const ParamSet& p) {
            const double mu = p.real("mu");
            auto f = PeriodicEvaluator::real(
                [mu](double t) {
                    const double c = mu * std::cos(t);
                    return std::log1p(c) - std::log1p(-c);
                },
                Parity::even);
            return std::vector<ComponentSpec>{
                even_component("value", f, lambda_of(p), find_entry("logratio-mu-cos").closed_form(p))};
        };
        e.plot_integrand = [](const ParamSet& p, double x) -> cplx {
            const double c = p.real("mu") * std::cos(x);
            const double l = lambda_of(p);
            return (std::log1p(c) - std::log1p(-c)) / (x * x + l * l);
        };
        r.push_back(std::move(e));
    }

    {
        CatalogEntry e;
        e.id = "logratio-mu-sin";
        e.params = {{"mu", ParamKind::real, "-1 < mu < 1"}, lambda_spec};
        e.kind = IntegralKind::odd_kernel;
        e.reference = "int_0^inf x ln((1 + mu sin x)/(1 - mu sin x))/(x^2 + lambda^2) dx = 2 pi arctan((1 - sqrt(1-mu^2))/(mu e^lambda))";
        e.default_grid = product_grid("mu", {0.3, 0.7});
        e.validate = logratio_validate;
        e.closed_form = [](const ParamSet& p) -> cplx {
            const double mu = p.real("mu");
            if (mu == 0.0) return 0.0;
            return two_pi * std::atan((1.0 - std::sqrt(1.0 - mu * mu)) / (mu * std::exp(lambda_of(p))));
        };
        // = 4 sum_{k odd} (-1)^{(k-1)/2} s^k sin(kx)/k
        e.series_form = [logratio_s](const ParamSet& p, double tol) {
            const double s = logratio_s(p.real("mu"));
            auto c = odd_harmonic_rule(
                [s](std::int64_t k) { return 2.0 * odd_sign(k) * std::pow(s, static_cast<double>(k)) / k; }, true,
                "s^k/k", 2.0 * std::abs(s));
            return fourier_J(c, lambda_of(p), tol).value;
        };
        e.components = [](const ParamSet& p) {
            const double mu = p.real("mu");
            auto f = PeriodicEvaluator::real(
                [mu](double t) {
                    const double c = mu * std::sin(t);
                    return std::log1p(c) - std::log1p(-c);
                },
                Parity::odd);
            return std::vector<ComponentSpec>{
                odd_component("value", f, lambda_of(p), find_entry("logratio-mu-sin").closed_form(p))};
        };
        e.plot_integrand = [](const ParamSet& p, double x) -> cplx {
            const double c = p.real("mu") * std::sin(x);
            const double l = lambda_of(p);
            return x * (std::log1p(c) - std::log1p(-c)) / (x * x + l * l);
        };
        r.push_back(std::move(e));
    }

    // bessel-exp-cos ---------------------------------------------------------
    {
        CatalogEntry e;
        e.id = "bessel-exp-cos";
        e.params = {{"z", ParamKind::real, "|z| <= 10"}, lambda_spec};
        e.kind = IntegralKind::even_kernel;
        e.complex_valued = true;
        e.reference = "int_0^inf e^{i z cos x}/(x^2 + lambda^2) dx = (pi/(2 lambda)) (J_0(z) + 2 sum_{n>=1} i^n J_n(z) e^{-n lambda})";
        e.default_grid = product_grid("z", {0.5, 1.0, 2.0});
        e.validate = [](const ParamSet& p) {
            require_lambda(p);
            require_range(p, "z", -10.0, 10.0, false, false, "|z| <= 10");
        };
        e.closed_form = [](const ParamSet& p) { return bessel_closed(p.real("z"), lambda_of(p)); };
        e.series_form = [](const ParamSet& p, double tol) {
            const double z = p.real("z");
            CoefficientRule c{[z](std::int64_t n) { return bessel_coefficient(z, n); }, "|J_n(z)| <= 1", 1.0};
            return fourier_I(c, lambda_of(p), tol).value;
        };
        e.components = [](const ParamSet& p) {
            const double z = p.real("z");
            const double l = lambda_of(p);
            const cplx closed = bessel_closed(z, l);
            auto re = PeriodicEvaluator::real([z](double t) { return std::cos(z * std::cos(t)); }, Parity::even);
            auto im = PeriodicEvaluator::real([z](double t) { return std::sin(z * std::cos(t)); }, Parity::even);
            return std::vector<ComponentSpec>{even_component("re", re, l, closed.real()),
                                              even_component("im", im, l, closed.imag())};
        };
        e.combine = [](const std::vector<cplx>& v) { return cplx(v.at(0).real(), v.at(1).real()); };
        e.plot_integrand = [](const ParamSet& p, double x) -> cplx {
            const double l = lambda_of(p);
            return std::exp(I_unit * p.real("z") * std::cos(x)) / (x * x + l * l);
        };
        r.push_back(std::move(e));
    }

    // log-tan2 ---------------------------------------------------------------
    {
        CatalogEntry e;
        e.id = "log-tan2";
        e.params = {lambda_spec};
        e.kind = IntegralKind::even_kernel;
        e.reference = "int_0^inf ln(tan^2 x)/(x^2 + lambda^2) dx = (pi/lambda) ln(tanh lambda)";
        e.default_grid = lambda_grid();
        e.validate = require_lambda;
        e.closed_form = [](const ParamSet& p) -> cplx {
            const double l = lambda_of(p);
            return pi / l * std::log(std::tanh(l));
        };
        // ln tan^2 x = -4 sum_{n odd} cos(2nx)/n
        e.series_form = [](const ParamSet& p, double tol) {
            CoefficientRule c{[](std::int64_t n) -> cplx {
                                  const std::int64_t k = n < 0 ? -n : n;
                                  if (k % 4 != 2) return 0.0;
                                  return -4.0 / static_cast<double>(k);
                              },
                              "1/n", 2.0};
            return fourier_I(c, lambda_of(p), tol).value;
        };
        e.components = [](const ParamSet& p) {
            auto f = PeriodicEvaluator::real(
                [](double t) {
                    const double tn = std::tan(t);
                    return std::log(tn * tn);
                },
                Parity::even, {0.0, pi / 2.0, pi, 1.5 * pi});
            return std::vector<ComponentSpec>{
                even_component("value", f, lambda_of(p), find_entry("log-tan2").closed_form(p))};
        };
        e.plot_integrand = [](const ParamSet& p, double x) -> cplx {
            auto f = PeriodicEvaluator::real(
                [](double t) {
                    const double tn = std::tan(t);
                    return std::log(tn * tn);
                },
                Parity::even, {0.0, pi / 2.0, pi, 1.5 * pi});
            return plot_even(f, lambda_of(p), x);
        };
        r.push_back(std::move(e));
    }

    std::sort(r.begin(), r.end(), [](const auto& x, const auto& y) { return x.id < y.id; });
    return r;
}

const std::vector<CatalogEntry>& registry()
{
    static const std::vector<CatalogEntry> entries = build_registry();
    return entries;
}

double relative(double abs_err, cplx closed)
{
    const double m = std::abs(closed);
    return m > 0.0 ? abs_err / m : abs_err;
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<EntryInfo> list_entries()
{
    std::vector<EntryInfo> out;
    for (const auto& e : registry()) out.push_back({e.id, e.params, e.kind, e.reference});
    return out;
}

const CatalogEntry& find_entry(const std::string& id)
{
    for (const auto& e : registry())
        if (e.id == id) return e;
    throw UnknownEntryError("unknown catalog entry: " + id);
}

ParamSet complete_params(const CatalogEntry& entry, const ParamSet& given)
{
    for (const auto& [name, _] : given.values()) {
        const bool known = std::any_of(entry.params.begin(), entry.params.end(),
                                       [&](const ParamSpec& s) { return s.name == name; });
        if (!known) throw ParameterError("entry " + entry.id + " has no parameter " + name);
    }
    ParamSet full = given;
    const ParamSet& defaults = entry.default_grid.front();
    for (const auto& spec : entry.params) {
        if (!full.has(spec.name)) full.set(spec.name, defaults.vec(spec.name));
        if (spec.kind != ParamKind::vector && full.vec(spec.name).size() != 1)
            throw ParameterError("parameter " + spec.name + " must be a single number");
    }
    entry.validate(full);
    return full;
}

cplx closed_form(const std::string& id, const ParamSet& params)
{
    const auto& e = find_entry(id);
    return e.closed_form(complete_params(e, params));
}

cplx series_form(const std::string& id, const ParamSet& params, double tol)
{
    const auto& e = find_entry(id);
    return e.series_form(complete_params(e, params), tol);
}

VerificationReport verify(const std::string& id, const ParamSet& params, double tol, const OracleConfig& cfg)
{
    if (!(tol > 0.0)) throw DomainError("tol must be positive");
    const auto& e = find_entry(id);
    VerificationReport rep;
    rep.id = id;
    rep.params = complete_params(e, params);
    rep.complex_valued = e.complex_valued;
    rep.closed = e.closed_form(rep.params);
    rep.pass = true;

    std::vector<cplx> numeric;
    for (const auto& spec : e.components(rep.params)) {
        ComponentReport c;
        c.name = spec.name;
        c.closed = spec.closed;
        try {
            c.diagnostics = spec.oracle(cfg);
            c.numeric = c.diagnostics.value;
        } catch (const ConvergenceError& err) {
            c.numeric = err.best_estimate();
            c.diagnostics.value = c.numeric;
            c.diagnostics.abs_error_estimate = err.achieved_bound();
            c.reason = err.what();
        } catch (const Error& err) {
            c.numeric = std::nan("");
            c.reason = err.what();
        }
        c.abs_err = std::abs(c.numeric - c.closed);
        c.rel_err = relative(c.abs_err, c.closed);
        c.pass = c.reason.empty() && std::isfinite(c.abs_err) &&
                 c.abs_err <= std::max(tol, tol * std::abs(c.closed));

        numeric.push_back(c.numeric);
        rep.abs_err = std::max(rep.abs_err, std::isfinite(c.abs_err) ? c.abs_err : INFINITY);
        rep.rel_err = std::max(rep.rel_err, std::isfinite(c.rel_err) ? c.rel_err : INFINITY);
        rep.pass = rep.pass && c.pass;
        rep.periods_used = std::max(rep.periods_used, c.diagnostics.periods_used);
        rep.function_evals += c.diagnostics.function_evals;
        if (!c.reason.empty() && rep.reason.empty()) rep.reason = c.name + ": " + c.reason;
        rep.components.push_back(std::move(c));
    }
    rep.numeric = e.combine ? e.combine(numeric) : numeric.front();
    return rep;
}

std::vector<PlotSample> plot_data(const std::string& id, const ParamSet& params, int points,
                                  std::optional<std::pair<double, double>> range)
{
    const auto& e = find_entry(id);
    const ParamSet full = complete_params(e, params);
    if (points <= 0) throw ParameterError("points must be positive");
    const auto [lo, hi] = range.value_or(e.plot_range);
    if (!(std::isfinite(lo) && std::isfinite(hi) && hi > lo)) throw ParameterError("range must satisfy lo < hi");

    std::vector<PlotSample> out;
    out.reserve(static_cast<std::size_t>(points));
    for (int j = 0; j < points; ++j) {
        const double x = lo + j * (hi - lo) / points;
        cplx v = e.plot_integrand(full, x);
        if (is_singular_value(v)) v = {std::nan(""), e.complex_valued ? std::nan("") : 0.0};
        out.push_back({x, v});
    }
    return out;
}

}  // namespace oscint
