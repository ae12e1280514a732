#include "oscint/closedform.hpp"

#include <cmath>
#include <sstream>

#include "oscint/errors.hpp"

namespace oscint {

namespace {

constexpr cplx I_unit{0.0, 1.0};

void require_positive(double lambda)
{
    if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("lambda must be positive");
}

void require_nonzero(double lambda)
{
    if (lambda == 0.0 || !std::isfinite(lambda)) throw DomainError("lambda must be nonzero");
}

void require_tol(double tol)
{
    if (!(tol > 0.0)) throw DomainError("tol must be positive");
}

double coefficient_bound(const CoefficientRule& c)
{
    if (c.bound) return *c.bound;
    double b = 0.0;
    for (std::int64_t n = -64; n <= 64; ++n) b = std::max(b, std::abs(c(n)));
    return b;
}

// weight(n) multiplies C_n; |weight(n)| <= weight_bound * e^{-|n| decay}.
// Sums n = -K..K with K the smallest horizon whose two-sided geometric tail
//   prefactor * 2 B weight_bound e^{-(K+1) decay} / (1 - e^{-decay})
// is below tol.
template <typename Weight>
SeriesValue sum_rule(const CoefficientRule& c, double decay, double prefactor_abs, cplx prefactor,
                     double weight_bound, double tol, Weight weight)
{
    require_tol(tol);
    const double bound = coefficient_bound(c);
    const double q = std::exp(-decay);
    const double scale = prefactor_abs * 2.0 * bound * weight_bound / (-std::expm1(-decay));

    std::int64_t horizon = 0;
    double tail = scale * q;
    if (bound > 0.0 && tail >= tol) {
        const double k = std::ceil(std::log(scale / tol) / decay) - 1.0;
        if (k > static_cast<double>(series_term_cap)) {
            // Report what the cap achieves.
            horizon = series_term_cap;
            cplx acc{};
            for (std::int64_t n = horizon; n >= 1; --n) acc += weight(n) * c(n) + weight(-n) * c(-n);
            acc += weight(0) * c(0);
            const double achieved = scale * std::exp(-decay * static_cast<double>(horizon + 1));
            std::ostringstream msg;
            msg << "series truncation horizon exceeds " << series_term_cap << " terms (lambda too small); "
                << "achieved tail bound " << achieved;
            throw ConvergenceError(msg.str(), (prefactor * acc).real(), achieved);
        }
        horizon = static_cast<std::int64_t>(std::max(0.0, k));
        tail = scale * std::exp(-decay * static_cast<double>(horizon + 1));
        while (tail >= tol) {
            ++horizon;
            tail *= q;
        }
    }
    if (bound == 0.0) tail = 0.0;

    cplx acc{};
    for (std::int64_t n = horizon; n >= 1; --n) acc += weight(n) * c(n) + weight(-n) * c(-n);
    acc += weight(0) * c(0);
    return {prefactor * acc, horizon, tail};
}

template <typename Weight>
SeriesValue sum_table(const FourierCoefficients& c, cplx prefactor, Weight weight)
{
    cplx acc{};
    for (std::int64_t n = c.max_order(); n >= 1; --n) acc += weight(n) * c[n] + weight(-n) * c[-n];
    acc += weight(0) * c[0];
    return {prefactor * acc, c.max_order(), 0.0};
}

double real_or_throw(const SeriesValue& v, double tol, const char* what)
{
    if (std::abs(v.value.imag()) > tol) {
        std::ostringstream msg;
        msg << what << ": imaginary residue " << std::abs(v.value.imag()) << " exceeds tol " << tol
            << " (integrand is not real-valued)";
        throw DomainError(msg.str());
    }
    return v.value.real();
}

}  // namespace

// --- I ---------------------------------------------------------------------

SeriesValue fourier_I(const CoefficientRule& c, double lambda, double tol)
{
    require_positive(lambda);
    const double pref = pi / (2.0 * lambda);
    return sum_rule(c, lambda, pref, pref, 1.0, tol,
                    [lambda](std::int64_t n) { return cplx(std::exp(-std::abs(static_cast<double>(n)) * lambda)); });
}

SeriesValue fourier_I(const FourierCoefficients& c, double lambda)
{
    require_positive(lambda);
    return sum_table(c, pi / (2.0 * lambda),
                     [lambda](std::int64_t n) { return cplx(std::exp(-std::abs(static_cast<double>(n)) * lambda)); });
}

// --- J ---------------------------------------------------------------------

SeriesValue fourier_J(const CoefficientRule& c, double lambda, double tol)
{
    require_positive(lambda);
    return sum_rule(c, lambda, pi / 2.0, I_unit * (pi / 2.0), 1.0, tol, [lambda](std::int64_t n) {
        return cplx(sgn(n) * std::exp(-std::abs(static_cast<double>(n)) * lambda));
    });
}

SeriesValue fourier_J(const FourierCoefficients& c, double lambda)
{
    require_positive(lambda);
    return sum_table(c, I_unit * (pi / 2.0), [lambda](std::int64_t n) {
        return cplx(sgn(n) * std::exp(-std::abs(static_cast<double>(n)) * lambda));
    });
}

// --- L ---------------------------------------------------------------------

SeriesValue series_L(const CoefficientRule& c, double lambda, double tol)
{
    require_nonzero(lambda);
    const int sl = sgn(lambda);
    return sum_rule(c, std::abs(lambda), pi, I_unit * pi, 2.0, tol, [lambda, sl](std::int64_t n) {
        return cplx((sgn(n) - sl) * std::exp(-std::abs(static_cast<double>(n) * lambda)));
    });
}

SeriesValue series_L(const FourierCoefficients& c, double lambda)
{
    require_nonzero(lambda);
    const int sl = sgn(lambda);
    return sum_table(c, I_unit * pi, [lambda, sl](std::int64_t n) {
        return cplx((sgn(n) - sl) * std::exp(-std::abs(static_cast<double>(n) * lambda)));
    });
}

// --- real wrappers -----------------------------------------------------------

double eval_I_fourier(const CoefficientRule& c, double lambda, double tol)
{
    return real_or_throw(fourier_I(c, lambda, tol), tol, "eval_I_fourier");
}

double eval_I_fourier(const FourierCoefficients& c, double lambda, double tol)
{
    require_tol(tol);
    return real_or_throw(fourier_I(c, lambda), tol, "eval_I_fourier");
}

double eval_J_fourier(const CoefficientRule& c, double lambda, double tol)
{
    return real_or_throw(fourier_J(c, lambda, tol), tol, "eval_J_fourier");
}

double eval_J_fourier(const FourierCoefficients& c, double lambda, double tol)
{
    require_tol(tol);
    return real_or_throw(fourier_J(c, lambda), tol, "eval_J_fourier");
}

cplx eval_L_series(const CoefficientRule& c, double lambda, double tol) { return series_L(c, lambda, tol).value; }

cplx eval_L_series(const FourierCoefficients& c, double lambda, double tol)
{
    require_tol(tol);
    return series_L(c, lambda).value;
}

// --- analytic engine ---------------------------------------------------------

AnalyticValue analytic_I(const AnalyticHandle& g, double lambda)
{
    require_positive(lambda);
    const cplx v = (pi / (2.0 * lambda)) * g(cplx(std::exp(-lambda), 0.0));
    return {v.real(), std::abs(v.imag()), v};
}

AnalyticValue analytic_J(const AnalyticHandle& g, double lambda)
{
    require_positive(lambda);
    const cplx v = (pi / 2.0) * (g(cplx(std::exp(-lambda), 0.0)) - g(cplx(0.0, 0.0)));
    return {v.real(), std::abs(v.imag()), v};
}

double eval_I_analytic(const AnalyticHandle& g, double lambda) { return analytic_I(g, lambda).value; }

double eval_J_analytic(const AnalyticHandle& g, double lambda) { return analytic_J(g, lambda).value; }

FourierCoefficients induced_coefficients(const AnalyticHandle& g)
{
    if (!g.series()) throw DomainError("handle carries no power series");
    const auto& a = *g.series();
    const int n = a.empty() ? 0 : static_cast<int>(a.size()) - 1;
    std::vector<cplx> c(static_cast<std::size_t>(2 * n + 1));
    for (int k = 0; k <= n && !a.empty(); ++k) c[static_cast<std::size_t>(n + k)] = a[static_cast<std::size_t>(k)];
    return FourierCoefficients(n, std::move(c), false);
}

FourierCoefficients sine_part_coefficients(const AnalyticHandle& g)
{
    if (!g.series()) throw DomainError("handle carries no power series");
    const auto& a = *g.series();
    const int n = a.empty() ? 0 : static_cast<int>(a.size()) - 1;
    std::vector<cplx> c(static_cast<std::size_t>(2 * n + 1));
    for (int k = 1; k <= n; ++k) {
        const cplx v = a[static_cast<std::size_t>(k)] / (2.0 * I_unit);
        c[static_cast<std::size_t>(n + k)] = v;
        c[static_cast<std::size_t>(n - k)] = -v;
    }
    return FourierCoefficients(n, std::move(c), g.real_coefficients());
}

// --- recombination -----------------------------------------------------------

cplx recombine(cplx I, cplx J, double lambda) { return 2.0 * (J - I_unit * lambda * I); }

IJPair split_L(cplx L_plus, cplx L_minus, double lambda)
{
    require_positive(lambda);
    return {I_unit * (L_plus - L_minus) / (4.0 * lambda), (L_plus + L_minus) / 4.0};
}

}  // namespace oscint
