#pragma once

// Brute-force quadrature for the half-line Poisson-kernel integrals and the
// principal value, independent of any Fourier data.
//
// Every integral is cut into whole periods [2 pi k, 2 pi (k+1)].  One
// reference period is covered by Gauss-Legendre panels, refined
// geometrically toward declared singularities and the period ends, so the
// integrand is sampled once and reused for every period.  Partial sums over
// K = K0, 2 K0, ..., K0 2^depth periods are Richardson-extrapolated in 1/K:
// the per-period contribution decays like k^-2 and admits an expansion in
// powers of 1/k.
//
// Each result is computed twice, with the panel rule and with every panel
// bisected; the bisected value is returned and the difference, plus the
// extrapolation error and a rounding floor, is the error estimate.

#include <span>
#include <vector>

#include "oscint/core.hpp"

namespace oscint {

struct OracleConfig {
    double tol = 1e-8;              // target absolute error
    int max_periods = 2000;
    int nodes_per_period = 64;      // base nodes; grouped into panels of panel_order
    int extrapolation_depth = 6;
    int pv_truncation_periods = 500;

    int panel_order = 16;
    int grading_levels = 14;
    double grading_ratio = 0.15;
    int first_window = 4;           // K0, raised for large lambda
};

// Throws DomainError unless all sizes are positive and nodes_per_period is even.
void validate(const OracleConfig& cfg);

// int_0^inf f_e(t) / (lambda^2 + t^2) dt
QuadratureResult integrate_even_kernel(const PeriodicEvaluator& f_e, double lambda, const OracleConfig& cfg = {});

// int_0^inf t f_o(t) / (lambda^2 + t^2) dt, evaluated as
// int_0^inf (t^2 - lambda^2) / (lambda^2 + t^2)^2 F(t) dt with F(x) = int_0^x f_o.
// F is periodic because f_o has zero mean; it vanishes at every 2 pi k, so
// the integration-by-parts boundary term drops out at each truncation.
QuadratureResult integrate_odd_kernel(const PeriodicEvaluator& f_o, double lambda, const OracleConfig& cfg = {});

// (1/lambda) int_0^{pi/2} g(lambda tan x) dx, with panels in x between the
// images x_k = atan(2 pi k / lambda) of the period boundaries.
QuadratureResult integrate_tan_form(const PeriodicEvaluator& g, double lambda, const OracleConfig& cfg = {});

// lim_{K->inf} int_{-2 pi K}^{2 pi K} f(t) / (t + i lambda) dt
QuadratureResult integrate_principal_value(const PeriodicEvaluator& f, double lambda,
                                           const OracleConfig& cfg = {});

// (1/2) int_0^{2 pi} cot((t + i lambda)/2) f(t) dt
QuadratureResult integrate_cotangent_form(const PeriodicEvaluator& f, double lambda,
                                          const OracleConfig& cfg = {});

struct PrincipalValueCheck {
    QuadratureResult truncated;
    QuadratureResult cotangent;
    double disagreement = 0.0;
    bool nodes_doubled = false;
};

// Runs both principal-value oracles; if they disagree by more than cfg.tol
// the node count is doubled once and both are rerun.
PrincipalValueCheck principal_value_crosscheck(const PeriodicEvaluator& f, double lambda,
                                               const OracleConfig& cfg = {});

// ---------------------------------------------------------------------------
// Richardson extrapolation
// ---------------------------------------------------------------------------

template <typename T>
struct Extrapolation {
    T limit{};
    double error_estimate = 0.0;
    bool fell_back = false;
};

// Polynomial extrapolation of values(h) to h = 0 (Neville).  h must be
// strictly decreasing and positive.  The error estimate is the difference
// between the extrapolant through all points and the one through all but
// the coarsest.  When successive corrections grow (instability) the finest
// raw value is returned with a 1/h tail bound and fell_back set.
Extrapolation<double> richardson_extrapolate(std::span<const double> h, std::span<const double> values);
Extrapolation<cplx> richardson_extrapolate(std::span<const double> h, std::span<const cplx> values);

// partial_sums[k-1] = S_k.  Extrapolates in 1/k from the last depth+1 sums;
// sign-alternating increments switch to the even-indexed subsequence.
Extrapolation<double> richardson_limit(std::span<const double> partial_sums, int depth);

}  // namespace oscint
