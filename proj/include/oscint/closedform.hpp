#pragma once

// Exact evaluation of
//   I_lambda(f) = int_0^inf f_e(t) / (lambda^2 + t^2) dt
//   J_lambda(f) = int_0^inf t f_o(t) / (lambda^2 + t^2) dt
//   L_lambda(f) = p.v. int_{-inf}^{inf} f(t) / (t + i lambda) dt
// from the Fourier coefficients C_n(f) of a 2pi-periodic f, or from an
// analytic G with f(theta) = G(e^{i theta}):
//   I = pi/(2 lambda) sum_n e^{-|n| lambda} C_n          = pi/(2 lambda) G(e^{-lambda})
//   J = (i pi/2)      sum_n sgn(n) e^{-|n| lambda} C_n   = pi/2 (G(e^{-lambda}) - G(0))
//   L = i pi sum_n (sgn(n) - sgn(lambda)) e^{-|n lambda|} C_n = 2 (J - i lambda I)

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "oscint/core.hpp"

namespace oscint {

// Closed-form rule n -> C_n for an infinite coefficient family.
struct CoefficientRule {
    std::function<cplx(std::int64_t)> rule;
    std::string decay_note;
    // sup_n |C_n|; when absent the engine uses max |C_n| over |n| <= 64.
    std::optional<double> bound;

    cplx operator()(std::int64_t n) const { return rule(n); }
};

// Truncated-series value: `terms` is the largest |n| summed, `tail_bound`
// the rigorous geometric bound on what was dropped (already scaled by the
// outer prefactor).
struct SeriesValue {
    cplx value{};
    std::int64_t terms = 0;
    double tail_bound = 0.0;
};

inline constexpr std::int64_t series_term_cap = 1'000'000;

// Complex-valued forms, valid for complex f.
SeriesValue fourier_I(const CoefficientRule& c, double lambda, double tol);
SeriesValue fourier_I(const FourierCoefficients& c, double lambda);
SeriesValue fourier_J(const CoefficientRule& c, double lambda, double tol);
SeriesValue fourier_J(const FourierCoefficients& c, double lambda);
SeriesValue series_L(const CoefficientRule& c, double lambda, double tol);
SeriesValue series_L(const FourierCoefficients& c, double lambda);

// Real-valued wrappers; throw DomainError when the imaginary residue of the
// result exceeds tol (the integrand was not real).
double eval_I_fourier(const CoefficientRule& c, double lambda, double tol);
double eval_I_fourier(const FourierCoefficients& c, double lambda, double tol);
double eval_J_fourier(const CoefficientRule& c, double lambda, double tol);
double eval_J_fourier(const FourierCoefficients& c, double lambda, double tol);

cplx eval_L_series(const CoefficientRule& c, double lambda, double tol);
cplx eval_L_series(const FourierCoefficients& c, double lambda, double tol);

// Analytic-function engine.  The real part is the integral for real-coefficient
// G; imag_residue is |Im| of the complex value.
struct AnalyticValue {
    double value = 0.0;
    double imag_residue = 0.0;
    cplx complex_value{};
};

AnalyticValue analytic_I(const AnalyticHandle& g, double lambda);
AnalyticValue analytic_J(const AnalyticHandle& g, double lambda);

double eval_I_analytic(const AnalyticHandle& g, double lambda);
double eval_J_analytic(const AnalyticHandle& g, double lambda);

// C_n = a_n for 0 <= n <= deg, zero otherwise.  Requires a series.
FourierCoefficients induced_coefficients(const AnalyticHandle& g);

// Table of g_s(t) = sum_{n>=1} a_n sin(nt), the circle component whose J
// eval_J_analytic returns: C_{+-n} = +-a_n / (2i).  Requires a series.
FourierCoefficients sine_part_coefficients(const AnalyticHandle& g);

// L_lambda = 2 (J - i lambda I).
cplx recombine(cplx I, cplx J, double lambda);

struct IJPair {
    cplx I;
    cplx J;
};

// I = i (L_+ - L_-) / (4 lambda), J = (L_+ + L_-) / 4.
IJPair split_L(cplx L_plus, cplx L_minus, double lambda);

}  // namespace oscint
