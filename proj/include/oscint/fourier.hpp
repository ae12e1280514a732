#pragma once

// Fourier coefficients of a 2pi-periodic callable from uniform samples.

#include <optional>

#include "oscint/core.hpp"

namespace oscint {

struct SamplingPlan {
    int sample_count = 4096;  // M, a power of two
    int max_order = 32;       // N, with 2N+1 <= M
    // Grid shift in (0, 2pi/M); half a step when unset, so t = 0 is never sampled.
    std::optional<double> offset;

    double resolved_offset() const { return offset.value_or(pi / sample_count); }
};

// Throws DomainError on an inconsistent plan.
void validate(const SamplingPlan& plan);

// C_n ~ (1/M) sum_j f(t_j) e^{-i n t_j}, t_j = offset + 2 pi j / M, |n| <= N.
// Exact to rounding for trigonometric polynomials of degree < M/2.
// Throws SamplingError when a node hits a declared singularity.
FourierCoefficients estimate_coefficients(const PeriodicEvaluator& f, const SamplingPlan& plan);

// max |f(t) - sum_n C_n e^{int}| over `probes` points, skipping points within
// `exclusion` of a declared singularity.
double residual_check(const PeriodicEvaluator& f, const FourierCoefficients& c, int probes,
                      double exclusion = 0.25);

// Residual above which estimated tables are refused for closed-form use.
inline constexpr double residual_gate = 1e-2;

}  // namespace oscint
