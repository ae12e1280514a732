#pragma once

// Domain types shared by the closed-form engines, the quadrature oracle and
// the catalog: coefficient tables, analytic handles, 2pi-periodic integrand
// pieces and quadrature results.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace oscint {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

// Looser of absolute and relative, matching the verification pass rule.
inline constexpr double default_tolerance = 1e-7;

inline bool approx_equal(double actual, double expected, double tol = default_tolerance)
{
    const double err = std::abs(actual - expected);
    return err <= std::max(tol, tol * std::abs(expected));
}

inline bool approx_equal(cplx actual, cplx expected, double tol = default_tolerance)
{
    const double err = std::abs(actual - expected);
    return err <= std::max(tol, tol * std::abs(expected));
}

// sgn with sgn(0) == 0 exactly.
template <typename T>
constexpr int sgn(T x)
{
    return (T(0) < x) - (x < T(0));
}

// ---------------------------------------------------------------------------
// FourierCoefficients: C_n for |n| <= N, zero outside.
// ---------------------------------------------------------------------------
class FourierCoefficients {
public:
    FourierCoefficients() = default;

    // coeffs[n + N] holds C_n; size must be 2N+1.
    FourierCoefficients(int max_order, std::vector<cplx> coeffs, bool real_signal = false);

    static FourierCoefficients from_rule(int max_order, const std::function<cplx(std::int64_t)>& rule,
                                         bool real_signal = false);

    int max_order() const noexcept { return max_order_; }
    bool real_signal() const noexcept { return real_signal_; }
    std::span<const cplx> data() const noexcept { return coeffs_; }

    cplx operator[](std::int64_t n) const noexcept
    {
        if (n < -max_order_ || n > max_order_) return {};
        return coeffs_[static_cast<std::size_t>(n + max_order_)];
    }

    // max_n |C_{-n} - conj(C_n)|
    double conjugate_symmetry_defect() const noexcept;

    double max_abs() const noexcept;

private:
    int max_order_ = 0;
    std::vector<cplx> coeffs_{cplx{}};
    bool real_signal_ = false;
};

// a0/2 + sum a_n cos(nt) + b_n sin(nt); a[0] is a_1, b[0] is b_1.
struct CosSinSeries {
    double a0 = 0.0;
    std::vector<double> a;
    std::vector<double> b;
};

FourierCoefficients to_fourier(const CosSinSeries& series);

// Throws ParityError when the table is not conjugate-symmetric to within tol.
CosSinSeries to_cos_sin(const FourierCoefficients& coeffs, double tol = 1e-12);

// ---------------------------------------------------------------------------
// AnalyticHandle: G analytic on a domain containing the closed unit disk.
// Analyticity itself is trusted, not checked.
// ---------------------------------------------------------------------------
class AnalyticHandle {
public:
    AnalyticHandle(std::function<cplx(cplx)> eval, std::string domain_note, bool real_coefficients = false,
                   std::optional<std::vector<cplx>> series = std::nullopt);

    cplx operator()(cplx z) const { return eval_(z); }

    const std::optional<std::vector<cplx>>& series() const noexcept { return series_; }
    const std::string& domain_note() const noexcept { return domain_note_; }
    bool real_coefficients() const noexcept { return real_coefficients_; }

private:
    std::function<cplx(cplx)> eval_;
    std::string domain_note_;
    bool real_coefficients_;
    std::optional<std::vector<cplx>> series_;
};

// Polynomial G(z) = sum coeffs[k] z^k, evaluated by Horner; series attached.
AnalyticHandle polynomial_handle(std::vector<double> coeffs);

// Largest |G(z) - sum_{k<=M} a_k z^k| over `points` pseudo-random z with |z| <= 1.
// Requires a series.
double series_agreement_defect(const AnalyticHandle& g, int points, std::uint64_t seed = 7);

// ---------------------------------------------------------------------------
// PeriodicEvaluator: a 2pi-periodic integrand piece with declared
// integrable singularities.  Evaluating at a singular point yields a
// non-finite value (the singularity marker) rather than throwing.
// ---------------------------------------------------------------------------
enum class Parity { even, odd, none };

const char* to_string(Parity p) noexcept;

class PeriodicEvaluator {
public:
    static constexpr double period = two_pi;

    PeriodicEvaluator(std::function<cplx(double)> fn, Parity parity, std::vector<double> singularities = {},
                      bool real_valued = false);

    // Convenience for real-valued integrands.
    static PeriodicEvaluator real(std::function<double(double)> fn, Parity parity,
                                  std::vector<double> singularities = {});

    cplx operator()(double t) const { return fn_(t); }

    Parity parity() const noexcept { return parity_; }
    bool real_valued() const noexcept { return real_valued_; }

    // Sorted, deduplicated, reduced into [0, 2pi).
    const std::vector<double>& singularities() const noexcept { return singularities_; }

    // Distance from t to the nearest declared singularity, modulo 2pi.
    double distance_to_singularity(double t) const noexcept;

private:
    std::function<cplx(double)> fn_;
    Parity parity_;
    std::vector<double> singularities_;
    bool real_valued_;
};

inline bool is_singular_value(cplx v) noexcept
{
    return !std::isfinite(v.real()) || !std::isfinite(v.imag());
}

// Reduce t into [0, 2pi).
double wrap_period(double t) noexcept;

// Sampled invariant checks; points within 1e-6 of a singularity are skipped.
double periodicity_defect(const PeriodicEvaluator& f, int samples, std::uint64_t seed = 11);
double parity_defect(const PeriodicEvaluator& f, int samples, std::uint64_t seed = 13);

// ---------------------------------------------------------------------------
// QuadratureResult
// ---------------------------------------------------------------------------
struct QuadratureResult {
    cplx value{};
    double abs_error_estimate = 0.0;
    int periods_used = 0;
    int extrapolation_order = 0;
    std::int64_t function_evals = 0;
    // Max spread of the raw truncated values over the last extrapolation
    // window (zero for single-period forms).
    double oscillation_amplitude = 0.0;
    // Extrapolation became unstable and the raw partial sum was used.
    bool fell_back = false;
};

// ---------------------------------------------------------------------------
// Decompositions
// ---------------------------------------------------------------------------

// f_e(t) = (f(t) + f(-t))/2, f_o(t) = (f(t) - f(-t))/2.
std::pair<PeriodicEvaluator, PeriodicEvaluator> parity_decompose(const PeriodicEvaluator& f);

// g_c(th) = (G(e^{i th}) + G(e^{-i th}))/2, g_s(th) = (G(e^{i th}) - G(e^{-i th}))/(2i).
std::pair<PeriodicEvaluator, PeriodicEvaluator> circle_components(const AnalyticHandle& g);

}  // namespace oscint
