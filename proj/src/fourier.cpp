#include "oscint/fourier.hpp"

#include <cmath>
#include <sstream>

#include "oscint/errors.hpp"

namespace oscint {

void validate(const SamplingPlan& plan)
{
    const int m = plan.sample_count;
    if (m < 2 || (m & (m - 1)) != 0) throw DomainError("sample_count must be a power of two");
    if (plan.max_order < 0 || 2 * plan.max_order + 1 > m) throw DomainError("max_order must satisfy 2N+1 <= M");
    const double off = plan.resolved_offset();
    if (!(off > 0.0) || !(off < two_pi / m)) throw DomainError("offset must lie in (0, 2pi/M)");
}

FourierCoefficients estimate_coefficients(const PeriodicEvaluator& f, const SamplingPlan& plan)
{
    validate(plan);
    const int m = plan.sample_count;
    const int n_max = plan.max_order;
    const double off = plan.resolved_offset();

    std::vector<double> nodes(static_cast<std::size_t>(m));
    std::vector<cplx> values(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        const double t = off + two_pi * j / m;
        if (f.distance_to_singularity(t) < 1e-12) {
            std::ostringstream msg;
            msg << "sampling node t = " << t << " coincides with a declared singularity";
            throw SamplingError(msg.str(), t);
        }
        nodes[static_cast<std::size_t>(j)] = t;
        values[static_cast<std::size_t>(j)] = f(t);
    }

    std::vector<cplx> c(static_cast<std::size_t>(2 * n_max + 1));
    for (int n = -n_max; n <= n_max; ++n) {
        cplx acc{};
        for (int j = 0; j < m; ++j) {
            // Reduce the phase before the trig call to keep it accurate for large n.
            const double phase = std::fmod(static_cast<double>(n) * nodes[static_cast<std::size_t>(j)], two_pi);
            acc += values[static_cast<std::size_t>(j)] * std::polar(1.0, -phase);
        }
        c[static_cast<std::size_t>(n + n_max)] = acc / static_cast<double>(m);
    }
    return FourierCoefficients(n_max, std::move(c), f.real_valued());
}

double residual_check(const PeriodicEvaluator& f, const FourierCoefficients& c, int probes, double exclusion)
{
    const double golden = 0.6180339887498949;
    double worst = 0.0;
    for (int p = 0; p < probes; ++p) {
        const double t = two_pi * (p + golden) / probes;
        if (f.distance_to_singularity(t) < exclusion) continue;
        cplx s{};
        for (int n = -c.max_order(); n <= c.max_order(); ++n) s += c[n] * std::polar(1.0, n * t);
        worst = std::max(worst, std::abs(f(t) - s));
    }
    return worst;
}

}  // namespace oscint
