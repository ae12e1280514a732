#include "oscint/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "oscint/errors.hpp"

namespace oscint {

FourierCoefficients::FourierCoefficients(int max_order, std::vector<cplx> coeffs, bool real_signal)
    : max_order_(max_order), coeffs_(std::move(coeffs)), real_signal_(real_signal)
{
    if (max_order_ < 0) throw DomainError("max_order must be nonnegative");
    if (coeffs_.size() != static_cast<std::size_t>(2 * max_order_ + 1))
        throw DomainError("coefficient table must hold 2N+1 entries");
}

FourierCoefficients FourierCoefficients::from_rule(int max_order, const std::function<cplx(std::int64_t)>& rule,
                                                   bool real_signal)
{
    std::vector<cplx> c(static_cast<std::size_t>(2 * max_order + 1));
    for (int n = -max_order; n <= max_order; ++n) c[static_cast<std::size_t>(n + max_order)] = rule(n);
    return FourierCoefficients(max_order, std::move(c), real_signal);
}

double FourierCoefficients::conjugate_symmetry_defect() const noexcept
{
    double worst = 0.0;
    for (int n = 0; n <= max_order_; ++n)
        worst = std::max(worst, std::abs((*this)[-n] - std::conj((*this)[n])));
    return worst;
}

double FourierCoefficients::max_abs() const noexcept
{
    double m = 0.0;
    for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

FourierCoefficients to_fourier(const CosSinSeries& s)
{
    const int n_max = static_cast<int>(std::max(s.a.size(), s.b.size()));
    std::vector<cplx> c(static_cast<std::size_t>(2 * n_max + 1));
    c[static_cast<std::size_t>(n_max)] = s.a0 / 2.0;
    for (int n = 1; n <= n_max; ++n) {
        const double an = n <= static_cast<int>(s.a.size()) ? s.a[static_cast<std::size_t>(n - 1)] : 0.0;
        const double bn = n <= static_cast<int>(s.b.size()) ? s.b[static_cast<std::size_t>(n - 1)] : 0.0;
        c[static_cast<std::size_t>(n_max + n)] = cplx(an, -bn) / 2.0;
        c[static_cast<std::size_t>(n_max - n)] = cplx(an, bn) / 2.0;
    }
    return FourierCoefficients(n_max, std::move(c), true);
}

CosSinSeries to_cos_sin(const FourierCoefficients& c, double tol)
{
    const double defect = c.conjugate_symmetry_defect();
    if (defect > tol)
        throw ParityError("coefficient table is not conjugate-symmetric (defect " + std::to_string(defect) + ")");

    CosSinSeries s;
    s.a0 = 2.0 * c[0].real();
    for (int n = 1; n <= c.max_order(); ++n) {
        s.a.push_back((c[n] + c[-n]).real());
        s.b.push_back((cplx(0, 1) * (c[n] - c[-n])).real());
    }
    return s;
}

// ---------------------------------------------------------------------------

AnalyticHandle::AnalyticHandle(std::function<cplx(cplx)> eval, std::string domain_note, bool real_coefficients,
                               std::optional<std::vector<cplx>> series)
    : eval_(std::move(eval)),
      domain_note_(std::move(domain_note)),
      real_coefficients_(real_coefficients),
      series_(std::move(series))
{
}

AnalyticHandle polynomial_handle(std::vector<double> coeffs)
{
    std::vector<cplx> series(coeffs.begin(), coeffs.end());
    auto eval = [c = std::move(coeffs)](cplx z) {
        cplx acc{};
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
        return acc;
    };
    return AnalyticHandle(std::move(eval), "entire (polynomial)", true, std::move(series));
}

double series_agreement_defect(const AnalyticHandle& g, int points, std::uint64_t seed)
{
    if (!g.series()) throw DomainError("handle carries no power series");
    const auto& a = *g.series();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> radius(0.0, 1.0), angle(0.0, two_pi);
    double worst = 0.0;
    for (int i = 0; i < points; ++i) {
        const cplx z = std::polar(std::sqrt(radius(rng)), angle(rng));
        cplx acc{};
        for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * z + *it;
        worst = std::max(worst, std::abs(g(z) - acc));
    }
    return worst;
}

// ---------------------------------------------------------------------------

const char* to_string(Parity p) noexcept
{
    switch (p) {
        case Parity::even: return "even";
        case Parity::odd: return "odd";
        case Parity::none: return "none";
    }
    return "none";
}

double wrap_period(double t) noexcept
{
    double r = std::fmod(t, two_pi);
    if (r < 0) r += two_pi;
    if (r >= two_pi) r = 0.0;
    return r;
}

namespace {

std::vector<double> normalize_points(std::vector<double> pts)
{
    for (auto& p : pts) p = wrap_period(p);
    std::sort(pts.begin(), pts.end());
    std::vector<double> out;
    for (double p : pts) {
        if (out.empty() || p - out.back() > 1e-13) out.push_back(p);
    }
    // 2pi - tiny wraps onto 0.
    if (out.size() > 1 && two_pi - out.back() < 1e-13) out.pop_back();
    return out;
}

}  // namespace

PeriodicEvaluator::PeriodicEvaluator(std::function<cplx(double)> fn, Parity parity, std::vector<double> singularities,
                                     bool real_valued)
    : fn_(std::move(fn)), parity_(parity), singularities_(normalize_points(std::move(singularities))),
      real_valued_(real_valued)
{
}

PeriodicEvaluator PeriodicEvaluator::real(std::function<double(double)> fn, Parity parity,
                                          std::vector<double> singularities)
{
    return PeriodicEvaluator([f = std::move(fn)](double t) { return cplx(f(t), 0.0); }, parity,
                             std::move(singularities), true);
}

double PeriodicEvaluator::distance_to_singularity(double t) const noexcept
{
    const double w = wrap_period(t);
    double best = std::numeric_limits<double>::infinity();
    for (double s : singularities_) {
        const double d = std::abs(w - s);
        best = std::min({best, d, two_pi - d});
    }
    return best;
}

double periodicity_defect(const PeriodicEvaluator& f, int samples, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-20.0, 20.0);
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double t = u(rng);
        if (f.distance_to_singularity(t) < 1e-6) continue;
        worst = std::max(worst, std::abs(f(t + two_pi) - f(t)));
    }
    return worst;
}

double parity_defect(const PeriodicEvaluator& f, int samples, std::uint64_t seed)
{
    if (f.parity() == Parity::none) return 0.0;
    const double sign = f.parity() == Parity::even ? 1.0 : -1.0;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-20.0, 20.0);
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double t = u(rng);
        if (f.distance_to_singularity(t) < 1e-6) continue;
        worst = std::max(worst, std::abs(f(-t) - sign * f(t)));
    }
    return worst;
}

// ---------------------------------------------------------------------------

std::pair<PeriodicEvaluator, PeriodicEvaluator> parity_decompose(const PeriodicEvaluator& f)
{
    // Singular points of f_e, f_o are those of f together with their mirrors.
    std::vector<double> sing = f.singularities();
    for (double s : f.singularities()) sing.push_back(-s);

    auto part = [f](double t, double sign) -> cplx {
        const cplx a = f(t);
        const cplx b = f(-t);
        if (is_singular_value(a) || is_singular_value(b)) return {std::nan(""), std::nan("")};
        return (a + sign * b) / 2.0;
    };
    PeriodicEvaluator even([part](double t) { return part(t, 1.0); }, Parity::even, sing, f.real_valued());
    PeriodicEvaluator odd([part](double t) { return part(t, -1.0); }, Parity::odd, sing, f.real_valued());
    return {std::move(even), std::move(odd)};
}

std::pair<PeriodicEvaluator, PeriodicEvaluator> circle_components(const AnalyticHandle& g)
{
    auto gc = [g](double th) {
        return (g(std::polar(1.0, th)) + g(std::polar(1.0, -th))) / 2.0;
    };
    auto gs = [g](double th) {
        return (g(std::polar(1.0, th)) - g(std::polar(1.0, -th))) / cplx(0.0, 2.0);
    };
    const bool real = g.real_coefficients();
    return {PeriodicEvaluator(gc, Parity::even, {}, real), PeriodicEvaluator(gs, Parity::odd, {}, real)};
}

}  // namespace oscint
