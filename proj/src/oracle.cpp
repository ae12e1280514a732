#include "oscint/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "oscint/errors.hpp"
#include "oscint/gauss_legendre.hpp"

namespace oscint {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr cplx I_unit{0.0, 1.0};

// ---------------------------------------------------------------------------
// Reference-period layout
// ---------------------------------------------------------------------------

struct Segment {
    double a;
    double b;
    bool grade_left;
    bool grade_right;
};

bool near(double x, double y) { return std::abs(x - y) < 1e-12; }

// Breakpoints: uniform base panels plus every singular point.  Graded ends:
// singular points (0 also grades 2 pi) and, when grade_ends, both period ends.
std::vector<Segment> reference_segments(std::span<const double> singular, const OracleConfig& cfg, bool grade_ends)
{
    const int base = std::max(1, cfg.nodes_per_period / cfg.panel_order);
    std::vector<double> bps;
    for (int j = 0; j <= base; ++j) bps.push_back(two_pi * j / base);
    std::vector<double> graded;
    for (double s : singular) {
        const double w = wrap_period(s);
        bps.push_back(w);
        graded.push_back(w);
        if (near(w, 0.0)) graded.push_back(two_pi);
    }
    if (grade_ends) {
        graded.push_back(0.0);
        graded.push_back(two_pi);
    }
    std::sort(bps.begin(), bps.end());
    std::vector<double> uniq;
    for (double p : bps)
        if (uniq.empty() || p - uniq.back() > 1e-12) uniq.push_back(p);

    auto is_graded = [&](double p) {
        return std::any_of(graded.begin(), graded.end(), [p](double g) { return near(p, g); });
    };
    std::vector<Segment> segs;
    for (std::size_t i = 0; i + 1 < uniq.size(); ++i)
        segs.push_back({uniq[i], uniq[i + 1], is_graded(uniq[i]), is_graded(uniq[i + 1])});
    return segs;
}

std::vector<Panel> segment_panels(const Segment& s, double a, double b, const OracleConfig& cfg, bool bisect)
{
    auto panels = graded_panels(a, b, s.grade_left, s.grade_right, cfg.grading_levels, cfg.grading_ratio);
    if (!bisect) return panels;
    std::vector<Panel> halves;
    halves.reserve(2 * panels.size());
    for (const auto& p : panels) {
        const double m = 0.5 * (p.a + p.b);
        halves.push_back({p.a, m});
        halves.push_back({m, p.b});
    }
    return halves;
}

struct NodeSet {
    std::vector<Panel> panels;
    std::vector<double> x;
    std::vector<double> w;
};

NodeSet build_nodes(std::span<const Segment> segs, const OracleConfig& cfg, bool bisect)
{
    NodeSet ns;
    for (const auto& s : segs) {
        auto p = segment_panels(s, s.a, s.b, cfg, bisect);
        ns.panels.insert(ns.panels.end(), p.begin(), p.end());
    }
    append_panel_nodes(gauss_legendre_cached(cfg.panel_order), ns.panels, ns.x, ns.w);
    return ns;
}

cplx checked(const PeriodicEvaluator& f, double t)
{
    const cplx v = f(t);
    if (is_singular_value(v)) {
        std::ostringstream msg;
        msg << "integrand is not finite at quadrature node t = " << t
            << "; declare the singularity so nodes avoid it";
        throw DomainError(msg.str());
    }
    return v;
}

// ---------------------------------------------------------------------------
// Period summation with Richardson extrapolation over K0 2^j periods
// ---------------------------------------------------------------------------

struct WindowPlan {
    int k0;
    int depth;
    int periods() const { return k0 << depth; }
};

WindowPlan plan_windows(double lambda, int cap, const OracleConfig& cfg)
{
    WindowPlan plan{cfg.first_window, cfg.extrapolation_depth};
    // Keep lambda / (2 pi K0) small so the 1/K expansion is well inside its range.
    while (plan.k0 < std::abs(lambda)) plan.k0 *= 2;
    while (plan.depth > 2 && plan.periods() > cap) --plan.depth;
    if (plan.periods() > cap) {
        std::ostringstream msg;
        msg << "period cap " << cap << " is too small for lambda = " << lambda;
        throw ConvergenceError(msg.str(), std::nan(""), std::numeric_limits<double>::infinity());
    }
    return plan;
}

struct SumOutcome {
    Extrapolation<cplx> ex;
    std::vector<cplx> windows;
    double abs_sum = 0.0;
    int periods = 0;
};

// contrib(k, abs_acc) returns the contribution of period k and adds the sum
// of magnitudes of its terms to abs_acc.
template <typename Contribution>
SumOutcome extrapolated_sum(const WindowPlan& plan, Contribution&& contrib)
{
    SumOutcome out;
    std::vector<double> h;
    cplx partial{};
    int next = plan.k0;
    for (int k = 0; k < plan.periods(); ++k) {
        partial += contrib(k, out.abs_sum);
        if (k + 1 == next) {
            h.push_back(1.0 / next);
            out.windows.push_back(partial);
            next *= 2;
        }
    }
    out.periods = plan.periods();
    out.ex = richardson_extrapolate(h, out.windows);
    return out;
}

double rounding_floor(double abs_sum) { return 1e3 * eps * abs_sum; }

// Runs `compute(bisect, plan)` for the panel rule and its bisection and
// combines them.  Widens K0 while the extrapolation error dominates.
template <typename Compute>
QuadratureResult two_rule_result(const char* what, double lambda, int cap, const OracleConfig& cfg,
                                 Compute&& compute)
{
    WindowPlan plan = plan_windows(lambda, cap, cfg);
    for (;;) {
        std::int64_t evals = 0;
        const SumOutcome coarse = compute(false, plan, evals);
        const SumOutcome fine = compute(true, plan, evals);

        const double quad_err = std::abs(fine.ex.limit - coarse.ex.limit);
        const double estimate = quad_err + fine.ex.error_estimate + rounding_floor(fine.abs_sum);

        QuadratureResult r;
        r.value = fine.ex.limit;
        r.abs_error_estimate = estimate;
        r.periods_used = fine.periods;
        r.extrapolation_order = plan.depth;
        r.function_evals = evals;
        r.fell_back = fine.ex.fell_back;
        for (const auto& w : fine.windows) r.oscillation_amplitude = std::max(r.oscillation_amplitude, std::abs(w - r.value));

        if (estimate <= cfg.tol) return r;

        const bool tail_dominated = fine.ex.error_estimate > quad_err;
        if (tail_dominated && 2 * plan.periods() <= cap) {
            plan.k0 *= 2;
            continue;
        }
        std::ostringstream msg;
        msg << what << " did not reach tol " << cfg.tol << " (estimate " << estimate << " after "
            << r.periods_used << " periods)";
        throw ConvergenceError(msg.str(), r.value.real(), estimate);
    }
}

void require_positive(double lambda)
{
    if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("lambda must be positive");
}

void require_nonzero(double lambda)
{
    if (lambda == 0.0 || !std::isfinite(lambda)) throw DomainError("lambda must be nonzero");
}

}  // namespace

// ---------------------------------------------------------------------------

void validate(const OracleConfig& cfg)
{
    if (!(cfg.tol > 0.0)) throw DomainError("oracle tol must be positive");
    if (cfg.max_periods <= 0 || cfg.nodes_per_period <= 0 || cfg.extrapolation_depth <= 0 ||
        cfg.pv_truncation_periods <= 0 || cfg.panel_order <= 0 || cfg.grading_levels < 0 ||
        cfg.first_window <= 0)
        throw DomainError("oracle configuration values must be positive");
    if (cfg.nodes_per_period % 2 != 0) throw DomainError("nodes_per_period must be even");
    if (!(cfg.grading_ratio > 0.0 && cfg.grading_ratio < 1.0)) throw DomainError("grading_ratio must lie in (0, 1)");
}

QuadratureResult integrate_even_kernel(const PeriodicEvaluator& f_e, double lambda, const OracleConfig& cfg)
{
    validate(cfg);
    require_positive(lambda);
    if (f_e.parity() != Parity::even) throw DomainError("integrate_even_kernel requires an even-tagged integrand");

    const auto segs = reference_segments(f_e.singularities(), cfg, true);
    const double l2 = lambda * lambda;
    auto compute = [&](bool bisect, const WindowPlan& plan, std::int64_t& evals) {
        const NodeSet ns = build_nodes(segs, cfg, bisect);
        std::vector<cplx> wv(ns.x.size());
        for (std::size_t i = 0; i < ns.x.size(); ++i) wv[i] = ns.w[i] * checked(f_e, ns.x[i]);
        evals += static_cast<std::int64_t>(ns.x.size());
        return extrapolated_sum(plan, [&](int k, double& abs_acc) {
            cplx s{};
            const double shift = two_pi * k;
            for (std::size_t i = 0; i < wv.size(); ++i) {
                const double t = ns.x[i] + shift;
                const cplx term = wv[i] / (l2 + t * t);
                s += term;
                abs_acc += std::abs(term);
            }
            return s;
        });
    };
    return two_rule_result("integrate_even_kernel", lambda, cfg.max_periods, cfg, compute);
}

QuadratureResult integrate_odd_kernel(const PeriodicEvaluator& f_o, double lambda, const OracleConfig& cfg)
{
    validate(cfg);
    require_positive(lambda);
    if (f_o.parity() != Parity::odd) throw DomainError("integrate_odd_kernel requires an odd-tagged integrand");

    const auto segs = reference_segments(f_o.singularities(), cfg, true);
    const auto& rule = gauss_legendre_cached(cfg.panel_order);
    const double l2 = lambda * lambda;

    auto compute = [&](bool bisect, const WindowPlan& plan, std::int64_t& evals) {
        const NodeSet ns = build_nodes(segs, cfg, bisect);
        const std::size_t p = static_cast<std::size_t>(rule.order());

        // F at every node: F(panel start) + int_{panel start}^{x} f_o.
        std::vector<cplx> wF(ns.x.size());
        cplx start{};
        double scale = 0.0;
        for (std::size_t j = 0; j < ns.panels.size(); ++j) {
            const Panel& pan = ns.panels[j];
            cplx panel_integral{};
            for (std::size_t i = 0; i < p; ++i) {
                const std::size_t idx = j * p + i;
                const double x = ns.x[idx];
                const double c = 0.5 * (pan.a + x);
                const double h = 0.5 * (x - pan.a);
                cplx partial{};
                for (std::size_t q = 0; q < p; ++q) partial += rule.weights[q] * checked(f_o, c + h * rule.nodes[q]);
                evals += static_cast<std::int64_t>(p);
                wF[idx] = ns.w[idx] * (start + h * partial);

                const cplx fx = checked(f_o, x);
                panel_integral += ns.w[idx] * fx;
                scale += std::abs(ns.w[idx] * fx);
            }
            evals += static_cast<std::int64_t>(p);
            start += panel_integral;
        }
        if (std::abs(start) > 1e-9 * std::max(1.0, scale))
            throw DomainError("integrate_odd_kernel: f_o does not have zero mean over a period");

        return extrapolated_sum(plan, [&](int k, double& abs_acc) {
            cplx s{};
            const double shift = two_pi * k;
            for (std::size_t i = 0; i < wF.size(); ++i) {
                const double t = ns.x[i] + shift;
                const double d = l2 + t * t;
                const cplx term = wF[i] * ((t * t - l2) / (d * d));
                s += term;
                abs_acc += std::abs(term);
            }
            return s;
        });
    };
    return two_rule_result("integrate_odd_kernel", lambda, cfg.max_periods, cfg, compute);
}

QuadratureResult integrate_tan_form(const PeriodicEvaluator& g, double lambda, const OracleConfig& cfg)
{
    validate(cfg);
    require_positive(lambda);
    if (g.parity() != Parity::even) throw DomainError("integrate_tan_form requires an even-tagged integrand");

    const auto segs = reference_segments(g.singularities(), cfg, false);
    const auto& rule = gauss_legendre_cached(cfg.panel_order);

    auto compute = [&](bool bisect, const WindowPlan& plan, std::int64_t& evals) {
        std::vector<double> x, w;
        return extrapolated_sum(plan, [&](int k, double& abs_acc) {
            const double shift = two_pi * k;
            x.clear();
            w.clear();
            for (const auto& s : segs) {
                const double xa = std::atan((s.a + shift) / lambda);
                const double xb = std::atan((s.b + shift) / lambda);
                const auto panels = segment_panels(s, xa, xb, cfg, bisect);
                append_panel_nodes(rule, panels, x, w);
            }
            cplx sum{};
            for (std::size_t i = 0; i < x.size(); ++i) {
                const cplx term = w[i] * checked(g, lambda * std::tan(x[i])) / lambda;
                sum += term;
                abs_acc += std::abs(term);
            }
            evals += static_cast<std::int64_t>(x.size());
            return sum;
        });
    };
    return two_rule_result("integrate_tan_form", lambda, cfg.max_periods, cfg, compute);
}

QuadratureResult integrate_principal_value(const PeriodicEvaluator& f, double lambda, const OracleConfig& cfg)
{
    validate(cfg);
    require_nonzero(lambda);

    std::vector<double> sing = f.singularities();
    for (double s : f.singularities()) sing.push_back(wrap_period(-s));
    const auto segs = reference_segments(sing, cfg, true);

    auto compute = [&](bool bisect, const WindowPlan& plan, std::int64_t& evals) {
        const NodeSet ns = build_nodes(segs, cfg, bisect);
        std::vector<cplx> wu(ns.x.size()), wv(ns.x.size());
        for (std::size_t i = 0; i < ns.x.size(); ++i) {
            wu[i] = ns.w[i] * checked(f, ns.x[i]);
            wv[i] = ns.w[i] * checked(f, -ns.x[i]);
        }
        evals += 2 * static_cast<std::int64_t>(ns.x.size());
        // Period k on the right pairs with its mirror on the left, so each
        // partial sum is an exact symmetric truncation at a = 2 pi K.
        return extrapolated_sum(plan, [&](int k, double& abs_acc) {
            cplx s{};
            const double shift = two_pi * k;
            for (std::size_t i = 0; i < wu.size(); ++i) {
                const double t = ns.x[i] + shift;
                const cplx term = wu[i] / cplx(t, lambda) + wv[i] / cplx(-t, lambda);
                s += term;
                abs_acc += std::abs(wu[i]) / std::abs(cplx(t, lambda)) + std::abs(wv[i]) / std::abs(cplx(t, lambda));
            }
            return s;
        });
    };
    return two_rule_result("integrate_principal_value", lambda, cfg.pv_truncation_periods, cfg, compute);
}

QuadratureResult integrate_cotangent_form(const PeriodicEvaluator& f, double lambda, const OracleConfig& cfg)
{
    validate(cfg);
    require_nonzero(lambda);

    const auto segs = reference_segments(f.singularities(), cfg, true);
    std::int64_t evals = 0;
    auto run = [&](bool bisect, double& abs_sum) {
        const NodeSet ns = build_nodes(segs, cfg, bisect);
        cplx s{};
        for (std::size_t i = 0; i < ns.x.size(); ++i) {
            const cplx z = cplx(ns.x[i], lambda) / 2.0;
            const cplx term = ns.w[i] * 0.5 / std::tan(z) * checked(f, ns.x[i]);
            s += term;
            abs_sum += std::abs(term);
        }
        evals += static_cast<std::int64_t>(ns.x.size());
        return s;
    };
    double abs_coarse = 0.0, abs_fine = 0.0;
    const cplx coarse = run(false, abs_coarse);
    const cplx fine = run(true, abs_fine);

    QuadratureResult r;
    r.value = fine;
    r.abs_error_estimate = std::abs(fine - coarse) + rounding_floor(abs_fine);
    r.periods_used = 1;
    r.extrapolation_order = 0;
    r.function_evals = evals;
    if (r.abs_error_estimate > cfg.tol) {
        std::ostringstream msg;
        msg << "integrate_cotangent_form did not reach tol " << cfg.tol << " (estimate " << r.abs_error_estimate
            << ")";
        throw ConvergenceError(msg.str(), fine.real(), r.abs_error_estimate);
    }
    return r;
}

PrincipalValueCheck principal_value_crosscheck(const PeriodicEvaluator& f, double lambda, const OracleConfig& cfg)
{
    PrincipalValueCheck out;
    out.truncated = integrate_principal_value(f, lambda, cfg);
    out.cotangent = integrate_cotangent_form(f, lambda, cfg);
    out.disagreement = std::abs(out.truncated.value - out.cotangent.value);
    if (out.disagreement > cfg.tol) {
        OracleConfig doubled = cfg;
        doubled.nodes_per_period *= 2;
        out.truncated = integrate_principal_value(f, lambda, doubled);
        out.cotangent = integrate_cotangent_form(f, lambda, doubled);
        out.disagreement = std::abs(out.truncated.value - out.cotangent.value);
        out.nodes_doubled = true;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Richardson
// ---------------------------------------------------------------------------

namespace {

double magnitude(double v) { return std::abs(v); }
double magnitude(cplx v) { return std::abs(v); }

template <typename T>
Extrapolation<T> neville_to_zero(std::span<const double> h, std::span<const T> values)
{
    const std::size_t m = values.size();
    if (m == 0 || h.size() != m) throw DomainError("richardson: need matching, nonempty abscissae and values");
    for (std::size_t i = 0; i < m; ++i) {
        if (!(h[i] > 0.0)) throw DomainError("richardson: abscissae must be positive");
        if (i > 0 && !(h[i] < h[i - 1])) throw DomainError("richardson: abscissae must be strictly decreasing");
    }

    Extrapolation<T> out;
    if (std::all_of(values.begin(), values.end(), [&](const T& v) { return v == values[0]; })) {
        out.limit = values[0];
        return out;
    }
    if (m == 1) {
        out.limit = values[0];
        return out;
    }

    // After level L, table[i] extrapolates through points i..i+L.  E_L, the
    // extrapolant anchored at the finest point, is table[m-1-L].
    const std::size_t d = m - 1;
    std::vector<T> table(values.begin(), values.end());
    std::vector<T> anchored{values[d]};
    for (std::size_t level = 1; level <= d; ++level) {
        for (std::size_t i = 0; i + level < m; ++i) {
            const double hi = h[i];
            const double hj = h[i + level];
            table[i] = (hi * table[i + 1] - hj * table[i]) / (hi - hj);
        }
        anchored.push_back(table[d - level]);
    }

    double scale = 0.0;
    for (const auto& v : values) scale = std::max(scale, magnitude(v));
    const double noise = 1e3 * eps * scale;

    const double last = magnitude(anchored[d] - anchored[d - 1]);
    const double before = d >= 2 ? magnitude(anchored[d - 1] - anchored[d - 2]) : std::numeric_limits<double>::infinity();
    if (last > before && last > noise) {
        out.limit = values[d];
        out.error_estimate = magnitude(values[d] - values[d - 1]) * h[d] / (h[d - 1] - h[d]);
        out.fell_back = true;
        return out;
    }
    out.limit = anchored[d];
    out.error_estimate = last;
    return out;
}

}  // namespace

Extrapolation<double> richardson_extrapolate(std::span<const double> h, std::span<const double> values)
{
    return neville_to_zero<double>(h, values);
}

Extrapolation<cplx> richardson_extrapolate(std::span<const double> h, std::span<const cplx> values)
{
    return neville_to_zero<cplx>(h, values);
}

Extrapolation<double> richardson_limit(std::span<const double> partial_sums, int depth)
{
    if (depth < 0) throw DomainError("richardson depth must be nonnegative");
    const std::size_t n = partial_sums.size();
    const std::size_t need = static_cast<std::size_t>(depth) + 1;
    if (n < need) throw DomainError("richardson_limit needs at least depth+1 partial sums");

    // Alternating increments over the inspected tail -> even-indexed sums.
    bool alternating = n >= 3;
    const std::size_t inspect = std::min<std::size_t>(n - 1, 2 * need);
    for (std::size_t k = n - inspect; k + 1 < n && alternating; ++k) {
        const double d0 = k == 0 ? partial_sums[0] : partial_sums[k] - partial_sums[k - 1];
        const double d1 = partial_sums[k + 1] - partial_sums[k];
        if (!(d0 * d1 < 0.0)) alternating = false;
    }

    std::vector<std::size_t> index;  // 1-based term counts, ascending
    if (alternating) {
        for (std::size_t k = n; k >= 2 && index.size() < need; --k)
            if (k % 2 == 0) index.push_back(k);
        if (index.size() < need) throw DomainError("richardson_limit: too few even-indexed sums for an alternating sequence");
    } else {
        for (std::size_t k = n; index.size() < need; --k) index.push_back(k);
    }
    std::reverse(index.begin(), index.end());

    std::vector<double> h, v;
    for (std::size_t k : index) {
        h.push_back(1.0 / static_cast<double>(k));
        v.push_back(partial_sums[k - 1]);
    }
    return richardson_extrapolate(h, v);
}

}  // namespace oscint
