#include "oscint/gauss_legendre.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "oscint/errors.hpp"

namespace oscint {

GaussLegendreRule gauss_legendre(int n)
{
    if (n < 1) throw DomainError("Gauss-Legendre order must be positive");
    GaussLegendreRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));

    // Newton iteration on P_n from the Tricomi initial guess; symmetric pairs.
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // Recompute the derivative at the converged node.
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[static_cast<std::size_t>(i)] = -x;
        rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        rule.weights[static_cast<std::size_t>(i)] = w;
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
    return rule;
}

const GaussLegendreRule& gauss_legendre_cached(int n)
{
    static std::mutex mutex;
    static std::map<int, GaussLegendreRule> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, gauss_legendre(n)).first;
    return it->second;
}

std::vector<Panel> graded_panels(double a, double b, bool grade_left, bool grade_right, int levels, double ratio)
{
    std::vector<Panel> out;
    if (!(b > a)) return out;
    if (grade_left && grade_right) {
        const double mid = 0.5 * (a + b);
        out = graded_panels(a, mid, true, false, levels, ratio);
        auto right = graded_panels(mid, b, false, true, levels, ratio);
        out.insert(out.end(), right.begin(), right.end());
        return out;
    }
    if (!grade_left && !grade_right) {
        out.push_back({a, b});
        return out;
    }

    const double h = b - a;
    std::vector<double> cuts;  // distances from the graded end, descending
    double d = h;
    for (int j = 0; j <= levels; ++j) {
        cuts.push_back(d);
        d *= ratio;
    }
    cuts.push_back(0.0);
    if (grade_left) {
        for (std::size_t j = cuts.size() - 1; j > 0; --j) out.push_back({a + cuts[j], a + cuts[j - 1]});
    } else {
        for (std::size_t j = 0; j + 1 < cuts.size(); ++j) out.push_back({b - cuts[j], b - cuts[j + 1]});
    }
    return out;
}

void append_panel_nodes(const GaussLegendreRule& rule, std::span<const Panel> panels, std::vector<double>& nodes,
                        std::vector<double>& weights)
{
    for (const auto& p : panels) {
        const double c = 0.5 * (p.a + p.b);
        const double h = 0.5 * (p.b - p.a);
        for (int i = 0; i < rule.order(); ++i) {
            nodes.push_back(c + h * rule.nodes[static_cast<std::size_t>(i)]);
            weights.push_back(h * rule.weights[static_cast<std::size_t>(i)]);
        }
    }
}

}  // namespace oscint
