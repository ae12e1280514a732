#pragma once

#include <span>
#include <vector>

namespace oscint {

// n-point Gauss-Legendre rule on [-1, 1].  Nodes ascending, all interior.
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    int order() const noexcept { return static_cast<int>(nodes.size()); }
};

GaussLegendreRule gauss_legendre(int n);

// Cached rule; thread-safe after first use per order.
const GaussLegendreRule& gauss_legendre_cached(int n);

// One panel [a, b] of a composite rule.
struct Panel {
    double a;
    double b;
};

// Splits [a, b] into panels refined geometrically toward the flagged ends:
// [a + h r^{j+1}, a + h r^j] for j < levels, then [a, a + h r^levels].
// With both ends flagged the interval is halved first.
std::vector<Panel> graded_panels(double a, double b, bool grade_left, bool grade_right, int levels,
                                 double ratio);

// Appends mapped nodes/weights of `rule` over each panel.
void append_panel_nodes(const GaussLegendreRule& rule, std::span<const Panel> panels, std::vector<double>& nodes,
                        std::vector<double>& weights);

}  // namespace oscint
