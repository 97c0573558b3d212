#include "quadcoh/numerics/grid.hpp"

#include <cmath>
#include <string>

#include "quadcoh/errors.hpp"

namespace quadcoh {

void gauss_legendre_rule(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    if (n < 1) throw ArgumentError("gauss_legendre_rule: need at least one node");
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);

    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Chebyshev-like initial guess for the i-th root of P_n.
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            dp = n * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
}

QuadratureGrid build_grid(double x_min, double x_max, int points_per_panel, int panels,
                          Scheme scheme) {
    if (!(x_min < x_max)) throw ArgumentError("build_grid: empty domain");
    if (points_per_panel < 2) throw ArgumentError("build_grid: points_per_panel must be >= 2");
    if (panels < 1) throw ArgumentError("build_grid: panels must be >= 1");

    QuadratureGrid grid;
    grid.x_min = x_min;
    grid.x_max = x_max;
    grid.scheme = scheme;
    grid.panels = panels;
    grid.points_per_panel = points_per_panel;

    if (scheme == Scheme::trapezoid) {
        const long intervals = static_cast<long>(panels) * points_per_panel;
        const double h = (x_max - x_min) / static_cast<double>(intervals);
        grid.nodes.resize(intervals + 1);
        grid.weights.assign(intervals + 1, h);
        for (long i = 0; i <= intervals; ++i)
            grid.nodes[i] = x_min + h * static_cast<double>(i);
        grid.nodes.back() = x_max;
        grid.weights.front() = 0.5 * h;
        grid.weights.back() = 0.5 * h;
    } else {
        std::vector<double> ref_nodes, ref_weights;
        gauss_legendre_rule(points_per_panel, ref_nodes, ref_weights);
        const double panel_width = (x_max - x_min) / panels;
        grid.nodes.reserve(static_cast<std::size_t>(panels) * points_per_panel);
        grid.weights.reserve(static_cast<std::size_t>(panels) * points_per_panel);
        for (int p = 0; p < panels; ++p) {
            const double a = x_min + p * panel_width;
            const double mid = a + 0.5 * panel_width;
            const double half = 0.5 * panel_width;
            for (int k = 0; k < points_per_panel; ++k) {
                grid.nodes.push_back(mid + half * ref_nodes[k]);
                grid.weights.push_back(half * ref_weights[k]);
            }
        }
    }
    return grid;
}

QuadratureGrid half_resolution_grid(const QuadratureGrid& grid) {
    const int half = std::max(grid.points_per_panel / 2, 2);
    return build_grid(grid.x_min, grid.x_max, half, grid.panels, grid.scheme);
}

QuadratureGrid absolute_value_grid(double radius, int points) {
    if (!(radius > 0.0)) throw ArgumentError("absolute_value_grid: radius must be positive");
    if (points < 3) throw ArgumentError("absolute_value_grid: need at least 3 points");
    // points nodes => points-1 intervals; keep the interval count even so the
    // half-resolution sum can reuse the even-index samples.
    int intervals = points - 1;
    if (intervals % 2 != 0) ++intervals;
    return build_grid(-radius, radius, intervals, 1, Scheme::trapezoid);
}

}  // namespace quadcoh
