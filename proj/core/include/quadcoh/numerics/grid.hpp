#pragma once

#include <cstddef>
#include <vector>

namespace quadcoh {

enum class Scheme {
    trapezoid,        // uniform nodes, robust for |.|-type integrands with kinks
    gauss_legendre,   // composite panels, spectral on smooth integrands
};

// 1D quadrature rule on a finite interval. Nodes are strictly increasing and
// inside [x_min, x_max]; weights are nonnegative and sum to the interval
// length (trapezoid) resp. panel lengths (Gauss-Legendre).
struct QuadratureGrid {
    std::vector<double> nodes;
    std::vector<double> weights;
    double x_min = 0.0;
    double x_max = 0.0;
    Scheme scheme = Scheme::trapezoid;
    int panels = 1;
    int points_per_panel = 2;

    std::size_t size() const { return nodes.size(); }
};

// Rule on (-1, 1); nodes/weights resized to n. Newton iteration on the
// Legendre recurrence, accurate to machine precision for n <= 1024.
void gauss_legendre_rule(int n, std::vector<double>& nodes, std::vector<double>& weights);

// Trapezoid: panels*points_per_panel intervals sharing endpoints
// (panels*points_per_panel + 1 nodes). Gauss-Legendre: points_per_panel
// nodes per panel, panels*points_per_panel total.
QuadratureGrid build_grid(double x_min, double x_max, int points_per_panel, int panels,
                          Scheme scheme);

// Same domain and scheme at roughly half the resolution (used for the
// refinement-based error estimate).
QuadratureGrid half_resolution_grid(const QuadratureGrid& grid);

// Uniform symmetric trapezoid grid with `points` nodes on (-radius, radius);
// the default discretization for |kernel| integrands.
QuadratureGrid absolute_value_grid(double radius, int points);

}  // namespace quadcoh
