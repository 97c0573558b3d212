#pragma once

#include <functional>
#include <span>

#include "quadcoh/numerics/grid.hpp"

namespace quadcoh {

struct IntegralResult {
    double value = 0.0;
    double error_estimate = 0.0;  // |value - value at half resolution|
    long evaluations = 0;
};

// Deterministic pairwise (binary tree) reduction. The summation order is a
// pure function of the length, so results are bit-identical no matter how
// the inputs were produced (serially or by several threads).
double pairwise_sum(std::span<const double> values);

// Weighted quadrature sums. Throws NumericError naming the node if the
// integrand is non-finite there. With refine=true the result carries
// |value - half resolution value| as error estimate; trapezoid grids reuse
// the even-index samples for the coarse sum.
IntegralResult integrate_1d(const std::function<double(double)>& f, const QuadratureGrid& grid,
                            bool refine = true);

// Tensor-product rule; rows (outer = x) may be evaluated in parallel, the
// reduction order is fixed. f is called row-major: x varies slowest.
IntegralResult integrate_2d(const std::function<double(double, double)>& f,
                            const QuadratureGrid& grid_x, const QuadratureGrid& grid_y,
                            bool refine = true);

}  // namespace quadcoh
