#include "quadcoh/numerics/integrate.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "quadcoh/errors.hpp"
#include "quadcoh/numerics/parallel.hpp"

namespace quadcoh {

double pairwise_sum(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n == 0) return 0.0;
    if (n == 1) return values[0];
    if (n == 2) return values[0] + values[1];
    const std::size_t mid = n / 2;
    return pairwise_sum(values.first(mid)) + pairwise_sum(values.subspan(mid));
}

namespace {

void check_finite(double v, double x) {
    if (!std::isfinite(v))
        throw NumericError("integrate: non-finite integrand at node x=" + std::to_string(x));
}

void check_finite(double v, double x, double y) {
    if (!std::isfinite(v))
        throw NumericError("integrate: non-finite integrand at node (x=" + std::to_string(x) +
                           ", y=" + std::to_string(y) + ")");
}

// True when dropping every odd-index node of a trapezoid grid yields the
// exact trapezoid rule at half resolution (uniform grid, even intervals).
bool trapezoid_shares_coarse(const QuadratureGrid& g) {
    return g.scheme == Scheme::trapezoid && g.nodes.size() >= 5 && (g.nodes.size() - 1) % 2 == 0;
}

double weighted_pairwise(std::span<const double> f, std::span<const double> w) {
    std::vector<double> terms(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) terms[i] = f[i] * w[i];
    return pairwise_sum(terms);
}

// Weights of the embedded half-resolution trapezoid rule on the even nodes.
std::vector<double> coarse_trapezoid_weights(const QuadratureGrid& g) {
    const std::size_t coarse_n = (g.nodes.size() - 1) / 2 + 1;
    const double h2 = (g.x_max - g.x_min) / static_cast<double>(coarse_n - 1);
    std::vector<double> w(coarse_n, h2);
    w.front() = 0.5 * h2;
    w.back() = 0.5 * h2;
    return w;
}

}  // namespace

IntegralResult integrate_1d(const std::function<double(double)>& f, const QuadratureGrid& grid,
                            bool refine) {
    std::vector<double> samples(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        samples[i] = f(grid.nodes[i]);
        check_finite(samples[i], grid.nodes[i]);
    }
    IntegralResult result;
    result.value = weighted_pairwise(samples, grid.weights);
    result.evaluations = static_cast<long>(grid.size());
    if (!refine) return result;

    double coarse = 0.0;
    if (trapezoid_shares_coarse(grid)) {
        const auto cw = coarse_trapezoid_weights(grid);
        std::vector<double> cf(cw.size());
        for (std::size_t i = 0; i < cw.size(); ++i) cf[i] = samples[2 * i];
        coarse = weighted_pairwise(cf, cw);
    } else {
        const QuadratureGrid half = half_resolution_grid(grid);
        std::vector<double> cf(half.size());
        for (std::size_t i = 0; i < half.size(); ++i) {
            cf[i] = f(half.nodes[i]);
            check_finite(cf[i], half.nodes[i]);
        }
        coarse = weighted_pairwise(cf, half.weights);
        result.evaluations += static_cast<long>(half.size());
    }
    result.error_estimate = std::abs(result.value - coarse);
    return result;
}

IntegralResult integrate_2d(const std::function<double(double, double)>& f,
                            const QuadratureGrid& grid_x, const QuadratureGrid& grid_y,
                            bool refine) {
    const bool shared = refine && trapezoid_shares_coarse(grid_x) && trapezoid_shares_coarse(grid_y);

    std::vector<double> fine_rows(grid_x.size(), 0.0);
    std::vector<double> coarse_rows(shared ? (grid_x.size() - 1) / 2 + 1 : 0, 0.0);
    const std::vector<double> cw_y = shared ? coarse_trapezoid_weights(grid_y) : std::vector<double>{};

    parallel_for(grid_x.size(), [&](std::size_t i) {
        const double x = grid_x.nodes[i];
        std::vector<double> row(grid_y.size());
        for (std::size_t j = 0; j < grid_y.size(); ++j) {
            row[j] = f(x, grid_y.nodes[j]);
            check_finite(row[j], x, grid_y.nodes[j]);
        }
        fine_rows[i] = weighted_pairwise(row, grid_y.weights);
        if (shared && i % 2 == 0) {
            std::vector<double> crow(cw_y.size());
            for (std::size_t j = 0; j < cw_y.size(); ++j) crow[j] = row[2 * j];
            coarse_rows[i / 2] = weighted_pairwise(crow, cw_y);
        }
    });

    IntegralResult result;
    result.value = weighted_pairwise(fine_rows, grid_x.weights);
    result.evaluations = static_cast<long>(grid_x.size() * grid_y.size());
    if (!refine) return result;

    double coarse = 0.0;
    if (shared) {
        coarse = weighted_pairwise(coarse_rows, coarse_trapezoid_weights(grid_x));
    } else {
        const QuadratureGrid hx = half_resolution_grid(grid_x);
        const QuadratureGrid hy = half_resolution_grid(grid_y);
        const IntegralResult half = integrate_2d(f, hx, hy, false);
        coarse = half.value;
        result.evaluations += half.evaluations;
    }
    result.error_estimate = std::abs(result.value - coarse);
    return result;
}

}  // namespace quadcoh
