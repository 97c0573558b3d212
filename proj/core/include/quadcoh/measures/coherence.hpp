#pragma once

#include <string>

#include "quadcoh/numerics/grid.hpp"
#include "quadcoh/numerics/integrate.hpp"
#include "quadcoh/states/state_model.hpp"

namespace quadcoh {

enum class CoherenceMethod { analytic, numeric_pure, numeric_kernel, product };
std::string to_string(CoherenceMethod method);

struct CoherenceReport {
    double value = 0.0;
    double error_estimate = 0.0;  // 0 for analytic results
    CoherenceMethod method = CoherenceMethod::analytic;
};

struct CoherenceOptions {
    double tolerance = 1e-6;  // relative convergence target for numeric paths
    int grid_points = 4096;   // per axis; |kernel| integrands use uniform trapezoid
    int fock_dim = 64;
    int max_refinements = 2;  // grid doublings before giving up
};

// The coherence functional: the double integral of |<x|rho|x'>|, equal to
// (int |psi|)^2 for pure states. Closed forms are dispatched where they
// exist (Gaussian 2 sqrt(2 pi) dx, thermal sqrt(2 pi/(1+2n)), squeeze
// scaling, displacement invariance, products multiply); everything else is
// integrated numerically on grids sized from the state's support.
CoherenceReport coherence_l1(const StateModel& state, const CoherenceOptions& opts = {});

// Numeric evaluation regardless of available closed forms: 1D |psi| squared
// for pure states, 2D |kernel| otherwise. Throws ConvergenceError when the
// refinement estimate stays above opts.tolerance.
CoherenceReport coherence_l1_numeric(const StateModel& state, const QuadratureGrid& grid_x,
                                     const QuadratureGrid& grid_y,
                                     const CoherenceOptions& opts = {});
CoherenceReport coherence_l1_numeric(const StateModel& state, const CoherenceOptions& opts = {});

// Forces the 2D |kernel| route even for pure states (cross-check path).
CoherenceReport coherence_l1_kernel2d(const StateModel& state, const QuadratureGrid& grid_x,
                                      const QuadratureGrid& grid_y,
                                      const CoherenceOptions& opts = {});

// Row-structured evaluation of the 2D integral of |kernel| with the
// half-resolution error estimate; exposed for reuse by the incoherent-state
// checks. Grids must be trapezoid with an even interval count.
IntegralResult abs_kernel_integral(const StateModel& state, const QuadratureGrid& grid_x,
                                   const QuadratureGrid& grid_y);

}  // namespace quadcoh
