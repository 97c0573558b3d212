#pragma once

#include <complex>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "quadcoh/measures/coherence.hpp"
#include "quadcoh/states/state_model.hpp"

namespace quadcoh {

enum class IncoherentVariant { chi, xi };

// Weight rule for the box discretization. exact_bin integrates the
// quadrature distribution over each bin, so the weights sum to the covered
// probability mass (1 up to tail loss) at every width. midpoint is the
// first-order form sigma * p(j sigma) whose O(sigma^2) defect is the usual
// Riemann-sum argument.
enum class ChiWeightRule { exact_bin, midpoint };

struct ChiOptions {
    ChiWeightRule rule = ChiWeightRule::exact_bin;
    double coverage_tol = 1e-6;  // CoverageError when sum w < 1 - coverage_tol
};

// Discretized diagonal part of a state: box weights at spacing sigma for
// the chi variant, point masses of a smearing distribution P for the xi
// variant.
struct IncoherentApprox {
    IncoherentVariant variant = IncoherentVariant::chi;
    double sigma = 0.0;
    std::vector<std::pair<long, double>> chi_weights;  // (j, w_j), bins centered at j*sigma
    std::vector<double> xi_positions;                  // P support points
    std::vector<double> xi_masses;                     // normalized masses, sum = 1
};

// Box-function weights of the state's diagonal: bins ((j-1/2) sigma,
// (j+1/2) sigma) for |j| <= j_max. Throws CoverageError when the covered
// mass falls below 1 - opts.coverage_tol.
IncoherentApprox chi_diagonal(const StateModel& state, double sigma, long j_max,
                              const ChiOptions& opts = {});

// sum_j w_j ln w_j (0 ln 0 := 0); (result - ln sigma) converges to
// int p ln p as sigma -> 0.
double chi_entropy_term(const StateModel& state, double sigma, long j_max,
                        const ChiOptions& opts = {});

// pdf-level building blocks (used by the operations above and handy for toy
// densities in tests).
std::vector<std::pair<long, double>> chi_weights_from_pdf(const std::function<double(double)>& pdf,
                                                          double sigma, long j_max,
                                                          ChiWeightRule rule);
double entropy_term_from_weights(std::span<const std::pair<long, double>> weights);

// Incoherent state smeared with Gaussian wavepackets of width sigma:
// rho = sum_i m_i |xi_i><xi_i| with centers/masses from the density P given
// on a grid (a single sample is treated as a point mass). Throws
// ContractError when P is negative or misses unit normalization by more
// than 1e-6; masses are renormalized exactly afterwards.
IncoherentApprox xi_incoherent_state(std::span<const double> positions,
                                     std::span<const double> densities, double sigma);

// Mixture kernel sum_i m_i xi_i(x) xi_i(x'); real and positive.
double xi_kernel(const IncoherentApprox& approx, double x, double x_prime);

// Closed form 2 sqrt(2 pi) sigma, independent of P.
double xi_coherence_analytic(const IncoherentApprox& approx);

// 2D quadrature of the mixture kernel (cross-check of the closed form).
// Uses a banded fast path on uniform trapezoid grids.
CoherenceReport xi_coherence_numeric(const IncoherentApprox& approx, const QuadratureGrid& grid_x,
                                     const QuadratureGrid& grid_y);
CoherenceReport xi_coherence_numeric(const IncoherentApprox& approx, int grid_points = 4096);

// tr[(rho - rho2)^2] = sum |rho_mn - rho2_mn|^2; dimensions must match.
double hilbert_schmidt_distance(const FockDensityMatrix& rho, const FockDensityMatrix& rho2);

// Number-basis image of the chi diagonal: project sum_j w_j |chi_j><chi_j|
// onto the first `dim` number states and renormalize to unit trace (the
// projection leaks outside any finite basis).
FockDensityMatrix chi_reconstruction_fock(const IncoherentApprox& approx, int dim);

}  // namespace quadcoh
