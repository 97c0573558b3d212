#pragma once

#include <span>
#include <utility>
#include <vector>

#include "quadcoh/measures/relative_entropy.hpp"
#include "quadcoh/states/state_model.hpp"

namespace quadcoh {

// Free evolution by tau: X -> cos(tau) X + sin(tau) Y. Gaussian states get
// rotated means and covariance, Fock amplitudes pick up e^{-i tau n} phases,
// thermal states are stationary. The quadrature kernel of a rotated state
// has no pointwise coordinate map (it is a fractional Fourier transform of
// the original), so rotation is applied eagerly; squeeze-wrapped inputs are
// rejected as unsupported.
StateModel rotate(const StateModel& state, double tau);

// C(tau) = 2 sqrt(2 pi) sqrt(cos^2 tau var_x + sin^2 tau var_y) for pure
// Gaussians without X-Y correlation; ContractError otherwise.
std::vector<std::pair<double, double>> rotation_coherence_curve(const GaussianPureState& g,
                                                                std::span<const double> taus);

// Phase-space displacement; |kernel| shifts rigidly so coherence is exactly
// invariant.
StateModel displace(const StateModel& state, double x0, double y0);

// Quadrature squeeze X -> lambda X. Gaussians transform in closed form,
// everything else is wrapped with kernel'(x,x') = kernel(x/l, x'/l)/l;
// coherence scales exactly by lambda.
StateModel squeeze(const StateModel& state, double lambda);

// S_reg(squeeze(state, lambda)) - S_reg(state); equals ln(lambda) up to the
// numeric-branch integration error.
double squeeze_entropy_shift(const StateModel& state, double lambda,
                             const EntropyOptions& opts = {});

}  // namespace quadcoh
