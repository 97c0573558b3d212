#pragma once

#include "quadcoh/states/state_model.hpp"

namespace quadcoh {

// Number-basis truncation of a thermal state (geometric spectrum) or of a
// coherent state (Poisson amplitudes, log-domain factorials). Throws
// CapacityError reporting the loss when the truncated trace misses 1 by
// more than loss_threshold, and TypeError for other families.
FockDensityMatrix fock_truncate(const StateModel& state, int dim, double loss_threshold = 1e-8);

// X-antisqueezed pure Gaussian with mean photon number exactly n_mean:
// var_x = [(n + 1/2) + sqrt((n + 1/2)^2 - 1/4)] / 2.
GaussianPureState squeezed_vacuum_for_energy(double n_mean);

}  // namespace quadcoh
