#pragma once

#include <string>

#include "quadcoh/states/state_model.hpp"

namespace quadcoh {

enum class EntropyMethod { analytic, numeric, product };
std::string to_string(EntropyMethod method);

struct EntropyOptions {
    int fock_dim = 64;     // truncation for the spectrum term
    int gl_points = 64;    // Gauss-Legendre points per panel for the pdf term
    int gl_panels = 16;
};

// sigma-regularized relative entropy between a state and its position
// diagonal: S_reg = -S_vN(rho) + h(p), where h is the differential entropy
// of the quadrature distribution. The divergent ln(sigma) of the underlying
// discretization is dropped, so values are offset-relative and may be
// negative; only differences between states are meaningful.
//
// Closed forms: pure Gaussians give (1/2)[1 + ln(2 pi var_x)]; thermal
// states add the geometric-spectrum term ln[(1/(1+n)) (n/(1+n))^n].
// Products sum over factors. Everything else runs the numeric branch.
double relative_entropy_coherence(const StateModel& state, const EntropyOptions& opts = {});

// Numeric branch regardless of closed forms: von Neumann entropy of the
// Fock representation plus quadrature of -p ln p. Throws
// UnsupportedStateError when no Fock representation is reachable.
double relative_entropy_coherence_numeric(const StateModel& state, const EntropyOptions& opts = {});

// S_vN = -tr(rho ln rho) of the state itself (0 for pure states; unitary
// wrappers share their inner state's spectrum).
double state_spectrum_entropy(const StateModel& state, const EntropyOptions& opts = {});

EntropyMethod relative_entropy_method(const StateModel& state);

}  // namespace quadcoh
