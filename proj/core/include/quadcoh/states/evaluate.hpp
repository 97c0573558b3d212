#pragma once

#include <complex>

#include "quadcoh/states/state_model.hpp"

namespace quadcoh {

// <x|psi> for pure single-mode states (Gaussian, Fock superpositions and
// their squeeze/displacement images). Throws TypeError on mixed or
// multi-mode input.
std::complex<double> wavefunction(const StateModel& state, double x);

// True when wavefunction() accepts the state (pure families and their
// wrappers; false for density matrices even when they happen to be rank 1).
bool has_wavefunction(const StateModel& state);

// Position-representation matrix element <x|rho|x'> for any single-mode
// state. Hermitian by construction: kernel(x,x') = conj(kernel(x',x)).
std::complex<double> kernel(const StateModel& state, double x, double x_prime);

// p(x) = <x|rho|x>; real part of the kernel diagonal, clamped to zero when
// its magnitude is below 1e-14.
double quadrature_pdf(const StateModel& state, double x);

// First and second quadrature moments, used by mean_photon_number and the
// transform wrappers.
struct QuadratureMoments {
    double x_mean = 0.0;
    double y_mean = 0.0;
    double x_sq = 0.0;  // <X^2>
    double y_sq = 0.0;  // <Y^2>
};
QuadratureMoments quadrature_moments(const StateModel& state);

// <a† a> = <X^2> + <Y^2> - 1/2; additive over product factors.
double mean_photon_number(const StateModel& state);

// Half-width of the truncation domain outside which |kernel| is below
// ~1e-15: sqrt(n + 1/2) + 6 for Fock content up to n, the matching
// 13.5 * sigma rule for Gaussian-shaped families.
double support_radius(const StateModel& state);

}  // namespace quadcoh
