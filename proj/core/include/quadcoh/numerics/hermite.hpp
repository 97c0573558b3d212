#pragma once

#include <span>

namespace quadcoh {

inline constexpr int kMaxHermiteOrder = 512;

// Position wavefunction of the n-th number state in units where a = X + iY
// (vacuum variance 1/4):
//
//   psi_n(x) = sqrt(2 / (2^n n! sqrt(2 pi))) H_n(sqrt(2) x) exp(-x^2)
//
// evaluated as 2^{1/4} h_n(sqrt(2) x) with the normalized Hermite functions
// h_n(q) = H_n(q) e^{-q^2/2} / sqrt(2^n n! sqrt(pi)) via their three-term
// recurrence, so no factorial or overflow appears at any order.
double hermite_psi(int n, double x, int max_order = kMaxHermiteOrder);

// psi_0(x) .. psi_{n_max}(x) in one recurrence pass; out.size() == n_max+1.
void hermite_psi_all(int n_max, double x, std::span<double> out,
                     int max_order = kMaxHermiteOrder);

}  // namespace quadcoh
