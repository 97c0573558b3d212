#pragma once

#include <complex>
#include <functional>

#include "quadcoh/measures/coherence.hpp"
#include "quadcoh/states/state_model.hpp"

namespace quadcoh {

// Two-mode pure state as an amplitude contract psi(x1, x2) together with a
// truncation box outside which |psi| is negligible.
struct TwoModePure {
    std::function<std::complex<double>(double, double)> amplitude;
    double support_x1 = 0.0;
    double support_x2 = 0.0;
};

// psi(x1, x2) = psi1(x1) psi2(x2); factors must be pure and single-mode.
TwoModePure two_mode_product(const StateModel& s1, const StateModel& s2);

// Coordinate remap with a unit-determinant matrix A (basis kets map as
// |x> -> |A x>): amplitude'(x) = amplitude(A^{-1} x). The support box is the
// image bound |A| r plus 2 units of padding.
TwoModePure remap_two_mode(const TwoModePure& s, const RemapMatrix& A);

// Lossless beam splitter with real coefficients: rotation by theta of the
// (X1, X2) quadratures. Mixed inputs are unsupported (the 4D |kernel|
// integral is out of scope).
TwoModePure beam_split(const StateModel& s1, const StateModel& s2, double theta);

// Two-mode squeezer: hyperbolic remap (cosh/sinh), unit Jacobian.
TwoModePure two_mode_squeeze(const TwoModePure& s, double theta);
TwoModePure two_mode_squeeze(const StateModel& s1, const StateModel& s2, double theta);

// C = (int int |amplitude|)^2 with the half-resolution error estimate.
CoherenceReport coherence_two_mode_pure(const TwoModePure& s, const QuadratureGrid& grid_x1,
                                        const QuadratureGrid& grid_x2,
                                        const CoherenceOptions& opts = {});
CoherenceReport coherence_two_mode_pure(const TwoModePure& s, const CoherenceOptions& opts = {});

// int int |amplitude|^2 (normalization check).
double two_mode_norm(const TwoModePure& s, int grid_points = 1024);

// StateModel interop for the TwoModeRemapped variant.
StateModel make_two_mode_remapped(const StateModel& s1, const StateModel& s2,
                                  const RemapMatrix& A);
TwoModePure as_two_mode_pure(const StateModel& state);

}  // namespace quadcoh
