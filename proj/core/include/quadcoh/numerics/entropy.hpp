#pragma once

#include <functional>

#include <Eigen/Core>

#include "quadcoh/numerics/grid.hpp"

namespace quadcoh {

// h = -int p ln p with the integrand defined as 0 wherever p < 1e-300.
// Checks int p = 1 within 1e-4 on the given grid and throws ContractError
// (carrying the measured integral) otherwise.
double differential_entropy(const std::function<double(double)>& pdf, const QuadratureGrid& grid);

// -sum_i lambda_i ln lambda_i over the spectrum, with 0 ln 0 := 0.
// Requires Hermiticity within 1e-10; eigenvalues in [-1e-8, 0) are clamped
// to zero, anything below throws PositivityError.
double von_neumann_entropy(const Eigen::MatrixXcd& rho);

}  // namespace quadcoh
